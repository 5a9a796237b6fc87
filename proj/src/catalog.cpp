#include "pglcat/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

#include "pglcat/errors.hpp"

namespace pglcat {

namespace {

bool is_prime_power_int(const Int& q) {
  return q >= 2 && prime_power(q).has_value();
}

void require_prime_power(const Int& q, const char* where) {
  if (!is_prime_power_int(q)) throw DomainError(std::string(where) + ": q must be a prime power >= 2, got " + q.get_str());
}

// q = p^(2k+1) for the stated p (Suzuki/Ree parameter shape).
bool is_odd_power_of(const Int& q, unsigned long base) {
  auto pp = prime_power(q);
  return pp && pp->first == base && pp->second % 2 == 1;
}

struct SporadicInfo {
  const char* name;     // canonical code spelling
  const char* display;  // conventional name
  const char* order;    // factored
  const char* multiplier;  // abelian invariants, comma separated; "" = trivial
};

// Orders and multipliers are the standard CFSG data (ATLAS of Finite Groups).
const std::array<SporadicInfo, 26> kSporadics = {{
    {"M11", "M11", "2^4*3^2*5*11", ""},
    {"M12", "M12", "2^6*3^3*5*11", "2"},
    {"M22", "M22", "2^7*3^2*5*7*11", "12"},
    {"M23", "M23", "2^7*3^2*5*7*11*23", ""},
    {"M24", "M24", "2^10*3^3*5*7*11*23", ""},
    {"J1", "J1", "2^3*3*5*7*11*19", ""},
    {"J2", "J2", "2^7*3^3*5^2*7", "2"},
    {"J3", "J3", "2^7*3^5*5*17*19", "3"},
    {"J4", "J4", "2^21*3^3*5*7*11^3*23*29*31*37*43", ""},
    {"CO1", "Co1", "2^21*3^9*5^4*7^2*11*13*23", "2"},
    {"CO2", "Co2", "2^18*3^6*5^3*7*11*23", ""},
    {"CO3", "Co3", "2^10*3^7*5^3*7*11*23", ""},
    {"FI22", "Fi22", "2^17*3^9*5^2*7*11*13", "6"},
    {"FI23", "Fi23", "2^18*3^13*5^2*7*11*13*17*23", ""},
    {"FI24", "Fi24'", "2^21*3^16*5^2*7^3*11*13*17*23*29", "3"},
    {"HS", "HS", "2^9*3^2*5^3*7*11", "2"},
    {"MCL", "McL", "2^7*3^6*5^3*7*11", "3"},
    {"HE", "He", "2^10*3^3*5^2*7^3*17", ""},
    {"RU", "Ru", "2^14*3^3*5^3*7*13*29", "2"},
    {"SUZ", "Suz", "2^13*3^7*5^2*7*11*13", "6"},
    {"ON", "O'N", "2^9*3^4*5*7^3*11*19*31", "3"},
    {"HN", "HN", "2^14*3^6*5^6*7*11*19", ""},
    {"LY", "Ly", "2^8*3^7*5^6*7*11*31*37*67", ""},
    {"TH", "Th", "2^15*3^10*5^3*7^2*13*19*31", ""},
    {"B", "B", "2^41*3^13*5^6*7^2*11*13*17*19*23*31*47", "2"},
    {"M", "M", "2^46*3^20*5^9*7^6*11^2*13^3*17*19*23*29*31*41*47*59*71", ""},
}};

const SporadicInfo* find_sporadic(const std::string& canonical_name) {
  for (const auto& s : kSporadics)
    if (canonical_name == s.name) return &s;
  return nullptr;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

FactoredInteger fi_div(const FactoredInteger& a, const FactoredInteger& b) {
  std::vector<std::pair<Int, unsigned>> out;
  for (const auto& [p, e] : a.factors()) {
    unsigned d = b.exponent_of(p);
    if (d > e) throw DomainError("non-exact factored division");
    if (e > d) out.emplace_back(p, e - d);
  }
  return FactoredInteger::from_factors(std::move(out));
}

Int ipow(const Int& q, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
  return r;
}

// q-part q^k times a product of factored (q^d +/- 1) pieces, divided by d.
struct OrderBuilder {
  FactoredInteger acc;
  void q_power(const Int& q, unsigned k) {
    if (k == 0) return;
    auto pp = prime_power(q);
    acc = acc.times(FactoredInteger::from_factors({{pp->first, pp->second * k}}));
  }
  void times(const Int& v) { acc = acc.times(factorize(v)); }
  void div(const Int& v) { acc = fi_div(acc, factorize(v)); }
};

}  // namespace

SimpleGroupId SimpleGroupId::alt(unsigned n, bool allow_nonsimple) {
  if (n < 5 && !allow_nonsimple) throw DomainError("Alt(n) is simple only for n >= 5");
  if (n < 2) throw DomainError("Alt(n) requires n >= 2");
  return SimpleGroupId{Family::Alt, n, 0, ""};
}

SimpleGroupId SimpleGroupId::psl(unsigned n, const Int& q, bool allow_nonsimple) {
  if (n < 2) throw DomainError("PSL(n,q) requires n >= 2");
  require_prime_power(q, "PSL");
  if (!allow_nonsimple && n == 2 && (q == 2 || q == 3))
    throw DomainError("PSL(2," + q.get_str() + ") is not simple");
  return SimpleGroupId{Family::PSL, n, q, ""};
}

SimpleGroupId SimpleGroupId::psu(unsigned n, const Int& q, bool allow_nonsimple) {
  if (n < 3) throw DomainError("PSU(n,q) requires n >= 3");
  require_prime_power(q, "PSU");
  if (!allow_nonsimple && n == 3 && q == 2) throw DomainError("PSU(3,2) is not simple");
  return SimpleGroupId{Family::PSU, n, q, ""};
}

SimpleGroupId SimpleGroupId::psp(unsigned dim, const Int& q, bool allow_nonsimple) {
  if (dim < 4 || dim % 2 != 0) throw DomainError("PSp(2n,q) requires even dimension >= 4");
  require_prime_power(q, "PSp");
  if (!allow_nonsimple && dim == 4 && q == 2) throw DomainError("PSp(4,2) is not simple");
  return SimpleGroupId{Family::PSp, dim, q, ""};
}

SimpleGroupId SimpleGroupId::pomega(unsigned dim, const Int& q, bool allow_nonsimple) {
  if (dim < 5 || dim % 2 != 1) throw DomainError("POmega(2n+1,q) requires odd dimension >= 5");
  require_prime_power(q, "POmega");
  SimpleGroupId id{Family::POmega, dim, q, ""};
  if (!allow_nonsimple && !is_simple(id))
    throw DomainError("POmega(" + std::to_string(dim) + "," + q.get_str() + ") is not simple");
  return id;
}

SimpleGroupId SimpleGroupId::pomega_plus(unsigned dim, const Int& q) {
  if (dim < 8 || dim % 2 != 0) throw DomainError("POmega+(2n,q) requires even dimension >= 8");
  require_prime_power(q, "POmega+");
  return SimpleGroupId{Family::POmegaPlus, dim, q, ""};
}

SimpleGroupId SimpleGroupId::pomega_minus(unsigned dim, const Int& q) {
  if (dim < 8 || dim % 2 != 0) throw DomainError("POmega-(2n,q) requires even dimension >= 8");
  require_prime_power(q, "POmega-");
  return SimpleGroupId{Family::POmegaMinus, dim, q, ""};
}

SimpleGroupId SimpleGroupId::exceptional(Family f, const Int& q, bool allow_nonsimple) {
  switch (f) {
    case Family::G2:
      require_prime_power(q, "G2");
      if (!allow_nonsimple && q == 2) throw DomainError("G2(2) is not simple");
      break;
    case Family::F4:
    case Family::E6:
    case Family::TwE6:
    case Family::E7:
    case Family::E8:
    case Family::Tw3D4:
      require_prime_power(q, "exceptional group");
      break;
    case Family::Sz:
      if (!is_odd_power_of(q, 2)) throw DomainError("Sz(q) requires q = 2^(2k+1)");
      if (!allow_nonsimple && q == 2) throw DomainError("Sz(2) is not simple");
      break;
    case Family::Ree2G2:
      if (!is_odd_power_of(q, 3)) throw DomainError("2G2(q) requires q = 3^(2k+1)");
      if (!allow_nonsimple && q == 3) throw DomainError("2G2(3) is not simple");
      break;
    case Family::Ree2F4:
      if (!is_odd_power_of(q, 2)) throw DomainError("2F4(q) requires q = 2^(2k+1)");
      if (!allow_nonsimple && q == 2) throw DomainError("2F4(2) is not simple");
      break;
    default:
      throw DomainError("not an exceptional family");
  }
  return SimpleGroupId{f, 0, q, ""};
}

SimpleGroupId SimpleGroupId::tits() { return SimpleGroupId{Family::Tits, 0, 0, ""}; }

SimpleGroupId SimpleGroupId::sporadic_group(const std::string& name) {
  std::string canon = upper(name);
  // Accept some common spellings.
  if (canon == "FI24'" || canon == "FI24*" || canon == "F24'") canon = "FI24";
  if (canon == "O'N" || canon == "O N" || canon == "ONAN") canon = "ON";
  if (!find_sporadic(canon)) throw DomainError("unknown sporadic group: " + name);
  return SimpleGroupId{Family::Sporadic, 0, 0, canon};
}

FactoredInteger order(const SimpleGroupId& id) {
  OrderBuilder b;
  const Int& q = id.q;
  switch (id.family) {
    case Family::Alt:
      return fi_div(factorial_factored(id.n), FactoredInteger::from_factors({{Int(2), 1}}));
    case Family::PSL: {
      unsigned n = id.n;
      b.q_power(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) b.times(ipow(q, i) - 1);
      Int d;
      mpz_gcd(d.get_mpz_t(), Int(n).get_mpz_t(), Int(q - 1).get_mpz_t());
      b.div(d);
      return b.acc;
    }
    case Family::PSU: {
      unsigned n = id.n;
      b.q_power(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) b.times(i % 2 == 0 ? Int(ipow(q, i) - 1) : Int(ipow(q, i) + 1));
      Int d;
      mpz_gcd(d.get_mpz_t(), Int(n).get_mpz_t(), Int(q + 1).get_mpz_t());
      b.div(d);
      return b.acc;
    }
    case Family::PSp:
    case Family::POmega: {
      unsigned m = id.family == Family::PSp ? id.n / 2 : (id.n - 1) / 2;
      b.q_power(q, m * m);
      for (unsigned i = 1; i <= m; ++i) b.times(ipow(q, 2 * i) - 1);
      b.div(q % 2 == 0 ? Int(1) : Int(2));
      return b.acc;
    }
    case Family::POmegaPlus: {
      unsigned m = id.n / 2;
      b.q_power(q, m * (m - 1));
      b.times(ipow(q, m) - 1);
      for (unsigned i = 1; i < m; ++i) b.times(ipow(q, 2 * i) - 1);
      Int d;
      mpz_gcd(d.get_mpz_t(), Int(4).get_mpz_t(), Int(ipow(q, m) - 1).get_mpz_t());
      b.div(d);
      return b.acc;
    }
    case Family::POmegaMinus: {
      unsigned m = id.n / 2;
      b.q_power(q, m * (m - 1));
      b.times(ipow(q, m) + 1);
      for (unsigned i = 1; i < m; ++i) b.times(ipow(q, 2 * i) - 1);
      Int d;
      mpz_gcd(d.get_mpz_t(), Int(4).get_mpz_t(), Int(ipow(q, m) + 1).get_mpz_t());
      b.div(d);
      return b.acc;
    }
    case Family::G2:
      b.q_power(q, 6);
      b.times(ipow(q, 6) - 1);
      b.times(ipow(q, 2) - 1);
      return b.acc;
    case Family::F4:
      b.q_power(q, 24);
      for (unsigned d : {12u, 8u, 6u, 2u}) b.times(ipow(q, d) - 1);
      return b.acc;
    case Family::E6: {
      b.q_power(q, 36);
      for (unsigned d : {12u, 9u, 8u, 6u, 5u, 2u}) b.times(ipow(q, d) - 1);
      Int g;
      mpz_gcd(g.get_mpz_t(), Int(3).get_mpz_t(), Int(q - 1).get_mpz_t());
      b.div(g);
      return b.acc;
    }
    case Family::TwE6: {
      b.q_power(q, 36);
      b.times(ipow(q, 12) - 1);
      b.times(ipow(q, 9) + 1);
      b.times(ipow(q, 8) - 1);
      b.times(ipow(q, 6) - 1);
      b.times(ipow(q, 5) + 1);
      b.times(ipow(q, 2) - 1);
      Int g;
      mpz_gcd(g.get_mpz_t(), Int(3).get_mpz_t(), Int(q + 1).get_mpz_t());
      b.div(g);
      return b.acc;
    }
    case Family::E7: {
      b.q_power(q, 63);
      for (unsigned d : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) b.times(ipow(q, d) - 1);
      b.div(q % 2 == 0 ? Int(1) : Int(2));
      return b.acc;
    }
    case Family::E8:
      b.q_power(q, 120);
      for (unsigned d : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u}) b.times(ipow(q, d) - 1);
      return b.acc;
    case Family::Tw3D4:
      b.q_power(q, 12);
      b.times(ipow(q, 8) + ipow(q, 4) + 1);
      b.times(ipow(q, 6) - 1);
      b.times(ipow(q, 2) - 1);
      return b.acc;
    case Family::Sz:
      b.q_power(q, 2);
      b.times(ipow(q, 2) + 1);
      b.times(q - 1);
      return b.acc;
    case Family::Ree2G2:
      b.q_power(q, 3);
      b.times(ipow(q, 3) + 1);
      b.times(q - 1);
      return b.acc;
    case Family::Ree2F4:
      b.q_power(q, 12);
      b.times(ipow(q, 6) + 1);
      b.times(ipow(q, 4) - 1);
      b.times(ipow(q, 3) + 1);
      b.times(q - 1);
      return b.acc;
    case Family::Tits:
      return parse_factored("2^11*3^3*5^2*13");
    case Family::Sporadic:
      return parse_factored(find_sporadic(id.sporadic)->order);
  }
  throw DomainError("unreachable family");
}

Int order_value(const SimpleGroupId& id) {
  const Int& q = id.q;
  auto fact2 = [](unsigned n) {
    Int v = 1;
    for (unsigned i = 3; i <= n; ++i) v *= i;
    return v;  // n!/2
  };
  switch (id.family) {
    case Family::Alt:
      return fact2(id.n);
    case Family::PSL: {
      Int v = ipow(q, id.n * (id.n - 1) / 2);
      for (unsigned i = 2; i <= id.n; ++i) v *= ipow(q, i) - 1;
      Int d;
      mpz_gcd(d.get_mpz_t(), Int(id.n).get_mpz_t(), Int(q - 1).get_mpz_t());
      return v / d;
    }
    case Family::PSU: {
      Int v = ipow(q, id.n * (id.n - 1) / 2);
      for (unsigned i = 2; i <= id.n; ++i) v *= i % 2 == 0 ? Int(ipow(q, i) - 1) : Int(ipow(q, i) + 1);
      Int d;
      mpz_gcd(d.get_mpz_t(), Int(id.n).get_mpz_t(), Int(q + 1).get_mpz_t());
      return v / d;
    }
    case Family::PSp:
    case Family::POmega: {
      unsigned m = id.family == Family::PSp ? id.n / 2 : (id.n - 1) / 2;
      Int v = ipow(q, m * m);
      for (unsigned i = 1; i <= m; ++i) v *= ipow(q, 2 * i) - 1;
      return q % 2 == 0 ? v : Int(v / 2);
    }
    case Family::POmegaPlus: {
      unsigned m = id.n / 2;
      Int v = ipow(q, m * (m - 1)) * (ipow(q, m) - 1);
      for (unsigned i = 1; i < m; ++i) v *= ipow(q, 2 * i) - 1;
      Int d;
      mpz_gcd(d.get_mpz_t(), Int(4).get_mpz_t(), Int(ipow(q, m) - 1).get_mpz_t());
      return v / d;
    }
    case Family::POmegaMinus: {
      unsigned m = id.n / 2;
      Int v = ipow(q, m * (m - 1)) * (ipow(q, m) + 1);
      for (unsigned i = 1; i < m; ++i) v *= ipow(q, 2 * i) - 1;
      Int d;
      mpz_gcd(d.get_mpz_t(), Int(4).get_mpz_t(), Int(ipow(q, m) + 1).get_mpz_t());
      return v / d;
    }
    case Family::G2:
      return ipow(q, 6) * (ipow(q, 6) - 1) * (ipow(q, 2) - 1);
    case Family::F4: {
      Int v = ipow(q, 24);
      for (unsigned d : {12u, 8u, 6u, 2u}) v *= ipow(q, d) - 1;
      return v;
    }
    case Family::E6: {
      Int v = ipow(q, 36);
      for (unsigned d : {12u, 9u, 8u, 6u, 5u, 2u}) v *= ipow(q, d) - 1;
      Int g;
      mpz_gcd(g.get_mpz_t(), Int(3).get_mpz_t(), Int(q - 1).get_mpz_t());
      return v / g;
    }
    case Family::TwE6: {
      Int v = ipow(q, 36) * (ipow(q, 12) - 1) * (ipow(q, 9) + 1) * (ipow(q, 8) - 1) *
              (ipow(q, 6) - 1) * (ipow(q, 5) + 1) * (ipow(q, 2) - 1);
      Int g;
      mpz_gcd(g.get_mpz_t(), Int(3).get_mpz_t(), Int(q + 1).get_mpz_t());
      return v / g;
    }
    case Family::E7: {
      Int v = ipow(q, 63);
      for (unsigned d : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) v *= ipow(q, d) - 1;
      return q % 2 == 0 ? v : Int(v / 2);
    }
    case Family::E8: {
      Int v = ipow(q, 120);
      for (unsigned d : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u}) v *= ipow(q, d) - 1;
      return v;
    }
    case Family::Tw3D4:
      return ipow(q, 12) * (ipow(q, 8) + ipow(q, 4) + 1) * (ipow(q, 6) - 1) * (ipow(q, 2) - 1);
    case Family::Sz:
      return ipow(q, 2) * (ipow(q, 2) + 1) * (q - 1);
    case Family::Ree2G2:
      return ipow(q, 3) * (ipow(q, 3) + 1) * (q - 1);
    case Family::Ree2F4:
      return ipow(q, 12) * (ipow(q, 6) + 1) * (ipow(q, 4) - 1) * (ipow(q, 3) + 1) * (q - 1);
    case Family::Tits:
      return Int("17971200");
    case Family::Sporadic:
      return parse_factored(find_sporadic(id.sporadic)->order).value();
  }
  throw DomainError("unreachable family");
}

bool is_simple(const SimpleGroupId& id) {
  switch (id.family) {
    case Family::Alt:
      return id.n >= 5;
    case Family::PSL:
      return !(id.n == 2 && (id.q == 2 || id.q == 3));
    case Family::PSU:
      return !(id.n == 3 && id.q == 2);
    case Family::PSp:
      return !(id.n == 4 && id.q == 2);
    case Family::POmega: {
      SimpleGroupId c = canonical(id);
      if (c.family == Family::POmega) return true;  // B_n(q), n >= 3, q odd
      return is_simple(c);
    }
    case Family::G2:
      return id.q != 2;
    case Family::Sz:
      return id.q != 2;
    case Family::Ree2G2:
      return id.q != 3;
    case Family::Ree2F4:
      return id.q != 2;
    default:
      return true;
  }
}

SimpleGroupId canonical(const SimpleGroupId& id) {
  switch (id.family) {
    case Family::PSL:
      if (id.n == 2 && (id.q == 4 || id.q == 5)) return SimpleGroupId::alt(5);
      if (id.n == 2 && id.q == 9) return SimpleGroupId::alt(6);
      if (id.n == 3 && id.q == 2) return SimpleGroupId::psl(2, 7);
      if (id.n == 4 && id.q == 2) return SimpleGroupId::alt(8);
      return id;
    case Family::PSp:
      if (id.n == 4 && id.q == 3) return SimpleGroupId::psu(4, 2);
      return id;
    case Family::POmega:
      // B_2 = C_2 for every q; B_n(q) = C_n(q) for even q.
      if (id.n == 5) return canonical(SimpleGroupId::psp(4, id.q, true));
      if (id.q % 2 == 0) return SimpleGroupId::psp(id.n - 1, id.q);
      return id;
    default:
      return id;
  }
}

Int SchurMultiplierDescriptor::size() const {
  Int s = 1;
  for (const Int& d : invariants) s *= d;
  return s;
}

std::string SchurMultiplierDescriptor::str() const {
  if (provenance == MultiplierProvenance::Unknown) return "unknown";
  if (invariants.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < invariants.size(); ++i) {
    if (i) out += "x";
    out += "C" + invariants[i].get_str();
  }
  return out;
}

SchurMultiplierDescriptor schur_multiplier(const SimpleGroupId& raw) {
  if (!is_simple(raw)) throw DomainError("Schur multiplier query requires a simple group");
  SimpleGroupId id = canonical(raw);
  auto generic = [](std::vector<Int> inv) {
    std::erase_if(inv, [](const Int& d) { return d == 1; });
    return SchurMultiplierDescriptor{std::move(inv), MultiplierProvenance::GenericFormula};
  };
  auto exception = [](std::vector<Int> inv) {
    std::erase_if(inv, [](const Int& d) { return d == 1; });
    return SchurMultiplierDescriptor{std::move(inv), MultiplierProvenance::EmbeddedException};
  };
  auto gcd_int = [](const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  };
  switch (id.family) {
    case Family::Alt:
      if (id.n == 6 || id.n == 7) return exception({Int(6)});
      return generic({Int(2)});
    case Family::PSL:
      if (id.n == 3 && id.q == 4) return exception({Int(4), Int(12)});
      return generic({gcd_int(id.n, id.q - 1)});
    case Family::PSU:
      if (id.n == 4 && id.q == 2) return exception({Int(2)});
      if (id.n == 4 && id.q == 3) return exception({Int(3), Int(12)});
      if (id.n == 6 && id.q == 2) return exception({Int(2), Int(6)});
      return generic({gcd_int(id.n, id.q + 1)});
    case Family::PSp:
      if (id.n == 6 && id.q == 2) return exception({Int(2)});
      return generic({gcd_int(2, id.q - 1)});
    case Family::POmega:
      if (id.n == 7 && id.q == 3) return exception({Int(6)});
      return generic({gcd_int(2, id.q - 1)});
    case Family::POmegaPlus: {
      if (id.n == 8 && id.q == 2) return exception({Int(2), Int(2)});
      if (id.q % 2 == 0) return generic({});
      unsigned m = id.n / 2;
      if (m % 2 == 0) return generic({Int(2), Int(2)});
      return generic({gcd_int(4, ipow(id.q, m) - 1)});
    }
    case Family::POmegaMinus:
      return generic({gcd_int(4, ipow(id.q, id.n / 2) + 1)});
    case Family::G2:
      if (id.q == 3) return exception({Int(3)});
      if (id.q == 4) return exception({Int(2)});
      return generic({});
    case Family::F4:
      if (id.q == 2) return exception({Int(2)});
      return generic({});
    case Family::E6:
      return generic({gcd_int(3, id.q - 1)});
    case Family::TwE6:
      if (id.q == 2) return exception({Int(2), Int(6)});
      return generic({gcd_int(3, id.q + 1)});
    case Family::E7:
      return generic({gcd_int(2, id.q - 1)});
    case Family::E8:
    case Family::Tw3D4:
    case Family::Ree2G2:
      return generic({});
    case Family::Sz:
      if (id.q == 8) return exception({Int(2), Int(2)});
      return generic({});
    case Family::Ree2F4:
      return generic({});
    case Family::Tits:
      return exception({});
    case Family::Sporadic: {
      const SporadicInfo* info = find_sporadic(id.sporadic);
      std::vector<Int> inv;
      std::stringstream ss(info->multiplier);
      std::string part;
      while (std::getline(ss, part, ',')) inv.emplace_back(part);
      return exception(std::move(inv));
    }
  }
  return SchurMultiplierDescriptor{{}, MultiplierProvenance::Unknown};
}

std::string render_code(const SimpleGroupId& id) {
  auto qs = [&] { return "-" + id.q.get_str(); };
  switch (id.family) {
    case Family::Alt:
      return "ALT-" + std::to_string(id.n);
    case Family::PSL:
      return "CA-" + std::to_string(id.n - 1) + qs();
    case Family::PSU:
      return "T2A-" + std::to_string(id.n - 1) + qs();
    case Family::PSp:
      return "CC-" + std::to_string(id.n / 2) + qs();
    case Family::POmega:
      return "CB-" + std::to_string((id.n - 1) / 2) + qs();
    case Family::POmegaPlus:
      return "CD-" + std::to_string(id.n / 2) + qs();
    case Family::POmegaMinus:
      return "T2D-" + std::to_string(id.n / 2) + qs();
    case Family::G2:
      return "G2" + qs();
    case Family::F4:
      return "F4" + qs();
    case Family::E6:
      return "E6" + qs();
    case Family::TwE6:
      return "T2E6" + qs();
    case Family::E7:
      return "E7" + qs();
    case Family::E8:
      return "E8" + qs();
    case Family::Tw3D4:
      return "T3D4" + qs();
    case Family::Sz:
      return "SZ" + qs();
    case Family::Ree2G2:
      return "R2G2" + qs();
    case Family::Ree2F4:
      return "R2F4" + qs();
    case Family::Tits:
      return "TITS";
    case Family::Sporadic:
      return "SPOR-" + id.sporadic;
  }
  throw DomainError("unreachable family");
}

SimpleGroupId parse_code(const std::string& raw) {
  std::string code = upper(raw);
  std::vector<std::string> parts;
  std::stringstream ss(code);
  std::string part;
  while (std::getline(ss, part, '-')) parts.push_back(part);
  if (parts.empty()) throw DomainError("empty group code");
  const std::string& fam = parts[0];

  auto want = [&](size_t n) {
    if (parts.size() != n) throw DomainError("bad group code: " + raw);
  };
  auto num = [&](size_t i) -> unsigned long {
    try {
      return std::stoul(parts[i]);
    } catch (const std::exception&) {
      throw DomainError("bad number in group code: " + raw);
    }
  };
  auto bigq = [&](size_t i) -> Int {
    Int q;
    if (mpz_set_str(q.get_mpz_t(), parts[i].c_str(), 10) != 0)
      throw DomainError("bad q in group code: " + raw);
    return q;
  };

  if (fam == "ALT") {
    want(2);
    return SimpleGroupId::alt(static_cast<unsigned>(num(1)), true);
  }
  if (fam == "CA") {
    want(3);
    return SimpleGroupId::psl(static_cast<unsigned>(num(1)) + 1, bigq(2), true);
  }
  if (fam == "T2A") {
    want(3);
    return SimpleGroupId::psu(static_cast<unsigned>(num(1)) + 1, bigq(2), true);
  }
  if (fam == "CC") {
    want(3);
    return SimpleGroupId::psp(2 * static_cast<unsigned>(num(1)), bigq(2), true);
  }
  if (fam == "CB") {
    want(3);
    return SimpleGroupId::pomega(2 * static_cast<unsigned>(num(1)) + 1, bigq(2), true);
  }
  if (fam == "CD") {
    want(3);
    return SimpleGroupId::pomega_plus(2 * static_cast<unsigned>(num(1)), bigq(2));
  }
  if (fam == "T2D") {
    want(3);
    return SimpleGroupId::pomega_minus(2 * static_cast<unsigned>(num(1)), bigq(2));
  }
  static const std::map<std::string, Family> kExceptional = {
      {"G2", Family::G2},     {"F4", Family::F4},     {"E6", Family::E6},
      {"T2E6", Family::TwE6}, {"E7", Family::E7},     {"E8", Family::E8},
      {"T3D4", Family::Tw3D4}, {"SZ", Family::Sz},    {"R2G2", Family::Ree2G2},
      {"R2F4", Family::Ree2F4}};
  auto it = kExceptional.find(fam);
  if (it != kExceptional.end()) {
    want(2);
    return SimpleGroupId::exceptional(it->second, bigq(1), true);
  }
  if (fam == "TITS") {
    want(1);
    return SimpleGroupId::tits();
  }
  if (fam == "SPOR") {
    want(2);
    return SimpleGroupId::sporadic_group(parts[1]);
  }
  throw DomainError("unknown group code family: " + raw);
}

std::string display_name(const SimpleGroupId& id) {
  auto nq = [&](const char* head) {
    return std::string(head) + "(" + std::to_string(id.n) + "," + id.q.get_str() + ")";
  };
  switch (id.family) {
    case Family::Alt:
      return "A" + std::to_string(id.n);
    case Family::PSL:
      return nq("PSL");
    case Family::PSU:
      return nq("PSU");
    case Family::PSp:
      return nq("PSp");
    case Family::POmega:
      return nq("POmega");
    case Family::POmegaPlus:
      return "POmega+(" + std::to_string(id.n) + "," + id.q.get_str() + ")";
    case Family::POmegaMinus:
      return "POmega-(" + std::to_string(id.n) + "," + id.q.get_str() + ")";
    case Family::G2:
      return "G2(" + id.q.get_str() + ")";
    case Family::F4:
      return "F4(" + id.q.get_str() + ")";
    case Family::E6:
      return "E6(" + id.q.get_str() + ")";
    case Family::TwE6:
      return "2E6(" + id.q.get_str() + ")";
    case Family::E7:
      return "E7(" + id.q.get_str() + ")";
    case Family::E8:
      return "E8(" + id.q.get_str() + ")";
    case Family::Tw3D4:
      return "3D4(" + id.q.get_str() + ")";
    case Family::Sz:
      return "Sz(" + id.q.get_str() + ")";
    case Family::Ree2G2:
      return "2G2(" + id.q.get_str() + ")";
    case Family::Ree2F4:
      return "2F4(" + id.q.get_str() + ")";
    case Family::Tits:
      return "2F4(2)'";
    case Family::Sporadic:
      return find_sporadic(id.sporadic)->display;
  }
  throw DomainError("unreachable family");
}

std::optional<SimpleGroupId> resolve_name(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s += c;
  if (s.empty()) return std::nullopt;
  std::string u = upper(s);

  // Try the code grammar first.
  try {
    return parse_code(u);
  } catch (const DomainError&) {
  }

  // Sporadic conventional names.
  for (const auto& sp : kSporadics) {
    if (u == upper(sp.display) || u == sp.name) {
      // Bare "M" or "B" are too ambiguous to accept as names here.
      if (u == "M" || u == "B") break;
      return SimpleGroupId::sporadic_group(sp.name);
    }
  }
  if (u == "2F4(2)'" || u == "TITS") return SimpleGroupId::tits();

  auto parse_pair = [&](const std::string& body) -> std::optional<std::pair<unsigned, Int>> {
    auto comma = body.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
      unsigned a = static_cast<unsigned>(std::stoul(body.substr(0, comma)));
      Int q;
      if (mpz_set_str(q.get_mpz_t(), body.substr(comma + 1).c_str(), 10) != 0)
        return std::nullopt;
      return std::make_pair(a, q);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  auto between = [&](const std::string& head) -> std::optional<std::string> {
    if (u.rfind(head, 0) != 0) return std::nullopt;
    if (u.size() < head.size() + 2 || u[head.size()] != '(' || u.back() != ')')
      return std::nullopt;
    return u.substr(head.size() + 1, u.size() - head.size() - 2);
  };

  try {
    if (u.size() >= 2 && u[0] == 'A' &&
        std::all_of(u.begin() + 1, u.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return SimpleGroupId::alt(static_cast<unsigned>(std::stoul(u.substr(1))), true);
    for (const char* head : {"PSL", "L"})
      if (auto body = between(head))
        if (auto pr = parse_pair(*body)) return SimpleGroupId::psl(pr->first, pr->second, true);
    for (const char* head : {"PSU", "U", "SU"})
      if (auto body = between(head))
        if (auto pr = parse_pair(*body)) return SimpleGroupId::psu(pr->first, pr->second, true);
    for (const char* head : {"PSP", "SP"})
      if (auto body = between(head))
        if (auto pr = parse_pair(*body)) return SimpleGroupId::psp(pr->first, pr->second, true);
    for (const char* head : {"POMEGA+", "OMEGA+"})
      if (auto body = between(head))
        if (auto pr = parse_pair(*body)) return SimpleGroupId::pomega_plus(pr->first, pr->second);
    for (const char* head : {"POMEGA-", "OMEGA-"})
      if (auto body = between(head))
        if (auto pr = parse_pair(*body)) return SimpleGroupId::pomega_minus(pr->first, pr->second);
    for (const char* head : {"POMEGA", "OMEGA"})
      if (auto body = between(head))
        if (auto pr = parse_pair(*body)) return SimpleGroupId::pomega(pr->first, pr->second);
    if (auto body = between("G2")) return SimpleGroupId::exceptional(Family::G2, Int(body->c_str()), true);
    if (auto body = between("F4")) return SimpleGroupId::exceptional(Family::F4, Int(body->c_str()), true);
    if (auto body = between("E6")) return SimpleGroupId::exceptional(Family::E6, Int(body->c_str()), true);
    if (auto body = between("E7")) return SimpleGroupId::exceptional(Family::E7, Int(body->c_str()), true);
    if (auto body = between("E8")) return SimpleGroupId::exceptional(Family::E8, Int(body->c_str()), true);
    if (auto body = between("2E6")) return SimpleGroupId::exceptional(Family::TwE6, Int(body->c_str()), true);
    if (auto body = between("3D4")) return SimpleGroupId::exceptional(Family::Tw3D4, Int(body->c_str()), true);
    if (auto body = between("SZ")) return SimpleGroupId::exceptional(Family::Sz, Int(body->c_str()), true);
    if (auto body = between("2G2")) return SimpleGroupId::exceptional(Family::Ree2G2, Int(body->c_str()), true);
    if (auto body = between("2F4")) return SimpleGroupId::exceptional(Family::Ree2F4, Int(body->c_str()), true);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return std::nullopt;
}

const std::vector<std::string>& sporadic_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSporadics) v.push_back(s.name);
    return v;
  }();
  return names;
}

}  // namespace pglcat
