#include "pglcat/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "pglcat/errors.hpp"

namespace pglcat {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials, lowest degree first. Divisor must
// divide evenly (used for products of cyclotomic polynomials).
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() - den.size() + 1);
  for (size_t i = q.size(); i-- > 0;) {
    Int c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

std::vector<Int> compute_cyclotomic(unsigned n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Int> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

std::mutex g_cyclo_mutex;
std::map<unsigned, std::vector<Int>> g_cyclo_cache;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic polynomial undefined for n = 0");
  {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
  }
  // Compute outside the lock; recursion re-enters this function.
  std::vector<Int> poly = n == 1 ? std::vector<Int>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return g_cyclo_cache.emplace(n, std::move(poly)).first->second;
}

CycloNumber::CycloNumber(const Rat& r, unsigned modulus) : modulus_(modulus) {
  if (modulus == 0) throw DomainError("modulus must be >= 1");
  coeffs_.assign(euler_phi(modulus), Rat(0));
  coeffs_[0] = r;
  coeffs_[0].canonicalize();
}

void CycloNumber::reduce_from_poly(std::vector<Rat> poly) {
  const unsigned n = modulus_;
  const unsigned phi = euler_phi(n);
  // Exponents are cyclic: fold degrees >= n back first.
  if (poly.size() > n) {
    std::vector<Rat> folded(n, Rat(0));
    for (size_t e = 0; e < poly.size(); ++e)
      if (poly[e] != 0) folded[e % n] += poly[e];
    poly = std::move(folded);
  }
  poly.resize(std::max<size_t>(poly.size(), phi), Rat(0));
  // Remainder modulo the monic Phi_n.
  const std::vector<Int>& cp = cyclotomic_polynomial(n);
  for (size_t d = poly.size(); d-- > phi;) {
    Rat c = poly[d];
    if (c == 0) continue;
    poly[d] = 0;
    for (size_t j = 0; j < phi; ++j) poly[d - phi + j] -= c * cp[j];
  }
  poly.resize(phi);
  for (Rat& c : poly) c.canonicalize();
  coeffs_ = std::move(poly);
}

CycloNumber CycloNumber::zeta(unsigned modulus, long exponent) {
  return from_terms(modulus, {{exponent, Rat(1)}});
}

CycloNumber CycloNumber::from_terms(unsigned modulus,
                                    const std::vector<std::pair<long, Rat>>& terms) {
  if (modulus == 0) throw DomainError("modulus must be >= 1");
  CycloNumber x(Rat(0), modulus);
  std::vector<Rat> poly(modulus, Rat(0));
  for (const auto& [e, c] : terms) {
    long r = e % static_cast<long>(modulus);
    if (r < 0) r += modulus;
    poly[static_cast<size_t>(r)] += c;
  }
  x.reduce_from_poly(std::move(poly));
  return x;
}

bool CycloNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool CycloNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat CycloNumber::rational_value() const {
  if (!is_rational()) throw DomainError("not a rational value: " + str());
  return coeffs_[0];
}

CycloNumber CycloNumber::embedded(unsigned new_modulus) const {
  if (new_modulus == modulus_) return *this;
  if (new_modulus % modulus_ != 0)
    throw DomainError("embedding requires the old modulus to divide the new one");
  CycloNumber x(Rat(0), new_modulus);
  std::vector<Rat> poly;
  poly.assign(new_modulus, Rat(0));
  const unsigned long step = new_modulus / modulus_;
  for (size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) poly[e * step] += coeffs_[e];
  x.reduce_from_poly(std::move(poly));
  return x;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber x = *this;
  for (Rat& c : x.coeffs_) c = -c;
  return x;
}

namespace {
unsigned lcm_modulus(unsigned a, unsigned b) {
  return static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(a, b));
}
}  // namespace

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  if (a.modulus_ != b.modulus_) {
    unsigned m = lcm_modulus(a.modulus_, b.modulus_);
    return a.embedded(m) + b.embedded(m);
  }
  CycloNumber x = a;
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    x.coeffs_[i] += b.coeffs_[i];
    x.coeffs_[i].canonicalize();
  }
  return x;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.modulus_ != b.modulus_) {
    unsigned m = lcm_modulus(a.modulus_, b.modulus_);
    return a.embedded(m) * b.embedded(m);
  }
  CycloNumber x(Rat(0), a.modulus_);
  std::vector<Rat> poly(2 * a.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  x.reduce_from_poly(std::move(poly));
  return x;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta)");
  // Extended Euclid over Q[x] for gcd(f, Phi_N) = 1.
  const unsigned phi = euler_phi(modulus_);
  std::vector<Rat> r0(cyclotomic_polynomial(modulus_).size());
  const auto& cp = cyclotomic_polynomial(modulus_);
  for (size_t i = 0; i < cp.size(); ++i) r0[i] = Rat(cp[i]);
  std::vector<Rat> r1 = coeffs_;
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of f in the combination

  auto deg = [](const std::vector<Rat>& p) -> long {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1;
  };
  auto trim = [&](std::vector<Rat>& p) { p.resize(static_cast<size_t>(std::max<long>(deg(p), 0)) + 1); };
  trim(r1);

  while (deg(r1) > 0) {
    // r0 = q*r1 + r, degree-lowering long division.
    std::vector<Rat> q(static_cast<size_t>(deg(r0) - deg(r1)) + 1, Rat(0));
    std::vector<Rat> rem = r0;
    long d1 = deg(r1);
    for (long d = deg(rem); d >= d1; --d) {
      if (rem[static_cast<size_t>(d)] == 0) continue;
      Rat c = rem[static_cast<size_t>(d)] / r1[static_cast<size_t>(d1)];
      q[static_cast<size_t>(d - d1)] = c;
      for (long j = 0; j <= d1; ++j) {
        rem[static_cast<size_t>(d - d1 + j)] -= c * r1[static_cast<size_t>(j)];
        rem[static_cast<size_t>(d - d1 + j)].canonicalize();
      }
    }
    trim(rem);
    // s_new = s0 - q*s1
    std::vector<Rat> snew(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) {
        snew[i + j] -= q[i] * s1[j];
        snew[i + j].canonicalize();
      }
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
    if (deg(r1) < 0) throw DomainError("inverse failed: element not invertible");
  }
  // r1 is a nonzero constant c: inverse = s1 / c.
  Rat c = r1[0];
  CycloNumber inv(Rat(0), modulus_);
  std::vector<Rat> poly(s1.size(), Rat(0));
  for (size_t i = 0; i < s1.size(); ++i) {
    poly[i] = s1[i] / c;
    poly[i].canonicalize();
  }
  inv.reduce_from_poly(std::move(poly));
  return inv;
}

CycloNumber CycloNumber::conjugate() const {
  std::vector<std::pair<long, Rat>> terms;
  for (size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) terms.emplace_back(-static_cast<long>(e), coeffs_[e]);
  return from_terms(modulus_, terms);
}

bool CycloNumber::operator==(const CycloNumber& other) const {
  if (modulus_ != other.modulus_) {
    unsigned m = lcm_modulus(modulus_, other.modulus_);
    return embedded(m) == other.embedded(m);
  }
  return coeffs_ == other.coeffs_;
}

std::string CycloNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t e = coeffs_.size(); e-- > 0;) {
    const Rat& c = coeffs_[e];
    if (c == 0) continue;
    Rat abs = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (e == 0) {
      os << abs.get_str();
    } else {
      if (abs != 1) os << abs.get_str() << "*";
      os << "z";
      if (e > 1) os << "^" << e;
    }
  }
  if (first) return "0";
  return os.str();
}

void CycloNumber::append_key(std::string& out) const {
  out += std::to_string(modulus_);
  out += ':';
  for (const Rat& c : coeffs_) {
    out += c.get_str();
    out += ',';
  }
  out += ';';
}

CycloNumber parse_cyclo(const std::string& text, unsigned modulus) {
  // Grammar: term (('+'|'-') term)*, term := rat | [rat '*'] 'z' ['^' int]
  std::vector<std::pair<long, Rat>> terms;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size()) throw DataError("empty cyclotomic literal");
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  while (true) {
    skip_ws();
    std::string num;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      num += text[i++];
    skip_ws();
    Rat coeff = num.empty() ? Rat(1) : Rat(num);
    coeff.canonicalize();
    long expo = 0;
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    if (i < text.size() && text[i] == 'z') {
      ++i;
      expo = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string es;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) es += text[i++];
        if (es.empty()) throw DataError("missing exponent in cyclotomic literal: " + text);
        expo = std::stol(es);
      }
    } else if (num.empty()) {
      throw DataError("bad term in cyclotomic literal: " + text);
    }
    terms.emplace_back(expo, negative ? Rat(-coeff) : coeff);
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
    } else {
      throw DataError("unexpected character in cyclotomic literal: " + text);
    }
  }
  return CycloNumber::from_terms(modulus, terms);
}

}  // namespace pglcat
