#include "pglcat/factored.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pglcat/errors.hpp"

namespace pglcat {

namespace {

Int powmod(Int base, Int exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Largest input for which the fixed witness set below is proven deterministic.
const Int kMillerRabinLimit("3317044064679887385961980");

bool miller_rabin_witness(const Int& n, const Int& a) {
  if (a % n == 0) return false;
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  Int x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 0; i + 1 < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness found
}

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  while (true) {
    Int x = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 1) + 1;
    Int y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const long small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long p : small_primes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n >= kMillerRabinLimit) {
    // Beyond the certified witness range (only reachable through very large
    // query parameters): BPSW plus randomized rounds, no known failures.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  }
  for (long p : small_primes) {
    if (miller_rabin_witness(n, Int(p))) return false;
  }
  return true;
}

FactoredInteger FactoredInteger::from_factors(std::vector<std::pair<Int, unsigned>> factors) {
  FactoredInteger f;
  Int last = 1;
  for (const auto& [p, e] : factors) {
    if (p <= last) throw DomainError("factors must have strictly increasing primes");
    if (e == 0) throw DomainError("exponents must be >= 1");
    if (!is_prime(p)) throw DomainError("not a prime: " + p.get_str());
    last = p;
  }
  f.factors_ = std::move(factors);
  return f;
}

Int FactoredInteger::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors_) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

unsigned FactoredInteger::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors_)
    if (q == p) return e;
  return 0;
}

std::vector<Int> FactoredInteger::primes() const {
  std::vector<Int> out;
  out.reserve(factors_.size());
  for (const auto& [p, e] : factors_) out.push_back(p);
  return out;
}

FactoredInteger FactoredInteger::times(const FactoredInteger& other) const {
  std::map<Int, unsigned> merged;
  for (const auto& [p, e] : factors_) merged[p] += e;
  for (const auto& [p, e] : other.factors_) merged[p] += e;
  FactoredInteger f;
  f.factors_.assign(merged.begin(), merged.end());
  return f;
}

FactoredInteger FactoredInteger::power(unsigned e) const {
  if (e == 0) return FactoredInteger();
  FactoredInteger f;
  f.factors_ = factors_;
  for (auto& [p, k] : f.factors_) k *= e;
  return f;
}

std::string FactoredInteger::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << "*";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

FactoredInteger factorize(const Int& n) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  std::map<Int, unsigned> acc;
  Int rest = n;
  for (long p = 2; p < 10000 && rest > 1; p == 2 ? p = 3 : p += 2) {
    if (rest % p == 0) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      acc[Int(p)] = e;
    }
    if (Int(p) * p > rest) break;
  }
  if (rest > 1) factor_into(rest, acc);
  FactoredInteger f;
  std::vector<std::pair<Int, unsigned>> v(acc.begin(), acc.end());
  return FactoredInteger::from_factors(std::move(v));
}

std::optional<std::pair<Int, unsigned>> prime_power(const Int& n) {
  if (n < 2) throw DomainError("prime_power requires n >= 2");
  // k is bounded by log2(n).
  unsigned maxk = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned k = 1; k <= maxk; ++k) {
    Int root;
    int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), k);
    if (root < 2) break;
    if (exact && is_prime(root)) return std::make_pair(root, k);
  }
  return std::nullopt;
}

bool divides(const FactoredInteger& a, const FactoredInteger& b) {
  for (const auto& [p, e] : a.factors())
    if (b.exponent_of(p) < e) return false;
  return true;
}

FactoredInteger factorial_factored(unsigned n) {
  std::vector<std::pair<Int, unsigned>> fs;
  for (unsigned p = 2; p <= n; ++p) {
    if (!is_prime(Int(p))) continue;
    fs.emplace_back(Int(p), factorial_prime_exponent(n, Int(p)));
  }
  return FactoredInteger::from_factors(std::move(fs));
}

unsigned factorial_prime_exponent(unsigned n, const Int& p) {
  unsigned e = 0;
  Int pk = p;
  while (pk <= n) {
    e += static_cast<unsigned>(Int(n / pk).get_ui());
    pk *= p;
  }
  return e;
}

FactoredInteger parse_factored(const std::string& text) {
  if (text.empty()) throw DataError("empty factored-integer literal");
  if (text.find_first_of("^*") == std::string::npos) {
    Int n;
    if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0 || n < 1)
      throw DataError("bad integer literal: " + text);
    return factorize(n);
  }
  std::map<Int, unsigned> acc;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '*')) {
    if (part.empty()) throw DataError("bad factored literal: " + text);
    auto caret = part.find('^');
    Int p;
    unsigned long e = 1;
    std::string base = caret == std::string::npos ? part : part.substr(0, caret);
    if (mpz_set_str(p.get_mpz_t(), base.c_str(), 10) != 0)
      throw DataError("bad prime in factored literal: " + part);
    if (caret != std::string::npos) {
      try {
        e = std::stoul(part.substr(caret + 1));
      } catch (const std::exception&) {
        throw DataError("bad exponent in factored literal: " + part);
      }
    }
    if (!is_prime(p)) throw DataError("non-prime base in factored literal: " + base);
    acc[p] += static_cast<unsigned>(e);
  }
  std::vector<std::pair<Int, unsigned>> v(acc.begin(), acc.end());
  return FactoredInteger::from_factors(std::move(v));
}

}  // namespace pglcat
