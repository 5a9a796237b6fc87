#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pglcat/cyclo.hpp"
#include "pglcat/errors.hpp"
#include "pglcat/factored.hpp"

using namespace pglcat;

TEST_CASE("factorize basics") {
  CHECK(factorize(1).is_one());
  CHECK(factorize(1).str() == "1");
  // 660 = |PSL(2,11)| by trial division
  CHECK(factorize(660).str() == "2^2*3*5*11");
  // |PSU(4,2)| as printed in the degree-5 table
  CHECK(factorize(25920).str() == "2^6*3^4*5");
  CHECK(factorize(Int("86775571046077562880")).value() == Int("86775571046077562880"));
}

TEST_CASE("factorize round-trips on sampled n up to 1e6") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 3000; ++i) {
    unsigned long n = rng() % 1000000 + 1;
    CHECK(factorize(Int(n)).value() == Int(n));
  }
  for (unsigned long n = 1; n <= 2000; ++n) CHECK(factorize(Int(n)).value() == Int(n));
}

TEST_CASE("prime powers") {
  auto pp = prime_power(9);
  REQUIRE(pp.has_value());
  CHECK(pp->first == 3);
  CHECK(pp->second == 2);
  CHECK_FALSE(prime_power(6).has_value());
  pp = prime_power(8);
  REQUIRE(pp.has_value());
  CHECK(pp->first == 2);
  CHECK(pp->second == 3);
  CHECK_THROWS_AS(prime_power(1), DomainError);
}

TEST_CASE("divisibility on factored integers") {
  auto a = parse_factored("2^2*3*5");
  auto b = parse_factored("2^3*3^2*5*7");
  CHECK(divides(a, b));
  CHECK_FALSE(divides(parse_factored("11"), b));
  CHECK(divides(FactoredInteger::one(), b));
  CHECK(divides(FactoredInteger::one(), FactoredInteger::one()));
}

TEST_CASE("primality witnesses") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int("3037000493")));
  CHECK_FALSE(is_prime(Int("3215031751")));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(Int("2147483647")));
  CHECK_FALSE(is_prime(Int(1)));
}

TEST_CASE("cyclotomic identities") {
  CHECK(CycloNumber::zeta(4, 2) == CycloNumber(-1, 4));
  CycloNumber s = CycloNumber(1, 3) + CycloNumber::zeta(3) + CycloNumber::zeta(3, 2);
  CHECK(s.is_zero());
}

TEST_CASE("quadratic Gauss sum squared is 5") {
  // Independent oracle: expand the 25-term product as exponent counts mod 5
  // and reduce with 1 + z + z^2 + z^3 + z^4 = 0 by hand.
  long counts[5] = {0, 0, 0, 0, 0};
  for (long j = 0; j < 5; ++j)
    for (long k = 0; k < 5; ++k) counts[(j * j + k * k) % 5] += 1;
  CHECK(counts[1] == counts[2]);
  CHECK(counts[2] == counts[3]);
  CHECK(counts[3] == counts[4]);
  long expected = counts[0] - counts[1];
  CHECK(expected == 5);

  CycloNumber g(Rat(0), 5);
  for (long j = 0; j < 5; ++j) g += CycloNumber::zeta(5, j * j);
  CHECK((g * g) == CycloNumber(expected, 5));
}

namespace {

CycloNumber random_cyclo(std::mt19937_64& rng, unsigned modulus) {
  std::vector<std::pair<long, Rat>> terms;
  unsigned nterms = 1 + rng() % 4;
  for (unsigned t = 0; t < nterms; ++t) {
    long e = static_cast<long>(rng() % modulus);
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 7);
    terms.emplace_back(e, Rat(num, den));
  }
  return CycloNumber::from_terms(modulus, terms);
}

}  // namespace

TEST_CASE("randomized field axioms over moduli up to 60") {
  std::mt19937_64 rng(7);
  int inverses_checked = 0;
  for (int iter = 0; iter < 800; ++iter) {
    unsigned n = 1 + rng() % 60;
    CycloNumber x = random_cyclo(rng, n), y = random_cyclo(rng, n), z = random_cyclo(rng, n);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x.conjugate().conjugate() == x);
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == CycloNumber(1, n));
      ++inverses_checked;
    }
  }
  CHECK(inverses_checked > 700);
}

TEST_CASE("reduction is idempotent and canonical") {
  // zeta_6 = 1 + zeta_6^2 after reduction mod Phi_6 = x^2 - x + 1:
  // both routes must land on the same coefficient vector.
  CycloNumber a = CycloNumber::zeta(6);
  CycloNumber b = CycloNumber(1, 6) + CycloNumber::zeta(6, 2);
  CHECK(a == b);
  CHECK(a.coeffs() == b.coeffs());
  // zeta_N^N = 1
  for (unsigned n : {5u, 12u, 30u}) CHECK(CycloNumber::zeta(n, n) == CycloNumber(1, n));
}

TEST_CASE("mixed moduli embed into the lcm") {
  CycloNumber a = CycloNumber::zeta(4);   // i
  CycloNumber b = CycloNumber::zeta(3);
  CycloNumber prod = a * b;
  CHECK(prod.modulus() == 12);
  CHECK(prod == CycloNumber::zeta(12, 7));  // i * zeta_3 = zeta_12^3 * zeta_12^4
}

TEST_CASE("cyclo parsing and printing round-trip") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    unsigned n = 1 + rng() % 40;
    CycloNumber x = random_cyclo(rng, n);
    CHECK(parse_cyclo(x.str(), n) == x);
  }
  CHECK(parse_cyclo("-z^12-z^18", 30) ==
        -(CycloNumber::zeta(30, 12) + CycloNumber::zeta(30, 18)));
}

TEST_CASE("factored parsing") {
  CHECK(parse_factored("2^3*3^2*5*7").value() == 2520);
  CHECK(parse_factored("2520").value() == 2520);
  CHECK_THROWS_AS(parse_factored("4^2"), DataError);
  CHECK_THROWS_AS(parse_factored(""), DataError);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(CycloNumber(Rat(0), 5).inverse(), DomainError);
}
