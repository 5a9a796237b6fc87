#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pglcat/errors.hpp"
#include "pglcat/extraspecial.hpp"

using namespace pglcat;

TEST_CASE("generator shapes") {
  CycloMatrix tau3 = make_tau(3);
  CHECK(tau3.at(0, 0) == CycloNumber(1, 3));
  CHECK(tau3.at(1, 1) == CycloNumber::zeta(3));
  CHECK(tau3.at(2, 2) == CycloNumber::zeta(3, 2));

  // f1 unscaled at p=3 is diag(1, 1, zeta)
  CycloMatrix f1 = make_f1(3);
  CHECK(f1.at(0, 0) == CycloNumber(1, 3));
  CHECK(f1.at(1, 1) == CycloNumber(1, 3));
  CHECK(f1.at(2, 2) == CycloNumber::zeta(3));

  // f3(5, m=2) maps e1->e2, e2->e4, e3->e1, e4->e3 up to the constant
  CycloMatrix f3 = make_f3(5, 2);
  CHECK_FALSE(f3.at(2, 1).is_zero());
  CHECK_FALSE(f3.at(4, 2).is_zero());
  CHECK_FALSE(f3.at(1, 3).is_zero());
  CHECK_FALSE(f3.at(3, 4).is_zero());
  CHECK_FALSE(f3.at(0, 0).is_zero());
  CHECK_THROWS_AS(make_f3(7, 2), DomainError);  // 2 generates only index 2 mod 7
  CHECK_THROWS_AS(make_sigma(2), DomainError);
  CHECK_THROWS_AS(make_lambda(5, 0), DomainError);
}

TEST_CASE("determinants of the basic generators are one") {
  for (unsigned p : {3u, 5u, 7u}) {
    CHECK(make_sigma(p).determinant() == CycloNumber(1, p));
    CHECK(make_tau(p).determinant() == CycloNumber(1, p));
    for (long d = 1; d < static_cast<long>(p); ++d)
      CHECK(make_lambda(p, d).determinant() == CycloNumber(1, p));
  }
}

TEST_CASE("unimodular scaling constants are exact") {
  for (unsigned p : {3u, 5u}) {
    unsigned m = default_multiplicative_generator(p);
    for (const CycloMatrix& g : {make_f1(p, true), make_f2(p, true), make_f3(p, m, true)}) {
      CycloNumber det = g.determinant();
      CHECK(det == CycloNumber(1, g.modulus()));
    }
  }
}

TEST_CASE("f2 squared is p times a permutation") {
  for (unsigned p : {3u, 5u}) {
    CycloMatrix f2 = make_f2(p);
    CycloMatrix sq = f2 * f2;
    // entries: p at (k, j) with k = -j mod p, zero elsewhere
    for (unsigned j = 0; j < p; ++j)
      for (unsigned k = 0; k < p; ++k) {
        if (k == (p - j) % p)
          CHECK(sq.at(k, j) == CycloNumber(static_cast<long>(p), p));
        else
          CHECK(sq.at(k, j).is_zero());
      }
  }
}

TEST_CASE("Heisenberg relation tau sigma = zeta sigma tau for p <= 13") {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    CycloMatrix sigma = make_sigma(p), tau = make_tau(p);
    CHECK(tau * sigma == sigma.scaled(CycloNumber::zeta(p)) * tau);
  }
}

TEST_CASE("Kronecker products") {
  CHECK(kron(CycloMatrix::identity(2, 1), CycloMatrix::identity(3, 1)) ==
        CycloMatrix::identity(6, 1));
  // block-permutation shape of sigma_3 x I_2
  CycloMatrix k = kron(make_sigma(3), CycloMatrix::identity(2, 3));
  CHECK(k.size() == 6);
  CHECK(k.at(2, 0) == CycloNumber(1, 3));
  CHECK(k.at(3, 1) == CycloNumber(1, 3));
  CHECK(k.at(0, 4) == CycloNumber(1, 3));

  // det(kron(A,B)) = det(A)^nB * det(B)^nA on random exact matrices
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 5; ++iter) {
    CycloMatrix a(2, 12), b(3, 12);
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 2; ++j)
        a.set(i, j, CycloNumber::from_terms(
                        12, {{static_cast<long>(rng() % 12), Rat(static_cast<long>(rng() % 5))}}));
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j)
        b.set(i, j, CycloNumber::from_terms(
                        12, {{static_cast<long>(rng() % 12), Rat(static_cast<long>(rng() % 5))}}));
    CycloNumber da = a.determinant(), db = b.determinant();
    CycloNumber expected = da * da * da * db * db;
    CHECK(kron(a, b).determinant() == expected);
  }
}

TEST_CASE("projective closure of the socle generators") {
  for (unsigned p : {3u, 5u, 7u}) {
    auto res = projective_closure({make_sigma(p), make_tau(p)}, 1000);
    CHECK(res.complete);
    CHECK(res.classes.size() == p * p);
  }
}

TEST_CASE("full normalizer closure at p = 3, two routes") {
  // Projective route
  unsigned m = default_multiplicative_generator(3);
  auto proj = projective_closure(
      {make_sigma(3), make_tau(3), make_f1(3), make_f2(3), make_f3(3, m)}, 5000);
  CHECK(proj.complete);
  CHECK(proj.classes.size() == 216);  // p^3 (p^2 - 1)

  // Independent route: direct matrix closure of the unimodular generators in
  // SL(3,C); its cardinality must be p times the class count.
  auto lin = linear_closure({make_sigma(3).embedded(36), make_tau(3).embedded(36),
                             make_f1(3, true), make_f2(3, true), make_f3(3, m, true)},
                            5000);
  CHECK(lin.complete);
  CHECK(lin.cardinality == 648);  // p^4 (p^2 - 1)

  auto orders = normalizer_group_orders(3);
  CHECK(orders.socle_classes == 9);
  CHECK(orders.projective_classes == 216);
  CHECK(orders.unimodular_order == lin.cardinality);
}

TEST_CASE("closure guards") {
  CHECK_THROWS_AS(normalizer_group_orders(11), DomainError);  // needs force
  auto res = projective_closure({make_sigma(5), make_tau(5)}, 10);
  CHECK_FALSE(res.complete);  // cap exceeded is distinguishable
  CycloMatrix singular(3, 3);
  CHECK_THROWS_AS(projective_closure({singular}, 10), DomainError);
}

TEST_CASE("polygons of the monomial socle") {
  for (unsigned p : {3u, 5u}) {
    PolygonSet ps = polygons(p);
    CHECK(ps.polygons.size() == p + 1);
    std::vector<CycloMatrix> gens{make_sigma(p), make_tau(p)};
    for (const auto& poly : ps.polygons) {
      INFO("polygon ", poly.label);
      CHECK(is_polygon(poly.vectors, gens));
    }
    // a generic basis is not a polygon
    std::vector<std::vector<CycloNumber>> bad;
    for (unsigned j = 0; j < p; ++j) {
      std::vector<CycloNumber> v(p, CycloNumber(Rat(0), p));
      v[j] = CycloNumber(1, p);
      if (j + 1 < p) v[j + 1] = CycloNumber(7, p);
      bad.push_back(std::move(v));
    }
    CHECK_FALSE(is_polygon(bad, gens));
  }
}

TEST_CASE("exhaustive polygon search finds exactly p + 1") {
  for (unsigned p : {3u, 5u}) {
    auto found = search_polygons(p);
    CHECK(found.size() == p + 1);
  }
}

TEST_CASE("matrix dump format") {
  std::string d = make_tau(3).dump();
  CHECK(d.find("N=3") == 0);
  CHECK(d.find("z") != std::string::npos);
}
