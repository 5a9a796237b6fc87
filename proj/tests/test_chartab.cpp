#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pglcat/chartab.hpp"
#include "pglcat/errors.hpp"

using namespace pglcat;

TEST_CASE("embedded tables load and validate") {
  // parse() already enforces the class equations, row orthogonality and the
  // sum-of-squares identity; loading is the test.
  for (const char* name : {"A4", "A5", "S4", "PSL(2,7)"}) {
    const CharacterTable& t = embedded_table(name);
    CHECK(t.label() == name);
    CHECK_FALSE(t.irreducibles().empty());
  }
  CHECK(embedded_table("A5").group_order() == 60);
  CHECK(embedded_table("PSL(2,7)").group_order() == 168);
  CHECK_THROWS_AS(embedded_table("M11"), DataError);
}

TEST_CASE("column orthogonality of the embedded tables") {
  for (const char* name : {"A4", "A5", "S4", "PSL(2,7)"}) {
    const CharacterTable& t = embedded_table(name);
    size_t k = t.classes().size();
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) {
        CycloNumber sum;
        for (const auto& chi : t.irreducibles())
          sum = sum + chi[a] * chi[b].conjugate();
        if (a == b)
          CHECK(sum.rational_value() == Rat(t.classes()[a].centralizer));
        else
          CHECK(sum.is_zero());
      }
  }
}

TEST_CASE("induction from A4 to A5 mechanizes the imprimitivity argument") {
  const CharacterTable& a5 = embedded_table("A5");
  const Fusion& fus = embedded_fusion("A4<A5");
  // nontrivial linear character of A4
  ClassFunction tau = embedded_table("A4").irreducible(1);
  ClassFunction chi = induce(tau, fus);
  CHECK(chi[0].rational_value() == 5);  // degree [G:H] * 1
  CHECK(inner_product(a5, chi, a5.trivial_character()) == Rat(0));
  CHECK(inner_product(a5, chi, chi) == Rat(1));
  CHECK(is_irreducible(a5, chi));
  // it is the degree-5 irreducible itself
  CHECK(chi == a5.irreducible(4));
}

TEST_CASE("induction of the trivial character is the permutation character") {
  const CharacterTable& a5 = embedded_table("A5");
  const Fusion& fus = embedded_fusion("A4<A5");
  ClassFunction perm = induce(embedded_table("A4").trivial_character(), fus);
  // one orbit on 5 points
  CHECK(inner_product(a5, perm, a5.trivial_character()) == Rat(1));
  // decomposes as 1 + (degree-4 irreducible)
  auto mult = decompose(a5, perm);
  CHECK(mult == std::vector<unsigned>{1, 0, 0, 1, 0});
}

TEST_CASE("induction from S4 to PSL(2,7) is irreducible of degree 7") {
  const CharacterTable& g = embedded_table("PSL(2,7)");
  const Fusion& fus = embedded_fusion("S4<PSL(2,7)");
  ClassFunction sgn = embedded_table("S4").irreducible(1);
  ClassFunction chi = induce(sgn, fus);
  CHECK(chi[0].rational_value() == 7);
  CHECK(inner_product(g, chi, g.trivial_character()) == Rat(0));
  CHECK(is_irreducible(g, chi));
  CHECK(chi == g.irreducible(4));
}

TEST_CASE("identity fusion induces nothing new") {
  const CharacterTable& a5 = embedded_table("A5");
  std::vector<size_t> ident{0, 1, 2, 3, 4};
  Fusion f = Fusion::unchecked(a5, a5, ident);
  for (const auto& chi : a5.irreducibles()) CHECK(induce(chi, f) == chi);
}

TEST_CASE("Frobenius reciprocity over the full embedded product") {
  for (const char* which : {"A4<A5", "S4<PSL(2,7)"}) {
    const Fusion& fus = embedded_fusion(which);
    for (const auto& tau : fus.sub().irreducibles())
      for (const auto& phi : fus.ambient().irreducibles()) CHECK(frobenius_check(tau, phi, fus));
  }
}

TEST_CASE("a corrupted fusion map breaks reciprocity") {
  const CharacterTable& a4 = embedded_table("A4");
  const CharacterTable& a5 = embedded_table("A5");
  // send the order-3 classes onto the involution class: orders no longer
  // preserved, so this can only be built unchecked
  Fusion bad = Fusion::unchecked(a4, a5, {0, 1, 1, 2});
  bool all_hold = true;
  for (const auto& tau : a4.irreducibles())
    for (const auto& phi : a5.irreducibles())
      if (!frobenius_check(tau, phi, bad)) all_hold = false;
  CHECK_FALSE(all_hold);
}

TEST_CASE("fusion validation rejects bad data") {
  const CharacterTable& a4 = embedded_table("A4");
  const CharacterTable& a5 = embedded_table("A5");
  CHECK_THROWS_AS(Fusion::parse_text("fusion,A4,A5,5\n1a,1a\n2a,2a\n3a,3a\n3b,2a\n", a4, a5),
                  DataError);  // element order broken
  CHECK_THROWS_AS(Fusion::parse_text("fusion,A4,A5,7\n1a,1a\n2a,2a\n3a,3a\n3b,3a\n", a4, a5),
                  DataError);  // wrong index
  CHECK_THROWS_AS(Fusion::parse_text("fusion,A4,A5,5\n1a,1a\n2a,2a\n3a,3a\n", a4, a5),
                  DataError);  // missing class
}

TEST_CASE("induction is additive and degree-multiplicative") {
  const Fusion& fus = embedded_fusion("A4<A5");
  const CharacterTable& a4 = embedded_table("A4");
  const CharacterTable& a5 = embedded_table("A5");
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 20; ++iter) {
    // random nonnegative combination of irreducibles
    std::vector<unsigned> coeff(a4.irreducibles().size());
    for (auto& c : coeff) c = rng() % 3;
    ClassFunction combo(a4.classes().size(), CycloNumber(Rat(0), a4.exponent()));
    Rat degree(0);
    for (size_t i = 0; i < coeff.size(); ++i) {
      if (!coeff[i]) continue;
      for (size_t j = 0; j < combo.size(); ++j)
        combo[j] = combo[j] +
                   a4.irreducible(i)[j] * CycloNumber(Rat(coeff[i]), a4.exponent());
      degree += Rat(coeff[i]) * a4.irreducible(i)[0].rational_value();
    }
    ClassFunction ind = induce(combo, fus);
    CHECK(ind[0].rational_value() == Rat(5) * degree);
    // additivity: Ind(sum) = sum Ind(chi_i) with multiplicity
    ClassFunction sum_ind(a5.classes().size(), CycloNumber(Rat(0), 0 ? 0 : 60));
    sum_ind.assign(a5.classes().size(), CycloNumber(Rat(0), a5.exponent()));
    for (size_t i = 0; i < coeff.size(); ++i) {
      if (!coeff[i]) continue;
      ClassFunction one = induce(a4.irreducible(i), fus);
      for (size_t j = 0; j < sum_ind.size(); ++j)
        sum_ind[j] =
            sum_ind[j] + one[j] * CycloNumber(Rat(coeff[i]), a5.exponent());
    }
    CHECK(ind == sum_ind);
    // nonnegative integral decomposition
    if (degree > 0) {
      auto mult = decompose(a5, ind);
      (void)mult;
    }
  }
}

TEST_CASE("characters are recognized, non-characters flagged") {
  const CharacterTable& a5 = embedded_table("A5");
  // sum of two irreducibles has norm 2
  ClassFunction sum(a5.classes().size(), CycloNumber(Rat(0), a5.exponent()));
  for (size_t j = 0; j < sum.size(); ++j)
    sum[j] = a5.irreducible(3)[j] + a5.irreducible(4)[j];
  CHECK_FALSE(is_irreducible(a5, sum));
  CHECK(inner_product(a5, sum, sum) == Rat(2));
  // a perturbed class function is not a character at all
  ClassFunction broken = a5.irreducible(4);
  broken[1] = broken[1] + CycloNumber(Rat(1, 2), a5.exponent());
  CHECK_THROWS_AS(is_irreducible(a5, broken), DomainError);
}
