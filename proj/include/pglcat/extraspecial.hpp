#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pglcat/cyclo_matrix.hpp"

namespace pglcat {

/// Generators of the degree-p extraspecial normalizer construction, exact
/// over Q(zeta_p) (projective scaling) or Q(zeta_{4p^2}) (unimodular
/// scaling). p is an odd prime throughout.
CycloMatrix make_sigma(unsigned p);                 // e_j -> e_{j+1}
CycloMatrix make_tau(unsigned p);                   // e_j -> zeta^j e_j
CycloMatrix make_lambda(unsigned p, long d);        // e_j -> eps * e_{dj}, det 1

/// f1: e_j -> c1 zeta^C(j,2) e_j ; f2: e_j -> c2 sum_k zeta^{jk} e_k ;
/// f3: e_j -> c3 e_{jm} with m a verified generator of F_p^*.
/// With unimodular = false the scaling constants are 1 (projective classes
/// are unaffected); with unimodular = true exact constants in Q(zeta_{4p^2})
/// make every determinant 1.
CycloMatrix make_f1(unsigned p, bool unimodular = false);
CycloMatrix make_f2(unsigned p, bool unimodular = false);
CycloMatrix make_f3(unsigned p, unsigned m, bool unimodular = false);

unsigned default_multiplicative_generator(unsigned p);

CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b);

struct ClosureResult {
  bool complete;  // false: cap exceeded, classes holds the partial set
  std::vector<ProjectiveMatrix> classes;
};

/// Closure of the scalar-normalized classes of the generators under
/// multiplication. Rejects singular generators.
ClosureResult projective_closure(const std::vector<CycloMatrix>& generators, const Int& cap);

struct LinearClosureResult {
  bool complete;
  Int cardinality;
};

/// Closure under multiplication of the matrices themselves (no scalar
/// normalization); the generators must generate a finite group.
LinearClosureResult linear_closure(const std::vector<CycloMatrix>& generators, const Int& cap);

struct NormalizerOrders {
  unsigned p;
  Int socle_classes;            // projective classes of <sigma, tau>: p^2
  Int projective_classes;       // classes of the full generator set
  Int unimodular_order;         // order of the determinant-one matrix group
  std::vector<std::string> notes;
};

/// Runs the projective closure of {sigma, tau} and of the full generator
/// set, then derives the order of the unimodular matrix group: the scaled
/// generators have determinant 1, the commutator of sigma and tau is the
/// scalar zeta, and Z(SL(p,C)) has exactly p scalars, so the SL-side group
/// is p times the class count. Closure for p >= 11 must be forced.
NormalizerOrders normalizer_group_orders(unsigned p, std::optional<Int> cap = std::nullopt,
                                         bool force = false);

/// A polygon is a spanning set of p vectors whose lines the group permutes.
struct Polygon {
  std::string label;  // "inf", "0", ..., "p-1"
  std::vector<std::vector<CycloNumber>> vectors;
};

struct PolygonSet {
  unsigned p;
  std::vector<Polygon> polygons;  // the p+1 sets
};

PolygonSet polygons(unsigned p);

bool is_polygon(const std::vector<std::vector<CycloNumber>>& delta,
                const std::vector<CycloMatrix>& generators);

/// Exhaustive search for <sigma, tau>-polygons over the eigenbases of the
/// nontrivial cyclic subgroups of the projective socle; returns the distinct
/// polygons found (expected: exactly p+1).
std::vector<Polygon> search_polygons(unsigned p);

}  // namespace pglcat
