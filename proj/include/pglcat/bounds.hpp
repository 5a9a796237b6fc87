#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pglcat/factored.hpp"

namespace pglcat {

enum class PrimeVerdictKind {
  Forbidden,                   // p > 2n+1
  ExceptionalPSL2p,            // p = 2n+1, forces the central quotient PSL(2,p)
  LargePrimeUniqueSquareFree,  // n+1 < p < 2n+1
  Unrestricted,
};

struct PrimeVerdict {
  PrimeVerdictKind kind;
  std::string note;
};

/// Case split on a prime p against the degree n for (quasi-)primitive
/// groups. p must be prime.
PrimeVerdict admissible_prime(unsigned n, const Int& p);

struct BlichfeldtOptions {
  // The general eigenvalue bound is p^k <= (n!)_p * C^(n-1) with C = 6; the
  // older printed constant was 5 and is selectable for comparison runs.
  bool constant_five = false;
};

/// Largest admissible exponent k with p^k dividing the group order: the
/// p-coprime-degree bound (exponent of p in n! * p^(n-1), applicable when
/// p does not divide n) intersected with the general eigenvalue bound.
unsigned blichfeldt_exponent_bound(unsigned n, const Int& p, BlichfeldtOptions opts = {});

enum class BoundContext { PrimitiveInGL, AnyFiniteInGL };

/// Central-quotient index bound where the embedded data determines one:
/// primitive context (n+1)! for n > 12 or n in {10,11};
/// any-finite context (n+1)! for n >= 71 or n in {63,65,67,69}, and
/// 60^r * r! for 20 <= n <= 70 otherwise (n = 2r or 2r+1).
/// Absent means "not determined by embedded data" (the exception tables for
/// small n are not reproduced here).
std::optional<FactoredInteger> collins_index_bound(unsigned n, BoundContext context);

struct QuasiprimitivityVerdict {
  bool admissible;
  std::vector<std::string> violations;  // empty iff admissible
};

/// Necessary conditions only: conjunction of the prime case split, the
/// exponent bounds, the unique-large-prime and square-free rules and the
/// index bound when defined. Never claims sufficiency.
QuasiprimitivityVerdict can_be_quasiprimitive(unsigned n,
                                              const FactoredInteger& central_quotient_order,
                                              BlichfeldtOptions opts = {});

}  // namespace pglcat
