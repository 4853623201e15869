#pragma once

#include <optional>
#include <vector>

#include "riesz/algebra.hpp"
#include "riesz/report.hpp"

namespace riesz {

/// Minimal nonzero elements of the derived order, ascending by index.
std::vector<int> atoms(const Algebra& e);
/// Finite algebras are always atomic; the report verifies it anyway.
PropertyReport is_atomic(const Algebra& e);

/// The 2x2 refinement of a1+a2 = b1+b2:
///   a1 = c11+c12, a2 = c21+c22, b1 = c11+c21, b2 = c12+c22.
struct RefinementMatrix {
  int c11, c12, c21, c22;
};

/// Search for a refinement of the given quadruple; candidates for c11 are
/// tried ascending by (height, index) and the remaining entries are forced,
/// so the first hit is deterministic.
std::optional<RefinementMatrix> refinement_matrix(const Algebra& e, int a1,
                                                  int a2, int b1, int b2);

/// Riesz decomposition property via refinement matrices over every defined
/// equality a1+a2 = b1+b2.
PropertyReport rdp_check(const Algebra& e);

/// The equivalent splitting form: a <= b1+b2 implies a = a1+a2 with ai <= bi.
/// Kept as an independent route; tests assert it always agrees with
/// rdp_check.
PropertyReport rdp_check_splitting(const Algebra& e);

/// Some c with a1,a2 <= c <= b1,b2, if any.
std::optional<int> rip_interpolant(const Algebra& e, int a1, int a2, int b1,
                                   int b2);
/// Riesz interpolation property over all pair-below-pair configurations.
PropertyReport rip_check(const Algebra& e);

/// Every multiset of atoms summing to x, each as an ascending index vector.
std::vector<std::vector<int>> atom_decompositions(const Algebra& e, int x);
/// Unique-atom-representability: all atom decompositions of every element are
/// equal as multisets. Effect kind only.
PropertyReport uarp_check(const Algebra& e);
/// Same check under the hypothesis that RDP holds, where a failure is
/// impossible; throws HypothesisNotMet when RDP fails.
PropertyReport similar_decompositions_check(const Algebra& e);

/// Number of elements on a longest chain (C_m has m+1).
int longest_chain(const Algebra& e);
PropertyReport chain_condition(const Algebra& e);

std::optional<int> meet(const Algebra& e, int a, int b);
std::optional<int> join(const Algebra& e, int a, int b);
PropertyReport is_lattice(const Algebra& e);

/// Decomposition witnessing compatibility: a = a1+c, b = b1+c with a1+b1+c
/// defined (left-to-right).
struct CompatibilityWitness {
  int a1, b1, c;
};
std::optional<CompatibilityWitness> compatible(const Algebra& e, int a, int b);

/// Lattice-ordered with all pairs compatible.
PropertyReport is_mv(const Algebra& e);

/// Total MV operations recovered from the partial addition:
/// a (+) b = a + (a' meet b), a' = 1 - a. Construction verifies the MV axiom
/// set and that the induced partial sum equals the original table.
struct MvStructure {
  int n = 0;
  std::vector<int> oplus;  // n*n, total
  std::vector<int> neg;
  int at(int a, int b) const { return oplus[size_t(a) * n + b]; }
};
MvStructure mv_structure(const Algebra& e);

/// e is central iff every x splits as (x meet e) + (x meet e').
bool is_central(const Algebra& e, int x);

/// All central elements plus a verification that they form a Boolean algebra
/// under the induced operations.
struct CenterResult {
  std::vector<int> elements;
  PropertyReport boolean_check;
};
CenterResult center(const Algebra& e);

/// Re-verify a failed report by evaluating its witness tuple against the
/// algebra. Returns false for reports this module cannot replay.
bool replay(const Algebra& e, const PropertyReport& r);

/// Straight-line single-threaded implementations kept as references for the
/// OpenMP kernels; tests and the benchmark compare against them.
namespace serial_ref {
PropertyReport rdp_check(const Algebra& e);
PropertyReport rip_check(const Algebra& e);
PropertyReport is_mv(const Algebra& e);
PropertyReport uarp_check(const Algebra& e);
}  // namespace serial_ref

}  // namespace riesz
