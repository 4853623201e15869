#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "riesz/algebra.hpp"

namespace riesz {

/// Canonical byte encoding of an algebra: invariant under element renaming
/// and equal exactly for isomorphic algebras. Order-invariant partition
/// refinement first, then lexicographic minimization over the residual
/// symmetry via individualization; the minimization refuses to run past its
/// node budget.
std::vector<uint8_t> canonical_form(const Algebra& e);

/// Canonical position of each element (the labeling realizing
/// canonical_form). Zero always lands at position 0, the unit at n-1.
std::vector<int> canonical_labeling(const Algebra& e);

/// Bijection e-index -> f-index commuting with + and fixing 0 and 1, when the
/// algebras are isomorphic.
std::optional<std::vector<int>> is_isomorphic(const Algebra& e,
                                              const Algebra& f);

}  // namespace riesz
