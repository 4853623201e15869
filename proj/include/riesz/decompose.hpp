#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "riesz/algebra.hpp"
#include "riesz/report.hpp"

namespace riesz {

/// One central block of an atomic RDP algebra: an atom, its isotropic index,
/// and the central element (index * atom).
struct ChainBlock {
  int atom;
  int index;
  int block;
};

/// The verified isomorphism onto a product of chains: phi(x) is the tuple of
/// atom multiples of (x meet block_i).
struct ChainDecomposition {
  std::vector<ChainBlock> blocks;
  Algebra chain_product;
  std::vector<int> phi;                          // element -> product index
  std::vector<std::vector<int>> phi_components;  // element -> multiples
  std::vector<int> chain_lengths() const {
    std::vector<int> ls;
    for (const auto& b : blocks) ls.push_back(b.index + 1);
    return ls;
  }
};

/// Sums of distinct atoms exist and equal their joins, pairwise and over
/// subsets up to the documented cap (size 20 / 2^16 subsets). The cap only
/// ever produces BudgetExceeded, never a wrong verdict.
PropertyReport atom_sum_properties(const Algebra& e);

/// For every atom: the interval [0, index*atom] is exactly the multiples of
/// the atom, the block is central and an atom of the center, and distinct
/// blocks meet at 0 with sum equal join. Requires atomic + RDP; a failed
/// verification is a TheoremViolation.
std::vector<ChainBlock> central_blocks(const Algebra& e);

/// Build and verify the isomorphism onto the product of chains determined by
/// central_blocks; also asserts the algebra is MV.
ChainDecomposition chain_decomposition(const Algebra& e);

/// A finite atomic pseudo-effect algebra with RDP must be commutative; on
/// success the table is re-tagged as an effect algebra and decomposed.
struct CommutativityOutcome {
  PropertyReport report;
  std::optional<Algebra> as_effect;
  std::optional<ChainDecomposition> decomposition;
};
CommutativityOutcome pea_commutativity_check(const Algebra& p);

nlohmann::json decomposition_to_json(const Algebra& e,
                                     const ChainDecomposition& d);

}  // namespace riesz
