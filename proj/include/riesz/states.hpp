#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "riesz/algebra.hpp"
#include "riesz/decompose.hpp"
#include "riesz/polytope.hpp"
#include "riesz/rational.hpp"

namespace riesz {

/// Exact-rational valuation on the carrier; values[x] = s(x).
struct State {
  std::vector<Rat> values;
};

/// The compiled state space: additivity and normalization equalities plus
/// the [0,1] bounds, with the reduced geometry attached. A stateless algebra
/// is a reported outcome, not an error.
struct StatePolytope {
  bool stateless = true;
  int dim = 0;
  LinearSystem system;
  VertexEnumeration geometry;
};

StatePolytope state_polytope(const Algebra& e);

/// s(0)=0, s(1)=1, additivity on every defined sum, values in [0,1].
bool is_valid_state(const Algebra& e, const State& s);

/// Exact vertex set of the state polytope, each vertex checked against the
/// state invariants and the active-rank certificate. Sorted lexicographically
/// by value vector.
std::vector<State> extremal_states(const Algebra& e);

/// The closed-form extremal state attached to atom i of the decomposition:
/// s_i(a) = (multiple of atom_i in a meet block_i) / index_i.
State atomic_state(const Algebra& e, const ChainDecomposition& d, int i);

/// Convex coefficients lambda_i = s(block_i); verifies sum 1 and the exact
/// identity s = sum lambda_i s_i on every element.
std::vector<Rat> decompose_state(const Algebra& e, const ChainDecomposition& d,
                                 const State& s);

/// Extremality probes on an MV algebra: the vertex certificate, the
/// min-homomorphism condition s(a^b) = min(s(a),s(b)), and the verbatim
/// max variant, reported side by side.
struct ExtremalityComparison {
  bool vertex = false;
  bool min_condition = false;
  bool max_condition = false;
};
ExtremalityComparison mv_extremality_test(const Algebra& e, const State& s);

nlohmann::json state_to_json(const Algebra& e, const State& s);
State state_from_json(const Algebra& e, const nlohmann::json& j);
nlohmann::json polytope_to_json(const Algebra& e, const StatePolytope& p);

}  // namespace riesz
