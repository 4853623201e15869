#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "riesz/algebra.hpp"
#include "riesz/report.hpp"

namespace riesz {

inline constexpr int kEffectSizeCap = 8;
inline constexpr int kPseudoSizeCap = 6;

/// All algebras of the given kind and size, exactly one representative per
/// isomorphism class, in a deterministic order independent of the worker
/// count. Backtracking over table cells with axiom pruning; a candidate is
/// emitted only when its table is the lexicographic minimum over relabelings.
std::vector<Algebra> enumerate_algebras(Kind kind, int n,
                                        long long node_budget = 200'000'000);

/// Isomorphism-class counts per size, 2..max_n.
std::vector<std::pair<int, long long>> census(Kind kind, int max_n,
                                              long long node_budget =
                                                  200'000'000);

struct SearchSpec {
  Kind kind = Kind::Effect;
  int max_size = 6;
  std::vector<std::string> require;       // filters
  std::vector<std::string> assert_props;  // must hold on every filtered model
  long long node_budget = 200'000'000;
};

struct SizeOutcome {
  int size = 0;
  long long models = 0;
  long long filtered = 0;
  long long failures = 0;
};

struct SearchOutcome {
  std::vector<SizeOutcome> sizes;
  /// (property that failed, offending model)
  std::vector<std::pair<std::string, Algebra>> counterexamples;
};

/// Enumerate every model up to max_size, keep those passing all required
/// properties, and check every asserted property on them.
SearchOutcome regression(const SearchSpec& spec);

/// Property registry shared by filters and assertions: rdp, rip, uarp,
/// lattice, mv, atomic, chain, commutative. On pseudo-effect models, checks
/// that need an effect algebra first demand commutativity.
PropertyReport check_named_property(const Algebra& e, const std::string& name);

nlohmann::json outcome_to_json(const SearchOutcome& o);

namespace serial_ref {
std::vector<Algebra> enumerate_algebras(Kind kind, int n,
                                        long long node_budget = 200'000'000);
}

}  // namespace riesz
