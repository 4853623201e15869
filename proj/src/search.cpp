#include "riesz/search.hpp"

#include <algorithm>
#include <atomic>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "riesz/analysis.hpp"
#include "riesz/error.hpp"
#include "riesz/io.hpp"
#include "riesz/parallel.hpp"

namespace riesz {

namespace {

constexpr int8_t kUnassigned = -2;
constexpr int8_t kUndefined = -1;

/// Backtracking state for one enumeration. Tables are tiny (n <= 8), so the
/// whole state is copied freely when the top branches are distributed.
struct Searcher {
  Kind kind;
  int n;
  int unit;
  std::vector<std::pair<int, int>> cells;  // (row-rank, column-rank) order
  std::vector<int8_t> table;
  std::vector<int8_t> supp_right;  // d with a+d = 1, or -1
  std::vector<int8_t> supp_left;   // e with e+a = 1, or -1
  long long nodes = 0;
  long long node_budget;
  std::vector<std::vector<int8_t>>* out = nullptr;

  Searcher(Kind k, int size, long long budget)
      : kind(k), n(size), unit(size - 1), node_budget(budget) {
    table.assign(n * n, kUnassigned);
    for (int x = 0; x < n; ++x) {
      at(0, x) = at(x, 0) = (int8_t)x;  // zero sums forced
      if (x != 0) at(x, unit) = at(unit, x) = kUndefined;  // E4 / PE4
    }
    at(0, unit) = at(unit, 0) = (int8_t)unit;
    supp_right.assign(n, -1);
    supp_left.assign(n, -1);
    supp_right[0] = (int8_t)unit;
    supp_left[0] = (int8_t)unit;
    supp_right[unit] = 0;
    supp_left[unit] = 0;
    const bool effect = kind == Kind::Effect;
    for (int i = 1; i < n - 1; ++i)
      for (int j = effect ? i : 1; j < n - 1; ++j) cells.push_back({i, j});
  }

  int8_t& at(int a, int b) { return table[a * n + b]; }
  int8_t at(int a, int b) const { return table[a * n + b]; }

  bool value_in_row(int r, int v) const {
    for (int j = 0; j < n; ++j)
      if (at(r, j) == v) return true;
    return false;
  }
  bool value_in_col(int c, int v) const {
    for (int i = 0; i < n; ++i)
      if (at(i, c) == v) return true;
    return false;
  }

  /// Associativity on the partial table: a violation only counts when the
  /// missing entry is definitely undefined, not merely unassigned.
  bool associativity_ok() const {
    const bool effect = kind == Kind::Effect;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = at(a, b);
        if (ab < 0) {
          if (effect) continue;
          // PE1 backward: b+c and a+(b+c) defined force a+b defined.
          if (ab == kUnassigned) continue;
          for (int c = 0; c < n; ++c) {
            int bc = at(b, c);
            if (bc < 0) continue;
            int a_bc = at(a, bc);
            if (a_bc >= 0) return false;  // a+b is pinned undefined
          }
          continue;
        }
        for (int c = 0; c < n; ++c) {
          int abc = at(ab, c);
          if (abc < 0) {
            if (effect || abc == kUnassigned) continue;
            int bc = at(b, c);
            if (bc >= 0 && at(a, bc) >= 0) return false;
            continue;
          }
          int bc = at(b, c);
          if (bc == kUndefined) return false;
          if (bc == kUnassigned) continue;
          int a_bc = at(a, bc);
          if (a_bc == kUndefined) return false;
          if (a_bc >= 0 && a_bc != abc) return false;
        }
      }
    return true;
  }

  bool supplements_feasible() const {
    for (int x = 1; x < n - 1; ++x) {
      if (supp_right[x] < 0) {
        bool possible = false;
        for (int j = 1; j < n - 1 && !possible; ++j)
          possible = at(x, j) == kUnassigned;
        if (!possible) return false;
      }
      if (kind == Kind::PseudoEffect && supp_left[x] < 0) {
        bool possible = false;
        for (int i = 1; i < n - 1 && !possible; ++i)
          possible = at(i, x) == kUnassigned;
        if (!possible) return false;
      }
    }
    return true;
  }

  bool place(int i, int j, int8_t v) {
    const bool effect = kind == Kind::Effect;
    if (v >= 0) {
      if (v == i || v == j) return false;  // cancellativity against zero
      if (value_in_row(i, v)) return false;
      if (effect && i != j && value_in_row(j, v)) return false;
      if (!effect && value_in_col(j, v)) return false;
      if (v == unit) {
        if (supp_right[i] >= 0 && supp_right[i] != j) return false;
        if (effect && supp_right[j] >= 0 && supp_right[j] != i) return false;
        if (!effect && supp_left[j] >= 0 && supp_left[j] != i) return false;
      }
    }
    at(i, j) = v;
    if (effect) at(j, i) = v;
    if (v == unit) {
      supp_right[i] = (int8_t)j;
      supp_left[j] = (int8_t)i;
      if (effect) {
        supp_right[j] = (int8_t)i;
        supp_left[i] = (int8_t)j;
      }
    }
    return true;
  }

  void unplace(int i, int j, int8_t v) {
    at(i, j) = kUnassigned;
    if (kind == Kind::Effect) at(j, i) = kUnassigned;
    if (v == unit) {
      supp_right[i] = -1;
      supp_left[j] = -1;
      if (kind == Kind::Effect) {
        supp_right[j] = -1;
        supp_left[i] = -1;
      }
    }
  }

  bool leaf_ok() const {
    for (int x = 0; x < n; ++x) {
      if (supp_right[x] < 0) return false;
      if (kind == Kind::PseudoEffect && supp_left[x] < 0) return false;
    }
    if (kind == Kind::PseudoEffect) {
      // PE3: a+b = d+a = b+e for some d, e.
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int s = at(a, b);
          if (s < 0) continue;
          if (!value_in_col(a, s) || !value_in_row(b, s)) return false;
        }
    }
    return true;
  }

  /// Canonical iff the table is the lexicographic minimum over relabelings
  /// of the interior (zero and unit stay fixed).
  bool canonical_leaf() const {
    const int m = n - 2;
    if (m <= 1) return true;
    std::vector<int> perm(n);
    std::vector<int> mid(m);
    for (int i = 0; i < m; ++i) mid[i] = i + 1;
    perm[0] = 0;
    perm[n - 1] = n - 1;
    std::vector<int8_t> relabeled(n * n);
    do {
      for (int i = 0; i < m; ++i) perm[i + 1] = mid[i];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int8_t v = at(a, b);
          relabeled[perm[a] * n + perm[b]] =
              v < 0 ? v : (int8_t)perm[v];
        }
      if (std::lexicographical_compare(relabeled.begin(), relabeled.end(),
                                       table.begin(), table.end()))
        return false;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return true;
  }

  void dfs(size_t cell) {
    if (++nodes > node_budget)
      throw Error(Errc::budget_exceeded, "enumeration node budget exhausted");
    if (cell == cells.size()) {
      if (leaf_ok() && canonical_leaf()) out->push_back(table);
      return;
    }
    auto [i, j] = cells[cell];
    for (int8_t v = kUndefined; v < (int8_t)n; ++v) {
      if (v == 0) continue;
      if (!place(i, j, v)) continue;
      if (associativity_ok() && supplements_feasible()) dfs(cell + 1);
      unplace(i, j, v);
    }
  }
};

Algebra table_to_algebra(Kind kind, int n, const std::vector<int8_t>& table) {
  RawTable t;
  t.kind = kind;
  t.names.resize(n);
  t.names[0] = "0";
  t.names[n - 1] = "1";
  for (int i = 1; i < n - 1; ++i) t.names[i] = std::string(1, char('a' + i - 1));
  t.zero = 0;
  t.unit = n - 1;
  t.plus.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a * n + b] >= 0) t.at(a, b) = table[a * n + b];
  auto res = validate(std::move(t));
  if (!res.ok())
    throw Error(Errc::theorem_violation,
                "enumeration emitted a table that fails validation");
  return std::move(*res.algebra);
}

std::vector<Algebra> enumerate_core(Kind kind, int n, long long node_budget,
                                    bool parallel) {
  const int cap = kind == Kind::Effect ? kEffectSizeCap : kPseudoSizeCap;
  if (n < 2 || n > cap)
    throw Error(Errc::budget_exceeded,
                "size out of the configured range (2.." + std::to_string(cap) +
                    ")");
  Searcher root(kind, n, node_budget);
  std::vector<std::vector<int8_t>> tables;
  if (root.cells.empty()) {
    root.out = &tables;
    root.dfs(0);
  } else {
    // Distribute the branches of the first cell; each worker runs an
    // independent searcher and results are merged in branch order.
    auto [i, j] = root.cells[0];
    std::vector<int8_t> branch_values;
    for (int8_t v = kUndefined; v < (int8_t)n; ++v)
      if (v != 0) branch_values.push_back(v);
    std::vector<std::vector<std::vector<int8_t>>> results(
        branch_values.size());
    const int threads = parallel ? worker_count() : 1;
    std::atomic<bool> failed{false};
    std::string error_msg;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t bi = 0; bi < branch_values.size(); ++bi) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        Searcher s(kind, n, node_budget);
        s.out = &results[bi];
        if (s.place(i, j, branch_values[bi])) {
          if (s.associativity_ok() && s.supplements_feasible()) s.dfs(1);
        }
      } catch (const std::exception& ex) {
#pragma omp critical
        {
          failed.store(true);
          error_msg = ex.what();
        }
      }
    }
    if (failed.load())
      throw Error(Errc::budget_exceeded, error_msg);
    for (auto& r : results)
      for (auto& t : r) tables.push_back(std::move(t));
  }
  std::vector<Algebra> out;
  out.reserve(tables.size());
  for (const auto& t : tables) out.push_back(table_to_algebra(kind, n, t));
  return out;
}

}  // namespace

std::vector<Algebra> enumerate_algebras(Kind kind, int n,
                                        long long node_budget) {
  return enumerate_core(kind, n, node_budget, true);
}

std::vector<Algebra> serial_ref::enumerate_algebras(Kind kind, int n,
                                                    long long node_budget) {
  return enumerate_core(kind, n, node_budget, false);
}

std::vector<std::pair<int, long long>> census(Kind kind, int max_n,
                                              long long node_budget) {
  std::vector<std::pair<int, long long>> out;
  for (int n = 2; n <= max_n; ++n)
    out.push_back({n, (long long)enumerate_algebras(kind, n, node_budget)
                          .size()});
  return out;
}

PropertyReport check_named_property(const Algebra& e, const std::string& name) {
  if (name == "commutative") {
    for (int a = 0; a < e.size(); ++a)
      for (int b = a + 1; b < e.size(); ++b)
        if (e.plus(a, b) != e.plus(b, a)) {
          Witness w;
          w.tag = "noncommutative";
          w.tuple = {e.name(a), e.name(b)};
          w.note = "a+b and b+a differ";
          return report_fails("commutative", std::move(w));
        }
    return report_holds("commutative");
  }
  // Checks defined on effect algebras first need commutativity on
  // pseudo-effect input; the re-tagged table is used when it holds.
  const bool needs_effect =
      name == "mv" || name == "uarp" || name == "lattice";
  if (needs_effect && e.kind() == Kind::PseudoEffect) {
    auto comm = check_named_property(e, "commutative");
    if (!comm.holds) {
      auto r = report_fails(name, *comm.witness);
      r.witness->note = "not commutative, hence not an effect algebra";
      return r;
    }
    RawTable t = e.to_raw();
    t.kind = Kind::Effect;
    auto v = validate(std::move(t));
    if (!v.ok())
      throw Error(Errc::theorem_violation,
                  "commutative pseudo-effect table failed effect validation");
    return check_named_property(*v.algebra, name);
  }
  if (name == "rdp") return rdp_check(e);
  if (name == "rip") return rip_check(e);
  if (name == "uarp") return uarp_check(e);
  if (name == "lattice") return is_lattice(e);
  if (name == "mv") return is_mv(e);
  if (name == "atomic") return is_atomic(e);
  if (name == "chain") return chain_condition(e);
  throw Error(Errc::parse_error, "unknown property '" + name + "'");
}

SearchOutcome regression(const SearchSpec& spec) {
  SearchOutcome out;
  for (int n = 2; n <= spec.max_size; ++n) {
    SizeOutcome so;
    so.size = n;
    auto models = enumerate_algebras(spec.kind, n, spec.node_budget);
    so.models = (long long)models.size();
    for (const auto& m : models) {
      bool keep = true;
      for (const auto& req : spec.require)
        if (!check_named_property(m, req).holds) {
          keep = false;
          break;
        }
      if (!keep) continue;
      ++so.filtered;
      for (const auto& prop : spec.assert_props) {
        if (!check_named_property(m, prop).holds) {
          ++so.failures;
          out.counterexamples.push_back({prop, m});
        }
      }
    }
    out.sizes.push_back(so);
  }
  return out;
}

nlohmann::json outcome_to_json(const SearchOutcome& o) {
  nlohmann::json j;
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& s : o.sizes) {
    nlohmann::json e;
    e["size"] = s.size;
    e["models"] = s.models;
    e["filtered"] = s.filtered;
    e["failures"] = s.failures;
    sizes.push_back(std::move(e));
  }
  j["sizes"] = std::move(sizes);
  nlohmann::json cx = nlohmann::json::array();
  for (const auto& [prop, model] : o.counterexamples) {
    nlohmann::json e;
    e["property"] = prop;
    e["model"] = algebra_to_json(model);
    cx.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(cx);
  return j;
}

}  // namespace riesz
