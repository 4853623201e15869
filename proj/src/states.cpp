#include "riesz/states.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "riesz/analysis.hpp"
#include "riesz/error.hpp"
#include "riesz/io.hpp"

namespace riesz {

namespace {

LinearSystem compile_system(const Algebra& e) {
  const int n = e.size();
  LinearSystem sys;
  sys.dim = n;
  auto push_eq = [&](QVec lhs, Rat rhs) {
    sys.eq_lhs.push_back(std::move(lhs));
    sys.eq_rhs.push_back(rhs);
  };
  // Additivity rows s(a) + s(b) - s(a+b) = 0 over defined sums. For the
  // effect kind the commuted pair gives the same row.
  for (int a = 0; a < n; ++a)
    for (int b = e.kind() == Kind::Effect ? a : 0; b < n; ++b) {
      int s = e.plus(a, b);
      if (s < 0) continue;
      QVec row(n, Rat(0));
      row[a] += Rat(1);
      row[b] += Rat(1);
      row[s] -= Rat(1);
      bool zero = true;
      for (const auto& x : row) zero &= x.is_zero();
      if (!zero) push_eq(std::move(row), Rat(0));
    }
  {
    QVec row(n, Rat(0));
    row[e.unit()] = Rat(1);
    push_eq(std::move(row), Rat(1));  // normalization s(1) = 1
  }
  {
    QVec row(n, Rat(0));
    row[e.zero()] = Rat(1);
    push_eq(std::move(row), Rat(0));
  }
  for (int x = 0; x < n; ++x) {
    QVec lo(n, Rat(0)), hi(n, Rat(0));
    lo[x] = Rat(1);
    sys.ineq_lhs.push_back(std::move(lo));
    sys.ineq_rhs.push_back(Rat(0));  // s(x) >= 0
    hi[x] = Rat(-1);
    sys.ineq_lhs.push_back(std::move(hi));
    sys.ineq_rhs.push_back(Rat(-1));  // s(x) <= 1
  }
  return sys;
}

}  // namespace

StatePolytope state_polytope(const Algebra& e) {
  StatePolytope p;
  p.system = compile_system(e);
  p.geometry = enumerate_vertices(p.system);
  p.stateless = !p.geometry.feasible;
  p.dim = p.geometry.dim;
  if (!p.geometry.bounded)
    throw TheoremViolation("state polytope must be bounded",
                           dump_stable(algebra_to_json(e)));
  return p;
}

bool is_valid_state(const Algebra& e, const State& s) {
  const int n = e.size();
  if ((int)s.values.size() != n) return false;
  if (!s.values[e.zero()].is_zero()) return false;
  if (s.values[e.unit()] != Rat(1)) return false;
  for (const auto& v : s.values)
    if (v.is_negative() || v > Rat(1)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int t = e.plus(a, b);
      if (t >= 0 && s.values[a] + s.values[b] != s.values[t]) return false;
    }
  return true;
}

std::vector<State> extremal_states(const Algebra& e) {
  auto p = state_polytope(e);
  std::vector<State> out;
  for (const auto& v : p.geometry.vertices) {
    State s{v};
    if (!is_valid_state(e, s))
      throw TheoremViolation("enumerated vertex is not a state",
                             dump_stable(algebra_to_json(e)));
    if (!vertex_certificate(p.system, v))
      throw TheoremViolation("enumerated vertex fails its rank certificate",
                             dump_stable(algebra_to_json(e)));
    out.push_back(std::move(s));
  }
  return out;
}

State atomic_state(const Algebra& e, const ChainDecomposition& d, int i) {
  if (i < 0 || i >= (int)d.blocks.size())
    throw Error(Errc::hypothesis_not_met, "atom index out of range");
  State s;
  s.values.resize(e.size());
  const Rat denom(d.blocks[i].index);
  for (int x = 0; x < e.size(); ++x)
    s.values[x] = Rat(d.phi_components[x][i]) / denom;
  if (!is_valid_state(e, s))
    throw TheoremViolation("atomic state formula did not yield a state",
                           dump_stable(algebra_to_json(e)));
  auto sys = compile_system(e);
  if (!vertex_certificate(sys, s.values))
    throw TheoremViolation("atomic state is not an extremal vertex",
                           dump_stable(algebra_to_json(e)));
  return s;
}

std::vector<Rat> decompose_state(const Algebra& e, const ChainDecomposition& d,
                                 const State& s) {
  if (!is_valid_state(e, s))
    throw Error(Errc::hypothesis_not_met, "input is not a valid state");
  std::vector<Rat> lambda;
  Rat total(0);
  for (const auto& b : d.blocks) {
    lambda.push_back(s.values[b.block]);
    total += s.values[b.block];
  }
  if (total != Rat(1))
    throw TheoremViolation("block masses of a state must sum to 1",
                           dump_stable(algebra_to_json(e)));
  // Exact recombination check on every element.
  for (int x = 0; x < e.size(); ++x) {
    Rat acc(0);
    for (size_t i = 0; i < d.blocks.size(); ++i)
      acc += lambda[i] *
             (Rat(d.phi_components[x][i]) / Rat(d.blocks[i].index));
    if (acc != s.values[x])
      throw TheoremViolation(
          "state does not equal the convex combination of atomic states",
          dump_stable(algebra_to_json(e)));
  }
  return lambda;
}

ExtremalityComparison mv_extremality_test(const Algebra& e, const State& s) {
  if (!is_mv(e).holds)
    throw Error(Errc::hypothesis_not_met,
                "extremality comparison needs an MV algebra");
  if (!is_valid_state(e, s))
    throw Error(Errc::hypothesis_not_met, "input is not a valid state");
  ExtremalityComparison out;
  auto extremals = extremal_states(e);
  out.vertex = std::any_of(extremals.begin(), extremals.end(),
                           [&](const State& v) { return v.values == s.values; });
  out.min_condition = true;
  out.max_condition = true;
  for (int a = 0; a < e.size() && (out.min_condition || out.max_condition);
       ++a)
    for (int b = a; b < e.size(); ++b) {
      auto m = meet(e, a, b);
      Rat sm = s.values[*m];
      Rat lo = std::min(s.values[a], s.values[b]);
      Rat hi = std::max(s.values[a], s.values[b]);
      if (sm != lo) out.min_condition = false;
      if (sm != hi) out.max_condition = false;
    }
  return out;
}

nlohmann::json state_to_json(const Algebra& e, const State& s) {
  nlohmann::json j = nlohmann::json::object();
  for (int x = 0; x < e.size(); ++x) j[e.name(x)] = s.values[x].str();
  return j;
}

State state_from_json(const Algebra& e, const nlohmann::json& j) {
  if (!j.is_object())
    throw Error(Errc::parse_error, "state file must map elements to fractions");
  State s;
  s.values.assign(e.size(), Rat(0));
  std::vector<bool> seen(e.size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int x = e.index(it.key());
    if (x < 0)
      throw Error(Errc::parse_error, "unknown element '" + it.key() + "'");
    try {
      s.values[x] = Rat::parse(it.value().get<std::string>());
    } catch (const std::exception& ex) {
      throw Error(Errc::parse_error, ex.what());
    }
    seen[x] = true;
  }
  for (int x = 0; x < e.size(); ++x)
    if (!seen[x])
      throw Error(Errc::parse_error, "state misses element '" + e.name(x) + "'");
  return s;
}

nlohmann::json polytope_to_json(const Algebra& e, const StatePolytope& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  j["stateless"] = p.stateless;
  nlohmann::json eqs = nlohmann::json::array();
  for (size_t r = 0; r < p.geometry.echelon_lhs.size(); ++r) {
    nlohmann::json row;
    nlohmann::json lhs = nlohmann::json::object();
    for (int x = 0; x < e.size(); ++x)
      if (!p.geometry.echelon_lhs[r][x].is_zero())
        lhs[e.name(x)] = p.geometry.echelon_lhs[r][x].str();
    row["lhs"] = std::move(lhs);
    row["rhs"] = p.geometry.echelon_rhs[r].str();
    eqs.push_back(std::move(row));
  }
  j["equalities"] = std::move(eqs);
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.geometry.vertices)
    verts.push_back(state_to_json(e, State{v}));
  j["vertices"] = std::move(verts);
  return j;
}

}  // namespace riesz
