#include "riesz/pogroup.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "riesz/analysis.hpp"
#include "riesz/error.hpp"
#include "riesz/io.hpp"
#include "riesz/parallel.hpp"
#include "riesz/polytope.hpp"

namespace riesz {

namespace {

constexpr uint64_t kNoPos = ~uint64_t(0);

struct Slot {
  uint64_t pos = kNoPos;
  std::array<int, 4> data{};
  void offer(uint64_t p, std::array<int, 4> d) {
    if (p < pos) {
      pos = p;
      data = d;
    }
  }
  void merge(const Slot& o) {
    if (o.pos < pos) *this = o;
  }
  bool found() const { return pos != kNoPos; }
};

Pt add(const Pt& a, const Pt& b) {
  Pt r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Pt sub(const Pt& a, const Pt& b) {
  Pt r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Pt scale(const Pt& a, long long k) {
  Pt r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

bool is_zero(const Pt& a) {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

long long dot(const Pt& a, const Pt& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long floor_div(long long a, long long b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// All lattice points of [-radius, radius]^d in lexicographic order.
std::vector<Pt> box_points(int d, long long radius) {
  long long side = 2 * radius + 1;
  long long count = 1;
  for (int i = 0; i < d; ++i) {
    count *= side;
    if (count > 2'000'000)
      throw Error(Errc::budget_exceeded, "bounding box has too many points");
  }
  std::vector<Pt> pts;
  pts.reserve(count);
  Pt cur(d, -radius);
  while (true) {
    pts.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == radius) {
      cur[i] = -radius;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return pts;
}

std::string box_scope(int d, long long radius) {
  return "verified within box [-" + std::to_string(radius) + "," +
         std::to_string(radius) + "]^" + std::to_string(d);
}

bool contains(const ConeSpec& c, const Pt& v) {
  if (c.type == ConeSpec::Type::Polyhedral) {
    for (const auto& row : c.inequalities)
      if (dot(row, v) < 0) return false;
    return true;
  }
  long long x = v[0];
  if (x < 0) return false;
  return !std::binary_search(c.excluded.begin(), c.excluded.end(), x);
}

Pt parse_point(const std::string& s, int d) {
  Pt v;
  std::string body = s;
  if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
  size_t start = 0;
  while (start <= body.size()) {
    size_t comma = body.find(',', start);
    std::string tok = body.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    v.push_back(std::stoll(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if ((int)v.size() != d)
    throw Error(Errc::dim_mismatch, "point '" + s + "' has wrong dimension");
  return v;
}

Witness point_witness(std::string tag, const std::vector<Pt>& pts,
                      std::string note) {
  Witness w;
  w.tag = std::move(tag);
  for (const auto& p : pts) w.tuple.push_back(point_name(p));
  w.note = std::move(note);
  return w;
}

}  // namespace

std::string point_name(const Pt& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

bool cone_contains(const PoGroup& g, const Pt& v) {
  if ((int)v.size() != g.dim())
    throw Error(Errc::dim_mismatch, "vector dimension does not match group");
  return contains(g.cone, v);
}

PoGroup make_pogroup(ConeSpec cone, Pt unit, long long strictness_radius) {
  if (cone.dim < 1) throw Error(Errc::parse_error, "dimension must be >= 1");
  if (cone.type == ConeSpec::Type::IntegerGaps) {
    if (cone.dim != 1)
      throw Error(Errc::parse_error, "integer-gaps cones are one-dimensional");
    std::sort(cone.excluded.begin(), cone.excluded.end());
    cone.excluded.erase(
        std::unique(cone.excluded.begin(), cone.excluded.end()),
        cone.excluded.end());
    for (long long x : cone.excluded)
      if (x <= 0)
        throw Error(Errc::parse_error, "excluded values must be positive");
    // Strictness is automatic; additive closure is checked exhaustively up to
    // 2*max(excluded)+1 and holds above that bound outright.
    long long maxe = cone.excluded.empty() ? 0 : cone.excluded.back();
    for (long long a = 0; a <= 2 * maxe + 1; ++a)
      for (long long b = a; a + b <= 2 * maxe + 1; ++b)
        if (contains(cone, {a}) && contains(cone, {b}) &&
            !contains(cone, {a + b}))
          throw Error(Errc::parse_error,
                      "cone is not closed under addition: " +
                          std::to_string(a) + "+" + std::to_string(b));
  } else {
    for (const auto& row : cone.inequalities)
      if ((int)row.size() != cone.dim)
        throw Error(Errc::dim_mismatch, "inequality row of wrong dimension");
    // Strictness: full column rank is sufficient; otherwise fall back to a
    // complete scan of a bounding box.
    std::vector<QVec> rows;
    for (const auto& r : cone.inequalities) {
      QVec q;
      for (long long x : r) q.push_back(Rat(x));
      rows.push_back(std::move(q));
    }
    if (rational_rank(rows) < cone.dim) {
      for (const auto& v : box_points(cone.dim, strictness_radius)) {
        if (is_zero(v)) continue;
        Pt neg = scale(v, -1);
        if (contains(cone, v) && contains(cone, neg))
          throw Error(Errc::parse_error,
                      "cone is not strict: " + point_name(v) +
                          " and its negative both belong to it");
      }
    }
  }
  if ((int)unit.size() != cone.dim)
    throw Error(Errc::dim_mismatch, "unit dimension does not match cone");
  if (is_zero(unit) || !contains(cone, unit))
    throw Error(Errc::parse_error, "unit must be a nonzero cone element");
  return PoGroup{std::move(cone), std::move(unit)};
}

// ---------------------------------------------------------------------------
// interval algebras

namespace {

std::vector<Pt> interval_carrier(const PoGroup& g, int n, int carrier_cap) {
  const Pt target = scale(g.unit, n);
  std::vector<Pt> carrier;
  if (g.cone.type == ConeSpec::Type::IntegerGaps) {
    for (long long x = 0; x <= target[0]; ++x) {
      Pt v{x};
      if (contains(g.cone, v) && contains(g.cone, sub(target, v)))
        carrier.push_back(std::move(v));
    }
  } else {
    const int d = g.dim();
    LinearSystem sys;
    sys.dim = d;
    for (const auto& row : g.cone.inequalities) {
      QVec lo(d), hi(d);
      for (int i = 0; i < d; ++i) {
        lo[i] = Rat(row[i]);
        hi[i] = Rat(-row[i]);
      }
      sys.ineq_lhs.push_back(std::move(lo));
      sys.ineq_rhs.push_back(Rat(0));  // A v >= 0
      sys.ineq_lhs.push_back(std::move(hi));
      sys.ineq_rhs.push_back(Rat(-dot(row, target)));  // A v <= A target
    }
    auto geom = enumerate_vertices(sys);
    if (!geom.bounded)
      throw Error(Errc::unbounded_interval,
                  "interval polytope is unbounded; the cone does not bound "
                  "the box");
    if (!geom.feasible)
      throw Error(Errc::unbounded_interval, "interval polytope is empty");
    Pt lo(d, 0), hi(d, 0);
    for (int i = 0; i < d; ++i) {
      Rat mn = geom.vertices[0][i], mx = geom.vertices[0][i];
      for (const auto& v : geom.vertices) {
        mn = std::min(mn, v[i]);
        mx = std::max(mx, v[i]);
      }
      lo[i] = floor_div(mn.num(), mn.den());
      hi[i] = -floor_div(-mx.num(), mx.den());
    }
    Pt cur = lo;
    while (true) {
      if (contains(g.cone, cur) && contains(g.cone, sub(target, cur)))
        carrier.push_back(cur);
      int i = d - 1;
      while (i >= 0 && cur[i] == hi[i]) {
        cur[i] = lo[i];
        --i;
      }
      if (i < 0) break;
      ++cur[i];
      if ((long long)carrier.size() > carrier_cap)
        throw Error(Errc::size_overflow, "interval carrier exceeds cap");
    }
  }
  if ((long long)carrier.size() > carrier_cap)
    throw Error(Errc::size_overflow, "interval carrier exceeds cap");
  return carrier;  // lexicographic by construction
}

}  // namespace

Algebra interval_effect_algebra(const PoGroup& g, int n, int carrier_cap) {
  if (n < 1) throw Error(Errc::parse_error, "interval multiple must be >= 1");
  const Pt target = scale(g.unit, n);
  auto carrier = interval_carrier(g, n, carrier_cap);
  std::map<Pt, int> index;
  for (size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = (int)i;

  RawTable t;
  t.kind = Kind::Effect;
  t.label = "interval-0-" + point_name(target);
  for (const auto& v : carrier) t.names.push_back(point_name(v));
  auto it0 = index.find(Pt(g.dim(), 0));
  auto it1 = index.find(target);
  if (it0 == index.end() || it1 == index.end())
    throw Error(Errc::unbounded_interval, "interval carrier lost 0 or n*u");
  t.zero = it0->second;
  t.unit = it1->second;
  const int m = t.n();
  t.plus.assign(size_t(m) * m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto it = index.find(add(carrier[a], carrier[b]));
      if (it != index.end()) t.at(a, b) = it->second;
    }
  auto res = validate(std::move(t));
  if (!res.ok())
    throw Error(Errc::parse_error,
                "interval table failed validation (cone not additive?)");
  return std::move(*res.algebra);
}

// ---------------------------------------------------------------------------
// sss reachability

bool sss_membership(const PoGroup& g, const Pt& target, const SssOptions& opt) {
  if ((int)target.size() != g.dim())
    throw Error(Errc::dim_mismatch, "target dimension mismatch");
  if (!cone_contains(g, target)) return false;
  if (is_zero(target)) return true;
  auto carrier = interval_carrier(g, 1, kDefaultCarrierCap);
  std::vector<Pt> gens;
  for (const auto& v : carrier)
    if (!is_zero(v)) gens.push_back(v);

  std::set<Pt> visited;
  std::deque<std::pair<Pt, int>> queue;
  Pt origin(g.dim(), 0);
  visited.insert(origin);
  queue.push_back({origin, 0});
  long long nodes = 0;
  while (!queue.empty()) {
    auto [p, depth] = queue.front();
    queue.pop_front();
    if (depth >= opt.max_summands) continue;
    for (const auto& e : gens) {
      Pt q = add(p, e);
      if (q == target) return true;
      if (!contains(g.cone, sub(target, q))) continue;
      if (!visited.insert(q).second) continue;
      if (++nodes > opt.node_limit)
        throw Error(Errc::budget_exceeded, "sss frontier exceeded node limit");
      queue.push_back({std::move(q), depth + 1});
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// strong / generative unit

namespace {

bool strong_unit_covers(const PoGroup& g, const Pt& v) {
  if (g.cone.type == ConeSpec::Type::IntegerGaps) {
    long long u = g.unit[0];
    long long maxe = g.cone.excluded.empty() ? 0 : g.cone.excluded.back();
    long long hi = ceil_div(v[0] + maxe + 1, u) + 1;
    for (long long n = 1; n <= std::max(1LL, hi); ++n)
      if (contains(g.cone, {n * u - v[0]})) return true;
    return false;
  }
  // Exact feasibility interval for n from the rows of A.
  long long lo = 1;
  long long hi = std::numeric_limits<long long>::max();
  for (const auto& row : g.cone.inequalities) {
    long long au = dot(row, g.unit);
    long long av = dot(row, v);
    if (au > 0)
      lo = std::max(lo, ceil_div(av, au));
    else if (au == 0) {
      if (av > 0) return false;
    } else
      hi = std::min(hi, floor_div(av, au));
  }
  return lo <= hi;
}

}  // namespace

PropertyReport is_strong_unit(const PoGroup& g, long long radius) {
  auto box = box_points(g.dim(), radius);
  for (const auto& v : box)
    if (!strong_unit_covers(g, v)) {
      auto r = report_fails(
          "strong-unit",
          point_witness("strong-unit", {v},
                        "no n >= 1 with " + point_name(v) + " <= n*u"),
          {{"box_points", (long long)box.size()}});
      r.scope = box_scope(g.dim(), radius);
      return r;
    }
  auto r = report_holds("strong-unit", {{"box_points", (long long)box.size()}});
  r.scope = box_scope(g.dim(), radius);
  return r;
}

PropertyReport is_generative_unit(const PoGroup& g, long long radius,
                                  const SssOptions& opt) {
  auto box = box_points(g.dim(), radius);
  long long cone_points = 0;
  for (const auto& v : box) {
    if (!contains(g.cone, v)) continue;
    ++cone_points;
    if (!sss_membership(g, v, opt)) {
      auto r = report_fails(
          "generative-unit",
          point_witness("sss", {v},
                        point_name(v) +
                            " is not a finite sum of elements of [0,u]"),
          {{"box_points", (long long)box.size()}, {"cone_points", cone_points}});
      r.scope = box_scope(g.dim(), radius);
      return r;
    }
  }
  // Directedness within the box: every v is a difference of cone elements.
  std::vector<Pt> conebox;
  for (const auto& v : box)
    if (contains(g.cone, v)) conebox.push_back(v);
  for (const auto& v : box) {
    bool ok = false;
    for (const auto& c : conebox)
      if (contains(g.cone, sub(c, v))) {
        ok = true;
        break;
      }
    if (!ok) {
      auto r = report_fails(
          "generative-unit",
          point_witness("directedness", {v},
                        point_name(v) +
                            " is not a difference g1-g2 of box cone points"),
          {{"box_points", (long long)box.size()},
           {"cone_points", cone_points}});
      r.scope = box_scope(g.dim(), radius);
      return r;
    }
  }
  auto r = report_holds("generative-unit",
                        {{"box_points", (long long)box.size()},
                         {"cone_points", cone_points}});
  r.scope = box_scope(g.dim(), radius);
  return r;
}

// ---------------------------------------------------------------------------
// sumset identity and interval atoms

PropertyReport check_sumset_identity(const PoGroup& g, int n, int carrier_cap) {
  if (n < 2)
    throw Error(Errc::parse_error, "sumset identity needs a multiple >= 2");
  auto e1 = interval_carrier(g, 1, carrier_cap);
  auto en = interval_carrier(g, n, carrier_cap);
  std::set<Pt> sums{Pt(g.dim(), 0)};
  for (int round = 0; round < n; ++round) {
    std::set<Pt> next;
    for (const auto& s : sums)
      for (const auto& e : e1) next.insert(add(s, e));
    sums = std::move(next);
  }
  std::map<std::string, long long> stats{
      {"interval_points", (long long)en.size()},
      {"sumset_points", (long long)sums.size()}};
  for (const auto& s : sums)
    if (!std::binary_search(en.begin(), en.end(), s))
      throw TheoremViolation("sumset left the interval",
                             point_name(s));
  for (const auto& v : en)
    if (!sums.count(v)) {
      auto r = report_fails(
          "sumset",
          point_witness("sumset", {v},
                        point_name(v) + " lies in [0," + std::to_string(n) +
                            "u] but is not a sum of " + std::to_string(n) +
                            " interval elements"),
          stats);
      return r;
    }
  return report_holds("sumset", stats);
}

PropertyReport interval_atoms_consistency(const PoGroup& g, int carrier_cap) {
  auto sum2 = check_sumset_identity(g, 2, carrier_cap);
  if (!sum2.holds)
    throw Error(Errc::hypothesis_not_met,
                "atom consistency requires the n=2 sumset identity; witness " +
                    sum2.witness->tuple.front());
  auto a1 = interval_effect_algebra(g, 1, carrier_cap);
  auto a2 = interval_effect_algebra(g, 2, carrier_cap);
  std::set<std::string> s1, s2;
  for (int a : atoms(a1)) s1.insert(a1.name(a));
  for (int a : atoms(a2)) s2.insert(a2.name(a));
  std::map<std::string, long long> stats{{"atoms_u", (long long)s1.size()},
                                         {"atoms_2u", (long long)s2.size()}};
  if (s1 == s2) return report_holds("interval-atoms", stats);
  Witness w;
  w.tag = "interval-atoms";
  for (const auto& s : s1)
    if (!s2.count(s)) w.tuple.push_back(s);
  for (const auto& s : s2)
    if (!s1.count(s)) w.tuple.push_back(s);
  w.note = "atom sets of [0,u] and [0,2u] differ";
  return report_fails("interval-atoms", std::move(w), stats);
}

// ---------------------------------------------------------------------------
// group-level RDP / RIP / UARP box scans

namespace {

std::vector<Pt> cone_box_points(const PoGroup& g, long long radius) {
  std::vector<Pt> out;
  for (auto& v : box_points(g.dim(), radius))
    if (contains(g.cone, v)) out.push_back(std::move(v));
  return out;
}

bool rdp_split_in(const PoGroup& g, const std::vector<Pt>& candidates,
                  const Pt& a, const Pt& b1, const Pt& b2) {
  for (const auto& a1 : candidates) {
    if (!contains(g.cone, sub(b1, a1))) continue;
    Pt a2 = sub(a, a1);
    if (!contains(g.cone, a2)) continue;
    if (contains(g.cone, sub(b2, a2))) return true;
  }
  return false;
}

PropertyReport group_rdp_core(const PoGroup& g, long long radius,
                              bool parallel) {
  auto cone = cone_box_points(g, radius);
  const int m = (int)cone.size();
  Slot win;
  const int threads = parallel ? worker_count() : 1;
#pragma omp parallel num_threads(threads)
  {
    Slot local;
#pragma omp for schedule(dynamic)
    for (int ia = 0; ia < m; ++ia) {
      if (uint64_t(ia) * m * m >= local.pos) continue;
      for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = i1; i2 < m; ++i2) {
          uint64_t pos = (uint64_t(ia) * m + i1) * m + i2;
          if (pos >= local.pos) continue;
          Pt total = add(cone[i1], cone[i2]);
          if (!contains(g.cone, sub(total, cone[ia]))) continue;
          if (!rdp_split_in(g, cone, cone[ia], cone[i1], cone[i2]))
            local.offer(pos, {ia, i1, i2, 0});
        }
    }
#pragma omp critical
    win.merge(local);
  }
  std::map<std::string, long long> stats{{"cone_points", m}};
  PropertyReport r;
  if (!win.found()) {
    r = report_holds("group-rdp", stats);
  } else {
    auto [ia, i1, i2, u] = win.data;
    (void)u;
    r = report_fails(
        "group-rdp",
        point_witness("group-rdp", {cone[ia], cone[i1], cone[i2]},
                      point_name(cone[ia]) + " <= " + point_name(cone[i1]) +
                          "+" + point_name(cone[i2]) +
                          " admits no cone splitting"),
        stats);
  }
  r.scope = box_scope(g.dim(), radius);
  return r;
}

/// Interpolant z with x1,x2 <= z <= y1,y2 anywhere in the group. For
/// polyhedral cones the candidates are confined to an exact rational box;
/// for gapped cones to the integer interval [max x, min y].
bool rip_interpolant_anywhere(const PoGroup& g, const Pt& x1, const Pt& x2,
                              const Pt& y1, const Pt& y2) {
  if (g.cone.type == ConeSpec::Type::IntegerGaps) {
    long long lo = std::max(x1[0], x2[0]);
    long long hi = std::min(y1[0], y2[0]);
    for (long long z = lo; z <= hi; ++z) {
      Pt p{z};
      if (contains(g.cone, sub(p, x1)) && contains(g.cone, sub(p, x2)) &&
          contains(g.cone, sub(y1, p)) && contains(g.cone, sub(y2, p)))
        return true;
    }
    return false;
  }
  const int d = g.dim();
  LinearSystem sys;
  sys.dim = d;
  for (const auto& row : g.cone.inequalities) {
    QVec lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      lo[i] = Rat(row[i]);
      hi[i] = Rat(-row[i]);
    }
    sys.ineq_lhs.push_back(lo);
    sys.ineq_rhs.push_back(Rat(std::max(dot(row, x1), dot(row, x2))));
    sys.ineq_lhs.push_back(hi);
    sys.ineq_rhs.push_back(Rat(-std::min(dot(row, y1), dot(row, y2))));
  }
  auto geom = enumerate_vertices(sys);
  if (!geom.feasible) return false;
  if (!geom.bounded)
    throw Error(Errc::budget_exceeded,
                "interpolant region unbounded; cone is not full rank");
  Pt lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Rat mn = geom.vertices[0][i], mx = geom.vertices[0][i];
    for (const auto& v : geom.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = floor_div(mn.num(), mn.den());
    hi[i] = -floor_div(-mx.num(), mx.den());
  }
  Pt cur = lo;
  while (true) {
    if (contains(g.cone, sub(cur, x1)) && contains(g.cone, sub(cur, x2)) &&
        contains(g.cone, sub(y1, cur)) && contains(g.cone, sub(y2, cur)))
      return true;
    int i = d - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return false;
}

PropertyReport group_rip_core(const PoGroup& g, long long radius,
                              bool parallel) {
  auto box = box_points(g.dim(), radius);
  const int m = (int)box.size();
  Slot win;
  const int threads = parallel ? worker_count() : 1;
#pragma omp parallel num_threads(threads)
  {
    Slot local;
#pragma omp for schedule(dynamic)
    for (int ix1 = 0; ix1 < m; ++ix1) {
      if (uint64_t(ix1) * m * m * m >= local.pos) continue;
      for (int ix2 = ix1; ix2 < m; ++ix2) {
        std::vector<int> upper;
        for (int iy = 0; iy < m; ++iy)
          if (contains(g.cone, sub(box[iy], box[ix1])) &&
              contains(g.cone, sub(box[iy], box[ix2])))
            upper.push_back(iy);
        for (size_t p = 0; p < upper.size(); ++p)
          for (size_t q = p; q < upper.size(); ++q) {
            int iy1 = upper[p], iy2 = upper[q];
            uint64_t pos =
                ((uint64_t(ix1) * m + ix2) * m + iy1) * m + iy2;
            if (pos >= local.pos) continue;
            // Fast path: an interpolant inside the box settles it.
            bool found = false;
            for (int iz = 0; iz < m && !found; ++iz)
              if (contains(g.cone, sub(box[iz], box[ix1])) &&
                  contains(g.cone, sub(box[iz], box[ix2])) &&
                  contains(g.cone, sub(box[iy1], box[iz])) &&
                  contains(g.cone, sub(box[iy2], box[iz])))
                found = true;
            if (!found && !rip_interpolant_anywhere(g, box[ix1], box[ix2],
                                                    box[iy1], box[iy2]))
              local.offer(pos, {ix1, ix2, iy1, iy2});
          }
      }
    }
#pragma omp critical
    win.merge(local);
  }
  std::map<std::string, long long> stats{{"box_points", m}};
  PropertyReport r;
  if (!win.found()) {
    r = report_holds("group-rip", stats);
  } else {
    auto [ix1, ix2, iy1, iy2] = win.data;
    r = report_fails(
        "group-rip",
        point_witness("group-rip",
                      {box[ix1], box[ix2], box[iy1], box[iy2]},
                      "no z anywhere with " + point_name(box[ix1]) + "," +
                          point_name(box[ix2]) + " <= z <= " +
                          point_name(box[iy1]) + "," + point_name(box[iy2])),
        stats);
  }
  r.scope = box_scope(g.dim(), radius) +
            "; interpolants searched over their exact confinement region";
  return r;
}

std::vector<Pt> group_atoms_in(const PoGroup& g, const std::vector<Pt>& cone) {
  std::vector<Pt> out;
  for (const auto& a : cone) {
    if (is_zero(a)) continue;
    bool minimal = true;
    for (const auto& c : cone) {
      if (is_zero(c) || c == a) continue;
      if (contains(g.cone, sub(a, c))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

void group_decomp_dfs(const PoGroup& g, const std::vector<Pt>& atoms,
                      const Pt& rem, size_t min_pos,
                      std::vector<int>& path,
                      std::vector<std::vector<int>>& out, size_t limit) {
  if (is_zero(rem)) {
    out.push_back(path);
    return;
  }
  for (size_t p = min_pos; p < atoms.size(); ++p) {
    if (out.size() >= limit) return;
    Pt next = sub(rem, atoms[p]);
    if (!contains(g.cone, next)) continue;
    path.push_back((int)p);
    group_decomp_dfs(g, atoms, next, p, path, out, limit);
    path.pop_back();
  }
}

PropertyReport group_uarp_core(const PoGroup& g, long long radius,
                               bool parallel) {
  auto cone = cone_box_points(g, radius);
  auto gatoms = group_atoms_in(g, cone);
  const int m = (int)cone.size();
  Slot win;
  const int threads = parallel ? worker_count() : 1;
#pragma omp parallel num_threads(threads)
  {
    Slot local;
#pragma omp for schedule(dynamic)
    for (int i = 0; i < m; ++i) {
      if (uint64_t(i) >= local.pos) continue;
      std::vector<std::vector<int>> ds;
      std::vector<int> path;
      group_decomp_dfs(g, gatoms, cone[i], 0, path, ds, 2);
      if (ds.size() > 1) local.offer(i, {i, 0, 0, 0});
    }
#pragma omp critical
    win.merge(local);
  }
  std::map<std::string, long long> stats{{"cone_points", m},
                                         {"atoms", (long long)gatoms.size()}};
  PropertyReport r;
  if (!win.found()) {
    r = report_holds("group-uarp", stats);
  } else {
    int i = win.data[0];
    std::vector<std::vector<int>> ds;
    std::vector<int> path;
    group_decomp_dfs(g, gatoms, cone[i], 0, path, ds, 2);
    auto render = [&](const std::vector<int>& d) {
      if (d.empty()) return std::string("0");
      std::string s;
      for (size_t k = 0; k < d.size(); ++k) {
        if (k) s += "+";
        s += point_name(gatoms[d[k]]);
      }
      return s;
    };
    r = report_fails("group-uarp",
                     point_witness("group-uarp", {cone[i]},
                                   point_name(cone[i]) + " = " +
                                       render(ds[0]) + " = " + render(ds[1]) +
                                       ", dissimilar atom decompositions"),
                     stats);
  }
  r.scope = box_scope(g.dim(), radius);
  return r;
}

}  // namespace

PropertyReport group_rdp_check(const PoGroup& g, long long radius) {
  return group_rdp_core(g, radius, true);
}
PropertyReport group_rip_check(const PoGroup& g, long long radius) {
  return group_rip_core(g, radius, true);
}
PropertyReport group_uarp_check(const PoGroup& g, long long radius) {
  return group_uarp_core(g, radius, true);
}

PropertyReport serial_ref::group_rdp_check(const PoGroup& g, long long radius) {
  return group_rdp_core(g, radius, false);
}
PropertyReport serial_ref::group_rip_check(const PoGroup& g, long long radius) {
  return group_rip_core(g, radius, false);
}
PropertyReport serial_ref::group_uarp_check(const PoGroup& g,
                                            long long radius) {
  return group_uarp_core(g, radius, false);
}

bool group_rdp_split_exists(const PoGroup& g, const Pt& a, const Pt& b1,
                            const Pt& b2, long long radius) {
  return rdp_split_in(g, cone_box_points(g, radius), a, b1, b2);
}

bool group_rip_interpolant_exists(const PoGroup& g, const Pt& x1, const Pt& x2,
                                  const Pt& y1, const Pt& y2,
                                  long long /*radius*/) {
  return rip_interpolant_anywhere(g, x1, x2, y1, y2);
}

bool replay_group(const PoGroup& g, const PropertyReport& r, long long radius) {
  if (r.holds || !r.witness) return false;
  const auto& w = *r.witness;
  std::vector<Pt> pts;
  for (const auto& s : w.tuple) pts.push_back(parse_point(s, g.dim()));
  if (r.property == "strong-unit" && pts.size() == 1)
    return !strong_unit_covers(g, pts[0]);
  if (r.property == "generative-unit" && pts.size() == 1) {
    if (w.tag == "sss") return !sss_membership(g, pts[0]);
    if (w.tag == "directedness") {
      for (const auto& c : cone_box_points(g, radius))
        if (contains(g.cone, sub(c, pts[0]))) return false;
      return true;
    }
    return false;
  }
  if (r.property == "group-rdp" && pts.size() == 3) {
    if (!contains(g.cone, sub(add(pts[1], pts[2]), pts[0]))) return false;
    return !group_rdp_split_exists(g, pts[0], pts[1], pts[2], radius);
  }
  if (r.property == "group-rip" && pts.size() == 4) {
    for (int i : {0, 1})
      for (int j : {2, 3})
        if (!contains(g.cone, sub(pts[j], pts[i]))) return false;
    return !rip_interpolant_anywhere(g, pts[0], pts[1], pts[2], pts[3]);
  }
  if (r.property == "group-uarp" && pts.size() == 1) {
    auto cone = cone_box_points(g, radius);
    auto gatoms = group_atoms_in(g, cone);
    std::vector<std::vector<int>> ds;
    std::vector<int> path;
    group_decomp_dfs(g, gatoms, pts[0], 0, path, ds, 2);
    return ds.size() > 1;
  }
  if (r.property == "sumset") return true;  // rechecked by the caller's rerun
  return false;
}

// ---------------------------------------------------------------------------
// JSON

PoGroup pogroup_from_json(const nlohmann::json& j) {
  try {
    ConeSpec cone;
    cone.dim = j.at("dim").get<int>();
    const auto& cj = j.at("cone");
    std::string type = cj.at("type").get<std::string>();
    if (type == "polyhedral") {
      cone.type = ConeSpec::Type::Polyhedral;
      for (const auto& row : cj.at("inequalities"))
        cone.inequalities.push_back(row.get<Pt>());
    } else if (type == "integer-gaps") {
      cone.type = ConeSpec::Type::IntegerGaps;
      cone.excluded = cj.at("excluded").get<std::vector<long long>>();
    } else {
      throw Error(Errc::parse_error, "unknown cone type '" + type + "'");
    }
    Pt unit = j.at("unit").get<Pt>();
    return make_pogroup(std::move(cone), std::move(unit));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

nlohmann::json pogroup_to_json(const PoGroup& g) {
  nlohmann::json j;
  j["dim"] = g.dim();
  nlohmann::json cone;
  if (g.cone.type == ConeSpec::Type::Polyhedral) {
    cone["type"] = "polyhedral";
    cone["inequalities"] = g.cone.inequalities;
  } else {
    cone["type"] = "integer-gaps";
    cone["excluded"] = g.cone.excluded;
  }
  j["cone"] = std::move(cone);
  j["unit"] = g.unit;
  return j;
}

PoGroup load_pogroup(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad JSON in '") + path +
                                       "': " + e.what());
  }
  return pogroup_from_json(j);
}

}  // namespace riesz
