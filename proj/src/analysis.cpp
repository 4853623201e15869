#include "riesz/analysis.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <numeric>

#include <omp.h>

#include "riesz/error.hpp"
#include "riesz/parallel.hpp"

namespace riesz {

namespace {

constexpr uint64_t kNoPos = ~uint64_t(0);

/// Deterministic first-witness slot: least canonical scan position wins, no
/// matter how iterations are scheduled over threads.
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

std::vector<int> rank_order(const Algebra& e) {
  std::vector<int> order(e.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (e.height(a) != e.height(b)) return e.height(a) < e.height(b);
    return a < b;
  });
  return order;
}

/// Defined pairs grouped by their sum; within a group sorted by (x, y).
/// For the effect kind only representatives with x <= y are kept.
std::vector<std::vector<std::pair<int, int>>> decomp_pairs(const Algebra& e) {
  const int n = e.size();
  const bool effect = e.kind() == Kind::Effect;
  std::vector<std::vector<std::pair<int, int>>> by_sum(n);
  for (int x = 0; x < n; ++x)
    for (int y = effect ? x : 0; y < n; ++y) {
      int s = e.plus(x, y);
      if (s >= 0) by_sum[s].push_back({x, y});
    }
  return by_sum;
}

std::optional<RefinementMatrix> ref_search(const Algebra& e,
                                           const std::vector<int>& order,
                                           int a1, int a2, int b1, int b2) {
  for (int c11 : order) {
    if (!e.leq(c11, a1) || !e.leq(c11, b1)) continue;
    auto c12 = e.right_remainder(a1, c11);
    if (!c12) continue;
    auto c21 = e.right_remainder(b1, c11);
    if (!c21) continue;
    auto c22 = e.right_remainder(a2, *c21);
    if (!c22) continue;
    if (e.plus(*c12, *c22) == b2)
      return RefinementMatrix{c11, *c12, *c21, *c22};
  }
  return std::nullopt;
}

Witness named(const Algebra& e, std::string tag, std::initializer_list<int> t,
              std::string note) {
  Witness w;
  w.tag = std::move(tag);
  for (int i : t) w.tuple.push_back(e.name(i));
  w.note = std::move(note);
  return w;
}

}  // namespace

std::vector<int> atoms(const Algebra& e) {
  std::vector<int> out;
  for (int a = 0; a < e.size(); ++a) {
    if (a == e.zero()) continue;
    if (e.below(a) && e.height(a) == 1) out.push_back(a);
  }
  return out;
}

PropertyReport is_atomic(const Algebra& e) {
  auto as = atoms(e);
  for (int x = 0; x < e.size(); ++x) {
    if (x == e.zero()) continue;
    bool covered = false;
    for (int a : as)
      if (e.leq(a, x)) {
        covered = true;
        break;
      }
    if (!covered)
      return report_fails("atomic",
                          named(e, "atomic", {x}, "no atom below this element"),
                          {{"atoms", (long long)as.size()}});
  }
  auto r = report_holds("atomic", {{"atoms", (long long)as.size()}});
  return r;
}

std::optional<RefinementMatrix> refinement_matrix(const Algebra& e, int a1,
                                                  int a2, int b1, int b2) {
  if (e.plus(a1, a2) < 0 || e.plus(a1, a2) != e.plus(b1, b2))
    throw Error(Errc::hypothesis_not_met,
                "refinement queried for a pair that is not an equal sum");
  return ref_search(e, rank_order(e), a1, a2, b1, b2);
}

// ---------------------------------------------------------------------------
// RDP, refinement form

namespace {

PropertyReport rdp_core(const Algebra& e, bool parallel) {
  auto by_sum = decomp_pairs(e);
  auto order = rank_order(e);
  const int n = e.size();
  long long quadruples = 0;
  uint64_t max_pairs = 1;
  for (const auto& p : by_sum) {
    quadruples += (long long)p.size() * (p.size() - 1) / 2;
    max_pairs = std::max<uint64_t>(max_pairs, p.size());
  }

  Slot win;
  std::atomic<uint64_t> bound{kNoPos};
  const int threads = parallel ? worker_count() : 1;
#pragma omp parallel num_threads(threads)
  {
    Slot local;
#pragma omp for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
      uint64_t base = uint64_t(s) * max_pairs * max_pairs;
      if (base > bound.load(std::memory_order_relaxed)) continue;
      const auto& pairs = by_sum[s];
      for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
          // The lexicographically larger pair takes the a-side; refinability
          // is symmetric in the two sides.
          auto [b1, b2] = pairs[i];
          auto [a1, a2] = pairs[j];
          uint64_t pos = base + i * max_pairs + j;
          if (pos >= local.pos) continue;
          if (!ref_search(e, order, a1, a2, b1, b2)) {
            local.offer(pos, {a1, a2, b1, b2});
            uint64_t cur = bound.load(std::memory_order_relaxed);
            while (pos < cur &&
                   !bound.compare_exchange_weak(cur, pos,
                                                std::memory_order_relaxed)) {
            }
          }
        }
    }
#pragma omp critical
    win.merge(local);
  }

  std::map<std::string, long long> stats{{"equal_sum_pairs", quadruples}};
  PropertyReport r;
  if (!win.found()) {
    r = report_holds("rdp", stats);
  } else {
    auto [a1, a2, b1, b2] = win.data;
    r = report_fails(
        "rdp",
        named(e, "rdp", {a1, a2, b1, b2},
              e.name(a1) + "+" + e.name(a2) + " = " + e.name(b1) + "+" +
                  e.name(b2) + " admits no refinement matrix"),
        stats);
  }
  if (e.kind() == Kind::PseudoEffect)
    r.scope =
        "noncommutative reading: literal refinement matrices with "
        "a_i = c_i1+c_i2 and b_j = c_1j+c_2j";
  return r;
}

}  // namespace

PropertyReport rdp_check(const Algebra& e) { return rdp_core(e, true); }

PropertyReport serial_ref::rdp_check(const Algebra& e) {
  return rdp_core(e, false);
}

// ---------------------------------------------------------------------------
// RDP, splitting form (independent route)

PropertyReport rdp_check_splitting(const Algebra& e) {
  const int n = e.size();
  const bool effect = e.kind() == Kind::Effect;
  Slot win;
  const int threads = worker_count();
#pragma omp parallel num_threads(threads)
  {
    Slot local;
#pragma omp for schedule(dynamic)
    for (int b1 = 0; b1 < n; ++b1) {
      for (int b2 = effect ? b1 : 0; b2 < n; ++b2) {
        int t = e.plus(b1, b2);
        if (t < 0) continue;
        for (int a = 0; a < n; ++a) {
          if (!e.leq(a, t)) continue;
          uint64_t pos = (uint64_t(b1) * n + b2) * n + a;
          if (pos >= local.pos) continue;
          bool split = false;
          for (int a1 = 0; a1 < n && !split; ++a1) {
            if (!e.leq(a1, b1) || !e.leq(a1, a)) continue;
            auto a2 = e.right_remainder(a, a1);
            if (a2 && e.leq(*a2, b2)) split = true;
          }
          if (!split) local.offer(pos, {a, b1, b2, 0});
        }
      }
    }
#pragma omp critical
    win.merge(local);
  }
  std::map<std::string, long long> stats{{"elements", n}};
  if (!win.found()) return report_holds("rdp-splitting", stats);
  auto [a, b1, b2, unused] = win.data;
  (void)unused;
  return report_fails("rdp-splitting",
                      named(e, "rdp-splitting", {a, b1, b2},
                            e.name(a) + " <= " + e.name(b1) + "+" + e.name(b2) +
                                " admits no splitting a1+a2 with a1 <= b1, "
                                "a2 <= b2"),
                      stats);
}

// ---------------------------------------------------------------------------
// RIP

std::optional<int> rip_interpolant(const Algebra& e, int a1, int a2, int b1,
                                   int b2) {
  for (int c = 0; c < e.size(); ++c)
    if (e.leq(a1, c) && e.leq(a2, c) && e.leq(c, b1) && e.leq(c, b2)) return c;
  return std::nullopt;
}

namespace {

PropertyReport rip_core(const Algebra& e, bool parallel) {
  const int n = e.size();
  const int words = e.words();
  Slot win;
  std::atomic<uint64_t> bound{kNoPos};
  const int threads = parallel ? worker_count() : 1;
#pragma omp parallel num_threads(threads)
  {
    Slot local;
    std::vector<uint64_t> ups(words);
#pragma omp for schedule(dynamic)
    for (int a1 = 0; a1 < n; ++a1) {
      uint64_t base = uint64_t(a1) * n * n * n;
      if (base > bound.load(std::memory_order_relaxed)) continue;
      for (int a2 = a1; a2 < n; ++a2) {
        for (int w = 0; w < words; ++w)
          ups[w] = e.above(a1)[w] & e.above(a2)[w];
        std::vector<int> ub;
        for_each_bit(ups.data(), words, n, [&](int x) { ub.push_back(x); });
        for (size_t i = 0; i < ub.size(); ++i)
          for (size_t j = i; j < ub.size(); ++j) {
            int b1 = ub[i], b2 = ub[j];
            uint64_t pos = base + (uint64_t(a2) * n + b1) * n + b2;
            if (pos >= local.pos) continue;
            bool some = false;
            for (int w = 0; w < words && !some; ++w)
              if (ups[w] & e.below(b1)[w] & e.below(b2)[w]) some = true;
            if (!some) {
              local.offer(pos, {a1, a2, b1, b2});
              uint64_t cur = bound.load(std::memory_order_relaxed);
              while (pos < cur && !bound.compare_exchange_weak(
                                      cur, pos, std::memory_order_relaxed)) {
              }
            }
          }
      }
    }
#pragma omp critical
    win.merge(local);
  }
  std::map<std::string, long long> stats{{"elements", n}};
  if (!win.found()) return report_holds("rip", stats);
  auto [a1, a2, b1, b2] = win.data;
  return report_fails(
      "rip",
      named(e, "rip", {a1, a2, b1, b2},
            "no c with " + e.name(a1) + "," + e.name(a2) + " <= c <= " +
                e.name(b1) + "," + e.name(b2)),
      stats);
}

}  // namespace

PropertyReport rip_check(const Algebra& e) { return rip_core(e, true); }
PropertyReport serial_ref::rip_check(const Algebra& e) {
  return rip_core(e, false);
}

// ---------------------------------------------------------------------------
// atom decompositions / UARP

namespace {

// Ordered subtraction of atoms (non-decreasing atom position) reaches every
// multiset exactly once, so the collected paths are distinct by construction.
void decomp_dfs(const Algebra& e, const std::vector<int>& as, int rem,
                size_t min_pos, std::vector<int>& path,
                std::vector<std::vector<int>>& out, size_t limit) {
  if (rem == e.zero()) {
    out.push_back(path);
    return;
  }
  for (size_t p = min_pos; p < as.size(); ++p) {
    if (out.size() >= limit) return;
    auto next = e.minus(rem, as[p]);
    if (!next) continue;
    path.push_back(as[p]);
    decomp_dfs(e, as, *next, p, path, out, limit);
    path.pop_back();
  }
}

std::vector<std::vector<int>> decomps_of(const Algebra& e,
                                         const std::vector<int>& as, int x,
                                         size_t distinct_limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  decomp_dfs(e, as, x, 0, path, out, distinct_limit);
  return out;
}

std::string render_decomp(const Algebra& e, const std::vector<int>& d) {
  if (d.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += "+";
    s += e.name(d[i]);
  }
  return s;
}

PropertyReport uarp_core(const Algebra& e, bool parallel) {
  if (e.kind() != Kind::Effect)
    throw Error(Errc::hypothesis_not_met,
                "unique atom representability is an effect-algebra check");
  const auto as = atoms(e);
  const int n = e.size();
  Slot win;
  const int threads = parallel ? worker_count() : 1;
#pragma omp parallel num_threads(threads)
  {
    Slot local;
#pragma omp for schedule(dynamic)
    for (int x = 0; x < n; ++x) {
      if (uint64_t(x) >= local.pos) continue;
      auto ds = decomps_of(e, as, x, 2);
      if (ds.size() > 1) local.offer(x, {x, 0, 0, 0});
    }
#pragma omp critical
    win.merge(local);
  }
  std::map<std::string, long long> stats{{"elements", n},
                                         {"atoms", (long long)as.size()}};
  if (!win.found()) return report_holds("uarp", stats);
  int x = win.data[0];
  auto ds = decomps_of(e, as, x, 2);
  return report_fails(
      "uarp",
      named(e, "uarp", {x},
            e.name(x) + " = " + render_decomp(e, ds[0]) + " = " +
                render_decomp(e, ds[1]) + ", dissimilar atom decompositions"),
      stats);
}

}  // namespace

std::vector<std::vector<int>> atom_decompositions(const Algebra& e, int x) {
  if (e.kind() != Kind::Effect)
    throw Error(Errc::hypothesis_not_met,
                "atom decompositions are an effect-algebra operation");
  return decomps_of(e, atoms(e), x, size_t(-1));
}

PropertyReport uarp_check(const Algebra& e) { return uarp_core(e, true); }
PropertyReport serial_ref::uarp_check(const Algebra& e) {
  return uarp_core(e, false);
}

PropertyReport similar_decompositions_check(const Algebra& e) {
  auto rdp = rdp_check(e);
  if (!rdp.holds)
    throw Error(Errc::hypothesis_not_met,
                "similar-decompositions check requires RDP");
  auto r = uarp_core(e, true);
  r.property = "similar-decompositions";
  if (r.witness) r.witness->tag = "similar-decompositions";
  return r;
}

// ---------------------------------------------------------------------------
// chains

int longest_chain(const Algebra& e) { return e.height(e.unit()) + 1; }

PropertyReport chain_condition(const Algebra& e) {
  // Finite carriers satisfy the chain condition outright.
  return report_holds("chain-condition",
                      {{"longest_chain", longest_chain(e)},
                       {"elements", e.size()}});
}

// ---------------------------------------------------------------------------
// meet / join / lattice

namespace {

std::optional<int> bound_of(const Algebra& e, int a, int b, bool lower) {
  const int n = e.size();
  const int words = e.words();
  std::vector<uint64_t> set(words);
  const uint64_t* ra = lower ? e.below(a) : e.above(a);
  const uint64_t* rb = lower ? e.below(b) : e.above(b);
  for (int w = 0; w < words; ++w) set[w] = ra[w] & rb[w];
  // The best bound must dominate (resp. be dominated by) every other bound.
  std::optional<int> best;
  for_each_bit(set.data(), words, n, [&](int c) {
    if (best) return;
    const uint64_t* rc = lower ? e.below(c) : e.above(c);
    bool ok = true;
    for (int w = 0; w < words && ok; ++w)
      if (set[w] & ~rc[w]) ok = false;
    if (ok) best = c;
  });
  return best;
}

}  // namespace

std::optional<int> meet(const Algebra& e, int a, int b) {
  return bound_of(e, a, b, true);
}

std::optional<int> join(const Algebra& e, int a, int b) {
  return bound_of(e, a, b, false);
}

PropertyReport is_lattice(const Algebra& e) {
  const int n = e.size();
  Slot win;
  const int threads = worker_count();
#pragma omp parallel num_threads(threads)
  {
    Slot local;
#pragma omp for schedule(dynamic)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        uint64_t pos = 2 * (uint64_t(a) * n + b);
        if (pos >= local.pos) continue;
        if (!meet(e, a, b))
          local.offer(pos, {a, b, 0, 0});
        else if (!join(e, a, b))
          local.offer(pos + 1, {a, b, 1, 0});
      }
#pragma omp critical
    win.merge(local);
  }
  std::map<std::string, long long> stats{{"pairs", (long long)n * (n - 1) / 2}};
  if (!win.found()) return report_holds("lattice", stats);
  auto [a, b, is_join, unused] = win.data;
  (void)unused;
  const char* what = is_join ? "join" : "meet";
  return report_fails("lattice",
                      named(e, is_join ? "join-missing" : "meet-missing",
                            {a, b},
                            std::string(what) + " of " + e.name(a) + " and " +
                                e.name(b) + " does not exist"),
                      stats);
}

// ---------------------------------------------------------------------------
// compatibility / MV

std::optional<CompatibilityWitness> compatible(const Algebra& e, int a,
                                               int b) {
  if (e.kind() != Kind::Effect)
    throw Error(Errc::hypothesis_not_met,
                "compatibility is an effect-algebra check");
  for (int c = 0; c < e.size(); ++c) {
    if (!e.leq(c, a) || !e.leq(c, b)) continue;
    auto a1 = e.minus(a, c);
    auto b1 = e.minus(b, c);
    if (!a1 || !b1) continue;
    int s = e.plus(*a1, *b1);
    if (s < 0) continue;
    if (e.plus(s, c) >= 0) return CompatibilityWitness{*a1, *b1, c};
  }
  return std::nullopt;
}

namespace {

PropertyReport mv_core(const Algebra& e, bool parallel) {
  if (e.kind() != Kind::Effect)
    throw Error(Errc::hypothesis_not_met,
                "the MV check needs an effect algebra");
  auto lat = is_lattice(e);
  const int n = e.size();
  std::map<std::string, long long> stats{{"pairs", (long long)n * (n - 1) / 2}};
  if (!lat.holds) {
    auto r = report_fails("mv", *lat.witness, stats);
    return r;
  }
  Slot win;
  const int threads = parallel ? worker_count() : 1;
#pragma omp parallel num_threads(threads)
  {
    Slot local;
#pragma omp for schedule(dynamic)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        uint64_t pos = uint64_t(a) * n + b;
        if (pos >= local.pos) continue;
        if (!compatible(e, a, b)) local.offer(pos, {a, b, 0, 0});
      }
#pragma omp critical
    win.merge(local);
  }
  if (!win.found()) return report_holds("mv", stats);
  auto [a, b, u1, u2] = win.data;
  (void)u1;
  (void)u2;
  return report_fails("mv",
                      named(e, "incompatible", {a, b},
                            e.name(a) + " and " + e.name(b) +
                                " admit no decomposition a1+c, b1+c with "
                                "a1+b1+c defined"),
                      stats);
}

}  // namespace

PropertyReport is_mv(const Algebra& e) { return mv_core(e, true); }
PropertyReport serial_ref::is_mv(const Algebra& e) { return mv_core(e, false); }

MvStructure mv_structure(const Algebra& e) {
  auto mv = is_mv(e);
  if (!mv.holds)
    throw Error(Errc::hypothesis_not_met,
                "total MV operations need a lattice with all pairs compatible");
  const int n = e.size();
  MvStructure s;
  s.n = n;
  s.neg.resize(n);
  s.oplus.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a) s.neg[a] = e.sup_right(a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto m = meet(e, s.neg[a], b);
      if (!m) throw TheoremViolation("a' meet b must exist in an MV algebra",
                                     "pair " + e.name(a) + "," + e.name(b));
      int t = e.plus(a, *m);
      if (t < 0)
        throw TheoremViolation("a + (a' meet b) must be defined",
                               "pair " + e.name(a) + "," + e.name(b));
      s.oplus[size_t(a) * n + b] = t;
    }
  auto at = [&](int a, int b) { return s.oplus[size_t(a) * n + b]; };
  // MV axiom set, checked exhaustively.
  for (int a = 0; a < n; ++a) {
    if (at(a, e.zero()) != a || at(a, e.unit()) != e.unit() ||
        s.neg[s.neg[a]] != a)
      throw TheoremViolation("MV unit/involution axiom failed", e.name(a));
    for (int b = 0; b < n; ++b) {
      if (at(a, b) != at(b, a))
        throw TheoremViolation("MV commutativity failed",
                               e.name(a) + "," + e.name(b));
      if (at(s.neg[at(s.neg[a], b)], b) != at(s.neg[at(s.neg[b], a)], a))
        throw TheoremViolation("Lukasiewicz axiom failed",
                               e.name(a) + "," + e.name(b));
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw TheoremViolation("MV associativity failed",
                                 e.name(a) + "," + e.name(b) + "," + e.name(c));
    }
  }
  // Round trip: a+b exists iff a <= b', and the values agree.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool partial = e.defined(a, b);
      bool orth = e.leq(a, s.neg[b]);
      if (partial != orth)
        throw TheoremViolation("a+b defined must match a <= b'",
                               e.name(a) + "," + e.name(b));
      if (partial && e.plus(a, b) != at(a, b))
        throw TheoremViolation("recovered + disagrees with the table",
                               e.name(a) + "," + e.name(b));
    }
  return s;
}

// ---------------------------------------------------------------------------
// center

bool is_central(const Algebra& e, int x) {
  int xc = e.sup_right(x);
  for (int y = 0; y < e.size(); ++y) {
    auto m1 = meet(e, y, x);
    auto m2 = meet(e, y, xc);
    if (!m1 || !m2) return false;
    if (e.plus(*m1, *m2) != y) return false;
  }
  return true;
}

CenterResult center(const Algebra& e) {
  CenterResult res;
  for (int x = 0; x < e.size(); ++x)
    if (is_central(e, x)) res.elements.push_back(x);
  const auto& c = res.elements;

  // Verify the center is a Boolean algebra by mapping every central element
  // to the set of center-atoms below it and checking the operations
  // correspond to set operations.
  std::vector<int> catoms;
  for (int x : c) {
    if (x == e.zero()) continue;
    bool minimal = true;
    for (int y : c)
      if (y != e.zero() && y != x && e.leq(y, x)) {
        minimal = false;
        break;
      }
    if (minimal) catoms.push_back(x);
  }
  auto mask_of = [&](int x) {
    uint64_t m = 0;
    for (size_t i = 0; i < catoms.size(); ++i)
      if (e.leq(catoms[i], x)) m |= uint64_t(1) << i;
    return m;
  };
  const size_t m = catoms.size();
  if (m > 62 || (uint64_t(1) << m) != c.size())
    throw TheoremViolation("center size must be 2^(number of center atoms)",
                           "center size " + std::to_string(c.size()) +
                               ", atoms " + std::to_string(m));
  std::map<uint64_t, int> seen;
  const uint64_t full = m == 0 ? 0 : (uint64_t(1) << m) - 1;
  for (int x : c) {
    uint64_t mx = mask_of(x);
    if (!seen.emplace(mx, x).second)
      throw TheoremViolation("two central elements share the same atom set",
                             e.name(x) + "," + e.name(seen[mx]));
    if (mask_of(e.sup_right(x)) != (~mx & full))
      throw TheoremViolation("central complement is not the set complement",
                             e.name(x));
  }
  for (int x : c)
    for (int y : c) {
      auto mt = meet(e, x, y);
      auto jn = join(e, x, y);
      if (!mt || !jn)
        throw TheoremViolation("center not closed under meet/join",
                               e.name(x) + "," + e.name(y));
      if (!is_central(e, *mt) || !is_central(e, *jn))
        throw TheoremViolation("meet/join of central elements not central",
                               e.name(x) + "," + e.name(y));
      if (mask_of(*mt) != (mask_of(x) & mask_of(y)) ||
          mask_of(*jn) != (mask_of(x) | mask_of(y)))
        throw TheoremViolation("center operations are not set operations",
                               e.name(x) + "," + e.name(y));
    }
  res.boolean_check = report_holds(
      "center-boolean",
      {{"central_elements", (long long)c.size()},
       {"center_atoms", (long long)m}});
  return res;
}

// ---------------------------------------------------------------------------
// witness replay

bool replay(const Algebra& e, const PropertyReport& r) {
  if (r.holds || !r.witness) return false;
  const auto& w = *r.witness;
  std::vector<int> t;
  for (const auto& s : w.tuple) {
    int i = e.index(s);
    if (i < 0) return false;
    t.push_back(i);
  }
  if (r.property == "rdp" && t.size() == 4) {
    int s1 = e.plus(t[0], t[1]), s2 = e.plus(t[2], t[3]);
    return s1 >= 0 && s1 == s2 &&
           !ref_search(e, rank_order(e), t[0], t[1], t[2], t[3]);
  }
  if (r.property == "rdp-splitting" && t.size() == 3) {
    int s = e.plus(t[1], t[2]);
    if (s < 0 || !e.leq(t[0], s)) return false;
    for (int a1 = 0; a1 < e.size(); ++a1) {
      if (!e.leq(a1, t[1])) continue;
      auto a2 = e.right_remainder(t[0], a1);
      if (a2 && e.leq(*a2, t[2])) return false;
    }
    return true;
  }
  if (r.property == "rip" && t.size() == 4) {
    if (!e.leq(t[0], t[2]) || !e.leq(t[0], t[3]) || !e.leq(t[1], t[2]) ||
        !e.leq(t[1], t[3]))
      return false;
    return !rip_interpolant(e, t[0], t[1], t[2], t[3]);
  }
  if ((r.property == "uarp" || r.property == "similar-decompositions") &&
      t.size() == 1) {
    return decomps_of(e, atoms(e), t[0], 2).size() > 1;
  }
  if (r.property == "lattice" && t.size() == 2) {
    if (w.tag == "meet-missing") return !meet(e, t[0], t[1]);
    if (w.tag == "join-missing") return !join(e, t[0], t[1]);
    return false;
  }
  if (r.property == "mv" && t.size() == 2) {
    if (w.tag == "incompatible") return !compatible(e, t[0], t[1]);
    if (w.tag == "meet-missing") return !meet(e, t[0], t[1]);
    if (w.tag == "join-missing") return !join(e, t[0], t[1]);
    return false;
  }
  return false;
}

}  // namespace riesz
