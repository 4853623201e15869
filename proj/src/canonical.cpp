#include "riesz/canonical.hpp"

#include <algorithm>
#include <map>

#include "riesz/error.hpp"

namespace riesz {

namespace {

// Colors are dense ints whose order is label-independent: they are ranks of
// invariant key vectors, rebuilt from scratch every round.
using Colors = std::vector<int>;

Colors normalize(const std::vector<std::vector<long long>>& keys) {
  std::vector<int> order(keys.size());
  for (size_t i = 0; i < keys.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  Colors color(keys.size());
  int next = -1;
  const std::vector<long long>* prev = nullptr;
  for (int idx : order) {
    if (!prev || keys[idx] != *prev) ++next;
    color[idx] = next;
    prev = &keys[idx];
  }
  return color;
}

int color_count(const Colors& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

Colors initial_colors(const Algebra& e) {
  const int n = e.size();
  std::vector<std::vector<long long>> keys(n);
  for (int x = 0; x < n; ++x) {
    long long role = x == e.zero() ? 0 : (x == e.unit() ? 2 : 1);
    long long iso = x == e.zero() ? -1 : *e.isotropic_index(x);
    long long downset = 0, deg_row = 0, deg_col = 0;
    for (int y = 0; y < n; ++y) {
      if (e.leq(y, x)) ++downset;
      if (e.defined(x, y)) ++deg_row;
      if (e.defined(y, x)) ++deg_col;
    }
    keys[x] = {role,          e.height(x), downset, e.height(e.sup_right(x)),
               iso,           deg_row,     deg_col};
  }
  return normalize(keys);
}

Colors refine(const Algebra& e, Colors color) {
  const int n = e.size();
  while (true) {
    int before = color_count(color);
    std::vector<std::vector<long long>> keys(n);
    for (int x = 0; x < n; ++x) {
      auto& key = keys[x];
      key.push_back(color[x]);
      key.push_back(color[e.sup_right(x)]);
      key.push_back(color[e.sup_left(x)]);
      std::vector<long long> sums;
      for (int y = 0; y < n; ++y) {
        int s = e.plus(x, y);
        if (s >= 0) sums.push_back(1LL * color[y] * n + color[s]);
      }
      if (e.kind() == Kind::PseudoEffect) {
        for (int y = 0; y < n; ++y) {
          int s = e.plus(y, x);
          if (s >= 0) sums.push_back(-(1LL * color[y] * n + color[s]) - 1);
        }
      }
      std::sort(sums.begin(), sums.end());
      key.insert(key.end(), sums.begin(), sums.end());
    }
    color = normalize(keys);
    if (color_count(color) == before) return color;
  }
}

std::vector<uint8_t> encode(const Algebra& e, const std::vector<int>& pos) {
  const int n = e.size();
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[pos[x]] = x;
  std::vector<uint8_t> bytes;
  bytes.reserve(3 + size_t(2) * n * n);
  bytes.push_back(e.kind() == Kind::Effect ? 0 : 1);
  bytes.push_back(static_cast<uint8_t>(n >> 8));
  bytes.push_back(static_cast<uint8_t>(n & 0xff));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int s = e.plus(inv[p], inv[q]);
      uint16_t v = s < 0 ? 0 : static_cast<uint16_t>(pos[s] + 1);
      bytes.push_back(static_cast<uint8_t>(v >> 8));
      bytes.push_back(static_cast<uint8_t>(v & 0xff));
    }
  return bytes;
}

struct CanonSearch {
  const Algebra& e;
  std::vector<uint8_t> best_bytes;
  std::vector<int> best_pos;
  long long nodes = 0;

  explicit CanonSearch(const Algebra& alg) : e(alg) {}

  void run(Colors color) {
    if (++nodes > 10'000'000)
      throw Error(Errc::budget_exceeded, "canonical labeling search too large");
    const int n = e.size();
    // Cells sorted by color; all-singleton means a complete labeling.
    std::vector<std::vector<int>> cells(color_count(color));
    for (int x = 0; x < n; ++x) cells[color[x]].push_back(x);
    int target = -1;
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      std::vector<int> pos(n);
      for (int x = 0; x < n; ++x) pos[x] = color[x];
      auto bytes = encode(e, pos);
      if (best_bytes.empty() || bytes < best_bytes) {
        best_bytes = std::move(bytes);
        best_pos = std::move(pos);
      }
      return;
    }
    for (int pick : cells[target]) {
      Colors next(color.size());
      for (int x = 0; x < n; ++x)
        next[x] = 2 * color[x] + (color[x] == target && x != pick ? 1 : 0);
      run(refine(e, std::move(next)));
    }
  }
};

std::pair<std::vector<uint8_t>, std::vector<int>> canonicalize(
    const Algebra& e) {
  // Residual symmetry after refinement is resolved by the individualization
  // search; its node budget bounds the work instead of a cell-count gate,
  // which would reject harmless inputs like products with equal factors.
  CanonSearch search(e);
  search.run(refine(e, initial_colors(e)));
  return {std::move(search.best_bytes), std::move(search.best_pos)};
}

}  // namespace

std::vector<uint8_t> canonical_form(const Algebra& e) {
  return canonicalize(e).first;
}

std::vector<int> canonical_labeling(const Algebra& e) {
  return canonicalize(e).second;
}

std::optional<std::vector<int>> is_isomorphic(const Algebra& e,
                                              const Algebra& f) {
  if (e.kind() != f.kind() || e.size() != f.size()) return std::nullopt;
  auto [be, pe] = canonicalize(e);
  auto [bf, pf] = canonicalize(f);
  if (be != bf) return std::nullopt;
  const int n = e.size();
  std::vector<int> inv_f(n);
  for (int x = 0; x < n; ++x) inv_f[pf[x]] = x;
  std::vector<int> sigma(n);
  for (int x = 0; x < n; ++x) sigma[x] = inv_f[pe[x]];
  // The bijection is implied by equal encodings; re-check it anyway.
  if (sigma[e.zero()] != f.zero() || sigma[e.unit()] != f.unit())
    throw Error(Errc::theorem_violation, "canonical labeling lost 0/1");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = e.plus(a, b);
      int fs = f.plus(sigma[a], sigma[b]);
      if ((s < 0) != (fs < 0) || (s >= 0 && sigma[s] != fs))
        throw Error(Errc::theorem_violation,
                    "canonical encodings equal but tables disagree");
    }
  return sigma;
}

}  // namespace riesz
