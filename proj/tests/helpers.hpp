#pragma once

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/algebra.hpp"

namespace riesz::testing {

/// Assemble a raw table from named sum triples. Zero sums are left to the
/// validator's forced completion; for the effect kind the mirrored entries
/// are filled here.
inline RawTable make_table(Kind kind, std::vector<std::string> names,
                           const std::string& zero, const std::string& unit,
                           std::vector<std::array<std::string, 3>> sums,
                           bool mirror = true) {
  RawTable t;
  t.kind = kind;
  t.names = std::move(names);
  const int n = t.n();
  auto idx = [&](const std::string& s) {
    for (int i = 0; i < n; ++i)
      if (t.names[i] == s) return i;
    throw std::runtime_error("unknown element " + s);
  };
  t.zero = idx(zero);
  t.unit = idx(unit);
  t.plus.assign(size_t(n) * n, -1);
  for (const auto& [a, b, c] : sums) {
    t.at(idx(a), idx(b)) = idx(c);
    if (kind == Kind::Effect && mirror) t.at(idx(b), idx(a)) = idx(c);
  }
  return t;
}

inline Algebra must(ValidationResult r) {
  if (!r.ok()) {
    std::string msg = "expected a valid algebra:";
    for (const auto& w : r.violations) msg += " " + w.tag;
    throw std::runtime_error(msg);
  }
  return std::move(*r.algebra);
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace riesz::testing
