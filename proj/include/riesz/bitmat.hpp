#pragma once

#include <cstdint>
#include <vector>

namespace riesz {

/// Dense square bit matrix; rows are 64-bit word spans for fast set algebra
/// over element subsets.
class BitMat {
public:
  BitMat() = default;
  explicit BitMat(int n)
      : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0) {}

  int n() const { return n_; }
  int words() const { return words_; }

  const uint64_t* row(int i) const { return bits_.data() + size_t(i) * words_; }
  uint64_t* row(int i) { return bits_.data() + size_t(i) * words_; }

  bool get(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void set(int i, int j) { row(i)[j >> 6] |= uint64_t(1) << (j & 63); }

  /// row(i) subset of row(j)
  bool row_subset(int i, int j) const {
    const uint64_t *a = row(i), *b = row(j);
    for (int w = 0; w < words_; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }

  int row_popcount(int i) const {
    const uint64_t* a = row(i);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w]);
    return c;
  }

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

/// Iterate set bits of an and-combination of rows.
template <typename Fn>
void for_each_bit(const uint64_t* w, int words, int n, Fn&& fn) {
  for (int i = 0; i < words; ++i) {
    uint64_t m = w[i];
    while (m) {
      int b = __builtin_ctzll(m);
      int idx = i * 64 + b;
      if (idx < n) fn(idx);
      m &= m - 1;
    }
  }
}

}  // namespace riesz
