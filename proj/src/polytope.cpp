#include "riesz/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "riesz/error.hpp"

namespace riesz {

namespace {

Rat dot(const QVec& a, const QVec& b) {
  Rat s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

/// Scale a rational vector to primitive integer form (gcd 1). Keeps double
/// description entries from growing without bound.
void normalize_ray(QVec& r) {
  long long lcm = 1;
  for (const auto& x : r) {
    long long d = x.den();
    long long g = std::gcd(lcm, d);
    __int128 l = (__int128)lcm / g * d;
    if (l > INT64_MAX) throw std::overflow_error("ray lcm overflow");
    lcm = (long long)l;
  }
  long long gcd = 0;
  QVec scaled(r.size());
  for (size_t i = 0; i < r.size(); ++i) {
    scaled[i] = r[i] * Rat(lcm);
    gcd = std::gcd(gcd, scaled[i].num());
  }
  if (gcd == 0) {
    r = std::move(scaled);
    return;
  }
  for (auto& x : scaled) x = x / Rat(gcd);
  r = std::move(scaled);
}

struct Bitset {
  std::vector<uint64_t> w;
  explicit Bitset(int bits = 0) : w((bits + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  static Bitset intersect(const Bitset& a, const Bitset& b) {
    Bitset r;
    r.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
};

struct Ray {
  QVec v;       // homogeneous coordinates, length f+1
  Bitset zero;  // processed rows this ray saturates
};

}  // namespace

int rational_rank(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < (int)rows.size(); ++c) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][c].is_zero()) {
        piv = (int)r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if ((int)r == rank || rows[r][c].is_zero()) continue;
      Rat f = rows[r][c] / rows[rank][c];
      for (size_t cc = c; cc < cols; ++cc)
        rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

VertexEnumeration enumerate_vertices(const LinearSystem& sys) {
  VertexEnumeration out;
  const int n = sys.dim;

  // --- Stage 1: reduce equalities to echelon form and parametrize. ---
  std::vector<QVec> rows = sys.eq_lhs;
  std::vector<Rat> rhs = sys.eq_rhs;
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int c = 0; c < n && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::swap(rhs[rank], rhs[piv]);
    Rat inv = Rat(1) / rows[rank][c];
    for (int cc = 0; cc < n; ++cc) rows[rank][cc] *= inv;
    rhs[rank] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Rat f = rows[r][c];
      for (int cc = 0; cc < n; ++cc) rows[r][cc] -= f * rows[rank][cc];
      rhs[r] -= f * rhs[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r)
    if (!rhs[r].is_zero()) return out;  // inconsistent: empty polytope
  rows.resize(rank);
  rhs.resize(rank);
  out.echelon_lhs = rows;
  out.echelon_rhs = rhs;

  std::vector<int> free_col;
  {
    std::vector<bool> is_piv(n, false);
    for (int c : pivot_col) is_piv[c] = true;
    for (int c = 0; c < n; ++c)
      if (!is_piv[c]) free_col.push_back(c);
  }
  const int f = (int)free_col.size();
  out.dim = f;

  // v = q + P w: origin from the pivot solution, columns per free variable.
  QVec q(n, Rat(0));
  for (size_t r = 0; r < rank; ++r) q[pivot_col[r]] = rhs[r];
  std::vector<QVec> basis(f, QVec(n, Rat(0)));  // column vectors
  for (int j = 0; j < f; ++j) {
    basis[j][free_col[j]] = Rat(1);
    for (size_t r = 0; r < rank; ++r)
      basis[j][pivot_col[r]] = -rows[r][free_col[j]];
  }
  auto to_v = [&](const QVec& w, const Rat& t) {
    QVec v = q;
    for (auto& x : v) x *= t;
    for (int j = 0; j < f; ++j)
      if (!w[j].is_zero())
        for (int c = 0; c < n; ++c) v[c] += w[j] * basis[j][c];
    for (auto& x : v) x /= t;
    return v;
  };

  // --- Stage 2: rewrite inequalities over the free parameters. ---
  // a.v >= b  becomes  (a.P) w >= b - a.q, homogenized as (a.P, a.q - b).
  std::vector<QVec> hrows;
  for (size_t i = 0; i < sys.ineq_lhs.size(); ++i) {
    QVec h(f + 1, Rat(0));
    for (int j = 0; j < f; ++j) h[j] = dot(sys.ineq_lhs[i], basis[j]);
    h[f] = dot(sys.ineq_lhs[i], q) - sys.ineq_rhs[i];
    bool all_zero = true;
    for (int j = 0; j < f; ++j) all_zero &= h[j].is_zero();
    if (all_zero) {
      if (h[f].is_negative()) return out;  // 0 >= positive: empty
      continue;
    }
    normalize_ray(h);
    hrows.push_back(std::move(h));
  }
  std::sort(hrows.begin(), hrows.end(), [](const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  });
  hrows.erase(std::unique(hrows.begin(), hrows.end()), hrows.end());
  {
    QVec trow(f + 1, Rat(0));
    trow[f] = Rat(1);
    hrows.push_back(std::move(trow));  // t >= 0
  }

  if (f == 0) {
    // Unique equality solution; only feasibility remains.
    for (size_t i = 0; i < sys.ineq_lhs.size(); ++i)
      if (dot(sys.ineq_lhs[i], q) < sys.ineq_rhs[i]) return out;
    out.feasible = true;
    out.vertices.push_back(q);
    return out;
  }

  // --- Stage 3: initial simplicial cone from independent rows. ---
  const int hd = f + 1;
  std::vector<int> base_rows;
  for (int i = 0; i < (int)hrows.size(); ++i) {
    if ((int)base_rows.size() == hd) break;
    std::vector<QVec> trial;
    for (int r : base_rows) trial.push_back(hrows[r]);
    trial.push_back(hrows[i]);
    if (rational_rank(trial) == (int)trial.size()) base_rows.push_back(i);
  }
  if ((int)base_rows.size() < hd) {
    // The cone has a lineality space: the polytope is unbounded or an
    // affine set of positive dimension.
    out.bounded = false;
    return out;
  }

  // Invert the basis matrix; its columns span the initial ray set.
  std::vector<QVec> m(hd, QVec(hd)), inv(hd, QVec(hd, Rat(0)));
  for (int r = 0; r < hd; ++r) m[r] = hrows[base_rows[r]];
  for (int r = 0; r < hd; ++r) inv[r][r] = Rat(1);
  for (int c = 0; c < hd; ++c) {
    int piv = c;
    while (m[piv][c].is_zero()) ++piv;
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rat d = Rat(1) / m[c][c];
    for (int cc = 0; cc < hd; ++cc) {
      m[c][cc] *= d;
      inv[c][cc] *= d;
    }
    for (int r = 0; r < hd; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rat fac = m[r][c];
      for (int cc = 0; cc < hd; ++cc) {
        m[r][cc] -= fac * m[c][cc];
        inv[r][cc] -= fac * inv[c][cc];
      }
    }
  }

  const int total_rows = (int)hrows.size();
  std::vector<Ray> rays;
  for (int j = 0; j < hd; ++j) {
    Ray r;
    r.v.resize(hd);
    for (int i = 0; i < hd; ++i) r.v[i] = inv[i][j];
    normalize_ray(r.v);
    r.zero = Bitset(total_rows);
    for (int b = 0; b < hd; ++b)
      if (b != j) r.zero.set(base_rows[b]);
    rays.push_back(std::move(r));
  }

  // --- Stage 4: insert the remaining constraints one at a time. ---
  std::vector<bool> in_base(total_rows, false);
  for (int r : base_rows) in_base[r] = true;
  for (int ri = 0; ri < total_rows; ++ri) {
    if (in_base[ri]) continue;
    const QVec& a = hrows[ri];
    std::vector<Rat> val(rays.size());
    bool any_neg = false;
    for (size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(a, rays[k].v);
      any_neg |= val[k].is_negative();
    }
    if (!any_neg) {
      for (size_t k = 0; k < rays.size(); ++k)
        if (val[k].is_zero()) rays[k].zero.set(ri);
      continue;
    }
    // Adjacent (positive, negative) pairs spawn boundary rays.
    std::vector<Ray> born;
    for (size_t p = 0; p < rays.size(); ++p) {
      if (!(val[p] > Rat(0))) continue;
      for (size_t ng = 0; ng < rays.size(); ++ng) {
        if (!val[ng].is_negative()) continue;
        Bitset common = Bitset::intersect(rays[p].zero, rays[ng].zero);
        bool adjacent = true;
        for (size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == ng) continue;
          if (common.subset_of(rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v.resize(hd);
        for (int i = 0; i < hd; ++i)
          nr.v[i] = val[p] * rays[ng].v[i] - val[ng] * rays[p].v[i];
        normalize_ray(nr.v);
        nr.zero = common;
        nr.zero.set(ri);
        born.push_back(std::move(nr));
      }
    }
    std::vector<Ray> next;
    for (size_t k = 0; k < rays.size(); ++k) {
      if (val[k].is_negative()) continue;
      Ray r = std::move(rays[k]);
      if (val[k].is_zero()) r.zero.set(ri);
      next.push_back(std::move(r));
    }
    for (auto& nr : born) next.push_back(std::move(nr));
    rays = std::move(next);
    if (rays.empty()) break;
  }

  // --- Stage 5: read off vertices and recession rays. ---
  for (const auto& r : rays) {
    const Rat& t = r.v[f];
    if (t > Rat(0)) {
      QVec w(r.v.begin(), r.v.begin() + f);
      out.vertices.push_back(to_v(w, t));
    } else {
      bool nonzero = false;
      for (const auto& x : r.v) nonzero |= !x.is_zero();
      if (nonzero) out.bounded = false;
    }
  }
  out.feasible = !out.vertices.empty();
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const QVec& a, const QVec& b) {
              for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] < b[i]) return true;
                if (b[i] < a[i]) return false;
              }
              return false;
            });
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  return out;
}

bool vertex_certificate(const LinearSystem& sys, const QVec& v) {
  std::vector<QVec> active = sys.eq_lhs;
  for (size_t i = 0; i < sys.eq_lhs.size(); ++i)
    if (dot(sys.eq_lhs[i], v) != sys.eq_rhs[i]) return false;
  for (size_t i = 0; i < sys.ineq_lhs.size(); ++i) {
    Rat val = dot(sys.ineq_lhs[i], v);
    if (val < sys.ineq_rhs[i]) return false;
    if (val == sys.ineq_rhs[i]) active.push_back(sys.ineq_lhs[i]);
  }
  return rational_rank(std::move(active)) == sys.dim;
}

}  // namespace riesz
