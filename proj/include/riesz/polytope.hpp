#pragma once

#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

using QVec = std::vector<Rat>;

/// A rational linear system: equalities a.v = b and inequalities a.v >= b
/// over dim variables.
struct LinearSystem {
  int dim = 0;
  std::vector<QVec> eq_lhs;
  std::vector<Rat> eq_rhs;
  std::vector<QVec> ineq_lhs;
  std::vector<Rat> ineq_rhs;
};

/// Exact vertex enumeration result. Vertices live in the original variable
/// space and are sorted lexicographically. `dim` is the affine dimension of
/// the equality solution space; `echelon_*` carry its reduced row-echelon
/// description.
struct VertexEnumeration {
  bool feasible = false;
  bool bounded = true;
  int dim = 0;
  std::vector<QVec> vertices;
  std::vector<QVec> echelon_lhs;
  std::vector<Rat> echelon_rhs;
};

/// Double description on the affine-reduced system: equalities are eliminated
/// first, the remaining inequality cone is homogenized, and extreme rays are
/// accumulated one constraint at a time with the combinatorial adjacency
/// test. Everything is exact.
VertexEnumeration enumerate_vertices(const LinearSystem& sys);

/// Vertex certificate: the active constraints at v (all equalities plus the
/// tight inequalities) have full column rank.
bool vertex_certificate(const LinearSystem& sys, const QVec& v);

/// Exact rank of a rational matrix.
int rational_rank(std::vector<QVec> rows);

}  // namespace riesz
