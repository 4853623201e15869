#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riesz/bitmat.hpp"
#include "riesz/report.hpp"

namespace riesz {

enum class Kind { Effect, PseudoEffect };

inline const char* kind_name(Kind k) {
  return k == Kind::Effect ? "effect" : "pseudo-effect";
}

/// Raw material for validation: a square partial-addition table.
/// Entry -1 means "undefined".
struct RawTable {
  Kind kind = Kind::Effect;
  std::string label;
  std::vector<std::string> names;
  int zero = -1;
  int unit = -1;
  std::vector<int32_t> plus;  // names.size()^2, row-major

  int n() const { return static_cast<int>(names.size()); }
  int32_t& at(int a, int b) { return plus[size_t(a) * names.size() + b]; }
  int32_t at(int a, int b) const { return plus[size_t(a) * names.size() + b]; }
};

/// Default cap on constructed carriers; keeps the cubic axiom scans at desk
/// scale.
inline constexpr int kDefaultCarrierCap = 4096;

/// A validated finite effect or pseudo-effect algebra. Immutable after
/// construction; every operation on it is a pure function, safe to evaluate
/// concurrently.
class Algebra {
public:
  Kind kind() const { return kind_; }
  int size() const { return n_; }
  int zero() const { return zero_; }
  int unit() const { return unit_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index(std::string_view name) const;  // -1 when absent

  /// a+b, or -1 when undefined.
  int plus(int a, int b) const { return plus_[size_t(a) * n_ + b]; }
  bool defined(int a, int b) const { return plus(a, b) >= 0; }

  /// Derived order: a <= b iff c+a = b for some c. Coincides with the usual
  /// right-addend form on effect algebras; the left-addend form is the one
  /// that stays correct for pseudo-effect algebras.
  bool leq(int a, int b) const { return below_.get(b, a); }

  /// Unique d with a+d = 1.
  int sup_right(int a) const { return sup_right_[a]; }
  /// Unique e with e+a = 1; equals sup_right on effect algebras.
  int sup_left(int a) const { return sup_left_[a]; }
  /// Orthosupplement of the effect kind.
  int orthosupplement(int a) const { return sup_right_[a]; }

  /// x with x+b = c, when one exists (unique by cancellativity).
  std::optional<int> minus(int c, int b) const;
  /// r with l+r = t, when one exists. Same as minus on effect algebras.
  std::optional<int> right_remainder(int t, int l) const;

  /// n-fold sum of a, when defined.
  std::optional<int> n_times(int a, int n) const;
  /// Largest n with n*a defined; nullopt encodes the infinite index, which a
  /// finite algebra only assigns to zero.
  std::optional<int> isotropic_index(int a) const;

  /// Longest-chain rank of a above zero (height of zero is 0).
  int height(int a) const { return height_[a]; }

  /// {x : x <= a} as a bit row.
  const uint64_t* below(int a) const { return below_.row(a); }
  /// {x : a <= x} as a bit row.
  const uint64_t* above(int a) const { return above_.row(a); }
  int words() const { return below_.words(); }

  RawTable to_raw() const;

private:
  friend struct AlgebraBuilder;
  Algebra() = default;

  Kind kind_ = Kind::Effect;
  std::string label_;
  int n_ = 0;
  int zero_ = 0;
  int unit_ = 0;
  std::vector<std::string> names_;
  std::vector<int32_t> plus_;
  std::vector<int> sup_right_;
  std::vector<int> sup_left_;
  std::vector<int> height_;
  BitMat below_;
  BitMat above_;
};

/// Outcome of axiom validation: either the algebra or the complete list of
/// violations, each tagged with the axiom it breaks.
struct ValidationResult {
  std::optional<Algebra> algebra;
  std::vector<Witness> violations;
  bool ok() const { return algebra.has_value(); }
};

/// Checks the defining axioms of the declared kind plus the derived laws
/// (zero identity, cancellativity, antisymmetry of the induced order).
/// Missing zero sums are completed first; that completion is forced.
ValidationResult validate(RawTable table);

/// Chain 0 < a < 2a < ... < ma = 1 with m+1 elements; j*a + k*a defined iff
/// j+k <= m.
Algebra build_chain(int m, int carrier_cap = kDefaultCarrierCap);

/// Cartesian product with componentwise partial sums.
Algebra product(const std::vector<Algebra>& factors,
                int carrier_cap = kDefaultCarrierCap);

/// Glue the summands at a shared zero and unit; no cross-summand sums.
Algebra horizontal_sum(const std::vector<Algebra>& parts,
                       int carrier_cap = kDefaultCarrierCap);

/// Relabel elements by a permutation (new_index = perm[old_index]); names are
/// carried along. Test helper for isomorphism invariance.
Algebra rename(const Algebra& e, const std::vector<int>& perm);

}  // namespace riesz
