#include "riesz/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "riesz/error.hpp"

namespace riesz {

namespace {

Witness mk_witness(std::string tag, const std::vector<std::string>& names,
                   std::initializer_list<int> tuple, std::string note) {
  Witness w;
  w.tag = std::move(tag);
  for (int i : tuple) w.tuple.push_back(names[i]);
  w.note = std::move(note);
  return w;
}

}  // namespace

int Algebra::index(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::optional<int> Algebra::minus(int c, int b) const {
  if (kind_ == Kind::Effect) {
    // x + b = c  <=>  x' = b + c'; both lookups are O(1).
    if (!leq(b, c)) return std::nullopt;
    int t = plus(b, sup_right_[c]);
    if (t < 0) return std::nullopt;
    return sup_right_[t];
  }
  for (int x = 0; x < n_; ++x)
    if (plus(x, b) == c) return x;
  return std::nullopt;
}

std::optional<int> Algebra::right_remainder(int t, int l) const {
  if (kind_ == Kind::Effect) return minus(t, l);
  for (int r = 0; r < n_; ++r)
    if (plus(l, r) == t) return r;
  return std::nullopt;
}

std::optional<int> Algebra::n_times(int a, int n) const {
  int acc = zero_;
  for (int i = 0; i < n; ++i) {
    acc = plus(acc, a);
    if (acc < 0) return std::nullopt;
  }
  return acc;
}

std::optional<int> Algebra::isotropic_index(int a) const {
  if (a == zero_) return std::nullopt;  // n*0 = 0 for every n
  int acc = a;
  int n = 1;
  while (true) {
    int next = plus(acc, a);
    if (next < 0) return n;
    acc = next;
    ++n;
  }
}

RawTable Algebra::to_raw() const {
  RawTable t;
  t.kind = kind_;
  t.label = label_;
  t.names = names_;
  t.zero = zero_;
  t.unit = unit_;
  t.plus = plus_;
  return t;
}

// ---------------------------------------------------------------------------
// validation

struct AlgebraBuilder {
  static Algebra finish(RawTable&& t) {
    Algebra e;
    e.kind_ = t.kind;
    e.label_ = std::move(t.label);
    e.n_ = t.n();
    e.zero_ = t.zero;
    e.unit_ = t.unit;
    e.names_ = std::move(t.names);
    e.plus_ = std::move(t.plus);
    const int n = e.n_;

    e.below_ = BitMat(n);
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a) {
        int b = e.plus_[size_t(c) * n + a];
        if (b >= 0) e.below_.set(b, a);
      }
    e.above_ = BitMat(n);
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a)
        if (e.below_.get(b, a)) e.above_.set(a, b);

    e.sup_right_.assign(n, -1);
    e.sup_left_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (e.plus_[size_t(a) * n + b] == e.unit_) {
          e.sup_right_[a] = b;
          e.sup_left_[b] = a;
        }
      }

    // Heights by longest chain from zero; processing order by down-set size.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pop(n);
    for (int i = 0; i < n; ++i) pop[i] = e.below_.row_popcount(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pop[a] < pop[b]; });
    e.height_.assign(n, 0);
    for (int x : order) {
      int h = 0;
      for_each_bit(e.below_.row(x), e.below_.words(), n, [&](int y) {
        if (y != x) h = std::max(h, e.height_[y] + 1);
      });
      e.height_[x] = h;
    }
    return e;
  }
};

ValidationResult validate(RawTable table) {
  ValidationResult res;
  auto& bad = res.violations;
  const int n = table.n();
  const auto& names = table.names;

  if (n < 2) {
    Witness w;
    w.tag = "ZeroEqualsUnit";
    w.note = "carrier must contain at least the distinct elements 0 and 1";
    bad.push_back(std::move(w));
    return res;
  }
  {
    std::set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second) {
        Witness w;
        w.tag = "DuplicateElement";
        w.tuple = {s};
        w.note = "element identifiers must be distinct";
        bad.push_back(std::move(w));
      }
    if (!bad.empty()) return res;
  }
  if (table.zero < 0 || table.zero >= n || table.unit < 0 || table.unit >= n)
    throw Error(Errc::parse_error, "zero/unit index out of range");
  if (table.zero == table.unit) {
    Witness w;
    w.tag = "ZeroEqualsUnit";
    w.tuple = {names[table.zero]};
    w.note = "degenerate one-element algebra rejected: 0 = 1";
    bad.push_back(std::move(w));
    return res;
  }
  if (static_cast<int>(table.plus.size()) != n * n)
    throw Error(Errc::parse_error, "addition table is not square");
  for (int32_t v : table.plus)
    if (v < -1 || v >= n)
      throw Error(Errc::parse_error, "table entry out of range");

  const int zero = table.zero, unit = table.unit;
  const bool effect = table.kind == Kind::Effect;

  // Zero sums may be omitted in input; their completion is forced.
  for (int x = 0; x < n; ++x) {
    for (auto [a, b] : {std::pair{zero, x}, std::pair{x, zero}}) {
      int32_t& cell = table.at(a, b);
      if (cell < 0)
        cell = x;
      else if (cell != x)
        bad.push_back(mk_witness("ZeroIdentity", names, {a, b, cell},
                                 "sum with zero must return the other addend"));
    }
  }

  auto plus = [&](int a, int b) { return table.at(a, b); };

  // E1: the partial operation is symmetric.
  if (effect) {
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        int ab = plus(a, b), ba = plus(b, a);
        if ((ab < 0) != (ba < 0) || (ab >= 0 && ab != ba))
          bad.push_back(mk_witness("E1", names, {a, b},
                                   "a+b and b+a must both exist and agree"));
      }
  }

  // E2 / PE1 associativity on every triple where the premise sums exist.
  // The pseudo-effect form is a biconditional.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = plus(a, b);
      if (effect && ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int bc = plus(b, c);
        int abc = ab >= 0 ? plus(ab, c) : -1;
        int a_bc = bc >= 0 ? plus(a, bc) : -1;
        if (ab >= 0 && abc >= 0) {
          if (bc < 0 || a_bc < 0 || a_bc != abc) {
            bad.push_back(mk_witness(effect ? "E2" : "PE1", names, {a, b, c},
                                     "(a+b)+c defined but b+c or a+(b+c) "
                                     "missing or different"));
            continue;
          }
        }
        if (!effect && bc >= 0 && a_bc >= 0) {
          if (ab < 0 || abc < 0)
            bad.push_back(mk_witness("PE1", names, {a, b, c},
                                     "a+(b+c) defined but a+b or (a+b)+c "
                                     "missing"));
        }
      }
    }

  // E3 / PE2: unique right (and for pseudo-effect, left) supplement.
  for (int a = 0; a < n; ++a) {
    int right = -1, left = -1;
    bool right_dup = false, left_dup = false;
    for (int b = 0; b < n; ++b) {
      if (plus(a, b) == unit) {
        if (right >= 0) right_dup = true;
        right = b;
      }
      if (plus(b, a) == unit) {
        if (left >= 0) left_dup = true;
        left = b;
      }
    }
    const char* tag = effect ? "E3" : "PE2";
    if (right < 0)
      bad.push_back(mk_witness(tag, names, {a}, "no b with a+b = 1"));
    if (right_dup)
      bad.push_back(mk_witness(tag, names, {a},
                               "more than one b with a+b = 1"));
    if (!effect) {
      if (left < 0)
        bad.push_back(mk_witness(tag, names, {a}, "no e with e+a = 1"));
      if (left_dup)
        bad.push_back(mk_witness(tag, names, {a},
                                 "more than one e with e+a = 1"));
    }
  }

  // PE3: a+b = d+a = b+e for some d, e.
  if (!effect) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int s = plus(a, b);
        if (s < 0) continue;
        bool has_d = false, has_e = false;
        for (int x = 0; x < n && !(has_d && has_e); ++x) {
          if (plus(x, a) == s) has_d = true;
          if (plus(b, x) == s) has_e = true;
        }
        if (!has_d || !has_e)
          bad.push_back(mk_witness("PE3", names, {a, b, s},
                                   "a+b has no left/right companion form"));
      }
  }

  // E4 / PE4: only zero adds with the unit.
  for (int a = 0; a < n; ++a) {
    if (a == zero) continue;
    if (plus(a, unit) >= 0)
      bad.push_back(mk_witness(effect ? "E4" : "PE4", names, {a},
                               "a+1 defined for nonzero a"));
    if (!effect && plus(unit, a) >= 0)
      bad.push_back(mk_witness("PE4", names, {a},
                               "1+a defined for nonzero a"));
  }

  // Cancellativity in both arguments; a theorem of the axioms, checked
  // directly because minus() relies on it.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = plus(a, b);
      if (ab < 0) continue;
      for (int c = b + 1; c < n; ++c)
        if (plus(a, c) == ab)
          bad.push_back(mk_witness("Cancellativity", names, {a, b, c},
                                   "a+b = a+c with b != c"));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ba = plus(b, a);
      if (ba < 0) continue;
      for (int c = b + 1; c < n; ++c)
        if (plus(c, a) == ba)
          bad.push_back(mk_witness("Cancellativity", names, {b, c, a},
                                   "b+a = c+a with b != c"));
    }

  // Antisymmetry of the derived order.
  {
    BitMat below(n);
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a) {
        int b = plus(c, a);
        if (b >= 0) below.set(b, a);
      }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (below.get(b, a) && below.get(a, b))
          bad.push_back(mk_witness("Antisymmetry", names, {a, b},
                                   "a <= b and b <= a with a != b"));
  }

  if (!bad.empty()) return res;
  res.algebra = AlgebraBuilder::finish(std::move(table));
  return res;
}

namespace {

Algebra must_validate(RawTable t, const char* what) {
  auto r = validate(std::move(t));
  if (!r.ok()) {
    std::string msg = std::string(what) + " produced an invalid table:";
    for (const auto& w : r.violations) {
      msg += " [" + w.tag;
      for (const auto& s : w.tuple) msg += " " + s;
      msg += "]";
    }
    throw Error(Errc::parse_error, msg);
  }
  return std::move(*r.algebra);
}

}  // namespace

// ---------------------------------------------------------------------------
// constructors

Algebra build_chain(int m, int carrier_cap) {
  if (m < 1) throw Error(Errc::parse_error, "chain needs m >= 1");
  if (m + 1 > carrier_cap)
    throw Error(Errc::size_overflow,
                "chain carrier exceeds cap of " + std::to_string(carrier_cap));
  RawTable t;
  t.kind = Kind::Effect;
  t.label = "chain-" + std::to_string(m);
  t.names.resize(m + 1);
  t.names[0] = "0";
  t.names[m] = "1";
  for (int j = 1; j < m; ++j)
    t.names[j] = j == 1 ? "a" : std::to_string(j) + "a";
  t.zero = 0;
  t.unit = m;
  t.plus.assign(size_t(m + 1) * (m + 1), -1);
  for (int j = 0; j <= m; ++j)
    for (int k = 0; j + k <= m; ++k) t.at(j, k) = j + k;
  return must_validate(std::move(t), "build_chain");
}

Algebra product(const std::vector<Algebra>& factors, int carrier_cap) {
  if (factors.empty()) {
    // Empty product is the one-point algebra, which validation rejects.
    RawTable t;
    t.kind = Kind::Effect;
    t.names = {"()"};
    t.zero = t.unit = 0;
    t.plus = {0};
    auto r = validate(std::move(t));
    throw Error(Errc::parse_error,
                "empty product is the degenerate one-element algebra: " +
                    r.violations.front().tag);
  }
  long long total = 1;
  Kind kind = Kind::Effect;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > carrier_cap)
      throw Error(Errc::size_overflow,
                  "product carrier exceeds cap of " +
                      std::to_string(carrier_cap));
    if (f.kind() == Kind::PseudoEffect) kind = Kind::PseudoEffect;
  }
  const int k = static_cast<int>(factors.size());
  const int n = static_cast<int>(total);

  // Mixed-radix enumeration of tuples; index 0 is the zero tuple.
  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i) radix[i] = factors[i].size();
  auto decode = [&](int idx, std::vector<int>& tup) {
    for (int i = k - 1; i >= 0; --i) {
      tup[i] = idx % radix[i];
      idx /= radix[i];
    }
  };
  auto encode = [&](const std::vector<int>& tup) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * radix[i] + tup[i];
    return idx;
  };

  RawTable t;
  t.kind = kind;
  t.label = "product";
  t.names.resize(n);
  std::vector<int> tup(k), tup2(k), sum(k);
  for (int idx = 0; idx < n; ++idx) {
    decode(idx, tup);
    std::string nm = "(";
    for (int i = 0; i < k; ++i) {
      if (i) nm += ",";
      nm += factors[i].name(tup[i]);
    }
    nm += ")";
    t.names[idx] = nm;
  }
  std::vector<int> zt(k), ut(k);
  for (int i = 0; i < k; ++i) {
    zt[i] = factors[i].zero();
    ut[i] = factors[i].unit();
  }
  t.zero = encode(zt);
  t.unit = encode(ut);
  t.plus.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    decode(a, tup);
    for (int b = 0; b < n; ++b) {
      decode(b, tup2);
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int s = factors[i].plus(tup[i], tup2[i]);
        if (s < 0)
          ok = false;
        else
          sum[i] = s;
      }
      if (ok) t.at(a, b) = encode(sum);
    }
  }
  return must_validate(std::move(t), "product");
}

Algebra horizontal_sum(const std::vector<Algebra>& parts, int carrier_cap) {
  if (parts.empty())
    throw Error(Errc::parse_error, "horizontal sum needs at least one summand");
  for (const auto& p : parts)
    if (p.kind() != Kind::Effect)
      throw Error(Errc::parse_error,
                  "horizontal sum is defined for effect algebras");
  if (parts.size() == 1) return parts[0];

  // Carrier: shared 0 and 1 plus each summand's interior.
  std::vector<std::pair<int, int>> origin;  // (summand, local index)
  std::vector<std::vector<int>> to_global(parts.size());
  RawTable t;
  t.kind = Kind::Effect;
  t.label = "horizontal-sum";
  t.names = {"0", "1"};
  origin.push_back({-1, -1});
  origin.push_back({-1, -1});
  for (size_t p = 0; p < parts.size(); ++p) {
    const auto& e = parts[p];
    to_global[p].assign(e.size(), -1);
    to_global[p][e.zero()] = 0;
    to_global[p][e.unit()] = 1;
    for (int x = 0; x < e.size(); ++x) {
      if (x == e.zero() || x == e.unit()) continue;
      to_global[p][x] = static_cast<int>(t.names.size());
      t.names.push_back(e.name(x) + "_" + std::to_string(p + 1));
      origin.push_back({static_cast<int>(p), x});
    }
  }
  const int n = t.n();
  if (n > carrier_cap)
    throw Error(Errc::size_overflow,
                "horizontal sum carrier exceeds cap of " +
                    std::to_string(carrier_cap));
  t.zero = 0;
  t.unit = 1;
  t.plus.assign(size_t(n) * n, -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    const auto& e = parts[p];
    for (int a = 0; a < e.size(); ++a)
      for (int b = 0; b < e.size(); ++b) {
        int s = e.plus(a, b);
        if (s < 0) continue;
        int ga = to_global[p][a], gb = to_global[p][b], gs = to_global[p][s];
        int32_t& cell = t.at(ga, gb);
        if (cell >= 0 && cell != gs)
          throw Error(Errc::parse_error, "summand sums collide at shared 0/1");
        cell = gs;
      }
  }
  return must_validate(std::move(t), "horizontal_sum");
}

Algebra rename(const Algebra& e, const std::vector<int>& perm) {
  const int n = e.size();
  if (static_cast<int>(perm.size()) != n)
    throw Error(Errc::parse_error, "permutation size mismatch");
  RawTable t;
  t.kind = e.kind();
  t.label = e.label();
  t.names.resize(n);
  t.plus.assign(size_t(n) * n, -1);
  for (int i = 0; i < n; ++i) t.names[perm[i]] = e.name(i);
  t.zero = perm[e.zero()];
  t.unit = perm[e.unit()];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = e.plus(a, b);
      if (s >= 0) t.at(perm[a], perm[b]) = perm[s];
    }
  return must_validate(std::move(t), "rename");
}

}  // namespace riesz
