#include "riesz/decompose.hpp"

#include <algorithm>
#include <atomic>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "riesz/analysis.hpp"
#include "riesz/error.hpp"
#include "riesz/io.hpp"
#include "riesz/parallel.hpp"

namespace riesz {

namespace {

std::string table_dump(const Algebra& e) {
  return dump_stable(algebra_to_json(e));
}

void need_atomic_rdp(const Algebra& e, const char* who) {
  if (e.kind() != Kind::Effect)
    throw Error(Errc::hypothesis_not_met,
                std::string(who) + " needs an effect algebra");
  if (!is_atomic(e).holds)
    throw Error(Errc::hypothesis_not_met,
                std::string(who) + " needs an atomic algebra");
  if (!rdp_check(e).holds)
    throw Error(Errc::hypothesis_not_met,
                std::string(who) + " needs the Riesz decomposition property");
}

}  // namespace

PropertyReport atom_sum_properties(const Algebra& e) {
  need_atomic_rdp(e, "atom_sum_properties");
  auto as = atoms(e);
  const int k = static_cast<int>(as.size());
  std::map<std::string, long long> stats{{"atoms", k}};

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int s = e.plus(as[i], as[j]);
      auto jn = join(e, as[i], as[j]);
      if (s < 0 || !jn || s != *jn) {
        Witness w;
        w.tag = "atom-sum";
        w.tuple = {e.name(as[i]), e.name(as[j])};
        w.note = "sum of distinct atoms missing or different from their join";
        return report_fails("atom-sums", w, stats);
      }
    }

  // Caps: subsets up to size 20 or 2^16 subsets, whichever binds first; for a
  // full power set the count cap is the effective one.
  if (k > 16)
    throw Error(Errc::budget_exceeded,
                "atom subset verification beyond the documented cap");
  for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    int sum = e.zero();
    std::optional<int> jn;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      sum = sum < 0 ? -1 : e.plus(sum, as[i]);
      if (sum < 0) ok = false;
      jn = jn ? join(e, *jn, as[i]) : std::optional<int>(as[i]);
      if (!jn) ok = false;
    }
    if (!ok || sum != *jn) {
      Witness w;
      w.tag = "atom-subset-sum";
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) w.tuple.push_back(e.name(as[i]));
      w.note = "orthogonal sum of distinct atoms missing or not the join";
      return report_fails("atom-sums", w, stats);
    }
  }
  stats["subsets"] = (long long)((uint64_t(1) << k));
  return report_holds("atom-sums", stats);
}

std::vector<ChainBlock> central_blocks(const Algebra& e) {
  need_atomic_rdp(e, "central_blocks");
  auto as = atoms(e);
  std::vector<ChainBlock> blocks;
  for (int a : as) {
    auto iso = e.isotropic_index(a);
    if (!iso)
      throw TheoremViolation("isotropic index of an atom must be finite",
                             table_dump(e));
    int block = *e.n_times(a, *iso);

    // Interval [0, block] must be exactly the multiples of the atom.
    std::vector<bool> is_multiple(e.size(), false);
    for (int j = 0; j <= *iso; ++j) is_multiple[*e.n_times(a, j)] = true;
    for (int x = 0; x < e.size(); ++x)
      if (e.leq(x, block) != is_multiple[x])
        throw TheoremViolation(
            "interval below " + e.name(block) +
                " is not the chain of multiples of " + e.name(a),
            table_dump(e));

    if (!is_central(e, block))
      throw TheoremViolation("block " + e.name(block) + " is not central",
                             table_dump(e));
    // Atom of the center: no central element strictly between 0 and block.
    for (int f = 0; f < e.size(); ++f) {
      if (f == e.zero() || f == block || !e.leq(f, block)) continue;
      if (is_central(e, f))
        throw TheoremViolation("block " + e.name(block) +
                                   " is not an atom of the center; " +
                                   e.name(f) + " is central below it",
                               table_dump(e));
    }
    blocks.push_back({a, *iso, block});
  }

  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      auto mt = meet(e, blocks[i].block, blocks[j].block);
      if (!mt || *mt != e.zero())
        throw TheoremViolation("distinct blocks must meet at 0", table_dump(e));
      int s = e.plus(blocks[i].block, blocks[j].block);
      auto jn = join(e, blocks[i].block, blocks[j].block);
      if (s < 0 || !jn || s != *jn)
        throw TheoremViolation("sum of distinct blocks must be their join",
                               table_dump(e));
    }

  // The blocks sum to 1 as an orthogonal family.
  int total = e.zero();
  for (const auto& b : blocks) {
    total = total < 0 ? -1 : e.plus(total, b.block);
  }
  if (total != e.unit())
    throw TheoremViolation("blocks must sum to the unit", table_dump(e));
  return blocks;
}

ChainDecomposition chain_decomposition(const Algebra& e) {
  auto blocks = central_blocks(e);
  const int k = static_cast<int>(blocks.size());

  std::vector<Algebra> chains;
  for (const auto& b : blocks) chains.push_back(build_chain(b.index));
  ChainDecomposition d{std::move(blocks), product(chains, e.size()), {}, {}};
  if (d.chain_product.size() != e.size())
    throw TheoremViolation(
        "carrier size must equal the product of (index+1) over atoms",
        table_dump(e));

  // Multiples of each atom, for reading off phi components.
  std::vector<std::vector<int>> multiple_of(k);
  for (int i = 0; i < k; ++i) {
    multiple_of[i].assign(e.size(), -1);
    for (int j = 0; j <= d.blocks[i].index; ++j)
      multiple_of[i][*e.n_times(d.blocks[i].atom, j)] = j;
  }

  d.phi.assign(e.size(), -1);
  d.phi_components.assign(e.size(), {});
  for (int x = 0; x < e.size(); ++x) {
    std::vector<int> comp(k);
    for (int i = 0; i < k; ++i) {
      auto m = meet(e, x, d.blocks[i].block);
      if (!m || multiple_of[i][*m] < 0)
        throw TheoremViolation(
            "x meet block must be a multiple of the block's atom",
            table_dump(e));
      comp[i] = multiple_of[i][*m];
    }
    // Mixed-radix encoding matching the product constructor's element order.
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * (d.blocks[i].index + 1) + comp[i];
    d.phi[x] = idx;
    d.phi_components[x] = std::move(comp);
  }

  // Bijectivity.
  std::vector<bool> hit(e.size(), false);
  for (int x = 0; x < e.size(); ++x) {
    if (hit[d.phi[x]])
      throw TheoremViolation("phi is not injective", table_dump(e));
    hit[d.phi[x]] = true;
  }
  if (d.phi[e.zero()] != d.chain_product.zero() ||
      d.phi[e.unit()] != d.chain_product.unit())
    throw TheoremViolation("phi must map 0 to 0 and 1 to 1", table_dump(e));

  // Two-sided homomorphism, partitioned across the carrier.
  const auto& p = d.chain_product;
  std::atomic<int> bad_x{-1};
#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (int x = 0; x < e.size(); ++x) {
    if (bad_x.load(std::memory_order_relaxed) >= 0) continue;
    for (int y = 0; y < e.size(); ++y) {
      int s = e.plus(x, y);
      int ps = p.plus(d.phi[x], d.phi[y]);
      if ((s < 0) != (ps < 0) || (s >= 0 && d.phi[s] != ps)) {
        int expect = -1;
        bad_x.compare_exchange_strong(expect, x);
        break;
      }
    }
  }
  if (bad_x.load() >= 0)
    throw TheoremViolation("phi is not a two-sided homomorphism at " +
                               e.name(bad_x.load()),
                           table_dump(e));

  if (!is_mv(e).holds)
    throw TheoremViolation(
        "a decomposable algebra must be an MV-effect algebra", table_dump(e));
  return d;
}

CommutativityOutcome pea_commutativity_check(const Algebra& p) {
  CommutativityOutcome out;
  if (!is_atomic(p).holds || !rdp_check(p).holds)
    throw Error(Errc::hypothesis_not_met,
                "commutativity consequence needs an atomic algebra with RDP");
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      int ab = p.plus(a, b), ba = p.plus(b, a);
      if ((ab < 0) != (ba < 0) || ab != ba)
        throw TheoremViolation("noncommuting pair " + p.name(a) + ", " +
                                   p.name(b) + " in an atomic RDP algebra",
                               dump_stable(algebra_to_json(p)));
    }
  out.report = report_holds("commutative", {{"elements", p.size()}});
  if (p.kind() == Kind::Effect) {
    out.as_effect = p;
  } else {
    RawTable t = p.to_raw();
    t.kind = Kind::Effect;
    auto v = validate(std::move(t));
    if (!v.ok())
      throw TheoremViolation("commutative table failed effect validation",
                             dump_stable(algebra_to_json(p)));
    out.as_effect = std::move(*v.algebra);
  }
  out.decomposition = chain_decomposition(*out.as_effect);
  return out;
}

nlohmann::json decomposition_to_json(const Algebra& e,
                                     const ChainDecomposition& d) {
  nlohmann::json j;
  nlohmann::json atoms = nlohmann::json::array();
  nlohmann::json indices = nlohmann::json::array();
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : d.blocks) {
    atoms.push_back(e.name(b.atom));
    indices.push_back(b.index);
    blocks.push_back(e.name(b.block));
  }
  j["atoms"] = std::move(atoms);
  j["indices"] = std::move(indices);
  j["blocks"] = std::move(blocks);
  nlohmann::json phi = nlohmann::json::array();
  for (int x = 0; x < e.size(); ++x)
    phi.push_back({e.name(x), d.phi_components[x]});
  j["phi"] = std::move(phi);
  return j;
}

}  // namespace riesz
