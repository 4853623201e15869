#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "riesz/analysis.hpp"
#include "riesz/decompose.hpp"
#include "riesz/error.hpp"

using namespace riesz;
using riesz::testing::random_perm;

namespace {

Algebra boolean(int k) {
  std::vector<Algebra> f(k, build_chain(1));
  return product(f);
}

std::multiset<int> length_multiset(const ChainDecomposition& d) {
  auto ls = d.chain_lengths();
  return {ls.begin(), ls.end()};
}

}  // namespace

TEST_CASE("sums of distinct atoms equal joins, pairwise and over subsets") {
  CHECK(atom_sum_properties(boolean(2)).holds);
  CHECK(atom_sum_properties(boolean(4)).holds);
  CHECK(atom_sum_properties(product({build_chain(2), build_chain(3)})).holds);
  auto hs = horizontal_sum({build_chain(2), build_chain(2)});
  CHECK_THROWS_AS(atom_sum_properties(hs), Error);
}

TEST_CASE("central blocks carry isotropic indices and centrality proofs") {
  auto c3 = build_chain(3);
  auto b = central_blocks(c3);
  REQUIRE(b.size() == 1);
  CHECK(b[0].atom == c3.index("a"));
  CHECK(b[0].index == 3);
  CHECK(b[0].block == c3.unit());

  auto p = product({build_chain(2), build_chain(3)});
  auto bp = central_blocks(p);
  REQUIRE(bp.size() == 2);
  // Blocks follow the element order of the carrier: (0,a) precedes (a,0).
  CHECK(p.name(bp[0].atom) == "(0,a)");
  CHECK(bp[0].index == 3);
  CHECK(p.name(bp[0].block) == "(0,1)");
  CHECK(p.name(bp[1].atom) == "(a,0)");
  CHECK(bp[1].index == 2);
  CHECK(p.name(bp[1].block) == "(1,0)");

  auto b3 = boolean(3);
  auto bb = central_blocks(b3);
  REQUIRE(bb.size() == 3);
  for (const auto& blk : bb) CHECK(blk.index == 1);
}

TEST_CASE("chains decompose onto themselves") {
  for (int m : {1, 2, 4}) {
    auto c = build_chain(m);
    auto d = chain_decomposition(c);
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].index == m);
    CHECK(d.chain_product.size() == c.size());
  }
}

TEST_CASE("relabeled chain products recover the same length multiset") {
  std::mt19937 rng(99);
  auto base = product({build_chain(2), build_chain(3), build_chain(1)});
  auto d0 = chain_decomposition(base);
  CHECK(length_multiset(d0) == std::multiset<int>{3, 4, 2});
  CHECK((size_t)base.size() == 3u * 4u * 2u);
  for (int trial = 0; trial < 6; ++trial) {
    auto shuffled = rename(base, random_perm(base.size(), rng));
    auto d = chain_decomposition(shuffled);
    CHECK(length_multiset(d) == std::multiset<int>{3, 4, 2});
    long long prod = 1;
    for (int l : d.chain_lengths()) prod *= l;
    CHECK(prod == shuffled.size());
  }
}

TEST_CASE("the decomposition map is a verified bijection onto the product") {
  auto e = product({build_chain(2), build_chain(2)});
  auto d = chain_decomposition(e);
  std::vector<bool> hit(e.size(), false);
  for (int x = 0; x < e.size(); ++x) {
    CHECK(!hit[d.phi[x]]);
    hit[d.phi[x]] = true;
  }
  CHECK(d.phi[e.zero()] == d.chain_product.zero());
  CHECK(d.phi[e.unit()] == d.chain_product.unit());
}

TEST_CASE("decomposition needs RDP") {
  auto hs = horizontal_sum({build_chain(2), build_chain(2)});
  CHECK_THROWS_AS(chain_decomposition(hs), Error);
}

TEST_CASE("commutative tables re-tag from pseudo-effect to effect") {
  // A chain entered as a pseudo-effect algebra with its full two-sided table.
  auto c3 = build_chain(3);
  RawTable t = c3.to_raw();
  t.kind = Kind::PseudoEffect;
  auto v = validate(std::move(t));
  REQUIRE(v.ok());
  auto outcome = pea_commutativity_check(*v.algebra);
  CHECK(outcome.report.holds);
  REQUIRE(outcome.as_effect.has_value());
  CHECK(outcome.as_effect->kind() == Kind::Effect);
  REQUIRE(outcome.decomposition.has_value());
  CHECK(outcome.decomposition->blocks.size() == 1);

  // Effect input passes through unchanged.
  auto direct = pea_commutativity_check(c3);
  CHECK(direct.report.holds);
}
