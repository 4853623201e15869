#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "riesz/algebra.hpp"
#include "riesz/canonical.hpp"

using namespace riesz;
using riesz::testing::random_perm;

TEST_CASE("canonical form is invariant under random renamings") {
  std::mt19937 rng(20240811);
  std::vector<Algebra> zoo = {
      build_chain(4),
      product({build_chain(1), build_chain(1), build_chain(1)}),
      product({build_chain(1), build_chain(1), build_chain(1),
               build_chain(1)}),
      product({build_chain(2), build_chain(3)}),
      product({build_chain(2), build_chain(2), build_chain(3)}),
      horizontal_sum({build_chain(2), build_chain(2)}),
      horizontal_sum({product({build_chain(1), build_chain(1)}),
                      product({build_chain(1), build_chain(1)})}),
  };
  for (const auto& e : zoo) {
    auto base = canonical_form(e);
    for (int trial = 0; trial < 8; ++trial) {
      auto relabeled = rename(e, random_perm(e.size(), rng));
      CHECK(canonical_form(relabeled) == base);
    }
  }
}

TEST_CASE("self isomorphism exists and respects structure") {
  auto e = product({build_chain(2), build_chain(2)});
  auto sigma = is_isomorphic(e, e);
  REQUIRE(sigma.has_value());
  CHECK((*sigma)[e.zero()] == e.zero());
  CHECK((*sigma)[e.unit()] == e.unit());
  for (int a = 0; a < e.size(); ++a)
    for (int b = 0; b < e.size(); ++b) {
      int s = e.plus(a, b);
      if (s >= 0) CHECK(e.plus((*sigma)[a], (*sigma)[b]) == (*sigma)[s]);
    }
}

TEST_CASE("a chain is not isomorphic to the four-element Boolean algebra") {
  auto c3 = build_chain(3);
  auto b2 = product({build_chain(1), build_chain(1)});
  CHECK(!is_isomorphic(c3, b2).has_value());
  CHECK(canonical_form(c3) != canonical_form(b2));
}

TEST_CASE("isomorphism found between differently-labeled copies") {
  std::mt19937 rng(7);
  auto e = horizontal_sum({build_chain(3), build_chain(2), build_chain(2)});
  auto f = rename(e, random_perm(e.size(), rng));
  auto sigma = is_isomorphic(e, f);
  REQUIRE(sigma.has_value());
  for (int a = 0; a < e.size(); ++a)
    for (int b = 0; b < e.size(); ++b) {
      int s = e.plus(a, b);
      int fs = f.plus((*sigma)[a], (*sigma)[b]);
      if (s < 0)
        CHECK(fs < 0);
      else
        CHECK(fs == (*sigma)[s]);
    }
}

TEST_CASE("distinct four-element algebras have distinct canonical forms") {
  auto c3 = build_chain(3);
  auto b2 = product({build_chain(1), build_chain(1)});
  auto hs = horizontal_sum({build_chain(2), build_chain(2)});
  CHECK(canonical_form(c3) != canonical_form(hs));
  CHECK(canonical_form(b2) != canonical_form(hs));
}
