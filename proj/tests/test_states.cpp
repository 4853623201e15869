#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "riesz/analysis.hpp"
#include "riesz/fixtures.hpp"
#include "riesz/pogroup.hpp"
#include "riesz/states.hpp"

using namespace riesz;

namespace {

Algebra boolean(int k) {
  std::vector<Algebra> f(k, build_chain(1));
  return product(f);
}

}  // namespace

TEST_CASE("a chain has exactly one state, k/m on the k-th element") {
  for (int m : {1, 2, 3, 5}) {
    auto c = build_chain(m);
    auto poly = state_polytope(c);
    CHECK(!poly.stateless);
    CHECK(poly.dim == 0);
    auto ext = extremal_states(c);
    REQUIRE(ext.size() == 1);
    for (int j = 0; j <= m; ++j) CHECK(ext[0].values[j] == Rat(j, m));
  }
}

TEST_CASE("the Boolean square is a segment with two endpoint states") {
  auto b2 = boolean(2);
  auto poly = state_polytope(b2);
  CHECK(poly.dim == 1);
  auto ext = extremal_states(b2);
  REQUIRE(ext.size() == 2);
  int p = b2.index("(1,0)"), q = b2.index("(0,1)");
  for (const auto& s : ext) {
    CHECK((s.values[p] == Rat(0) || s.values[p] == Rat(1)));
    CHECK(s.values[p] + s.values[q] == Rat(1));
  }
}

TEST_CASE("vertices of a chain product match the closed-form atomic states") {
  auto e = product({build_chain(2), build_chain(3)});
  auto d = chain_decomposition(e);
  auto ext = extremal_states(e);
  REQUIRE(ext.size() == 2);
  std::vector<State> formula;
  for (size_t i = 0; i < d.blocks.size(); ++i)
    formula.push_back(atomic_state(e, d, (int)i));
  for (const auto& s : formula) {
    bool found = false;
    for (const auto& v : ext) found |= v.values == s.values;
    CHECK(found);
  }
  // Hand-frozen values: the state attached to (a,0) steps by halves on the
  // first chain and ignores the second; dually for (0,a) with thirds.
  for (const auto& s : formula) {
    int which = -1;
    for (size_t i = 0; i < d.blocks.size(); ++i)
      if (s.values[d.blocks[i].block] == Rat(1)) which = (int)i;
    REQUIRE(which >= 0);
    if (e.name(d.blocks[which].atom) == "(a,0)") {
      CHECK(s.values[e.index("(a,0)")] == Rat(1, 2));
      CHECK(s.values[e.index("(1,0)")] == Rat(1));
      CHECK(s.values[e.index("(0,a)")] == Rat(0));
      CHECK(s.values[e.index("(a,a)")] == Rat(1, 2));
    } else {
      CHECK(s.values[e.index("(0,a)")] == Rat(1, 3));
      CHECK(s.values[e.index("(0,2a)")] == Rat(2, 3));
      CHECK(s.values[e.index("(0,1)")] == Rat(1));
      CHECK(s.values[e.index("(a,0)")] == Rat(0));
    }
  }
}

TEST_CASE("cube atomic states are the three 0/1 homomorphisms") {
  auto b3 = boolean(3);
  auto d = chain_decomposition(b3);
  REQUIRE(d.blocks.size() == 3);
  for (int i = 0; i < 3; ++i) {
    auto s = atomic_state(b3, d, i);
    for (int x = 0; x < b3.size(); ++x)
      CHECK((s.values[x] == Rat(0) || s.values[x] == Rat(1)));
    CHECK(s.values[d.blocks[i].block] == Rat(1));
  }
  CHECK(extremal_states(b3).size() == 3);
}

TEST_CASE("state decomposition recovers the convex coefficients exactly") {
  auto b2 = boolean(2);
  auto d = chain_decomposition(b2);
  State s;
  s.values.assign(b2.size(), Rat(0));
  s.values[b2.unit()] = Rat(1);
  s.values[b2.index("(1,0)")] = Rat(1, 3);
  s.values[b2.index("(0,1)")] = Rat(2, 3);
  REQUIRE(is_valid_state(b2, s));
  auto lambda = decompose_state(b2, d, s);
  REQUIRE(lambda.size() == 2);
  for (size_t i = 0; i < lambda.size(); ++i) {
    Rat expect = b2.name(d.blocks[i].atom) == "(1,0)" ? Rat(1, 3) : Rat(2, 3);
    CHECK(lambda[i] == expect);
  }

  // An atomic state decomposes as its own indicator.
  auto s0 = atomic_state(b2, d, 0);
  auto l0 = decompose_state(b2, d, s0);
  CHECK(l0[0] == Rat(1));
  CHECK(l0[1] == Rat(0));

  // Hand-frozen convexity on the segment: s(p) = 1/3 forces the mix
  // (1/3, 2/3) over the endpoint states.
  CHECK(s.values[b2.index("(1,0)")] == Rat(1, 3));
}

TEST_CASE("random rational mixtures are states and decompose exactly") {
  std::mt19937 rng(2025);
  auto e = product({build_chain(2), build_chain(3)});
  auto d = chain_decomposition(e);
  std::vector<State> si;
  for (size_t i = 0; i < d.blocks.size(); ++i)
    si.push_back(atomic_state(e, d, (int)i));
  for (int trial = 0; trial < 20; ++trial) {
    long long w0 = rng() % 100, w1 = rng() % 100;
    if (w0 + w1 == 0) w0 = 1;
    Rat l0(w0, w0 + w1), l1(w1, w0 + w1);
    State mix;
    mix.values.resize(e.size());
    for (int x = 0; x < e.size(); ++x)
      mix.values[x] = l0 * si[0].values[x] + l1 * si[1].values[x];
    REQUIRE(is_valid_state(e, mix));
    auto lambda = decompose_state(e, d, mix);
    CHECK(lambda[0] == l0);
    CHECK(lambda[1] == l1);
  }
}

TEST_CASE("extremality probes compare vertex, min and max conditions") {
  auto b2 = boolean(2);
  auto ext = extremal_states(b2);
  REQUIRE(ext.size() == 2);
  auto probe0 = mv_extremality_test(b2, ext[0]);
  CHECK(probe0.vertex);
  CHECK(probe0.min_condition);
  CHECK(!probe0.max_condition);  // s(p meet q) = 0 but max(s(p),s(q)) = 1

  State mid;
  mid.values.resize(b2.size());
  for (int x = 0; x < b2.size(); ++x)
    mid.values[x] = (ext[0].values[x] + ext[1].values[x]) / Rat(2);
  REQUIRE(is_valid_state(b2, mid));
  auto probe_mid = mv_extremality_test(b2, mid);
  CHECK(!probe_mid.vertex);
  CHECK(!probe_mid.min_condition);

  auto c3 = build_chain(3);
  auto only = extremal_states(c3);
  REQUIRE(only.size() == 1);
  auto probe_chain = mv_extremality_test(c3, only[0]);
  CHECK(probe_chain.vertex);
  CHECK(probe_chain.min_condition);
}

TEST_CASE("convex combinations of states stay in the polytope") {
  std::mt19937 rng(7);
  auto e = boolean(3);
  auto ext = extremal_states(e);
  for (int trial = 0; trial < 10; ++trial) {
    long long a = 1 + rng() % 9, b = 1 + rng() % 9, c = 1 + rng() % 9;
    Rat total(a + b + c);
    State mix;
    mix.values.resize(e.size());
    for (int x = 0; x < e.size(); ++x)
      mix.values[x] = (Rat(a) * ext[0].values[x] + Rat(b) * ext[1].values[x] +
                       Rat(c) * ext[2].values[x]) /
                      total;
    CHECK(is_valid_state(e, mix));
  }
}

TEST_CASE("interval algebras admit states; the half-cone unit interval is a segment") {
  auto g38 = riesz::fixture_group("example38");
  auto e1 = interval_effect_algebra(g38, 1);
  auto poly = state_polytope(e1);
  CHECK(!poly.stateless);
  CHECK(poly.dim == 1);
  CHECK(extremal_states(e1).size() == 2);
  for (const char* name : {"example38", "example39"}) {
    auto g = riesz::fixture_group(name);
    for (int n : {1, 2})
      CHECK(!state_polytope(interval_effect_algebra(g, n)).stateless);
  }
}

TEST_CASE("pseudo-effect states use the same additivity on defined sums") {
  // The five-element noncommutative pseudo-effect algebra with cyclic
  // supplements a+c = b+a = c+b = 1 pins every middle value at 1/2.
  auto t = riesz::testing::make_table(
      Kind::PseudoEffect, {"0", "a", "b", "c", "1"}, "0", "1",
      {{"a", "c", "1"}, {"b", "a", "1"}, {"c", "b", "1"}}, false);
  auto v = validate(std::move(t));
  REQUIRE(v.ok());
  const auto& e = *v.algebra;
  CHECK(e.plus(e.index("a"), e.index("c")) == e.unit());
  CHECK(e.plus(e.index("c"), e.index("a")) == -1);
  auto ext = extremal_states(e);
  REQUIRE(ext.size() == 1);
  for (const char* n : {"a", "b", "c"})
    CHECK(ext[0].values[e.index(n)] == Rat(1, 2));
}

TEST_CASE("hypercube state spaces scale: 2^4 has the four coordinate states") {
  auto b4 = boolean(4);
  auto ext = extremal_states(b4);
  REQUIRE(ext.size() == 4);
  for (const auto& s : ext)
    for (const auto& v : s.values) CHECK((v == Rat(0) || v == Rat(1)));
}

TEST_CASE("state polytopes of horizontal sums") {
  // Gluing two Boolean squares keeps the two segment parameters independent:
  // the polytope is a square with four vertices.
  auto b2 = boolean(2);
  auto hs = horizontal_sum({b2, b2});
  auto poly = state_polytope(hs);
  CHECK(poly.dim == 2);
  CHECK(extremal_states(hs).size() == 4);

  // Chains pin their values, so this sum is stateless-free with one state.
  auto pinned = horizontal_sum({build_chain(2), build_chain(3)});
  auto only = extremal_states(pinned);
  REQUIRE(only.size() == 1);
  CHECK(only[0].values[pinned.index("a_1")] == Rat(1, 2));
  CHECK(only[0].values[pinned.index("a_2")] == Rat(1, 3));
  CHECK(only[0].values[pinned.index("2a_2")] == Rat(2, 3));
}

TEST_CASE("vertex enumeration is deterministic across repeated runs") {
  auto e = product({build_chain(2), build_chain(2), build_chain(3)});
  auto a = extremal_states(e);
  auto b = extremal_states(e);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].values == b[i].values);
}
