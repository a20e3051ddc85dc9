#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dqr/prefixorder.hpp"
#include "fixtures.hpp"
#include "testutil.hpp"

using namespace dqr;

// u=1 v=2 w=3 a=4 b=5 c=6 d=7 e=8
TEST_CASE("the Hasse-diagram prefix yields the eight known outer sets") {
  Prefix p = fixtures::hasse_prefix();
  CHECK(outer_set(p, 4) == std::vector<Var>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(outer_set(p, 6) == std::vector<Var>{1, 2, 5, 6, 8});
  CHECK(outer_set(p, 7) == std::vector<Var>{1, 3, 5, 7, 8});
  CHECK(outer_set(p, 2) == std::vector<Var>{1, 2, 5, 8});
  CHECK(outer_set(p, 3) == std::vector<Var>{1, 3, 5, 8});
  CHECK(outer_set(p, 8) == std::vector<Var>{1, 5, 8});
  CHECK(outer_set(p, 1) == std::vector<Var>{1, 5});
  CHECK(outer_set(p, 5) == std::vector<Var>{5});
  CHECK_THROWS_AS(outer_set(p, 9), InputError);
}

TEST_CASE("prefix_leq matches outer membership") {
  Prefix p = fixtures::hasse_prefix();
  CHECK(prefix_leq(p, 8, 2));        // e outer to v
  CHECK_FALSE(prefix_leq(p, 2, 8));  // v not outer to e
  CHECK_FALSE(prefix_leq(p, 6, 7));  // c and d incomparable
  CHECK_FALSE(prefix_leq(p, 7, 6));
  for (const VarDecl& d : p.decls()) CHECK(prefix_leq(p, d.id, d.id));
}

TEST_CASE("universal with no inner existentials is outer to non-dependers") {
  Prefix p;
  p.declare_universal(1);
  p.declare_universal(2);
  p.declare_existential(3, {2});
  // Nothing depends on 1: everything not depending on 1 is outer to it.
  CHECK(outer_set(p, 1) == std::vector<Var>{1, 2, 3});
}

TEST_CASE("outer sets are transitive, hence a pre-order") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 1000; ++iter) {
    Prefix p = testutil::random_prefix(rng, 8);
    OuterCache cache;
    for (const VarDecl& dx : p.decls()) {
      const std::vector<Var>& ox = cache.outer(p, dx.id);
      CHECK(std::binary_search(ox.begin(), ox.end(), dx.id));  // reflexive
      for (Var y : ox) {
        const std::vector<Var>& oy = cache.outer(p, y);
        CHECK(std::includes(ox.begin(), ox.end(), oy.begin(), oy.end()));
      }
    }
  }
}

TEST_CASE("on a linear prefix the pre-order is left-of-or-same-block") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    // Random linear QBF prefix: blocks in declaration order.
    Prefix p;
    std::vector<Var> universals;
    std::vector<std::pair<Var, int>> block_of;  // (var, block index)
    int block = 0;
    Quant prev = Quant::Existential;
    std::uniform_int_distribution<int> coin(0, 1);
    int n = 2 + static_cast<int>(rng() % 5);
    for (Var v = 1; v <= n; ++v) {
      Quant q = coin(rng) ? Quant::Universal : Quant::Existential;
      if (v == 1 || q != prev) ++block;
      prev = q;
      if (q == Quant::Universal) {
        p.declare_universal(v);
        universals.push_back(v);
      } else {
        p.declare_existential(v, universals);
      }
      block_of.emplace_back(v, block);
    }
    for (auto [x, bx] : block_of)
      for (auto [y, by] : block_of) {
        bool expect = bx <= by;
        CHECK(prefix_leq(p, x, y) == expect);
      }
  }
}

TEST_CASE("outer assumptions falsify exactly the outer literals") {
  Prefix p = fixtures::hasse_prefix();
  // d = (-pivot) alone: nothing else to falsify.
  CHECK(outer_assumptions(p, Clause({-4}), 4).empty());

  // exists a forall u exists b: pivot b, d = (-b v a v u).  a=1 u=2 b=3.
  Prefix q;
  q.declare_existential(1, {});
  q.declare_universal(2);
  q.declare_existential(3, {2});
  Assignment asg = outer_assumptions(q, Clause({-3, 1, 2}), 3);
  CHECK(asg.value(1) == false);
  CHECK(asg.value(2) == false);
  CHECK(asg.size() == 2);

  // Same equivalence class: pivot n with D_n = {u}, d = (-n v -x),
  // D_x = {u}: x is outer, so -x gets falsified (x bound true).
  Prefix r;
  r.declare_universal(1);
  r.declare_universal(2);
  r.declare_existential(3, {1});
  r.declare_existential(4, {2});
  r.declare_existential(5, {1});
  Assignment asg2 = outer_assumptions(r, Clause({-5, -3}), 5);
  CHECK(asg2.value(3) == true);
  CHECK(asg2.size() == 1);

  CHECK_THROWS_AS(outer_assumptions(r, Clause({-3}), 5), InputError);
}
