#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include <chrono>

#include "dqr/depscheme.hpp"
#include "dqr/genfam.hpp"
#include "fixtures.hpp"
#include "testutil.hpp"

using namespace dqr;

namespace {

using Pairs = std::vector<std::pair<Var, Var>>;

// Closure check for the fixpoint contract: every collected literal's
// complement occurrences are in the clause set and their S-literals
// (minus the entering one) are collected.
void check_closed(const Formula& f, const ReachSets& r, const std::vector<Var>& s,
                  std::optional<Lit> excluded) {
  std::set<Var> sset(s.begin(), s.end());
  for (Lit p : r.literals) {
    for (size_t ci = 0; ci < f.matrix.size(); ++ci) {
      const Clause& e = f.matrix[ci];
      if (e.tautological() || !e.contains(-p)) continue;
      if (excluded && e.contains(-*excluded)) continue;
      CHECK(r.has_clause(ci));
      for (Lit l : e) {
        if (l == -p || !sset.count(var_of(l))) continue;
        CHECK(r.has_literal(l));
      }
    }
  }
}

}  // namespace

// u=1 v=2 x=3 y=4 z=5 throughout; clause order C1..C4 as in the fixture.
TEST_CASE("reach fixpoint on the scheme example") {
  Formula f = fixtures::scheme_example();
  std::vector<Var> s{3, 4, 5};

  SUBCASE("no S-literals in the seed means no expansion") {
    Formula g = f;
    g.matrix.push_back(Clause({1, 2}));  // index 4
    std::vector<size_t> seed{4};
    ReachSets r = rrs_reach(g, seed, s);
    CHECK(r.clauses == std::vector<size_t>{4});
    CHECK(r.literals.empty());
  }

  SUBCASE("seeding at the positive-u clauses") {
    std::vector<size_t> seed{0, 1};
    ReachSets r = rrs_reach(f, seed, s);
    CHECK(r.clauses == std::vector<size_t>{0, 1, 2, 3});
    CHECK(r.literals == std::vector<Lit>{3, 4, -4, -5});
    check_closed(f, r, s, std::nullopt);
  }

  SUBCASE("one-step chain") {
    Formula g;
    g.prefix.declare_universal(10);
    g.prefix.declare_existential(1, {10});
    g.prefix.declare_existential(2, {10});
    g.prefix.declare_existential(3, {10});
    g.matrix.push_back(Clause({1, 2}));
    g.matrix.push_back(Clause({-2, 3}));
    std::vector<size_t> seed{0};
    std::vector<Var> all{1, 2, 3};
    ReachSets r = rrs_reach(g, seed, all);
    CHECK(r.clauses == std::vector<size_t>{0, 1});
    CHECK(r.literals == std::vector<Lit>{1, 2, 3});
  }
}

TEST_CASE("pure paths exclude clauses holding the opposite parameter literal") {
  Formula f = fixtures::scheme_example();
  std::vector<Var> s{3, 4, 5};

  // From the -u seeds, (u v -v x -y) is off limits: -y stays unreached.
  std::vector<size_t> neg_seed{2, 3};
  ReachSets rn = pu_reach(f, -1, neg_seed, s);
  CHECK_FALSE(rn.has_literal(-4));
  CHECK(rn.literals == std::vector<Lit>{-3, 5, -5});
  check_closed(f, rn, s, -1);

  // From the u seeds, the path to -z would need (-u -v -x -z).
  std::vector<size_t> pos_seed{0, 1};
  ReachSets rp = pu_reach(f, 1, pos_seed, s);
  CHECK_FALSE(rp.has_literal(-5));
  CHECK(rp.literals == std::vector<Lit>{3, 4, -4});

  // With no occurrence of the opposite literal the exclusion is vacuous.
  Formula g;
  g.prefix.declare_universal(1);
  g.prefix.declare_existential(2, {1});
  g.prefix.declare_existential(3, {1});
  g.matrix.push_back(Clause({1, 2}));
  g.matrix.push_back(Clause({-2, 3}));
  std::vector<size_t> seed{0};
  std::vector<Var> s2{2, 3};
  ReachSets a = pu_reach(g, 1, seed, s2);
  ReachSets b = rrs_reach(g, seed, s2);
  CHECK(a.clauses == b.clauses);
  CHECK(a.literals == b.literals);
}

TEST_CASE("connection relations on the scheme example") {
  Formula f = fixtures::scheme_example();
  CHECK(rrs_connected(f, 1, 4));
  CHECK(rrs_connected(f, -1, -4));
  CHECK(rrs_connected(f, 1, -5));
  CHECK_FALSE(rrs_connected(f, 1, 5));
  CHECK_FALSE(pu_connected(f, -1, -4));
  CHECK(pu_connected(f, 1, 3));
  CHECK(pu_connected(f, -1, -3));
  CHECK_FALSE(pu_connected(f, 1, -5));
  CHECK_FALSE(pu_connected(f, 2, 3));
  CHECK_FALSE(pu_connected(f, 2, -3));
  CHECK_THROWS_AS(rrs_connected(f, 3, 4), InputError);  // quantifier mismatch
}

TEST_CASE("scheme membership on the example") {
  Formula f = fixtures::scheme_example();
  CHECK_FALSE(pair_in_scheme(f, 1, 4, Scheme::Pu));
  CHECK(pair_in_scheme(f, 1, 4, Scheme::Rrs));
  CHECK_FALSE(pair_in_scheme(f, 2, 3, Scheme::Pu));
  CHECK(pair_in_scheme(f, 1, 3, Scheme::Pu));
  CHECK(pair_in_scheme(f, 2, 4, Scheme::Pu));
  CHECK(pair_in_scheme(f, 2, 5, Scheme::Pu));

  // Membership precondition: u not in D_x.
  Formula g = f;
  g.prefix.remove_dep(3, 2);
  CHECK_FALSE(pair_in_scheme(g, 2, 3, Scheme::Trv));
  CHECK_FALSE(pair_in_scheme(g, 2, 3, Scheme::Rrs));
  CHECK_FALSE(pair_in_scheme(g, 2, 3, Scheme::Pu));
}

TEST_CASE("all pairs and prefix modification") {
  Formula f = fixtures::scheme_example();
  CHECK(all_pairs(f, Scheme::Pu) == Pairs{{1, 3}, {2, 4}, {2, 5}});
  Pairs rrs = all_pairs(f, Scheme::Rrs);
  CHECK(std::binary_search(rrs.begin(), rrs.end(), std::make_pair(1, 4)));
  CHECK(std::binary_search(rrs.begin(), rrs.end(), std::make_pair(1, 5)));

  Formula g = apply_scheme(f, Scheme::Pu);
  CHECK(g.prefix.deps(3) == std::vector<Var>{1});
  CHECK(g.prefix.deps(4) == std::vector<Var>{2});
  CHECK(g.prefix.deps(5) == std::vector<Var>{2});
  CHECK(g.matrix == f.matrix);

  Formula id = apply_scheme(f, Scheme::Trv);
  for (const VarDecl& d : f.prefix.decls())
    if (d.quant == Quant::Existential) CHECK(id.prefix.deps(d.id) == d.deps);

  Formula nou;
  nou.prefix.declare_existential(1, {});
  nou.matrix.push_back(Clause({1}));
  CHECK(all_pairs(nou, Scheme::Pu).empty());
}

TEST_CASE("scheme containment pu within rrs within trv") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 300; ++iter) {
    Formula f = testutil::random_formula(rng, 6, 6, 3);
    Pairs pu = all_pairs(f, Scheme::Pu);
    Pairs rrs = all_pairs(f, Scheme::Rrs);
    Pairs trv = all_pairs(f, Scheme::Trv);
    CHECK(std::includes(rrs.begin(), rrs.end(), pu.begin(), pu.end()));
    CHECK(std::includes(trv.begin(), trv.end(), rrs.begin(), rrs.end()));
  }
}

TEST_CASE("pu connection implies rrs connection") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 300; ++iter) {
    Formula f = testutil::random_formula(rng, 5, 5, 3);
    for (Var u : f.prefix.universals())
      for (Var x : dependers(f.prefix, u))
        for (Lit ul : {u, -u})
          for (Lit xl : {x, -x})
            if (pu_connected(f, ul, xl)) CHECK(rrs_connected(f, ul, xl));
  }
}

TEST_CASE("reach results are closed and minimal") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    Formula f = testutil::random_formula(rng, 5, 6, 3);
    auto universals = f.prefix.universals();
    if (universals.empty()) continue;
    Var u = universals[0];
    std::vector<Var> s = dependers(f.prefix, u);
    std::vector<size_t> seed;
    for (size_t ci = 0; ci < f.matrix.size(); ++ci)
      if (f.matrix[ci].contains(u)) seed.push_back(ci);
    ReachSets r = rrs_reach(f, seed, s);
    check_closed(f, r, s, std::nullopt);

    // Removing a non-seed element breaks closure: the element was put
    // there by some edge that closure would re-demand.
    for (Lit dropped : r.literals) {
      ReachSets smaller = r;
      smaller.literals.erase(
          std::find(smaller.literals.begin(), smaller.literals.end(), dropped));
      bool still_closed = true;
      for (size_t ci : smaller.clauses) {
        bool is_seed = std::find(seed.begin(), seed.end(), ci) != seed.end();
        if (!is_seed) continue;
        for (Lit l : f.matrix[ci])
          if (l == dropped &&
              std::find(s.begin(), s.end(), var_of(l)) != s.end())
            still_closed = false;
      }
      for (Lit p : smaller.literals)
        for (size_t ci : smaller.clauses)
          if (f.matrix[ci].contains(-p))
            for (Lit l : f.matrix[ci])
              if (l == dropped && l != -p &&
                  std::find(s.begin(), s.end(), var_of(l)) != s.end())
                still_closed = false;
      CHECK_FALSE(still_closed);
    }
  }
}

TEST_CASE("extended universal reduction") {
  // Pure literal: always fine.
  Formula f;
  f.prefix.declare_universal(1);
  f.prefix.declare_existential(2, {1});
  f.matrix.push_back(Clause({1, 2}));
  f.matrix.push_back(Clause({2}));
  CHECK(eur_ok(f, 0, 1));

  // One-step path to the opposite literal.
  Formula g = f;
  g.matrix[1] = Clause({-1, -2});
  CHECK_FALSE(eur_ok(g, 0, 1));
}

TEST_CASE("local pure literal reduction") {
  // Reducing u from (u v x) against (-u v -x) must be refused: the
  // formula is true only because x can follow u.
  Formula f;
  f.prefix.declare_universal(1);
  f.prefix.declare_existential(2, {1});
  f.matrix.push_back(Clause({1, 2}));
  f.matrix.push_back(Clause({-1, -2}));
  CHECK_FALSE(lplr_ok(f, 0, 1));

  // Expansion through a clause with the same-polarity u is blocked, so
  // the opposite-literal clause stays unreachable.
  Formula g;
  g.prefix.declare_universal(1);
  g.prefix.declare_existential(2, {1});
  g.prefix.declare_existential(3, {1});
  g.matrix.push_back(Clause({1, 2}));
  g.matrix.push_back(Clause({-2, 1, 3}));
  g.matrix.push_back(Clause({-3, -1}));
  CHECK(lplr_ok(g, 0, 1));

  // A u-free path into a clause containing -u fails the check.
  Formula h;
  h.prefix.declare_universal(1);
  h.prefix.declare_existential(2, {1});
  h.prefix.declare_existential(3, {1});
  h.matrix.push_back(Clause({1, 2}));
  h.matrix.push_back(Clause({-2, -1, 3}));
  CHECK_FALSE(lplr_ok(h, 0, 1));

  // u pure in the whole matrix: trivially reducible.
  Formula pure;
  pure.prefix.declare_universal(1);
  pure.prefix.declare_existential(2, {1});
  pure.matrix.push_back(Clause({1, 2}));
  pure.matrix.push_back(Clause({-2, 1}));
  CHECK(lplr_ok(pure, 0, 1));
}

TEST_CASE("per-literal reach work scales about linearly with formula size") {
  // Coarse check only: doubling the bridged family should not blow the
  // per-universal-literal pair computation up quadratically.
  auto time_pairs = [](int n) {
    Formula f = gen_family({Family::BridgedTsLqparity, n});
    // Warm up once, then take the best of a few runs.
    size_t sink = all_pairs(f, Scheme::Pu).size();
    double best = 1e9;
    for (int rep = 0; rep < 7; ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      sink += all_pairs(f, Scheme::Pu).size();
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      best = std::min(best, dt);
    }
    CHECK(sink == 8);  // one pair per run
    return best;
  };
  double t1 = time_pairs(400);
  double t2 = time_pairs(800);
  CHECK(t2 < 8.0 * std::max(t1, 1e-6));
}

TEST_CASE("every eur step is an lplr step") {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 400; ++iter) {
    Formula f = testutil::random_formula(rng, 5, 6, 3);
    for (size_t ci = 0; ci < f.matrix.size(); ++ci)
      for (Lit l : f.matrix[ci]) {
        if (!f.prefix.is_universal(var_of(l))) continue;
        if (eur_ok(f, ci, l)) CHECK(lplr_ok(f, ci, l));
      }
  }
}
