#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dqr/dqratcheck.hpp"
#include "dqr/oracle.hpp"
#include "dqr/genfam.hpp"
#include "dqr/respsys.hpp"
#include "fixtures.hpp"

using namespace dqr;

TEST_CASE("the extension-rule proof of the running example verifies") {
  Formula f = fixtures::running_example();
  ResProof p = parse_resproof(fixtures::dres_proof_text());
  Verdict v = check_dres(f, p);
  CHECK(v.status == CheckStatus::RefutationVerified);
  // Accepted refutation of a formula the oracle agrees is false.
  CHECK_FALSE(eval_dqbf(f));
}

TEST_CASE("dres rejects bad nodes") {
  Formula f = fixtures::running_example();

  SUBCASE("axiom not in the matrix") {
    Verdict v = check_dres(f, parse_resproof("1 a 1 2 0\n"));
    CHECK(v.rejected());
    CHECK(v.line == 1);
  }

  SUBCASE("reduction with a depending existential") {
    // Red of u from (u v n v x) where D_n omits u but D_x holds it.
    Formula g;
    g.prefix.declare_universal(1);
    g.prefix.declare_existential(2, {});   // n
    g.prefix.declare_existential(3, {1});  // x
    g.matrix.push_back(Clause({1, 2, 3}));
    Verdict v = check_dres(g, parse_resproof("1 a 1 2 3 0\n2 u 1 2 3 0\n"));
    CHECK(v.rejected());
    CHECK(v.line == 2);
    CHECK(v.reason.find("3") != std::string::npos);
  }

  SUBCASE("reduction leaving the negated literal") {
    Formula g;
    g.prefix.declare_universal(1);
    g.prefix.declare_existential(2, {});
    g.matrix.push_back(Clause({1, 2}));
    g.matrix.push_back(Clause({-1, 2}));
    // Force a merged clause through resolution? dres rejects it already.
    Verdict v = check_dres(g, parse_resproof("1 a 1 2 0\n2 a -1 2 0\n3 r 1 2 1 -1 0\n"));
    CHECK(v.rejected());
  }

  SUBCASE("extension with an existential alpha literal") {
    Verdict v = check_dres(f, parse_resproof("1 x 5 : 3 : 4 4 0\n"));
    CHECK(v.rejected());
    CHECK(v.reason.find("universal") != std::string::npos);
  }

  SUBCASE("extension variable must be fresh") {
    Verdict v = check_dres(f, parse_resproof("1 x 4 : -1 : 3 3 0\n"));
    CHECK(v.rejected());
  }

  SUBCASE("stated resolvent mismatch") {
    Verdict v = check_dres(f, parse_resproof("1 a 1 3 4 0\n2 a 1 -3 -4 0\n3 r 1 2 1 0\n"));
    CHECK(v.rejected());  // two clashes, tautological resolvent
  }
}

TEST_CASE("dres extension sets the shrunken dependency set") {
  Formula f = fixtures::running_example();
  // n = x nand x under u has D_n = {u} \ {u} = {}: once x is resolved
  // away, u reduces next to n.
  ResProof p = parse_resproof(
      "1 a -1 -2 -3 -4 0\n"
      "2 x 5 : -1 : 3 3 0\n"
      "5 r 2 1 -1 -2 5 -4 0\n"
      "6 u 5 -2 5 -4 0\n");
  Verdict v = check_dres(f, p);
  CHECK(v.status == CheckStatus::ProofValidNoRefutation);

  // Reducing u while x is still in the clause is refused.
  ResProof bad = parse_resproof(
      "1 x 5 : -1 : 3 3 0\n"
      "4 u 1 5 3 0\n");
  CHECK(check_dres(f, bad).rejected());
}

TEST_CASE("translation produces a script the replay engine accepts") {
  Formula f = fixtures::running_example();
  ResProof p = parse_resproof(fixtures::dres_proof_text());
  ProofScript script = translate_dres_to_dqrat(f, p);
  Verdict v = check_script(f, script, {});
  CHECK(v.status == CheckStatus::RefutationVerified);
  CHECK(script.lines.size() <= 3 * p.nodes.size());

  // The translated script drops the dependency while the defining
  // clauses are still present.  Their u-literal blocks the pure paths,
  // but the plain resolution-path scheme still sees the connection, so
  // validating removals with rrs instead of pu must reject here.
  CheckOptions rrs;
  rrs.removal_scheme = Scheme::Rrs;
  Verdict w = check_script(f, script, rrs);
  CHECK(w.rejected());
  CHECK(w.rule == "depscheme");

  // Scripts from extension-free proofs carry no prefix lines.
  ResProof flat = parse_resproof("1 a 1 3 4 0\n");
  ProofScript s2 = translate_dres_to_dqrat(f, flat);
  CHECK(s2.lines.empty());

  CHECK_THROWS_AS(translate_dres_to_dqrat(f, parse_resproof("1 a 9 0\n")), InputError);
}

TEST_CASE("translation covers extension, prefix and reduction plumbing") {
  // forall u,v exists x(u,v): (u v x)(u v -x) is false.
  Formula f;
  f.prefix.declare_universal(1);
  f.prefix.declare_universal(2);
  f.prefix.declare_existential(3, {1, 2});
  f.matrix.push_back(Clause({1, 2, 3}));
  f.matrix.push_back(Clause({1, 2, -3}));
  CHECK_FALSE(eval_dqbf(f));

  // A refutation padded with an unused prefix weakening and a
  // two-literal-alpha extension.
  ResProof p = parse_resproof(
      "1 a 1 2 3 0\n"
      "2 a 1 2 -3 0\n"
      "3 p 6 0\n"
      "4 x 5 : -1 -2 : 3 3 0\n"
      "7 r 1 2 1 2 0\n"
      "8 u 7 1 0\n"
      "9 u 8 0\n");
  REQUIRE(check_dres(f, p).verified());

  ProofScript script = translate_dres_to_dqrat(f, p);
  size_t elines = 0, removals = 0;
  for (const ProofLine& line : script.lines) {
    if (line.kind != ProofLine::Kind::ModifyExistential) continue;
    ++elines;
    if (line.payload.size() == 2 && line.payload[1] < 0) ++removals;
  }
  CHECK(elines == 4);    // p-node, extension declaration, two removals
  CHECK(removals == 2);  // both alpha variables leave the dependency set
  CHECK(check_script(f, script, {}).verified());
}

TEST_CASE("ldq accepts the generated bridged refutation under pu only") {
  for (int n : {2, 4}) {
    Formula f = gen_family({Family::BridgedTsLqparity, n});
    ResProof p = gen_bridged_refutation(n);
    LdqConfig pu;
    pu.scheme = Scheme::Pu;
    CHECK(check_ldq(f, p, pu).verified());
    LdqConfig rrs;
    rrs.scheme = Scheme::Rrs;
    Verdict v = check_ldq(f, p, rrs);
    CHECK(v.rejected());
    CHECK(v.rule == "red");
  }
}

TEST_CASE("ldq blocks merges of scheme-dependent pairs") {
  // Resolving (x v u) and (-x v -u) with (u,x) in the scheme.
  Formula f;
  f.prefix.declare_universal(1);
  f.prefix.declare_existential(2, {1});
  f.matrix.push_back(Clause({2, 1}));
  f.matrix.push_back(Clause({-2, -1}));
  ResProof p = parse_resproof("1 a 2 1 0\n2 a -2 -1 0\n3 r 1 2 1 -1 0\n");
  LdqConfig trv;
  trv.scheme = Scheme::Trv;
  Verdict v = check_ldq(f, p, trv);
  CHECK(v.rejected());
  CHECK(v.reason.find("merge") != std::string::npos);
  // The direct clash also puts (1,2) into the path schemes.
  LdqConfig pu;
  pu.scheme = Scheme::Pu;
  CHECK(check_ldq(f, p, pu).rejected());
}

TEST_CASE("ldq permits merges on spurious pairs and reduces both polarities") {
  // Same clauses but x does not depend on u at all: the merge is fine
  // and the merged pair reduces in a single step to the empty clause.
  Formula f;
  f.prefix.declare_universal(1);
  f.prefix.declare_existential(2, {});
  f.matrix.push_back(Clause({2, 1}));
  f.matrix.push_back(Clause({-2, -1}));
  ResProof q = parse_resproof("1 a 2 1 0\n2 a -2 -1 0\n3 r 1 2 1 -1 0\n4 u 3 0\n");
  LdqConfig trv;
  trv.scheme = Scheme::Trv;
  CHECK(check_ldq(f, q, trv).verified());
  // Plain long-distance Q-resolution is sound: the input is false.
  CHECK_FALSE(eval_dqbf(f));
}

TEST_CASE("ldq rejects extension nodes") {
  Formula f = fixtures::running_example();
  Verdict v = check_ldq(f, parse_resproof("1 x 9 : -1 : 3 3 0\n"), {});
  CHECK(v.rejected());
}

TEST_CASE("no clause of a pu-accepted proof merges the outermost universal") {
  // Scan all stated clauses for both polarities of
  // the single universal variable.
  for (int n : {2, 3, 5}) {
    Formula f = gen_family({Family::BridgedTsLqparity, n});
    ResProof p = gen_bridged_refutation(n);
    LdqConfig pu;
    REQUIRE(check_ldq(f, p, pu).verified());
    Var z = n + 1;
    for (const ResNode& node : p.nodes) {
      bool pos = false, neg = false;
      for (Lit l : node.lits) {
        if (l == z) pos = true;
        if (l == -z) neg = true;
      }
      CHECK_FALSE((pos && neg));
    }
  }
}

TEST_CASE("qbf shape detection") {
  CHECK(qbf_shaped(gen_family({Family::BridgedTsLqparity, 3})));
  CHECK_FALSE(qbf_shaped(fixtures::running_example()));
}
