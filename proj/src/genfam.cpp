#include "dqr/genfam.hpp"

#include <algorithm>
#include <map>

namespace dqr {

std::array<Clause, 4> xor_gadget(Lit o1, Lit o2, Lit o, Lit zlit) {
  if (var_of(o1) == var_of(o2) || var_of(o1) == var_of(o) || var_of(o2) == var_of(o) ||
      var_of(zlit) == var_of(o1) || var_of(zlit) == var_of(o2) || var_of(zlit) == var_of(o))
    throw InputError("xor_gadget: variables must be distinct");
  return {Clause({zlit, -o1, -o2, -o}), Clause({zlit, o1, o2, -o}),
          Clause({zlit, -o1, o2, o}), Clause({zlit, o1, -o2, o})};
}

namespace {

struct ParityVars {
  int n;
  Var x(int i) const { return i; }
  Var z() const { return n + 1; }
  Var t(int i) const { return n + i; }          // t2 = n+2 .. tN = 2n
  Var s(int i) const { return 2 * n + i - 1; }  // s2 = 2n+1 .. sN = 3n-1
  Var b() const { return 3 * n; }
};

Formula gen_parity(int n, bool bridged) {
  if (n < 2) throw InputError("parity families need n >= 2");
  ParityVars v{n};
  Formula f;
  for (int i = 1; i <= n; ++i) f.prefix.declare_existential(v.x(i), {});
  f.prefix.declare_universal(v.z());
  for (int i = 2; i <= n; ++i) f.prefix.declare_existential(v.t(i), {v.z()});
  for (int i = 2; i <= n; ++i) f.prefix.declare_existential(v.s(i), {v.z()});
  if (bridged) f.prefix.declare_existential(v.b(), {v.z()});

  Lit z = v.z();
  auto push4 = [&](const std::array<Clause, 4>& cs) {
    for (const Clause& c : cs) f.matrix.push_back(c);
  };
  push4(xor_gadget(v.x(1), v.x(2), v.t(2), z));
  for (int i = 3; i <= n; ++i) push4(xor_gadget(v.t(i - 1), v.x(i), v.t(i), z));
  push4(xor_gadget(v.x(1), v.x(2), v.s(2), -z));
  for (int i = 3; i <= n; ++i) push4(xor_gadget(v.s(i - 1), v.x(i), v.s(i), -z));
  f.matrix.push_back(Clause({z, v.t(n)}));
  f.matrix.push_back(Clause({-z, -v.s(n)}));
  if (bridged) {
    f.matrix.push_back(Clause({z, -v.t(n), v.b()}));
    f.matrix.push_back(Clause({z, v.t(n), -v.b()}));
    f.matrix.push_back(Clause({-z, -v.s(n), v.b()}));
    f.matrix.push_back(Clause({-z, v.s(n), -v.b()}));
  }
  return f;
}

Formula gen_running_example() {
  Formula f;
  f.prefix.declare_universal(1);  // u
  f.prefix.declare_universal(2);  // v
  f.prefix.declare_existential(3, {1});  // x(u)
  f.prefix.declare_existential(4, {2});  // y(v)
  f.matrix.push_back(Clause({1, 3, 4}));
  f.matrix.push_back(Clause({-1, -2, 3, 4}));
  f.matrix.push_back(Clause({-1, 2, 3, -4}));
  f.matrix.push_back(Clause({1, -3, -4}));
  f.matrix.push_back(Clause({-1, -2, -3, -4}));
  f.matrix.push_back(Clause({-1, 2, -3, 4}));
  return f;
}

}  // namespace

Formula gen_family(const FamilyParams& params) {
  switch (params.family) {
    case Family::TsLqparity: return gen_parity(params.n, false);
    case Family::BridgedTsLqparity: return gen_parity(params.n, true);
    case Family::RunningExample: return gen_running_example();
  }
  throw InputError("unknown family");
}

std::string family_comment(const FamilyParams& params) {
  switch (params.family) {
    case Family::TsLqparity:
    case Family::BridgedTsLqparity: {
      int n = params.n;
      std::string s = "c x1..x" + std::to_string(n) + " = 1.." + std::to_string(n) +
                      ", z = " + std::to_string(n + 1) + ", t2..t" + std::to_string(n) +
                      " = " + std::to_string(n + 2) + ".." + std::to_string(2 * n) +
                      ", s2..s" + std::to_string(n) + " = " + std::to_string(2 * n + 1) +
                      ".." + std::to_string(3 * n - 1);
      if (params.family == Family::BridgedTsLqparity)
        s += ", b = " + std::to_string(3 * n);
      return s + "\n";
    }
    case Family::RunningExample:
      return "c u = 1, v = 2, x(u) = 3, y(v) = 4\n";
  }
  return "";
}

ResProof gen_bridged_refutation(int n) {
  if (n < 2) throw InputError("parity families need n >= 2");
  ParityVars v{n};
  Formula f = gen_parity(n, true);

  ResProof proof;
  int next_id = 1;
  auto add = [&](ResNode node) {
    node.id = next_id++;
    proof.nodes.push_back(std::move(node));
    return proof.nodes.back().id;
  };
  auto axiom = [&](const Clause& c) {
    ResNode node;
    node.rule = ResNode::Rule::Axiom;
    node.lits = c.lits();
    return add(std::move(node));
  };
  auto reduce_z = [&](const Clause& c) {
    int ax = axiom(c);
    ResNode node;
    node.rule = ResNode::Rule::Red;
    node.antecedents = {ax};
    for (Lit l : c)
      if (var_of(l) != v.z()) node.lits.push_back(l);
    return add(std::move(node));
  };
  auto resolve = [&](int a, int b_, std::vector<Lit> stated) {
    ResNode node;
    node.rule = ResNode::Rule::Res;
    node.antecedents = {a, b_};
    node.lits = std::move(stated);
    return add(std::move(node));
  };

  // Reduce z from every non-bridge clause; remember the bare clauses of
  // each xor block by (z-free) canonical form.
  std::map<std::vector<Lit>, int> bare;
  for (const Clause& c : f.matrix) {
    if (c.contains_var(v.b())) continue;  // bridge clauses stay unused
    int id = reduce_z(c);
    bare[Clause(proof.nodes.back().lits).lits()] = id;
  }
  auto bare_id = [&](std::vector<Lit> lits) {
    auto it = bare.find(Clause(std::move(lits)).lits());
    if (it == bare.end()) throw InputError("internal: missing bare clause");
    return it->second;
  };

  // Base: t2 ↔ s2 from the two bare xor blocks over x1, x2.
  Var x1 = v.x(1), x2 = v.x(2), t2 = v.t(2), s2 = v.s(2);
  int p1 = resolve(bare_id({-x1, -x2, -t2}), bare_id({-x1, x2, s2}), {-x1, -t2, s2});
  int p2 = resolve(bare_id({x1, x2, -t2}), bare_id({x1, -x2, s2}), {x1, -t2, s2});
  int ts = resolve(p1, p2, {-t2, s2});  // (¬t_i ∨ s_i)
  int q1 = resolve(bare_id({-x1, -x2, -s2}), bare_id({-x1, x2, t2}), {-x1, -s2, t2});
  int q2 = resolve(bare_id({x1, x2, -s2}), bare_id({x1, -x2, t2}), {x1, -s2, t2});
  int st = resolve(q1, q2, {-s2, t2});  // (¬s_i ∨ t_i)

  for (int i = 3; i <= n; ++i) {
    Var tp = v.t(i - 1), sp = v.s(i - 1), ti = v.t(i), si = v.s(i), xi = v.x(i);
    int a = resolve(bare_id({-tp, -xi, -ti}), st, {-xi, -ti, -sp});
    int b_ = resolve(a, bare_id({-sp, xi, si}), {-ti, -sp, si});
    int c = resolve(bare_id({tp, xi, -ti}), ts, {xi, -ti, sp});
    int d = resolve(c, bare_id({sp, -xi, si}), {-ti, sp, si});
    int new_ts = resolve(b_, d, {-ti, si});
    int a2 = resolve(bare_id({-sp, -xi, -si}), ts, {-xi, -si, -tp});
    int b2 = resolve(a2, bare_id({-tp, xi, ti}), {-si, -tp, ti});
    int c2 = resolve(bare_id({sp, xi, -si}), st, {xi, -si, tp});
    int d2 = resolve(c2, bare_id({tp, -xi, ti}), {-si, tp, ti});
    int new_st = resolve(b2, d2, {-si, ti});
    ts = new_ts;
    st = new_st;
  }

  int sn = resolve(ts, bare_id({v.t(n)}), {v.s(n)});
  resolve(sn, bare_id({-v.s(n)}), {});
  return proof;
}

}  // namespace dqr
