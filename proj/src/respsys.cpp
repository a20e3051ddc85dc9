#include "dqr/respsys.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace dqr {

namespace {

std::string clause_str(const Clause& c) {
  std::string s = "(";
  bool first = true;
  for (Lit l : c) {
    if (!first) s += " ";
    s += std::to_string(l);
    first = false;
  }
  return s + ")";
}

Verdict reject(int node_id, const std::string& rule, const std::string& reason) {
  Verdict v;
  v.status = CheckStatus::Rejected;
  v.line = static_cast<size_t>(node_id);
  v.rule = rule;
  v.reason = reason;
  return v;
}

// Literals of a with the variable clashing in b.
std::vector<Lit> clashing_lits(const Clause& a, const Clause& b) {
  std::vector<Lit> out;
  for (Lit l : a)
    if (b.contains(-l)) out.push_back(l);
  return out;
}

bool matrix_has(const Formula& f, const Clause& c) {
  return std::find(f.matrix.begin(), f.matrix.end(), c) != f.matrix.end();
}

// a minus b, as literal sets (both canonical).
std::vector<Lit> lit_difference(const Clause& a, const Clause& b) {
  std::vector<Lit> out;
  for (Lit l : a)
    if (!b.contains(l)) out.push_back(l);
  return out;
}

struct DresOutcome {
  Verdict verdict;
  std::unordered_map<int, Clause> clauses;
  std::unordered_map<int, Lit> red_removed;         // Red nodes
  std::unordered_map<int, std::vector<Var>> ext_union;  // IndExt: D_y1 ∪ D_y2
  bool refuted = false;
};

DresOutcome run_dres(const Formula& f, const ResProof& p) {
  DresOutcome out;
  Prefix prefix = f.prefix;

  auto clause_of = [&](int id) -> const Clause* {
    auto it = out.clauses.find(id);
    return it == out.clauses.end() ? nullptr : &it->second;
  };

  for (const ResNode& n : p.nodes) {
    switch (n.rule) {
      case ResNode::Rule::Axiom: {
        Clause c(n.lits);
        if (!matrix_has(f, c)) {
          out.verdict = reject(n.id, "ax", "clause " + clause_str(c) + " not in the matrix");
          return out;
        }
        out.clauses.emplace(n.id, std::move(c));
        break;
      }
      case ResNode::Rule::Res: {
        const Clause* a = clause_of(n.antecedents[0]);
        const Clause* b = clause_of(n.antecedents[1]);
        if (!a || !b) {
          out.verdict = reject(n.id, "res", "antecedent has no clause");
          return out;
        }
        std::vector<Lit> clash = clashing_lits(*a, *b);
        if (clash.size() != 1) {
          out.verdict = reject(n.id, "res",
                               clash.empty() ? "antecedents do not clash"
                                             : "tautological resolvent (multiple clashes)");
          return out;
        }
        Lit pivot = clash[0];
        std::vector<Lit> res_lits;
        for (Lit l : *a)
          if (l != pivot) res_lits.push_back(l);
        for (Lit l : *b)
          if (l != -pivot) res_lits.push_back(l);
        Clause resolvent(std::move(res_lits));
        Clause stated(n.lits);
        if (stated != resolvent) {
          out.verdict = reject(n.id, "res", "stated clause " + clause_str(stated) +
                                                " differs from resolvent " +
                                                clause_str(resolvent));
          return out;
        }
        if (stated.empty()) out.refuted = true;
        out.clauses.emplace(n.id, std::move(stated));
        break;
      }
      case ResNode::Rule::Red: {
        const Clause* a = clause_of(n.antecedents[0]);
        if (!a) {
          out.verdict = reject(n.id, "red", "antecedent has no clause");
          return out;
        }
        Clause stated(n.lits);
        std::vector<Lit> removed = lit_difference(*a, stated);
        std::vector<Lit> extra = lit_difference(stated, *a);
        if (!extra.empty() || removed.size() != 1) {
          out.verdict = reject(n.id, "red",
                               "stated clause is not the antecedent minus one literal");
          return out;
        }
        Lit u = removed[0];
        if (!prefix.is_universal(var_of(u))) {
          out.verdict = reject(n.id, "red", "reduced literal " + std::to_string(u) +
                                                " is not universal");
          return out;
        }
        if (stated.contains(-u)) {
          out.verdict = reject(n.id, "red", "negated literal remains in the clause");
          return out;
        }
        for (Lit l : stated) {
          if (!prefix.is_existential(var_of(l))) continue;
          if (prefix.depends_on(var_of(l), var_of(u))) {
            out.verdict = reject(n.id, "red", "existential " + std::to_string(var_of(l)) +
                                                  " depends on " + std::to_string(var_of(u)));
            return out;
          }
        }
        if (stated.empty()) out.refuted = true;
        out.red_removed[n.id] = u;
        out.clauses.emplace(n.id, std::move(stated));
        break;
      }
      case ResNode::Rule::IndExt: {
        if (prefix.declared(n.ext_var)) {
          out.verdict = reject(n.id, "indext", "extension variable " +
                                                   std::to_string(n.ext_var) + " not fresh");
          return out;
        }
        for (Lit a : n.alpha) {
          if (!prefix.is_universal(var_of(a))) {
            out.verdict = reject(n.id, "indext", "alpha literal " + std::to_string(a) +
                                                     " is not universal");
            return out;
          }
        }
        if (n.args.size() != 2 || !prefix.declared(var_of(n.args[0])) ||
            !prefix.declared(var_of(n.args[1]))) {
          out.verdict = reject(n.id, "indext", "bad argument literals");
          return out;
        }
        std::vector<Var> uni;
        for (Lit y : n.args)
          for (Var u : prefix.depset(var_of(y))) uni.push_back(u);
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        std::vector<Var> dv = uni;
        for (Lit a : n.alpha)
          dv.erase(std::remove(dv.begin(), dv.end(), var_of(a)), dv.end());
        prefix.declare_existential(n.ext_var, dv);

        Lit v = n.ext_var, y1 = n.args[0], y2 = n.args[1];
        std::vector<Lit> c1 = n.alpha, c2 = n.alpha, c3 = n.alpha;
        c1.push_back(v);
        c1.push_back(y1);
        c2.push_back(v);
        c2.push_back(y2);
        c3.push_back(-v);
        c3.push_back(-y1);
        c3.push_back(-y2);
        Clause e1(std::move(c1)), e2(std::move(c2)), e3(std::move(c3));
        if (e1.tautological() || e2.tautological() || e3.tautological()) {
          out.verdict = reject(n.id, "indext", "tautological extension clause");
          return out;
        }
        out.ext_union[n.id] = std::move(uni);
        out.clauses.emplace(n.id, std::move(e1));
        out.clauses.emplace(n.id + 1, std::move(e2));
        out.clauses.emplace(n.id + 2, std::move(e3));
        break;
      }
      case ResNode::Rule::PrefixAdd: {
        if (prefix.declared(n.ext_var)) {
          out.verdict = reject(n.id, "prefix", "variable " + std::to_string(n.ext_var) +
                                                   " not fresh");
          return out;
        }
        for (Var u : n.deps) {
          if (!prefix.is_universal(u)) {
            out.verdict = reject(n.id, "prefix", "dependency " + std::to_string(u) +
                                                     " is not a declared universal");
            return out;
          }
        }
        prefix.declare_existential(n.ext_var, n.deps);
        break;
      }
    }
  }

  out.verdict.status = out.refuted ? CheckStatus::RefutationVerified
                                   : CheckStatus::ProofValidNoRefutation;
  return out;
}

}  // namespace

Verdict check_dres(const Formula& f, const ResProof& p) {
  return run_dres(f, p).verdict;
}

Verdict check_ldq(const Formula& f, const ResProof& p, const LdqConfig& cfg) {
  std::vector<std::pair<Var, Var>> pair_list = all_pairs(f, cfg.scheme);
  std::set<std::pair<Var, Var>> pairs(pair_list.begin(), pair_list.end());
  auto in_scheme = [&](Var u, Var x) { return pairs.count({u, x}) != 0; };

  std::unordered_map<int, Clause> table;
  bool refuted = false;
  auto clause_of = [&](int id) -> const Clause* {
    auto it = table.find(id);
    return it == table.end() ? nullptr : &it->second;
  };

  for (const ResNode& n : p.nodes) {
    switch (n.rule) {
      case ResNode::Rule::Axiom: {
        Clause c(n.lits);
        if (!matrix_has(f, c))
          return reject(n.id, "ax", "clause " + clause_str(c) + " not in the matrix");
        table.emplace(n.id, std::move(c));
        break;
      }
      case ResNode::Rule::Res: {
        const Clause* a = clause_of(n.antecedents[0]);
        const Clause* b = clause_of(n.antecedents[1]);
        if (!a || !b) return reject(n.id, "res", "antecedent has no clause");
        std::vector<Lit> clash = clashing_lits(*a, *b);
        std::vector<Lit> exist_clash;
        for (Lit l : clash)
          if (f.prefix.is_existential(var_of(l))) exist_clash.push_back(l);
        if (exist_clash.size() != 1)
          return reject(n.id, "res",
                        exist_clash.empty() ? "no existential pivot"
                                            : "clash on more than one existential variable");
        Lit pivot = exist_clash[0];
        // Merging side condition over the two sides minus the pivots.
        for (Lit w : clash) {
          if (var_of(w) == var_of(pivot)) continue;
          if (!f.prefix.is_universal(var_of(w))) continue;
          if (in_scheme(var_of(w), var_of(pivot)))
            return reject(n.id, "res", "blocked merge: pair (" + std::to_string(var_of(w)) +
                                           "," + std::to_string(var_of(pivot)) +
                                           ") in D" + scheme_name(cfg.scheme));
        }
        std::vector<Lit> res_lits;
        for (Lit l : *a)
          if (l != pivot) res_lits.push_back(l);
        for (Lit l : *b)
          if (l != -pivot) res_lits.push_back(l);
        Clause resolvent(std::move(res_lits));
        Clause stated(n.lits);
        if (stated != resolvent)
          return reject(n.id, "res", "stated clause " + clause_str(stated) +
                                         " differs from resolvent " + clause_str(resolvent));
        if (stated.empty()) refuted = true;
        table.emplace(n.id, std::move(stated));
        break;
      }
      case ResNode::Rule::Red: {
        const Clause* a = clause_of(n.antecedents[0]);
        if (!a) return reject(n.id, "red", "antecedent has no clause");
        Clause stated(n.lits);
        std::vector<Lit> removed = lit_difference(*a, stated);
        std::vector<Lit> extra = lit_difference(stated, *a);
        if (!extra.empty() || removed.empty())
          return reject(n.id, "red", "stated clause is not the antecedent minus a reduction");
        Var u = var_of(removed[0]);
        for (Lit l : removed)
          if (var_of(l) != u)
            return reject(n.id, "red", "reduction removes more than one variable");
        if (!f.prefix.is_universal(u))
          return reject(n.id, "red", "reduced variable " + std::to_string(u) +
                                         " is not universal");
        for (Lit l : stated) {
          if (!f.prefix.is_existential(var_of(l))) continue;
          if (in_scheme(u, var_of(l)))
            return reject(n.id, "red", "existential " + std::to_string(var_of(l)) +
                                           " depends on " + std::to_string(u) + " under D" +
                                           scheme_name(cfg.scheme));
        }
        if (stated.empty()) refuted = true;
        table.emplace(n.id, std::move(stated));
        break;
      }
      case ResNode::Rule::IndExt:
      case ResNode::Rule::PrefixAdd:
        return reject(n.id, "res", "rule not part of long-distance Q-resolution");
    }
  }

  Verdict v;
  v.status = refuted ? CheckStatus::RefutationVerified : CheckStatus::ProofValidNoRefutation;
  return v;
}

ProofScript translate_dres_to_dqrat(const Formula& f, const ResProof& p) {
  DresOutcome checked = run_dres(f, p);
  if (checked.verdict.rejected())
    throw InputError("input proof invalid at node " + std::to_string(checked.verdict.line) +
                     ": " + checked.verdict.reason);

  ProofScript script;
  auto add_clause_line = [&](std::vector<Lit> lits) {
    ProofLine line;
    line.kind = ProofLine::Kind::AddClause;
    line.payload.assign(lits.begin(), lits.end());
    script.lines.push_back(std::move(line));
  };
  auto dedup_keep_order = [](std::vector<Lit> lits) {
    std::vector<Lit> out;
    for (Lit l : lits)
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    return out;
  };

  for (const ResNode& n : p.nodes) {
    switch (n.rule) {
      case ResNode::Rule::Axiom:
        break;
      case ResNode::Rule::Res:
        add_clause_line(n.lits);
        break;
      case ResNode::Rule::Red: {
        const Clause& parent = checked.clauses.at(n.antecedents[0]);
        Lit u = checked.red_removed.at(n.id);
        add_clause_line(parent.lits());
        ProofLine red;
        red.kind = ProofLine::Kind::Reduce;
        red.payload.push_back(u);
        for (Lit l : parent)
          if (l != u) red.payload.push_back(l);
        script.lines.push_back(std::move(red));
        break;
      }
      case ResNode::Rule::IndExt: {
        const std::vector<Var>& uni = checked.ext_union.at(n.id);
        ProofLine decl;
        decl.kind = ProofLine::Kind::ModifyExistential;
        decl.payload.push_back(n.ext_var);
        for (Var u : uni) decl.payload.push_back(u);
        script.lines.push_back(std::move(decl));

        Lit v = n.ext_var, y1 = n.args[0], y2 = n.args[1];
        // The extension variable leads each clause: it is the RAT pivot.
        std::vector<Lit> c1{v}, c2{v}, c3{-v};
        for (Lit a : n.alpha) c1.push_back(a);
        c1.push_back(y1);
        for (Lit a : n.alpha) c2.push_back(a);
        c2.push_back(y2);
        for (Lit a : n.alpha) c3.push_back(a);
        c3.push_back(-y1);
        c3.push_back(-y2);
        add_clause_line(dedup_keep_order(std::move(c1)));
        add_clause_line(dedup_keep_order(std::move(c2)));
        add_clause_line(dedup_keep_order(std::move(c3)));

        // Now the spurious dependencies from alpha can go.
        std::vector<Var> avars;
        for (Lit a : n.alpha) avars.push_back(var_of(a));
        std::sort(avars.begin(), avars.end());
        avars.erase(std::unique(avars.begin(), avars.end()), avars.end());
        for (Var u : avars) {
          if (!std::binary_search(uni.begin(), uni.end(), u)) continue;
          ProofLine rm;
          rm.kind = ProofLine::Kind::ModifyExistential;
          rm.payload = {n.ext_var, -u};
          script.lines.push_back(std::move(rm));
        }
        break;
      }
      case ResNode::Rule::PrefixAdd: {
        ProofLine decl;
        decl.kind = ProofLine::Kind::ModifyExistential;
        decl.payload.push_back(n.ext_var);
        for (Var u : n.deps) decl.payload.push_back(u);
        script.lines.push_back(std::move(decl));
        break;
      }
    }
  }
  return script;
}

bool qbf_shaped(const Formula& f) {
  std::vector<const VarDecl*> ex;
  for (const VarDecl& d : f.prefix.decls())
    if (d.quant == Quant::Existential) ex.push_back(&d);
  std::sort(ex.begin(), ex.end(), [](const VarDecl* a, const VarDecl* b) {
    return a->deps.size() < b->deps.size();
  });
  for (size_t i = 0; i + 1 < ex.size(); ++i)
    if (!std::includes(ex[i + 1]->deps.begin(), ex[i + 1]->deps.end(),
                       ex[i]->deps.begin(), ex[i]->deps.end()))
      return false;
  return true;
}

}  // namespace dqr
