#include "dqr/dqratcheck.hpp"

#include <algorithm>

#include "dqr/propagate.hpp"

namespace dqr {

namespace {

std::string lits_to_string(const Clause& c) {
  std::string s = "(";
  bool first = true;
  for (Lit l : c) {
    if (!first) s += " ";
    s += std::to_string(l);
    first = false;
  }
  return s + ")";
}

}  // namespace

CheckState::CheckState(Formula f, CheckOptions opts)
    : f_(std::move(f)), opts_(opts) {
  for (const Clause& c : f_.matrix)
    for (Lit l : c)
      if (!f_.prefix.declared(var_of(l)))
        throw InputError("matrix variable " + std::to_string(var_of(l)) +
                         " not declared");
}

bool CheckState::occurs_in_matrix(Var v) const {
  for (const Clause& c : f_.matrix)
    if (c.contains_var(v)) return true;
  return false;
}

std::optional<CheckState::Failure> CheckState::ensure_declared(std::span<const Lit> lits) {
  for (Lit l : lits) {
    Var v = var_of(l);
    if (f_.prefix.declared(v)) continue;
    if (opts_.strict)
      return Failure{"add", "undeclared variable " + std::to_string(v) + " (strict mode)"};
    // QRAT convention: undeclared variables become innermost existentials.
    f_.prefix.declare_existential(v, f_.prefix.universals());
  }
  return std::nullopt;
}

std::optional<CheckState::Failure> CheckState::apply_add(std::span<const Lit> lits) {
  if (auto fail = ensure_declared(lits)) return fail;
  Clause c(std::vector<Lit>(lits.begin(), lits.end()));
  if (c.tautological())
    return Failure{"add", "tautological clause " + lits_to_string(c)};

  if (!ata_check(f_.matrix, c)) {
    if (c.empty())
      return Failure{"ata", "empty clause does not follow by unit propagation"};
    Lit pivot = lits.front();  // positional RAT pivot
    if (!f_.prefix.is_existential(var_of(pivot)))
      return Failure{"add", "ATA failed and pivot " + std::to_string(pivot) +
                                " is universal, DQRAT-E inapplicable"};
    Clause rest = c.without(pivot);
    Assignment neg_rest = negate_clause(rest);
    for (const Clause& d : f_.matrix) {
      if (!d.contains(-pivot)) continue;
      std::vector<Lit> assumptions = neg_rest.lits();
      assumptions.push_back(-pivot);
      for (Lit l : outer_assumptions(f_.prefix, d, pivot, &outer_).lits())
        assumptions.push_back(l);
      if (unit_propagate(f_.matrix, assumptions).outcome != PropOutcome::Conflict)
        return Failure{"dqrat-e", "ATA/QRAT-E failed, no conflict for resolution partner " +
                                      lits_to_string(d)};
    }
  }
  if (c.empty()) empty_derived_ = true;
  f_.matrix.push_back(std::move(c));
  return std::nullopt;
}

std::optional<CheckState::Failure> CheckState::apply_delete(std::span<const Lit> lits) {
  Clause c(std::vector<Lit>(lits.begin(), lits.end()));
  auto it = std::find(f_.matrix.begin(), f_.matrix.end(), c);
  if (it == f_.matrix.end())
    return Failure{"del", "clause " + lits_to_string(c) + " not in matrix"};
  f_.matrix.erase(it);
  return std::nullopt;
}

std::optional<CheckState::Failure> CheckState::apply_reduce(std::span<const Lit> lits) {
  if (lits.empty()) return Failure{"reduce", "empty reduce line"};
  Lit l = lits.front();
  if (!f_.prefix.declared(var_of(l)))
    return Failure{"reduce", "undeclared variable " + std::to_string(var_of(l))};
  if (!f_.prefix.is_universal(var_of(l)))
    return Failure{"reduce", "reduced literal " + std::to_string(l) + " is existential"};

  Clause full(std::vector<Lit>(lits.begin(), lits.end()));
  auto it = std::find(f_.matrix.begin(), f_.matrix.end(), full);
  if (it == f_.matrix.end())
    return Failure{"reduce", "clause " + lits_to_string(full) + " not in matrix"};
  size_t ci = static_cast<size_t>(it - f_.matrix.begin());
  Clause remaining = full.without(l);

  bool ok = false;
  std::string why;

  // UR: var(l) not in the depset of the remaining clause.
  std::vector<Var> ds = clause_depset(f_.prefix, remaining);
  if (!std::binary_search(ds.begin(), ds.end(), var_of(l))) {
    ok = true;
  } else {
    why = "UR failed (var " + std::to_string(var_of(l)) + " in depset)";
  }

  // DQRAT-A: propagation conflict against every resolution partner.
  if (!ok) {
    ok = true;
    Assignment neg_rest = negate_clause(remaining);
    for (const Clause& d : f_.matrix) {
      if (!d.contains(-l)) continue;
      std::vector<Lit> assumptions = neg_rest.lits();
      assumptions.push_back(l);
      for (Lit x : outer_assumptions(f_.prefix, d, l, &outer_).lits())
        assumptions.push_back(x);
      if (unit_propagate(f_.matrix, assumptions).outcome != PropOutcome::Conflict) {
        ok = false;
        why += "; DQRAT-A failed, no conflict for " + lits_to_string(d);
        break;
      }
    }
  }

  if (!ok && opts_.lplr) {
    if (lplr_ok(f_, ci, l))
      ok = true;
    else
      why += "; lplr failed (u-free path to a clause with the negated literal)";
  }

  if (!ok) return Failure{"reduce", why};
  f_.matrix[ci] = remaining;
  if (f_.matrix[ci].empty()) empty_derived_ = true;
  return std::nullopt;
}

std::optional<CheckState::Failure> CheckState::apply_declare_universal(std::span<const int> vars) {
  for (int v : vars) {
    if (v <= 0) return Failure{"bpm", "variable identifiers must be positive"};
    if (f_.prefix.declared(v))
      return Failure{"bpm", "variable " + std::to_string(v) + " already declared"};
    f_.prefix.declare_universal(v);
  }
  return std::nullopt;
}

std::optional<CheckState::Failure> CheckState::apply_modify_existential(
    Var head, std::span<const int> deltas) {
  if (head <= 0) return Failure{"bpm", "head variable must be positive"};
  if (f_.prefix.is_universal(head))
    return Failure{"bpm", "head variable " + std::to_string(head) + " is universal"};
  bool fresh = !f_.prefix.declared(head);
  if (fresh) f_.prefix.declare_existential(head, {});

  for (int delta : deltas) {
    if (delta > 0) {
      Var v = delta;
      if (!f_.prefix.declared(v))
        return Failure{"bpm", "dependency " + std::to_string(v) + " not declared"};
      if (!fresh && occurs_in_matrix(head))
        return Failure{"bpm", "dependency addition to variable " + std::to_string(head) +
                                  " occurring in the matrix"};
      if (f_.prefix.is_universal(v)) {
        f_.prefix.add_dep(head, v);
      } else {
        // Inherit the referenced existential's entire dependency set.
        for (Var u : std::vector<Var>(f_.prefix.deps(v)))
          f_.prefix.add_dep(head, u);
      }
    } else {
      Var u = -delta;
      if (!f_.prefix.is_universal(u))
        return Failure{"depscheme", "removal target " + std::to_string(u) +
                                        " is not a declared universal"};
      if (!f_.prefix.depends_on(head, u))
        return Failure{"depscheme", "variable " + std::to_string(u) +
                                        " not in dependency set of " + std::to_string(head)};
      if (pair_in_scheme(f_, u, head, opts_.removal_scheme)) {
        bool p1 = opts_.removal_scheme == Scheme::Pu ? pu_connected(f_, u, head)
                                                     : rrs_connected(f_, u, head);
        std::string combo =
            p1 ? (std::to_string(u) + "~>" + std::to_string(head) + " and -" +
                  std::to_string(u) + "~>-" + std::to_string(head))
               : ("-" + std::to_string(u) + "~>" + std::to_string(head) + " and " +
                  std::to_string(u) + "~>-" + std::to_string(head));
        return Failure{"depscheme", "pair (" + std::to_string(u) + "," +
                                        std::to_string(head) + ") still in D" +
                                        scheme_name(opts_.removal_scheme) + ": " + combo};
      }
      f_.prefix.remove_dep(head, u);
    }
  }
  return std::nullopt;
}

std::optional<CheckState::Failure> CheckState::apply_line(const ProofLine& line) {
  std::vector<Lit> lits(line.payload.begin(), line.payload.end());
  switch (line.kind) {
    case ProofLine::Kind::AddClause:
      return apply_add(lits);
    case ProofLine::Kind::DeleteClause:
      return apply_delete(lits);
    case ProofLine::Kind::Reduce:
      return apply_reduce(lits);
    case ProofLine::Kind::DeclareUniversal:
      return apply_declare_universal(line.payload);
    case ProofLine::Kind::ModifyExistential:
      return apply_modify_existential(line.payload[0],
                                      std::span<const int>(line.payload).subspan(1));
  }
  return Failure{"?", "unknown proof line kind"};
}

Verdict check_script(const Formula& f, const ProofScript& p, const CheckOptions& opts) {
  CheckState state(f, opts);
  for (size_t i = 0; i < p.lines.size(); ++i) {
    if (auto fail = state.apply_line(p.lines[i])) {
      Verdict v;
      v.status = CheckStatus::Rejected;
      v.line = i + 1;
      v.rule = fail->rule;
      v.reason = fail->reason;
      return v;
    }
  }
  Verdict v;
  v.status = state.empty_derived() ? CheckStatus::RefutationVerified
                                   : CheckStatus::ProofValidNoRefutation;
  return v;
}

}  // namespace dqr
