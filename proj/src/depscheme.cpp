#include "dqr/depscheme.hpp"

#include <algorithm>

namespace dqr {

namespace {

inline size_t lit_code(Lit l) {
  return 2 * static_cast<size_t>(var_of(l)) + (l < 0 ? 1 : 0);
}

struct OccIndex {
  Var max_var = 0;
  std::vector<std::vector<size_t>> occ;

  explicit OccIndex(const Formula& f) {
    max_var = f.prefix.max_var();
    for (const Clause& c : f.matrix)
      for (Lit l : c) max_var = std::max(max_var, var_of(l));
    occ.assign(2 * (static_cast<size_t>(max_var) + 1), {});
    for (size_t ci = 0; ci < f.matrix.size(); ++ci) {
      if (f.matrix[ci].tautological()) continue;
      for (Lit l : f.matrix[ci]) occ[lit_code(l)].push_back(ci);
    }
  }
};

ReachSets reach_fixpoint(const Formula& f, const OccIndex& idx,
                         std::span<const size_t> seed, std::span<const Var> s,
                         std::optional<Lit> excluded) {
  std::vector<char> in_s(static_cast<size_t>(idx.max_var) + 1, 0);
  for (Var v : s)
    if (v <= idx.max_var) in_s[static_cast<size_t>(v)] = 1;

  std::vector<char> clause_mark(f.matrix.size(), 0);
  std::vector<char> lit_mark(2 * (static_cast<size_t>(idx.max_var) + 1), 0);
  std::vector<Lit> queue;

  auto collect = [&](const Clause& c, Lit skip) {
    for (Lit l : c) {
      if (l == skip || !in_s[static_cast<size_t>(var_of(l))]) continue;
      if (!lit_mark[lit_code(l)]) {
        lit_mark[lit_code(l)] = 1;
        queue.push_back(l);
      }
    }
  };

  for (size_t ci : seed) {
    if (ci >= f.matrix.size()) throw InputError("reach: seed clause out of range");
    if (f.matrix[ci].tautological()) continue;
    clause_mark[ci] = 1;
    collect(f.matrix[ci], 0);
  }

  while (!queue.empty()) {
    Lit p = queue.back();
    queue.pop_back();
    for (size_t ci : idx.occ[lit_code(-p)]) {
      const Clause& e = f.matrix[ci];
      if (excluded && e.contains(-*excluded)) continue;
      clause_mark[ci] = 1;
      collect(e, -p);
    }
  }

  ReachSets out;
  for (size_t ci = 0; ci < f.matrix.size(); ++ci)
    if (clause_mark[ci]) out.clauses.push_back(ci);
  for (Var v = 1; v <= idx.max_var; ++v) {
    if (lit_mark[lit_code(v)]) out.literals.push_back(v);
    if (lit_mark[lit_code(-v)]) out.literals.push_back(-v);
  }
  return out;
}

std::vector<size_t> clauses_with(const Formula& f, Lit l) {
  std::vector<size_t> out;
  for (size_t ci = 0; ci < f.matrix.size(); ++ci)
    if (!f.matrix[ci].tautological() && f.matrix[ci].contains(l)) out.push_back(ci);
  return out;
}

void check_pair_quantifiers(const Formula& f, Var u, Var x) {
  if (!f.prefix.is_universal(u))
    throw InputError("expected a universal variable, got " + std::to_string(u));
  if (!f.prefix.is_existential(x))
    throw InputError("expected an existential variable, got " + std::to_string(x));
}

}  // namespace

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Trv: return "trv";
    case Scheme::Rrs: return "rrs";
    case Scheme::Pu: return "pu";
  }
  return "?";
}

bool ReachSets::has_clause(size_t ci) const {
  return std::binary_search(clauses.begin(), clauses.end(), ci);
}

bool ReachSets::has_literal(Lit l) const {
  return std::find(literals.begin(), literals.end(), l) != literals.end();
}

ReachSets rrs_reach(const Formula& f, std::span<const size_t> seed,
                    std::span<const Var> s) {
  OccIndex idx(f);
  return reach_fixpoint(f, idx, seed, s, std::nullopt);
}

ReachSets pu_reach(const Formula& f, Lit param, std::span<const size_t> seed,
                   std::span<const Var> s) {
  OccIndex idx(f);
  return reach_fixpoint(f, idx, seed, s, param);
}

std::vector<Var> dependers(const Prefix& p, Var u) {
  std::vector<Var> out;
  for (const VarDecl& d : p.decls())
    if (d.quant == Quant::Existential &&
        std::binary_search(d.deps.begin(), d.deps.end(), u))
      out.push_back(d.id);
  return out;
}

bool rrs_connected(const Formula& f, Lit ulit, Lit elit) {
  check_pair_quantifiers(f, var_of(ulit), var_of(elit));
  std::vector<Var> s = dependers(f.prefix, var_of(ulit));
  std::vector<size_t> seed = clauses_with(f, ulit);
  return rrs_reach(f, seed, s).has_literal(elit);
}

bool pu_connected(const Formula& f, Lit ulit, Lit elit) {
  check_pair_quantifiers(f, var_of(ulit), var_of(elit));
  std::vector<Var> s = dependers(f.prefix, var_of(ulit));
  std::vector<size_t> seed = clauses_with(f, ulit);
  return pu_reach(f, ulit, seed, s).has_literal(elit);
}

bool pair_in_scheme(const Formula& f, Var u, Var x, Scheme scheme) {
  check_pair_quantifiers(f, u, x);
  if (!f.prefix.depends_on(x, u)) return false;
  if (scheme == Scheme::Trv) return true;

  OccIndex idx(f);
  std::vector<Var> s = dependers(f.prefix, u);
  std::vector<size_t> pos_seed = clauses_with(f, u);
  std::vector<size_t> neg_seed = clauses_with(f, -u);
  std::optional<Lit> pos_excl, neg_excl;
  if (scheme == Scheme::Pu) {
    pos_excl = u;
    neg_excl = -u;
  }
  ReachSets pos = reach_fixpoint(f, idx, pos_seed, s, pos_excl);
  ReachSets neg = reach_fixpoint(f, idx, neg_seed, s, neg_excl);
  return (pos.has_literal(x) && neg.has_literal(-x)) ||
         (neg.has_literal(x) && pos.has_literal(-x));
}

std::vector<std::pair<Var, Var>> all_pairs(const Formula& f, Scheme scheme) {
  std::vector<std::pair<Var, Var>> out;
  OccIndex idx(f);
  for (Var u : f.prefix.universals()) {
    std::vector<Var> s = dependers(f.prefix, u);
    if (s.empty()) continue;
    if (scheme == Scheme::Trv) {
      for (Var x : s) out.emplace_back(u, x);
      continue;
    }
    std::vector<size_t> pos_seed = clauses_with(f, u);
    std::vector<size_t> neg_seed = clauses_with(f, -u);
    std::optional<Lit> pos_excl, neg_excl;
    if (scheme == Scheme::Pu) {
      pos_excl = u;
      neg_excl = -u;
    }
    ReachSets pos = reach_fixpoint(f, idx, pos_seed, s, pos_excl);
    ReachSets neg = reach_fixpoint(f, idx, neg_seed, s, neg_excl);
    for (Var x : s) {
      bool in = (pos.has_literal(x) && neg.has_literal(-x)) ||
                (neg.has_literal(x) && pos.has_literal(-x));
      if (in) out.emplace_back(u, x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Formula apply_scheme(const Formula& f, Scheme scheme) {
  std::vector<std::pair<Var, Var>> pairs = all_pairs(f, scheme);
  Formula out;
  out.matrix = f.matrix;
  for (const VarDecl& d : f.prefix.decls()) {
    if (d.quant == Quant::Universal) {
      out.prefix.declare_universal(d.id);
    } else {
      std::vector<Var> kept;
      for (Var u : d.deps)
        if (std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, d.id)))
          kept.push_back(u);
      out.prefix.declare_existential(d.id, std::move(kept));
    }
  }
  return out;
}

bool eur_ok(const Formula& f, size_t ci, Lit u) {
  if (ci >= f.matrix.size()) throw InputError("eur_ok: clause index out of range");
  if (!f.prefix.is_universal(var_of(u)))
    throw InputError("eur_ok: literal is not universal");
  if (!f.matrix[ci].contains(u))
    throw InputError("eur_ok: clause does not contain the literal");
  std::vector<Var> s = dependers(f.prefix, var_of(u));
  std::vector<size_t> seed{ci};
  ReachSets r = rrs_reach(f, seed, s);
  for (size_t reached : r.clauses)
    if (f.matrix[reached].contains(-u)) return false;
  return true;
}

bool lplr_ok(const Formula& f, size_t ci, Lit u) {
  if (ci >= f.matrix.size()) throw InputError("lplr_ok: clause index out of range");
  if (!f.prefix.is_universal(var_of(u)))
    throw InputError("lplr_ok: literal is not universal");
  if (!f.matrix[ci].contains(u))
    throw InputError("lplr_ok: clause does not contain the literal");
  std::vector<Var> s = dependers(f.prefix, var_of(u));
  std::vector<size_t> seed{ci};
  // Parameter ¬u: expansion may not enter clauses containing u.
  ReachSets r = pu_reach(f, -u, seed, s);
  for (size_t reached : r.clauses)
    if (f.matrix[reached].contains(-u)) return false;
  return true;
}

}  // namespace dqr
