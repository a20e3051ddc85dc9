#include "dqr/core.hpp"

#include <algorithm>

namespace dqr {

void canonicalize_lits(std::vector<Lit>& lits) {
  std::sort(lits.begin(), lits.end(), [](Lit a, Lit b) {
    if (var_of(a) != var_of(b)) return var_of(a) < var_of(b);
    return a > b;  // positive before negative
  });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  for (Lit l : lits_)
    if (l == 0) throw InputError("zero literal in clause");
  canonicalize_lits(lits_);
  for (size_t i = 0; i + 1 < lits_.size(); ++i)
    if (var_of(lits_[i]) == var_of(lits_[i + 1])) {
      taut_ = true;
      break;
    }
}

bool Clause::contains(Lit l) const {
  return std::find(lits_.begin(), lits_.end(), l) != lits_.end();
}

bool Clause::contains_var(Var v) const {
  return contains(v) || contains(-v);
}

Clause Clause::without(Lit l) const {
  std::vector<Lit> out;
  out.reserve(lits_.size());
  for (Lit x : lits_)
    if (x != l) out.push_back(x);
  return Clause(std::move(out));
}

std::optional<bool> Assignment::value(Var v) const {
  auto it = map_.find(v);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

bool Assignment::satisfies(Lit l) const {
  auto v = value(var_of(l));
  return v.has_value() && *v == is_pos(l);
}

bool Assignment::falsifies(Lit l) const {
  auto v = value(var_of(l));
  return v.has_value() && *v != is_pos(l);
}

void Assignment::bind(Lit l) {
  if (l == 0) throw InputError("cannot bind zero literal");
  auto [it, inserted] = map_.emplace(var_of(l), is_pos(l));
  if (!inserted && it->second != is_pos(l))
    throw InputError("conflicting binding for variable " + std::to_string(var_of(l)));
}

std::vector<Lit> Assignment::lits() const {
  std::vector<Lit> out;
  out.reserve(map_.size());
  for (auto [v, b] : map_) out.push_back(mk_lit(v, b));
  std::sort(out.begin(), out.end(),
            [](Lit a, Lit b) { return var_of(a) < var_of(b); });
  return out;
}

const VarDecl& Prefix::decl(Var v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    throw InputError("variable " + std::to_string(v) + " not declared");
  return decls_[it->second];
}

VarDecl& Prefix::decl_mut(Var v) {
  return const_cast<VarDecl&>(decl(v));
}

const std::vector<Var>& Prefix::deps(Var v) const {
  const VarDecl& d = decl(v);
  if (d.quant != Quant::Existential)
    throw InputError("deps() on universal variable " + std::to_string(v));
  return d.deps;
}

std::vector<Var> Prefix::depset(Var v) const {
  const VarDecl& d = decl(v);
  if (d.quant == Quant::Universal) return {v};
  return d.deps;
}

bool Prefix::depends_on(Var x, Var u) const {
  const VarDecl& d = decl(x);
  if (d.quant == Quant::Universal) return x == u;
  return std::binary_search(d.deps.begin(), d.deps.end(), u);
}

void Prefix::declare_universal(Var v) {
  if (v <= 0) throw InputError("variable identifiers must be positive");
  if (declared(v))
    throw InputError("variable " + std::to_string(v) + " already declared");
  index_[v] = decls_.size();
  decls_.push_back({v, Quant::Universal, {}});
  ++version_;
}

void Prefix::declare_existential(Var v, std::vector<Var> deps) {
  if (v <= 0) throw InputError("variable identifiers must be positive");
  if (declared(v))
    throw InputError("variable " + std::to_string(v) + " already declared");
  std::sort(deps.begin(), deps.end());
  deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
  for (Var u : deps)
    if (!is_universal(u))
      throw InputError("dependency " + std::to_string(u) + " of variable " +
                       std::to_string(v) + " is not a declared universal");
  index_[v] = decls_.size();
  decls_.push_back({v, Quant::Existential, std::move(deps)});
  ++version_;
}

bool Prefix::add_dep(Var x, Var u) {
  if (!is_universal(u))
    throw InputError("dependency " + std::to_string(u) + " is not a declared universal");
  VarDecl& d = decl_mut(x);
  if (d.quant != Quant::Existential)
    throw InputError("cannot add dependency to universal variable");
  auto it = std::lower_bound(d.deps.begin(), d.deps.end(), u);
  if (it != d.deps.end() && *it == u) return false;
  d.deps.insert(it, u);
  ++version_;
  return true;
}

void Prefix::remove_dep(Var x, Var u) {
  VarDecl& d = decl_mut(x);
  if (d.quant != Quant::Existential)
    throw InputError("cannot remove dependency from universal variable");
  auto it = std::lower_bound(d.deps.begin(), d.deps.end(), u);
  if (it == d.deps.end() || *it != u)
    throw InputError("variable " + std::to_string(u) + " not in dependency set of " +
                     std::to_string(x));
  d.deps.erase(it);
  ++version_;
}

std::vector<Var> Prefix::universals() const {
  std::vector<Var> out;
  for (const auto& d : decls_)
    if (d.quant == Quant::Universal) out.push_back(d.id);
  return out;
}

std::vector<Var> Prefix::existentials() const {
  std::vector<Var> out;
  for (const auto& d : decls_)
    if (d.quant == Quant::Existential) out.push_back(d.id);
  return out;
}

Var Prefix::max_var() const {
  Var m = 0;
  for (const auto& d : decls_) m = std::max(m, d.id);
  return m;
}

std::vector<Clause> restrict_matrix(std::span<const Clause> m, const Assignment& a) {
  std::vector<Clause> out;
  for (const Clause& c : m) {
    bool satisfied = false;
    std::vector<Lit> rest;
    for (Lit l : c) {
      if (a.satisfies(l)) {
        satisfied = true;
        break;
      }
      if (!a.falsifies(l)) rest.push_back(l);
    }
    if (!satisfied) out.push_back(Clause(std::move(rest)));
  }
  return out;
}

std::vector<Var> clause_depset(const Prefix& p, const Clause& c) {
  std::vector<Var> out;
  for (Lit l : c) {
    Var v = var_of(l);
    if (!p.declared(v))
      throw InputError("variable " + std::to_string(v) + " not declared");
    for (Var u : p.depset(v)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Assignment negate_clause(const Clause& c) {
  if (c.tautological())
    throw InputError("cannot negate a tautological clause");
  Assignment a;
  for (Lit l : c) a.bind(-l);
  return a;
}

}  // namespace dqr
