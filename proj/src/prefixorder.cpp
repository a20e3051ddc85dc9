#include "dqr/prefixorder.hpp"

#include <algorithm>

namespace dqr {

namespace {

bool subset_of(const std::vector<Var>& a, const std::vector<Var>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// { y in var(p) | depset(y) ⊆ bound }, bound sorted; result sorted.
std::vector<Var> vars_dominated_by(const Prefix& p, const std::vector<Var>& bound) {
  std::vector<Var> out;
  for (const VarDecl& d : p.decls()) {
    if (d.quant == Quant::Universal) {
      if (std::binary_search(bound.begin(), bound.end(), d.id)) out.push_back(d.id);
    } else if (subset_of(d.deps, bound)) {
      out.push_back(d.id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Var> outer_set(const Prefix& p, Var v) {
  if (!p.declared(v)) throw InputError("outer_set: variable not declared");
  std::vector<Var> out;
  if (p.is_existential(v)) {
    out = vars_dominated_by(p, p.deps(v));
  } else {
    // Inner existentials of u.
    std::vector<Var> inner;
    for (const VarDecl& d : p.decls())
      if (d.quant == Quant::Existential &&
          std::binary_search(d.deps.begin(), d.deps.end(), v))
        inner.push_back(d.id);
    if (inner.empty()) {
      for (const VarDecl& d : p.decls()) {
        if (d.id == v) continue;
        if (d.quant == Quant::Universal ||
            !std::binary_search(d.deps.begin(), d.deps.end(), v))
          out.push_back(d.id);
      }
    } else {
      bool first = true;
      for (Var x : inner) {
        std::vector<Var> bound = p.deps(x);
        bound.erase(std::remove(bound.begin(), bound.end(), v), bound.end());
        std::vector<Var> dom = vars_dominated_by(p, bound);
        if (first) {
          out = std::move(dom);
          first = false;
        } else {
          std::vector<Var> tmp;
          std::set_intersection(out.begin(), out.end(), dom.begin(), dom.end(),
                                std::back_inserter(tmp));
          out = std::move(tmp);
        }
      }
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool prefix_leq(const Prefix& p, Var x, Var y) {
  if (!p.declared(x) || !p.declared(y))
    throw InputError("prefix_leq: variable not declared");
  std::vector<Var> o = outer_set(p, y);
  return std::binary_search(o.begin(), o.end(), x);
}

const std::vector<Var>& OuterCache::outer(const Prefix& p, Var v) {
  if (!primed_ || version_ != p.version()) {
    memo_.clear();
    version_ = p.version();
    primed_ = true;
  }
  auto it = memo_.find(v);
  if (it == memo_.end()) it = memo_.emplace(v, outer_set(p, v)).first;
  return it->second;
}

bool OuterCache::leq(const Prefix& p, Var x, Var y) {
  const std::vector<Var>& o = outer(p, y);
  return std::binary_search(o.begin(), o.end(), x);
}

Assignment outer_assumptions(const Prefix& p, const Clause& d, Lit pivot,
                             OuterCache* cache) {
  if (!d.contains(-pivot))
    throw InputError("outer_assumptions: clause does not contain the negated pivot");
  OuterCache local;
  OuterCache& oc = cache ? *cache : local;
  Assignment a;
  Var pv = var_of(pivot);
  for (Lit x : d) {
    if (x == -pivot) continue;
    if (oc.leq(p, var_of(x), pv)) a.bind(-x);
  }
  return a;
}

}  // namespace dqr
