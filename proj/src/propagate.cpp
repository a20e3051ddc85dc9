#include "dqr/propagate.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace dqr {

namespace {

inline size_t lit_code(Lit l) {
  return 2 * static_cast<size_t>(var_of(l)) + (l < 0 ? 1 : 0);
}

}  // namespace

PropResult unit_propagate(std::span<const Clause> matrix,
                          std::span<const Lit> assumptions,
                          const PropOptions& opts) {
  Var max_var = 0;
  for (const Clause& c : matrix)
    for (Lit l : c) max_var = std::max(max_var, var_of(l));
  for (Lit l : assumptions) max_var = std::max(max_var, var_of(l));

  // 0 unknown, +1 true, -1 false, indexed by variable.
  std::vector<int8_t> val(static_cast<size_t>(max_var) + 1, 0);
  std::vector<std::vector<size_t>> occ(2 * (static_cast<size_t>(max_var) + 1));
  for (size_t ci = 0; ci < matrix.size(); ++ci)
    for (Lit l : matrix[ci]) occ[lit_code(l)].push_back(ci);

  auto lit_val = [&](Lit l) -> int {
    int v = val[static_cast<size_t>(var_of(l))];
    return l < 0 ? -v : v;
  };

  std::vector<Lit> pending;
  std::mt19937_64 rng(opts.shuffle_seed.value_or(0));

  PropResult res;
  auto conflict = [&](std::optional<size_t> ci) {
    res.outcome = PropOutcome::Conflict;
    res.conflict_clause = ci;
    return res;
  };

  for (Lit a : assumptions) {
    int v = lit_val(a);
    if (v < 0) return conflict(std::nullopt);
    if (v == 0) {
      val[static_cast<size_t>(var_of(a))] = a > 0 ? 1 : -1;
      pending.push_back(a);
    }
  }

  // Assigns the unit of clause ci if it has one; true means falsified.
  auto scan_clause = [&](size_t ci) -> bool {
    const Clause& c = matrix[ci];
    Lit unit = 0;
    int free_count = 0;
    for (Lit l : c) {
      int v = lit_val(l);
      if (v > 0) return false;  // satisfied
      if (v == 0) {
        if (++free_count > 1) return false;
        unit = l;
      }
    }
    if (free_count == 0) return true;
    val[static_cast<size_t>(var_of(unit))] = unit > 0 ? 1 : -1;
    pending.push_back(unit);
    return false;
  };

  for (size_t ci = 0; ci < matrix.size(); ++ci)
    if (scan_clause(ci)) return conflict(ci);

  while (!pending.empty()) {
    size_t pick = pending.size() - 1;
    if (opts.shuffle_seed)
      pick = std::uniform_int_distribution<size_t>(0, pending.size() - 1)(rng);
    Lit p = pending[pick];
    pending[pick] = pending.back();
    pending.pop_back();
    for (size_t ci : occ[lit_code(-p)])
      if (scan_clause(ci)) return conflict(ci);
  }

  for (Var v = 1; v <= max_var; ++v)
    if (val[static_cast<size_t>(v)] != 0)
      res.assignment.bind(mk_lit(v, val[static_cast<size_t>(v)] > 0));
  return res;
}

bool ata_check(std::span<const Clause> matrix, const Clause& c,
               const PropOptions& opts) {
  if (c.tautological()) return true;
  Assignment neg = negate_clause(c);
  std::vector<Lit> assumptions = neg.lits();
  return unit_propagate(matrix, assumptions, opts).outcome == PropOutcome::Conflict;
}

}  // namespace dqr
