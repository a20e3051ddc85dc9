#include "dqr/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "dqr/depscheme.hpp"

namespace dqr {

namespace {

// Compressed index of beta restricted to the (sorted) dependency set.
uint32_t project(uint32_t beta, const std::vector<int>& dep_positions) {
  uint32_t idx = 0;
  for (size_t k = 0; k < dep_positions.size(); ++k)
    idx |= ((beta >> dep_positions[k]) & 1u) << k;
  return idx;
}

}  // namespace

bool eval_dqbf(const Formula& f, const OracleLimits& limits) {
  std::vector<Var> universals = f.prefix.universals();
  std::vector<Var> existentials = f.prefix.existentials();
  if (universals.size() > 30)
    throw BudgetExceeded("too many universal variables for the oracle");

  std::vector<int> upos(static_cast<size_t>(f.prefix.max_var()) + 1, -1);
  for (size_t i = 0; i < universals.size(); ++i)
    upos[static_cast<size_t>(universals[i])] = static_cast<int>(i);

  // Bit layout of the Skolem odometer: each existential owns a window of
  // 2^{|D_x|} table bits.
  uint64_t total_bits = 0;
  std::vector<uint64_t> offset(existentials.size(), 0);
  std::vector<std::vector<int>> dep_pos(existentials.size());
  std::vector<int> epos(static_cast<size_t>(f.prefix.max_var()) + 1, -1);
  double log2_budget = 0;
  for (uint64_t b = limits.budget; b > 1; b >>= 1) log2_budget += 1;
  for (size_t i = 0; i < existentials.size(); ++i) {
    epos[static_cast<size_t>(existentials[i])] = static_cast<int>(i);
    const std::vector<Var>& deps = f.prefix.deps(existentials[i]);
    if (deps.size() > 25)
      throw BudgetExceeded("dependency set too large for the oracle");
    offset[i] = total_bits;
    for (Var u : deps) dep_pos[i].push_back(upos[static_cast<size_t>(u)]);
    total_bits += uint64_t{1} << deps.size();
    if (static_cast<double>(total_bits) > log2_budget)
      throw BudgetExceeded("Skolem combination count 2^" + std::to_string(total_bits) +
                           " exceeds the budget");
  }

  uint32_t num_beta = uint32_t{1} << universals.size();
  uint64_t num_tables = uint64_t{1} << total_bits;

  // Precompute per-clause literal views; tautological clauses are
  // always satisfied.
  struct LitView {
    bool universal;
    int pos;
    bool positive;
  };
  std::vector<std::vector<LitView>> clause_views;
  for (const Clause& c : f.matrix) {
    if (c.tautological()) continue;
    std::vector<LitView> views;
    for (Lit l : c) {
      Var v = var_of(l);
      if (f.prefix.is_universal(v))
        views.push_back({true, upos[static_cast<size_t>(v)], is_pos(l)});
      else
        views.push_back({false, epos[static_cast<size_t>(v)], is_pos(l)});
    }
    clause_views.push_back(std::move(views));
  }

  for (uint64_t tables = 0; tables < num_tables; ++tables) {
    bool all_beta_ok = true;
    for (uint32_t beta = 0; beta < num_beta && all_beta_ok; ++beta) {
      for (const auto& views : clause_views) {
        bool sat = false;
        for (const LitView& lv : views) {
          bool value;
          if (lv.universal) {
            value = (beta >> lv.pos) & 1u;
          } else {
            uint32_t idx = project(beta, dep_pos[static_cast<size_t>(lv.pos)]);
            value = (tables >> (offset[static_cast<size_t>(lv.pos)] + idx)) & 1u;
          }
          if (value == lv.positive) {
            sat = true;
            break;
          }
        }
        if (!sat) {
          all_beta_ok = false;
          break;
        }
      }
    }
    if (all_beta_ok) return true;
  }
  return false;
}

bool eval_qbf_game(const Formula& f) {
  // Linearize: existentials sorted by dependency-set size must form a
  // chain; universals slot in as the chain grows.
  std::vector<const VarDecl*> ex;
  for (const VarDecl& d : f.prefix.decls())
    if (d.quant == Quant::Existential) ex.push_back(&d);
  std::stable_sort(ex.begin(), ex.end(), [](const VarDecl* a, const VarDecl* b) {
    return a->deps.size() < b->deps.size();
  });
  std::vector<Var> order;
  std::vector<Var> placed;  // universals already in order, sorted
  for (const VarDecl* d : ex) {
    if (!std::includes(d->deps.begin(), d->deps.end(), placed.begin(), placed.end()))
      throw InputError("formula is not QBF-shaped");
    for (Var u : d->deps)
      if (!std::binary_search(placed.begin(), placed.end(), u)) order.push_back(u);
    placed = d->deps;
    order.push_back(d->id);
  }
  for (Var u : f.prefix.universals())
    if (!std::binary_search(placed.begin(), placed.end(), u)) order.push_back(u);

  Assignment a;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == order.size()) {
      for (const Clause& c : f.matrix) {
        bool sat = false;
        for (Lit l : c)
          if (a.satisfies(l)) {
            sat = true;
            break;
          }
        if (!sat) return false;
      }
      return true;
    }
    Var v = order[i];
    bool universal = f.prefix.is_universal(v);
    for (int val = 0; val <= 1; ++val) {
      Assignment saved = a;
      a.bind(mk_lit(v, val != 0));
      bool sub = rec(i + 1);
      a = saved;
      if (universal && !sub) return false;
      if (!universal && sub) return true;
    }
    return universal;
  };
  return rec(0);
}

void enumerate_formulas(const EnumParams& params,
                        const std::function<void(const Formula&)>& fn) {
  for (int a = 0; a <= params.max_forall; ++a) {
    for (int e = 0; e <= params.max_exists; ++e) {
      int n = a + e;
      // Clause universe: widths 1..max_width, canonical order.
      std::vector<Clause> universe;
      for (int w = 1; w <= params.max_width && w <= n; ++w) {
        // Choose w variables, then 2^w polarity patterns.
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        for (;;) {
          for (uint32_t pol = 0; pol < (uint32_t{1} << w); ++pol) {
            std::vector<Lit> lits;
            for (int i = 0; i < w; ++i)
              lits.push_back(mk_lit(comb[i] + 1, ((pol >> i) & 1u) == 0));
            universe.push_back(Clause(std::move(lits)));
          }
          int i = w - 1;
          while (i >= 0 && comb[i] == n - w + i) --i;
          if (i < 0) break;
          ++comb[i];
          for (int j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
        }
      }

      // Clause subsets of size 0..max_clauses, lexicographic.
      int max_k = std::min<int>(params.max_clauses, static_cast<int>(universe.size()));
      for (int k = 0; k <= max_k; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
          // Dependency assignments: odometer over 2^a per existential.
          uint64_t dep_combos = 1;
          for (int i = 0; i < e; ++i) dep_combos *= uint64_t{1} << a;
          for (uint64_t dep = 0; dep < dep_combos; ++dep) {
            Formula f;
            for (int u = 1; u <= a; ++u) f.prefix.declare_universal(u);
            uint64_t rest = dep;
            for (int i = 0; i < e; ++i) {
              uint64_t mask = rest & ((uint64_t{1} << a) - 1);
              rest >>= a;
              std::vector<Var> deps;
              for (int u = 0; u < a; ++u)
                if ((mask >> u) & 1u) deps.push_back(u + 1);
              f.prefix.declare_existential(a + 1 + i, std::move(deps));
            }
            for (int i : pick) f.matrix.push_back(universe[static_cast<size_t>(i)]);
            fn(f);
          }
          if (k == 0) break;
          int i = k - 1;
          int m = static_cast<int>(universe.size());
          while (i >= 0 && pick[i] == m - k + i) --i;
          if (i < 0) break;
          ++pick[i];
          for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
    }
  }
}

SweepReport scheme_soundness_sweep(const EnumParams& params, const OracleLimits& limits) {
  SweepReport report;
  auto start = std::chrono::steady_clock::now();
  enumerate_formulas(params, [&](const Formula& f) {
    ++report.instances;
    auto fail = [&](const std::string& what) {
      ++report.violations;
      if (report.failures.size() < 16)
        report.failures.push_back(what + " on " + std::to_string(report.instances));
    };

    std::vector<std::pair<Var, Var>> pu = all_pairs(f, Scheme::Pu);
    std::vector<std::pair<Var, Var>> rrs = all_pairs(f, Scheme::Rrs);
    std::vector<std::pair<Var, Var>> trv = all_pairs(f, Scheme::Trv);
    if (!std::includes(rrs.begin(), rrs.end(), pu.begin(), pu.end()))
      fail("containment pu ⊆ rrs violated");
    if (!std::includes(trv.begin(), trv.end(), rrs.begin(), rrs.end()))
      fail("containment rrs ⊆ trv violated");

    if (pu != trv) {
      ++report.truth_checks;
      Formula g = apply_scheme(f, Scheme::Pu);
      if (eval_dqbf(f, limits) != eval_dqbf(g, limits))
        fail("pu prefix modification changed truth");
    }
  });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace dqr
