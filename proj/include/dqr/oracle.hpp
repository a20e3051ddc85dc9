#ifndef DQR_ORACLE_HPP_
#define DQR_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dqr/core.hpp"

namespace dqr {

struct BudgetExceeded : InputError {
  explicit BudgetExceeded(const std::string& msg) : InputError(msg) {}
};

struct OracleLimits {
  uint64_t budget = uint64_t{1} << 24;  // Skolem-table combinations
};

// Brute force over all Skolem function sets: true iff some set satisfies
// the matrix under every complete universal assignment.  Refuses (throws
// BudgetExceeded) when the combination count exceeds the budget.
bool eval_dqbf(const Formula& f, const OracleLimits& limits = {});

// Game-tree recursion for QBF-shaped formulas; the independent second
// oracle.  Throws InputError when the prefix is not linearizable.
bool eval_qbf_game(const Formula& f);

struct EnumParams {
  int max_forall = 1;
  int max_exists = 1;
  int max_clauses = 1;
  int max_width = 1;
};

// Deterministic exhaustive stream: for every universal count a and
// existential count e up to the bounds, every subset of at most
// max_clauses non-tautological clauses over those variables with widths
// 1..max_width, under every dependency-set assignment.
void enumerate_formulas(const EnumParams& params,
                        const std::function<void(const Formula&)>& fn);

struct SweepReport {
  uint64_t instances = 0;
  uint64_t truth_checks = 0;  // instances where the pu prefix changed
  uint64_t violations = 0;
  std::vector<std::string> failures;  // capped
  double seconds = 0;
};

// For every enumerated formula: eval(apply_scheme(f,pu)) == eval(f) and
// pairs(pu) ⊆ pairs(rrs) ⊆ pairs(trv).  A violation is build-stopping.
SweepReport scheme_soundness_sweep(const EnumParams& params,
                                   const OracleLimits& limits = {});

}  // namespace dqr

#endif  // DQR_ORACLE_HPP_
