#ifndef DQR_DQRATCHECK_HPP_
#define DQR_DQRATCHECK_HPP_

#include <optional>
#include <span>
#include <string>

#include "dqr/core.hpp"
#include "dqr/depscheme.hpp"
#include "dqr/prefixorder.hpp"
#include "dqr/textio.hpp"
#include "dqr/verdict.hpp"

namespace dqr {

struct CheckOptions {
  bool lplr = false;                    // allow lplr as a reduce fallback
  Scheme removal_scheme = Scheme::Pu;   // validates e-line dependency removals
  bool strict = false;                  // reject undeclared variables
};

// Proof replay over the seven-rule system: ATA, Del, UR, DQRAT-E,
// DQRAT-A, BPM and the dependency-scheme prefix rule.
class CheckState {
 public:
  struct Failure {
    std::string rule;
    std::string reason;
  };

  CheckState(Formula f, CheckOptions opts);

  std::optional<Failure> apply_line(const ProofLine& line);
  std::optional<Failure> apply_add(std::span<const Lit> lits);
  std::optional<Failure> apply_delete(std::span<const Lit> lits);
  std::optional<Failure> apply_reduce(std::span<const Lit> lits);
  std::optional<Failure> apply_declare_universal(std::span<const int> vars);
  std::optional<Failure> apply_modify_existential(Var head, std::span<const int> deltas);

  bool empty_derived() const { return empty_derived_; }
  const Formula& formula() const { return f_; }

 private:
  std::optional<Failure> ensure_declared(std::span<const Lit> lits);
  bool occurs_in_matrix(Var v) const;

  Formula f_;
  CheckOptions opts_;
  OuterCache outer_;
  bool empty_derived_ = false;
};

Verdict check_script(const Formula& f, const ProofScript& p, const CheckOptions& opts = {});

}  // namespace dqr

#endif  // DQR_DQRATCHECK_HPP_
