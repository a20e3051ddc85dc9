#ifndef DQR_VERDICT_HPP_
#define DQR_VERDICT_HPP_

#include <string>

namespace dqr {

enum class CheckStatus { RefutationVerified, ProofValidNoRefutation, Rejected };

struct Verdict {
  CheckStatus status = CheckStatus::ProofValidNoRefutation;
  size_t line = 0;     // 1-based proof line / node id on rejection
  std::string rule;    // rule attempted
  std::string reason;  // machine-readable reason

  bool verified() const { return status == CheckStatus::RefutationVerified; }
  bool rejected() const { return status == CheckStatus::Rejected; }
};

}  // namespace dqr

#endif  // DQR_VERDICT_HPP_
