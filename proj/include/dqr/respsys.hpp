#ifndef DQR_RESPSYS_HPP_
#define DQR_RESPSYS_HPP_

#include "dqr/core.hpp"
#include "dqr/depscheme.hpp"
#include "dqr/textio.hpp"
#include "dqr/verdict.hpp"

namespace dqr {

struct LdqConfig {
  // Rule conditions are evaluated against the scheme computed once on
  // the input formula.
  Scheme scheme = Scheme::Pu;
};

// Long-distance Q-resolution with a dependency scheme.  Merged literals
// are the plain presence of both polarities of a universal variable.
// Not sound for DQBF-shaped prefixes; callers warn.
Verdict check_ldq(const Formula& f, const ResProof& p, const LdqConfig& cfg);

// QU-resolution with the independent-extension rule.
Verdict check_dres(const Formula& f, const ResProof& p);

// Constructive translation of a checked dRes refutation into a script
// accepted by check_script; linear in the proof size.
ProofScript translate_dres_to_dqrat(const Formula& f, const ResProof& p);

// True when the dependency sets can be realized by a linear prefix.
bool qbf_shaped(const Formula& f);

}  // namespace dqr

#endif  // DQR_RESPSYS_HPP_
