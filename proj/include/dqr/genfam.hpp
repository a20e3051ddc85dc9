#ifndef DQR_GENFAM_HPP_
#define DQR_GENFAM_HPP_

#include <array>
#include <string>

#include "dqr/core.hpp"
#include "dqr/textio.hpp"

namespace dqr {

enum class Family { TsLqparity, BridgedTsLqparity, RunningExample };

struct FamilyParams {
  Family family = Family::TsLqparity;
  int n = 2;  // parity families need n >= 2
};

// The four clauses encoding o ≡ o1 ⊕ o2 whenever zlit is falsified.
std::array<Clause, 4> xor_gadget(Lit o1, Lit o2, Lit o, Lit zlit);

// Variable numbering for the parity families: x1..xN = 1..N, z = N+1,
// t2..tN = N+2..2N, s2..sN = 2N+1..3N-1, b = 3N.
Formula gen_family(const FamilyParams& params);

// A short refutation checked by check_ldq under the pu scheme: reduce
// all z literals from the non-bridge clauses, derive t_i ↔ s_i up the
// chain, contradict with t_N and ¬s_N.  O(N) nodes.
ResProof gen_bridged_refutation(int n);

// Comment header describing the numbering, prepended by the CLI.
std::string family_comment(const FamilyParams& params);

}  // namespace dqr

#endif  // DQR_GENFAM_HPP_
