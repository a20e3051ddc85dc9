#ifndef DQR_PROPAGATE_HPP_
#define DQR_PROPAGATE_HPP_

#include <optional>
#include <span>

#include "dqr/core.hpp"

namespace dqr {

enum class PropOutcome { FixedPoint, Conflict };

struct PropResult {
  PropOutcome outcome = PropOutcome::FixedPoint;
  // Closure assignment on FixedPoint (superset of the assumptions).
  Assignment assignment;
  // Falsified matrix clause on Conflict; nullopt when two opposing
  // assumption units clash before any matrix clause is touched.
  std::optional<size_t> conflict_clause;
};

struct PropOptions {
  // Process the pending-unit queue in seeded random order instead of
  // FIFO.  Outcomes must not change; used by confluence tests.
  std::optional<uint64_t> shuffle_seed;
};

// UP(m ∧ assumption units) to fixpoint.  The assumption list may contain
// opposing literals; that is an immediate conflict.
PropResult unit_propagate(std::span<const Clause> matrix,
                          std::span<const Lit> assumptions,
                          const PropOptions& opts = {});

// phi ∧ notC ⊢1 ⊥.  A tautological candidate passes vacuously.
bool ata_check(std::span<const Clause> matrix, const Clause& c,
               const PropOptions& opts = {});

}  // namespace dqr

#endif  // DQR_PROPAGATE_HPP_
