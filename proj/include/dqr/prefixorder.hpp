#ifndef DQR_PREFIXORDER_HPP_
#define DQR_PREFIXORDER_HPP_

#include <unordered_map>
#include <vector>

#include "dqr/core.hpp"

namespace dqr {

// Outer_v, sorted by variable identifier.
// Existential x: { y | D_y ⊆ D_x }.
// Universal u:   {u} ∪ ⋂ over inner existentials x (u ∈ D_x) of
//                { y | D_y ⊆ D_x \ {u} }; with no inner existentials the
//                intersection is taken as { y | u ∉ D_y }.
std::vector<Var> outer_set(const Prefix& p, Var v);

// x ≲ y, i.e. x ∈ Outer_y.
bool prefix_leq(const Prefix& p, Var x, Var y);

// Outer sets memoized against a prefix version; invalidated whenever the
// prefix mutates underneath.
class OuterCache {
 public:
  const std::vector<Var>& outer(const Prefix& p, Var v);
  bool leq(const Prefix& p, Var x, Var y);

 private:
  uint64_t version_ = 0;
  bool primed_ = false;
  std::unordered_map<Var, std::vector<Var>> memo_;
};

// The assignment falsifying every literal x of d with x ≠ ¬pivot and
// var(x) ≲ var(pivot).  Requires ¬pivot ∈ d.
Assignment outer_assumptions(const Prefix& p, const Clause& d, Lit pivot,
                             OuterCache* cache = nullptr);

}  // namespace dqr

#endif  // DQR_PREFIXORDER_HPP_
