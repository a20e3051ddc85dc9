#ifndef DQR_DEPSCHEME_HPP_
#define DQR_DEPSCHEME_HPP_

#include <span>
#include <utility>
#include <vector>

#include "dqr/core.hpp"

namespace dqr {

enum class Scheme { Trv, Rrs, Pu };

const char* scheme_name(Scheme s);

// Fixpoint reach sets: clause indices plus collected S-literals.
struct ReachSets {
  std::vector<size_t> clauses;  // sorted
  std::vector<Lit> literals;    // canonical literal order

  bool has_clause(size_t ci) const;
  bool has_literal(Lit l) const;
};

// Least fixpoint: start with the seed clauses and their S-literals; for
// each collected literal p, enter every clause E with ¬p ∈ E and collect
// E's S-literals except ¬p.  Tautological clauses take no part.
ReachSets rrs_reach(const Formula& f, std::span<const size_t> seed,
                    std::span<const Var> s);

// Same fixpoint, except a clause E may only be entered if ¬param ∉ E.
// Seed clauses are admitted unconditionally.
ReachSets pu_reach(const Formula& f, Lit param, std::span<const size_t> seed,
                   std::span<const Var> s);

// S_u: existential variables with u in their dependency set.
std::vector<Var> dependers(const Prefix& p, Var u);

// u ⇝ x over S_u, seeded at the clauses containing the literal u.
bool rrs_connected(const Formula& f, Lit ulit, Lit elit);
bool pu_connected(const Formula& f, Lit ulit, Lit elit);

// (u,x) ∈ D_scheme: u ∈ D_x and, for rrs/pu, one of the two polarity
// combinations u⇝x ∧ ¬u⇝¬x or ¬u⇝x ∧ u⇝¬x holds.
bool pair_in_scheme(const Formula& f, Var u, Var x, Scheme scheme);

// All dependent (u,x) pairs; one reach per universal literal.
std::vector<std::pair<Var, Var>> all_pairs(const Formula& f, Scheme scheme);

// Same matrix, every dependency set shrunk to the scheme's pairs.
Formula apply_scheme(const Formula& f, Scheme scheme);

// Extended universal reduction: no S_u-resolution path from clause ci to
// any clause containing ¬u.
bool eur_ok(const Formula& f, size_t ci, Lit u);

// Local pure literal reduction: no u-free S_u-path from clause ci to any
// clause containing ¬u (expansion may not enter clauses containing u).
bool lplr_ok(const Formula& f, size_t ci, Lit u);

}  // namespace dqr

#endif  // DQR_DEPSCHEME_HPP_
