#ifndef DQR_CORE_HPP_
#define DQR_CORE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dqr {

// Literals are nonzero integers: magnitude = variable, sign = polarity.
using Var = int32_t;
using Lit = int32_t;

inline Var var_of(Lit l) { return l < 0 ? -l : l; }
inline bool is_pos(Lit l) { return l > 0; }
inline Lit neg_lit(Lit l) { return -l; }
inline Lit mk_lit(Var v, bool positive) { return positive ? v : -v; }

struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Clause in canonical form: literals sorted by variable then sign,
// duplicates merged.  A clause containing both l and -l is kept but
// flagged tautological; the empty clause is valid and denotes bottom.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits);

  const std::vector<Lit>& lits() const { return lits_; }
  size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool tautological() const { return taut_; }
  bool contains(Lit l) const;
  bool contains_var(Var v) const;
  // Copy with every occurrence of l removed.
  Clause without(Lit l) const;

  bool operator==(const Clause& other) const { return lits_ == other.lits_; }
  bool operator!=(const Clause& other) const { return !(*this == other); }

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

 private:
  std::vector<Lit> lits_;
  bool taut_ = false;
};

// Partial assignment, each variable bound at most once.
class Assignment {
 public:
  Assignment() = default;

  std::optional<bool> value(Var v) const;
  bool satisfies(Lit l) const;
  bool falsifies(Lit l) const;
  // Binds l to true; throws InputError if the opposite binding exists.
  void bind(Lit l);
  bool empty() const { return map_.empty(); }
  size_t size() const { return map_.size(); }
  // The assignment as a string of true literals, sorted by variable.
  std::vector<Lit> lits() const;

 private:
  std::unordered_map<Var, bool> map_;
};

enum class Quant : uint8_t { Universal, Existential };

struct VarDecl {
  Var id = 0;
  Quant quant = Quant::Existential;
  std::vector<Var> deps;  // sorted; meaningful for existentials only
};

// Quantifier prefix with per-existential dependency sets.  Universal
// variables carry the implicit singleton depset {u}.  Declaration order
// is preserved for serialization.  Any mutation bumps version(), which
// gates caches of derived data (outer sets).
class Prefix {
 public:
  bool declared(Var v) const { return index_.count(v) != 0; }
  Quant quant(Var v) const { return decl(v).quant; }
  bool is_universal(Var v) const { return declared(v) && quant(v) == Quant::Universal; }
  bool is_existential(Var v) const { return declared(v) && quant(v) == Quant::Existential; }

  // Explicit dependency set of an existential variable.
  const std::vector<Var>& deps(Var v) const;
  // Overloaded D: universal u yields {u}.
  std::vector<Var> depset(Var v) const;
  bool depends_on(Var x, Var u) const;

  void declare_universal(Var v);
  void declare_existential(Var v, std::vector<Var> deps);
  // Returns false if u was already present.
  bool add_dep(Var x, Var u);
  void remove_dep(Var x, Var u);

  const std::vector<VarDecl>& decls() const { return decls_; }
  std::vector<Var> universals() const;
  std::vector<Var> existentials() const;
  Var max_var() const;
  uint64_t version() const { return version_; }

 private:
  const VarDecl& decl(Var v) const;
  VarDecl& decl_mut(Var v);

  std::vector<VarDecl> decls_;
  std::unordered_map<Var, size_t> index_;
  uint64_t version_ = 0;
};

struct Formula {
  Prefix prefix;
  std::vector<Clause> matrix;
};

// Restriction m|_a: satisfied clauses removed, falsified literals
// removed from the remaining clauses.
std::vector<Clause> restrict_matrix(std::span<const Clause> m, const Assignment& a);

// D_C: union of depsets over the clause's variables ({u} for universals).
std::vector<Var> clause_depset(const Prefix& p, const Clause& c);

// The assignment falsifying every literal of c.  Rejects tautologies.
Assignment negate_clause(const Clause& c);

// Canonical sort: ascending variable, positive literal first within one.
void canonicalize_lits(std::vector<Lit>& lits);

}  // namespace dqr

#endif  // DQR_CORE_HPP_
