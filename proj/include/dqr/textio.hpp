#ifndef DQR_TEXTIO_HPP_
#define DQR_TEXTIO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "dqr/core.hpp"

namespace dqr {

struct ParseError : InputError {
  explicit ParseError(const std::string& msg) : InputError(msg) {}
};

struct ParseOptions {
  bool strict = false;      // free matrix variables are an error
  bool allow_taut = false;  // keep tautological input clauses (warn)
};

// One .dqrat record.  Literal/variable lists keep source order; the
// DQRAT pivot and the reduced literal are positional.
struct ProofLine {
  enum class Kind {
    AddClause,          // lits
    DeleteClause,       // lits
    Reduce,             // lits, first one is reduced
    DeclareUniversal,   // vars
    ModifyExistential,  // head var, then signed deltas
  };
  Kind kind = Kind::AddClause;
  std::vector<int> payload;
};

struct ProofScript {
  std::vector<ProofLine> lines;
};

// One .resproof node.  An IndExt line occupies ids id, id+1, id+2 for
// its three emitted clauses.
struct ResNode {
  enum class Rule { Axiom, Res, Red, IndExt, PrefixAdd };
  int id = 0;
  Rule rule = Rule::Axiom;
  std::vector<int> antecedents;  // Res: 2, Red: 1
  std::vector<Lit> lits;         // stated clause, source order
  Var ext_var = 0;               // IndExt / PrefixAdd
  std::vector<Lit> alpha;        // IndExt: the ¬α literals as written
  std::vector<Lit> args;         // IndExt: exactly two argument literals
  std::vector<Var> deps;         // PrefixAdd
};

struct ResProof {
  std::vector<ResNode> nodes;
};

Formula parse_dqdimacs(std::string_view text, const ParseOptions& opts = {},
                       std::vector<std::string>* warnings = nullptr);
std::string serialize_dqdimacs(const Formula& f);

ProofScript parse_dqrat(std::string_view text);
std::string serialize_dqrat(const ProofScript& p);

ResProof parse_resproof(std::string_view text);
std::string serialize_resproof(const ResProof& p);

}  // namespace dqr

#endif  // DQR_TEXTIO_HPP_
