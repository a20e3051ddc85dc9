#include "dqr/textio.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace dqr {

namespace {

// Whitespace-separated tokens with line tracking; comment lines ("c" to
// end of line) are dropped here, every other record is 0-terminated and
// may wrap across newlines.
struct Tokenizer {
  struct Token {
    std::string text;
    int line;
  };
  std::vector<Token> tokens;
  size_t pos = 0;

  explicit Tokenizer(std::string_view text) {
    int line_no = 1;
    size_t i = 0;
    while (i < text.size()) {
      size_t eol = text.find('\n', i);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(i, eol - i);
      size_t j = 0;
      bool first_on_line = true;
      while (j < line.size()) {
        while (j < line.size() && (line[j] == ' ' || line[j] == '\t' || line[j] == '\r')) ++j;
        if (j >= line.size()) break;
        size_t k = j;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
        std::string tok(line.substr(j, k - j));
        if (first_on_line && tok == "c") {
          j = line.size();
          break;
        }
        first_on_line = false;
        tokens.push_back({std::move(tok), line_no});
        j = k;
      }
      i = eol + 1;
      ++line_no;
    }
  }

  bool done() const { return pos >= tokens.size(); }
  const Token& peek() const {
    if (done()) throw ParseError("unexpected end of input");
    return tokens[pos];
  }
  Token next() {
    Token t = peek();
    ++pos;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, int line) const {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
  }
};

bool to_int(const std::string& s, long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

long expect_int(Tokenizer& tz, const char* what) {
  auto t = tz.next();
  long v;
  if (!to_int(t.text, v)) tz.fail(std::string("expected ") + what + ", got '" + t.text + "'", t.line);
  return v;
}

// Integers up to and including the 0 terminator.
std::vector<int> read_record(Tokenizer& tz, int start_line) {
  std::vector<int> out;
  for (;;) {
    if (tz.done())
      throw ParseError("line " + std::to_string(start_line) + ": missing zero terminator");
    auto t = tz.next();
    long v;
    if (!to_int(t.text, v))
      tz.fail("expected integer, got '" + t.text + "'", t.line);
    if (v == 0) return out;
    out.push_back(static_cast<int>(v));
  }
}

}  // namespace

Formula parse_dqdimacs(std::string_view text, const ParseOptions& opts,
                       std::vector<std::string>* warnings) {
  Tokenizer tz(text);
  auto p = tz.next();
  if (p.text != "p") tz.fail("expected 'p cnf' header", p.line);
  auto cnf = tz.next();
  if (cnf.text != "cnf") tz.fail("expected 'p cnf' header", cnf.line);
  long header_vars = expect_int(tz, "variable count");
  long header_clauses = expect_int(tz, "clause count");
  if (header_vars < 0 || header_clauses < 0) tz.fail("malformed header", p.line);

  Formula f;
  bool seen_clause = false;

  auto check_var_range = [&](long v, int line) {
    if (v <= 0 || v > header_vars)
      tz.fail("variable " + std::to_string(v) + " out of range", line);
  };

  while (!tz.done()) {
    auto t = tz.peek();
    if (t.text == "a" || t.text == "e" || t.text == "d") {
      if (seen_clause) tz.fail("prefix line after clauses", t.line);
      tz.next();
      std::vector<int> rec = read_record(tz, t.line);
      if (t.text == "a") {
        for (int v : rec) {
          check_var_range(v, t.line);
          if (f.prefix.declared(v))
            tz.fail("variable " + std::to_string(v) + " already declared", t.line);
          f.prefix.declare_universal(v);
        }
      } else if (t.text == "e") {
        std::vector<Var> deps = f.prefix.universals();
        for (int v : rec) {
          check_var_range(v, t.line);
          if (f.prefix.declared(v))
            tz.fail("variable " + std::to_string(v) + " already declared", t.line);
          f.prefix.declare_existential(v, deps);
        }
      } else {
        if (rec.empty()) tz.fail("empty d line", t.line);
        int v = rec[0];
        check_var_range(v, t.line);
        if (f.prefix.declared(v))
          tz.fail(f.prefix.is_universal(v)
                      ? "d line for a non-existential variable " + std::to_string(v)
                      : "variable " + std::to_string(v) + " already declared",
                  t.line);
        std::vector<Var> deps;
        for (size_t i = 1; i < rec.size(); ++i) {
          check_var_range(rec[i], t.line);
          if (!f.prefix.is_universal(rec[i]))
            tz.fail("dependency " + std::to_string(rec[i]) +
                        " is not a declared universal",
                    t.line);
          deps.push_back(rec[i]);
        }
        f.prefix.declare_existential(v, std::move(deps));
      }
    } else {
      long v;
      if (!to_int(t.text, v)) tz.fail("unexpected token '" + t.text + "'", t.line);
      seen_clause = true;
      std::vector<int> rec = read_record(tz, t.line);
      std::vector<Lit> lits;
      for (int l : rec) {
        check_var_range(var_of(l), t.line);
        lits.push_back(l);
      }
      Clause c(std::move(lits));
      if (c.tautological()) {
        if (!opts.allow_taut)
          tz.fail("tautological clause (use --allow-taut to keep it)", t.line);
        if (warnings)
          warnings->push_back("line " + std::to_string(t.line) +
                              ": tautological clause kept, excluded from path computation");
      }
      f.matrix.push_back(std::move(c));
    }
  }

  // Free matrix variables: QRAT convention, innermost existential.
  std::vector<Var> free_vars;
  for (const Clause& c : f.matrix)
    for (Lit l : c)
      if (!f.prefix.declared(var_of(l))) free_vars.push_back(var_of(l));
  std::sort(free_vars.begin(), free_vars.end());
  free_vars.erase(std::unique(free_vars.begin(), free_vars.end()), free_vars.end());
  if (!free_vars.empty()) {
    if (opts.strict)
      throw ParseError("undeclared variable " + std::to_string(free_vars[0]) +
                       " in matrix (strict mode)");
    std::vector<Var> all_u = f.prefix.universals();
    for (Var v : free_vars) {
      f.prefix.declare_existential(v, all_u);
      if (warnings)
        warnings->push_back("free variable " + std::to_string(v) +
                            " bound existential with full universal dependency set");
    }
  }
  return f;
}

std::string serialize_dqdimacs(const Formula& f) {
  Var max_var = f.prefix.max_var();
  for (const Clause& c : f.matrix)
    for (Lit l : c) max_var = std::max(max_var, var_of(l));

  std::ostringstream out;
  out << "p cnf " << max_var << ' ' << f.matrix.size() << '\n';

  // Group declaration-order runs into a/e blocks; an existential whose
  // depset differs from the universals declared before it needs a d line.
  std::vector<Var> universals_so_far;
  char block = 0;
  std::vector<Var> block_vars;
  auto flush = [&]() {
    if (block_vars.empty()) return;
    out << block;
    for (Var v : block_vars) out << ' ' << v;
    out << " 0\n";
    block_vars.clear();
  };
  for (const VarDecl& d : f.prefix.decls()) {
    if (d.quant == Quant::Universal) {
      if (block != 'a') {
        flush();
        block = 'a';
      }
      block_vars.push_back(d.id);
      universals_so_far.push_back(d.id);
    } else {
      std::vector<Var> sorted_u = universals_so_far;
      std::sort(sorted_u.begin(), sorted_u.end());
      if (d.deps == sorted_u) {
        if (block != 'e') {
          flush();
          block = 'e';
        }
        block_vars.push_back(d.id);
      } else {
        flush();
        block = 0;
        out << "d " << d.id;
        for (Var u : d.deps) out << ' ' << u;
        out << " 0\n";
      }
    }
  }
  flush();

  for (const Clause& c : f.matrix) {
    for (Lit l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

ProofScript parse_dqrat(std::string_view text) {
  Tokenizer tz(text);
  ProofScript script;
  while (!tz.done()) {
    auto t = tz.peek();
    ProofLine line;
    if (t.text == "d") {
      tz.next();
      line.kind = ProofLine::Kind::DeleteClause;
      line.payload = read_record(tz, t.line);
    } else if (t.text == "u") {
      tz.next();
      line.kind = ProofLine::Kind::Reduce;
      line.payload = read_record(tz, t.line);
      if (line.payload.empty()) tz.fail("reduce line needs at least one literal", t.line);
    } else if (t.text == "a") {
      tz.next();
      line.kind = ProofLine::Kind::DeclareUniversal;
      line.payload = read_record(tz, t.line);
      for (int v : line.payload)
        if (v <= 0) tz.fail("a line takes positive variable identifiers", t.line);
    } else if (t.text == "e") {
      tz.next();
      line.kind = ProofLine::Kind::ModifyExistential;
      line.payload = read_record(tz, t.line);
      if (line.payload.empty() || line.payload[0] <= 0)
        tz.fail("e line needs a positive head variable", t.line);
    } else {
      long v;
      if (!to_int(t.text, v))
        tz.fail("unknown leading token '" + t.text + "'", t.line);
      line.kind = ProofLine::Kind::AddClause;
      line.payload = read_record(tz, t.line);
    }
    script.lines.push_back(std::move(line));
  }
  return script;
}

std::string serialize_dqrat(const ProofScript& p) {
  std::ostringstream out;
  for (const ProofLine& line : p.lines) {
    switch (line.kind) {
      case ProofLine::Kind::AddClause: break;
      case ProofLine::Kind::DeleteClause: out << "d "; break;
      case ProofLine::Kind::Reduce: out << "u "; break;
      case ProofLine::Kind::DeclareUniversal: out << "a "; break;
      case ProofLine::Kind::ModifyExistential: out << "e "; break;
    }
    for (int v : line.payload) out << v << ' ';
    out << "0\n";
  }
  return out.str();
}

ResProof parse_resproof(std::string_view text) {
  Tokenizer tz(text);
  ResProof proof;
  int next_free_id = 1;
  std::vector<char> defined;  // by id, ids are dense enough in practice
  auto mark_defined = [&](int id) {
    if (static_cast<size_t>(id) >= defined.size()) defined.resize(id + 1, 0);
    defined[id] = 1;
  };
  auto is_defined = [&](int id) {
    return id > 0 && static_cast<size_t>(id) < defined.size() && defined[id];
  };

  while (!tz.done()) {
    auto t = tz.peek();
    long id = expect_int(tz, "node identifier");
    if (id <= 0) tz.fail("node identifiers must be positive", t.line);
    if (id < next_free_id)
      tz.fail("node identifier " + std::to_string(id) + " not strictly increasing" +
                  (is_defined(static_cast<int>(id)) ? " (duplicate)" : ""),
              t.line);
    auto kind = tz.next();
    ResNode node;
    node.id = static_cast<int>(id);
    auto check_ant = [&](int a) {
      if (a <= 0 || a >= id || !is_defined(a))
        tz.fail("antecedent " + std::to_string(a) + " of node " + std::to_string(id) +
                    (a >= id ? " is a forward reference" : " does not exist"),
                kind.line);
    };
    if (kind.text == "a") {
      node.rule = ResNode::Rule::Axiom;
      for (int l : read_record(tz, kind.line)) node.lits.push_back(l);
    } else if (kind.text == "r") {
      node.rule = ResNode::Rule::Res;
      std::vector<int> rec = read_record(tz, kind.line);
      if (rec.size() < 2) tz.fail("r line needs two antecedents", kind.line);
      node.antecedents = {rec[0], rec[1]};
      check_ant(rec[0]);
      check_ant(rec[1]);
      node.lits.assign(rec.begin() + 2, rec.end());
    } else if (kind.text == "u") {
      node.rule = ResNode::Rule::Red;
      std::vector<int> rec = read_record(tz, kind.line);
      if (rec.empty()) tz.fail("u line needs an antecedent", kind.line);
      node.antecedents = {rec[0]};
      check_ant(rec[0]);
      node.lits.assign(rec.begin() + 1, rec.end());
    } else if (kind.text == "x") {
      node.rule = ResNode::Rule::IndExt;
      long v = expect_int(tz, "extension variable");
      if (v <= 0) tz.fail("extension variable must be positive", kind.line);
      node.ext_var = static_cast<Var>(v);
      auto sep = tz.next();
      if (sep.text != ":") tz.fail("expected ':' after extension variable", sep.line);
      for (;;) {
        auto tok = tz.peek();
        if (tok.text == ":") {
          tz.next();
          break;
        }
        long l = expect_int(tz, "alpha literal");
        if (l == 0) tz.fail("unexpected 0 inside alpha literals", tok.line);
        node.alpha.push_back(static_cast<Lit>(l));
      }
      std::vector<int> rec = read_record(tz, kind.line);
      if (rec.size() != 2) tz.fail("x line needs exactly two argument literals", kind.line);
      node.args = {rec[0], rec[1]};
    } else if (kind.text == "p") {
      node.rule = ResNode::Rule::PrefixAdd;
      std::vector<int> rec = read_record(tz, kind.line);
      if (rec.empty() || rec[0] <= 0) tz.fail("p line needs a positive variable", kind.line);
      node.ext_var = rec[0];
      for (size_t i = 1; i < rec.size(); ++i) {
        if (rec[i] <= 0) tz.fail("p line dependencies must be positive", kind.line);
        node.deps.push_back(rec[i]);
      }
    } else {
      tz.fail("unknown rule tag '" + kind.text + "'", kind.line);
    }
    int span = node.rule == ResNode::Rule::IndExt ? 3 : 1;
    for (int k = 0; k < span; ++k) mark_defined(node.id + k);
    next_free_id = node.id + span;
    proof.nodes.push_back(std::move(node));
  }
  return proof;
}

std::string serialize_resproof(const ResProof& p) {
  std::ostringstream out;
  for (const ResNode& n : p.nodes) {
    out << n.id << ' ';
    switch (n.rule) {
      case ResNode::Rule::Axiom:
        out << "a";
        for (Lit l : n.lits) out << ' ' << l;
        break;
      case ResNode::Rule::Res:
        out << "r " << n.antecedents[0] << ' ' << n.antecedents[1];
        for (Lit l : n.lits) out << ' ' << l;
        break;
      case ResNode::Rule::Red:
        out << "u " << n.antecedents[0];
        for (Lit l : n.lits) out << ' ' << l;
        break;
      case ResNode::Rule::IndExt:
        out << "x " << n.ext_var << " :";
        for (Lit l : n.alpha) out << ' ' << l;
        out << " :";
        for (Lit l : n.args) out << ' ' << l;
        break;
      case ResNode::Rule::PrefixAdd:
        out << "p " << n.ext_var;
        for (Var v : n.deps) out << ' ' << v;
        break;
    }
    out << " 0\n";
  }
  return out.str();
}

}  // namespace dqr
