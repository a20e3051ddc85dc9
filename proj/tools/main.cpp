#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dqr/core.hpp"
#include "dqr/depscheme.hpp"
#include "dqr/dqratcheck.hpp"
#include "dqr/genfam.hpp"
#include "dqr/oracle.hpp"
#include "dqr/prefixorder.hpp"
#include "dqr/respsys.hpp"
#include "dqr/textio.hpp"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitRejected = 1;
constexpr int kExitNoRefutation = 2;
constexpr int kExitError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dqr::InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dqr::Scheme parse_scheme(const std::string& s) {
  if (s == "trv") return dqr::Scheme::Trv;
  if (s == "rrs") return dqr::Scheme::Rrs;
  if (s == "pu") return dqr::Scheme::Pu;
  throw dqr::InputError("unknown scheme: " + s);
}

int report_verdict(const dqr::Verdict& v) {
  switch (v.status) {
    case dqr::CheckStatus::RefutationVerified:
      std::cerr << "s VERIFIED\n";
      return kExitVerified;
    case dqr::CheckStatus::Rejected:
      std::cerr << "REJECT line=" << v.line << " rule=" << v.rule
                << " reason=" << v.reason << "\n";
      std::cerr << "s REJECTED\n";
      return kExitRejected;
    case dqr::CheckStatus::ProofValidNoRefutation:
      std::cerr << "s VALID-NO-REFUTATION\n";
      return kExitNoRefutation;
  }
  return kExitError;
}

dqr::Formula load_formula(const std::string& path, const dqr::ParseOptions& opts) {
  std::vector<std::string> warnings;
  dqr::Formula f = dqr::parse_dqdimacs(read_file(path), opts, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DQBF proof toolkit: DQRAT replay, dependency schemes, "
               "resolution checkers, generators and a semantic oracle"};
  app.require_subcommand(1);

  std::string formula_path, proof_path;
  std::string scheme_str = "pu";
  bool lplr = false, strict = false, allow_taut = false, json_out = false;

  auto* check = app.add_subcommand("check", "replay a .dqrat proof against a .dqdimacs formula");
  check->add_option("formula", formula_path)->required();
  check->add_option("proof", proof_path)->required();
  check->add_flag("--lplr", lplr, "allow lplr as a reduce fallback");
  check->add_option("--scheme", scheme_str, "scheme validating dependency removals")
      ->check(CLI::IsMember({"trv", "rrs", "pu"}));
  check->add_flag("--strict", strict, "reject undeclared variables");
  check->add_flag("--allow-taut", allow_taut, "keep tautological input clauses");

  auto* analyze = app.add_subcommand("analyze", "dependency pairs and outer sets");
  analyze->require_subcommand(1);
  auto* adeps = analyze->add_subcommand("deps", "print dependent (u,x) pairs");
  adeps->add_option("formula", formula_path)->required();
  adeps->add_option("--scheme", scheme_str)->check(CLI::IsMember({"trv", "rrs", "pu"}));
  adeps->add_flag("--json", json_out);
  adeps->add_flag("--allow-taut", allow_taut);
  auto* aouter = analyze->add_subcommand("outer", "print per-variable outer sets");
  aouter->add_option("formula", formula_path)->required();
  aouter->add_flag("--json", json_out);
  aouter->add_flag("--allow-taut", allow_taut);

  auto* apply = app.add_subcommand("apply", "shrink dependency sets to the scheme's pairs");
  apply->add_option("formula", formula_path)->required();
  apply->add_option("--scheme", scheme_str)->check(CLI::IsMember({"trv", "rrs", "pu"}));
  apply->add_flag("--allow-taut", allow_taut);

  std::string system_str = "ldq";
  auto* checkres = app.add_subcommand("checkres", "check a .resproof resolution proof");
  checkres->add_option("formula", formula_path)->required();
  checkres->add_option("proof", proof_path)->required();
  checkres->add_option("--system", system_str)->check(CLI::IsMember({"ldq", "dres"}));
  checkres->add_option("--scheme", scheme_str)->check(CLI::IsMember({"trv", "rrs", "pu"}));
  checkres->add_flag("--allow-taut", allow_taut);

  auto* translate = app.add_subcommand("translate", "translate a dres .resproof into .dqrat");
  translate->add_option("formula", formula_path)->required();
  translate->add_option("proof", proof_path)->required();

  std::string family_str = "ts_lqparity", proof_out;
  int family_n = 2;
  auto* gen = app.add_subcommand("gen", "generate a crafted formula family");
  gen->add_option("--family", family_str)
      ->check(CLI::IsMember({"ts_lqparity", "bridged_ts_lqparity", "running_example"}))
      ->required();
  gen->add_option("--n", family_n, "family size");
  gen->add_option("--proof", proof_out, "also write the short refutation to this path");

  uint64_t budget = uint64_t{1} << 24;
  auto* oracle = app.add_subcommand("oracle", "brute-force semantics");
  oracle->require_subcommand(1);
  auto* oeval = oracle->add_subcommand("eval", "evaluate a formula");
  oeval->add_option("formula", formula_path)->required();
  oeval->add_option("--budget", budget, "Skolem combination budget");
  oeval->add_flag("--allow-taut", allow_taut);
  int max_forall = 1, max_exists = 1, max_clauses = 1, max_width = 1;
  auto* osweep = oracle->add_subcommand("sweep", "exhaustive scheme soundness sweep");
  osweep->add_option("--max-forall", max_forall)->required();
  osweep->add_option("--max-exists", max_exists)->required();
  osweep->add_option("--max-clauses", max_clauses)->required();
  osweep->add_option("--max-width", max_width)->required();
  osweep->add_option("--budget", budget);
  osweep->add_flag("--json", json_out);

  CLI11_PARSE(app, argc, argv);

  try {
    dqr::ParseOptions popts;
    popts.strict = strict;
    popts.allow_taut = allow_taut;

    if (check->parsed()) {
      dqr::Formula f = load_formula(formula_path, popts);
      dqr::ProofScript script = dqr::parse_dqrat(read_file(proof_path));
      dqr::CheckOptions opts;
      opts.lplr = lplr;
      opts.strict = strict;
      opts.removal_scheme = parse_scheme(scheme_str);
      return report_verdict(dqr::check_script(f, script, opts));
    }

    if (adeps->parsed()) {
      dqr::Formula f = load_formula(formula_path, popts);
      auto pairs = dqr::all_pairs(f, parse_scheme(scheme_str));
      if (json_out) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["scheme"] = scheme_str;
        j["pairs"] = nlohmann::json::array();
        for (auto [u, x] : pairs) j["pairs"].push_back({u, x});
        std::cout << j.dump() << "\n";
      } else {
        for (auto [u, x] : pairs) std::cout << u << " " << x << "\n";
      }
      return 0;
    }

    if (aouter->parsed()) {
      dqr::Formula f = load_formula(formula_path, popts);
      nlohmann::json j;
      j["schema_version"] = 1;
      for (const dqr::VarDecl& d : f.prefix.decls()) {
        auto outer = dqr::outer_set(f.prefix, d.id);
        if (json_out) {
          j["outer"][std::to_string(d.id)] = outer;
        } else {
          std::cout << "Outer(" << d.id << ") = {";
          for (size_t i = 0; i < outer.size(); ++i)
            std::cout << (i ? " " : "") << outer[i];
          std::cout << "}\n";
        }
      }
      if (json_out) std::cout << j.dump() << "\n";
      return 0;
    }

    if (apply->parsed()) {
      dqr::Formula f = load_formula(formula_path, popts);
      std::cout << dqr::serialize_dqdimacs(dqr::apply_scheme(f, parse_scheme(scheme_str)));
      return 0;
    }

    if (checkres->parsed()) {
      dqr::Formula f = load_formula(formula_path, popts);
      dqr::ResProof rp = dqr::parse_resproof(read_file(proof_path));
      if (system_str == "ldq") {
        if (!dqr::qbf_shaped(f))
          std::cerr << "warning: input is not QBF-shaped; "
                       "long-distance Q-resolution is not sound for DQBF\n";
        dqr::LdqConfig cfg;
        cfg.scheme = parse_scheme(scheme_str);
        return report_verdict(dqr::check_ldq(f, rp, cfg));
      }
      return report_verdict(dqr::check_dres(f, rp));
    }

    if (translate->parsed()) {
      dqr::Formula f = load_formula(formula_path, popts);
      dqr::ResProof rp = dqr::parse_resproof(read_file(proof_path));
      std::cout << dqr::serialize_dqrat(dqr::translate_dres_to_dqrat(f, rp));
      return 0;
    }

    if (gen->parsed()) {
      dqr::FamilyParams params;
      if (family_str == "ts_lqparity") params.family = dqr::Family::TsLqparity;
      else if (family_str == "bridged_ts_lqparity") params.family = dqr::Family::BridgedTsLqparity;
      else params.family = dqr::Family::RunningExample;
      params.n = family_n;
      dqr::Formula f = dqr::gen_family(params);
      std::cout << dqr::family_comment(params) << dqr::serialize_dqdimacs(f);
      if (!proof_out.empty()) {
        if (params.family != dqr::Family::BridgedTsLqparity)
          throw dqr::InputError("--proof is only available for bridged_ts_lqparity");
        std::ofstream out(proof_out, std::ios::binary);
        if (!out) throw dqr::InputError("cannot write " + proof_out);
        out << dqr::serialize_resproof(dqr::gen_bridged_refutation(params.n));
      }
      return 0;
    }

    if (oeval->parsed()) {
      dqr::Formula f = load_formula(formula_path, popts);
      dqr::OracleLimits limits;
      limits.budget = budget;
      std::cout << (dqr::eval_dqbf(f, limits) ? "true" : "false") << "\n";
      return 0;
    }

    if (osweep->parsed()) {
      dqr::EnumParams params;
      params.max_forall = max_forall;
      params.max_exists = max_exists;
      params.max_clauses = max_clauses;
      params.max_width = max_width;
      dqr::OracleLimits limits;
      limits.budget = budget;
      dqr::SweepReport report = dqr::scheme_soundness_sweep(params, limits);
      if (json_out) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["instances"] = report.instances;
        j["truth_checks"] = report.truth_checks;
        j["violations"] = report.violations;
        j["seconds"] = report.seconds;
        j["failures"] = report.failures;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "instances " << report.instances << "\n"
                  << "truth-checks " << report.truth_checks << "\n"
                  << "violations " << report.violations << "\n"
                  << "seconds " << report.seconds << "\n";
        for (const std::string& s : report.failures) std::cout << "failure: " << s << "\n";
      }
      return report.violations == 0 ? 0 : kExitRejected;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
