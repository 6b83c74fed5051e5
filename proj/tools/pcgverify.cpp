// Command-line front end: exact verification of deterministic all-versus-
// nothing (DAVN) nonlocality proofs from projected-coloring-graph states.
//
// Exit codes: 0 success, 1 verification-negative under --expect-davn,
// 2 input or guard errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcg/davn.hpp"
#include "pcg/error.hpp"
#include "pcg/families.hpp"
#include "pcg/json_io.hpp"

namespace {

using nlohmann::json;
using namespace pcg;

constexpr int kOk = 0;
constexpr int kVerificationNegative = 1;
constexpr int kInputError = 2;

int guard_from_env() {
  const char* raw = std::getenv("PCG_MAX_QUBITS");
  if (raw == nullptr || *raw == '\0') return ValidationOptions{}.max_qubits;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1 || value > kMaxQubits) {
    throw PcgError("PCG_MAX_QUBITS must be an integer in 1.." +
                   std::to_string(kMaxQubits));
  }
  return static_cast<int>(value);
}

ValidationOptions options_for(bool paper_compatible) {
  ValidationOptions options;
  options.mode = paper_compatible ? ValidationMode::PaperCompatible
                                  : ValidationMode::Strict;
  options.max_qubits = guard_from_env();
  return options;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw PcgError("cannot write " + path);
  out << text;
}

std::string coloring_str(const Coloring& c) {
  std::string out = "(";
  for (int q = 1; q <= c.n; ++q) {
    if (q > 1) out += ",";
    out += c.value(q) > 0 ? "+1" : "-1";
  }
  return out + ")";
}

std::string nonstab_str(const NonstabilizerResult& r) {
  if (!r.certified) return "inconclusive: " + r.reason;
  return "certified, witness qubit " + std::to_string(r.witness_qubit) +
         ", rho = diag(" + r.rho.r00.str() + ", " + r.rho.r11.str() + ")";
}

void print_davn_text(const PcgStateSpec& state, const DavnReport& report) {
  std::cout << "state: n=" << state.n << ", components=" << report.state_size
            << "\n";
  std::cout << "non-stabilizer: " << nonstab_str(report.nonstabilizer) << "\n";
  for (const OutcomeRecord& record : report.records) {
    std::cout << "outcome " << record.outcome.bitstring()
              << "  p=" << record.probability.str()
              << "  conditions=" << record.condition_count();
    if (record.verdict.colorable) {
      std::cout << "  colorable (no paradox), witness "
                << coloring_str(record.verdict.witness);
    } else {
      std::cout << "  un-colorable [HLQP paradox]";
    }
    std::cout << "\n";
  }
  if (report.lhv_consistent_count) {
    std::cout << "lhv consistent assignments: " << *report.lhv_consistent_count
              << "\n";
  }
  std::cout << "davn: " << (report.davn ? "true" : "false") << "\n";
  std::cout << "success probability: " << report.uncolorable_count << "/"
            << report.state_size << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact DAVN verification for projected-coloring-graph states"};
  app.require_subcommand(1);

  // validate
  std::string validate_file;
  bool validate_paper = false;
  bool validate_strict = false;
  auto* validate = app.add_subcommand("validate", "check a state file, print canonical json");
  validate->add_option("file", validate_file)->required();
  auto* strict_flag = validate->add_flag("--strict", validate_strict, "strict invariants (default)");
  validate->add_flag("--paper-compatible", validate_paper, "allow full supports")
      ->excludes(strict_flag);

  // family
  std::string family_arg;
  std::optional<int> family_n;
  std::string family_out;
  auto* family = app.add_subcommand("family", "generate a named family state");
  family->add_option("name", family_arg)->required();
  family->add_option("--n", family_n, "family parameter");
  family->add_option("-o,--output", family_out, "write to file instead of stdout");

  // per-state commands share the --paper-compatible switch
  struct StateArgs {
    std::string file;
    bool paper = false;
  };
  auto add_state_command = [&](const char* name, const char* desc) {
    auto* cmd = app.add_subcommand(name, desc);
    auto args = std::make_shared<StateArgs>();
    cmd->add_option("file", args->file)->required();
    cmd->add_flag("--paper-compatible", args->paper, "allow full supports");
    return std::make_pair(cmd, args);
  };

  auto [outcomes_cmd, outcomes_args] =
      add_state_command("outcomes", "list observable outcomes and probabilities");

  auto [hardy_cmd, hardy_args] =
      add_state_command("hardy", "derive the condition group of one outcome");
  std::string hardy_outcome;
  bool hardy_paper_edges = false;
  hardy_cmd->add_option("--outcome", hardy_outcome, "outcome bitstring ('0' is Z=+1)")
      ->required();
  hardy_cmd->add_flag("--paper-edges-only", hardy_paper_edges,
                      "skip the unconditioned full-set edge");

  auto [pcg_cmd, pcg_args] =
      add_state_command("pcg", "build the projected-coloring graph of one outcome");
  std::string pcg_outcome;
  std::string pcg_out;
  bool pcg_paper_edges = false;
  pcg_cmd->add_option("--outcome", pcg_outcome, "outcome bitstring ('0' is Z=+1)")
      ->required();
  pcg_cmd->add_option("-o,--output", pcg_out, "write to file instead of stdout");
  pcg_cmd->add_flag("--paper-edges-only", pcg_paper_edges,
                    "skip the unconditioned full-set edge");

  std::string color_file;
  auto* color = app.add_subcommand("color", "decide 2-colorability of a graph file");
  color->add_option("file", color_file)->required();

  std::string dot_file;
  auto* dot = app.add_subcommand("dot", "render a graph file as graphviz text");
  dot->add_option("file", dot_file)->required();

  auto [davn_cmd, davn_args] = add_state_command("davn", "full DAVN verification");
  bool davn_json = false;
  bool davn_with_lhv = false;
  bool davn_expect = false;
  bool davn_paper_edges = false;
  int davn_jobs = 1;
  davn_cmd->add_flag("--json", davn_json, "machine-readable report");
  davn_cmd->add_flag("--with-lhv", davn_with_lhv, "include the LHV enumeration count");
  davn_cmd->add_flag("--expect-davn", davn_expect, "exit 1 unless the verdict is davn");
  davn_cmd->add_flag("--paper-edges-only", davn_paper_edges,
                     "skip the unconditioned full-set edge");
  davn_cmd->add_option("--jobs", davn_jobs, "parallel outcome workers")
      ->check(CLI::Range(1, 64));

  auto [lhv_cmd, lhv_args] =
      add_state_command("lhv", "enumerate deterministic local assignments");
  std::int64_t lhv_limit = 5;
  int lhv_max_qubits = 12;
  lhv_cmd->add_option("--limit", lhv_limit, "sample lines to print")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1000000}));
  lhv_cmd->add_option("--max-qubits", lhv_max_qubits, "raise the enumeration guard")
      ->check(CLI::Range(1, 20));

  auto [nonstab_cmd, nonstab_args] =
      add_state_command("nonstab", "certify non-stabilizerness");
  bool nonstab_json = false;
  nonstab_cmd->add_flag("--json", nonstab_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) {
      std::ifstream in(validate_file);
      if (!in) throw PcgError("cannot open " + validate_file);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw PcgError(validate_file + ": " + e.what());
      }
      const ValidationResult result =
          validate_pcg_state(raw_state_from_json(j), options_for(validate_paper));
      if (!result.ok()) {
        for (const Violation& v : result.violations) {
          std::cerr << "violation: " << v.message << "\n";
        }
        return kInputError;
      }
      emit_json(state_to_json(*result.spec));
      return kOk;
    }

    if (family->parsed()) {
      const auto id = family_from_name(family_arg);
      if (!id) {
        std::string names;
        for (const std::string& name : family_names()) names += " " + name;
        throw PcgError("unknown family \"" + family_arg + "\"; known:" + names);
      }
      const PcgStateSpec state = generate({*id, family_n});
      write_output(family_out, state_to_json(state).dump(2) + "\n");
      return kOk;
    }

    if (outcomes_cmd->parsed()) {
      const PcgStateSpec state =
          load_state_file(outcomes_args->file, options_for(outcomes_args->paper));
      for (const auto& [outcome, p] : outcome_support(state)) {
        std::cout << outcome.bitstring() << " " << p.str() << "\n";
      }
      return kOk;
    }

    if (hardy_cmd->parsed()) {
      const PcgStateSpec state =
          load_state_file(hardy_args->file, options_for(hardy_args->paper));
      const Outcome outcome = Outcome::from_bitstring(hardy_outcome);
      const ConditionSet set =
          derive_conditions(state, outcome, {hardy_paper_edges});
      emit_json(condition_set_to_json(set));
      return kOk;
    }

    if (pcg_cmd->parsed()) {
      const PcgStateSpec state =
          load_state_file(pcg_args->file, options_for(pcg_args->paper));
      const Outcome outcome = Outcome::from_bitstring(pcg_outcome);
      const ConditionSet set = derive_conditions(state, outcome, {pcg_paper_edges});
      write_output(pcg_out, pcg_to_json(build_pcg(outcome, set)).dump(2) + "\n");
      return kOk;
    }

    if (color->parsed()) {
      const Pcg graph = load_pcg_file(color_file);
      const ColorabilityResult result = check_colorable(graph);
      if (result.colorable) {
        std::cout << "colorable, witness " << coloring_str(result.witness) << "\n";
      } else {
        std::cout << "un-colorable, certificate edges [";
        const std::vector<int>& cert = *result.certificate;
        for (std::size_t i = 0; i < cert.size(); ++i) {
          if (i > 0) std::cout << ",";
          std::cout << cert[i];
        }
        std::cout << "]\n";
      }
      return kOk;
    }

    if (dot->parsed()) {
      std::cout << export_dot(load_pcg_file(dot_file));
      return kOk;
    }

    if (davn_cmd->parsed()) {
      const PcgStateSpec state =
          load_state_file(davn_args->file, options_for(davn_args->paper));
      DavnOptions options;
      options.jobs = davn_jobs;
      options.with_lhv = davn_with_lhv;
      options.derive.paper_edges_only = davn_paper_edges;
      const DavnReport report = verify_davn(state, options);
      if (davn_json) {
        emit_json(report_to_json(report));
      } else {
        print_davn_text(state, report);
      }
      if (davn_expect && !report.davn) return kVerificationNegative;
      return kOk;
    }

    if (lhv_cmd->parsed()) {
      const PcgStateSpec state =
          load_state_file(lhv_args->file, options_for(lhv_args->paper));
      const LhvScan scan = lhv_consistent_assignments(state, lhv_limit, lhv_max_qubits);
      std::cout << "consistent assignments: " << scan.count << "\n";
      for (const LhvAssignment& a : scan.samples) {
        std::cout << "z=" << Outcome{a.n, a.z_minus}.bitstring()
                  << " x=" << Outcome{a.n, a.x_minus}.bitstring() << "\n";
      }
      return kOk;
    }

    if (nonstab_cmd->parsed()) {
      const PcgStateSpec state =
          load_state_file(nonstab_args->file, options_for(nonstab_args->paper));
      const NonstabilizerResult result = certify_nonstabilizer(state);
      if (nonstab_json) {
        emit_json(nonstabilizer_to_json(result));
      } else {
        std::cout << nonstab_str(result) << "\n";
      }
      return kOk;
    }
  } catch (const PcgError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
