#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// End-to-end coverage of the command-line surface: every assertion here runs
// the real binary through a shell, so argument parsing, exit codes and output
// bytes are all pinned.

namespace {

struct CliResult {
  int status = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(PCG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("family generation feeds validation") {
  const std::string state = temp_path("cli_ghz3.json");
  CHECK(run_cli("family ghz3 -o " + state).status == 0);

  const CliResult validated = run_cli("validate " + state);
  CHECK(validated.status == 0);
  const nlohmann::json j = nlohmann::json::parse(validated.output);
  CHECK(j["n"] == 3);
  CHECK(j["components"].size() == 4);
  CHECK(j["components"][0] == nlohmann::json::parse(R"({"sign": 1, "support": []})"));

  CHECK(run_cli("family nope").status == 2);
  CHECK(run_cli("family phi_n").status == 2);     // parameter required
  CHECK(run_cli("family phi_n --n 3").status == 2);
  CHECK(run_cli("family ghz3 --n 3").status == 2);
  CHECK(run_cli("family phi_n --n 6").status == 0);
}

TEST_CASE("validation reports violations and honors the mode switch") {
  const std::string bad = temp_path("cli_bad_state.json");
  std::ofstream(bad) << R"({"n": 2, "components": [
      {"sign": 1, "support": []}, {"sign": 1, "support": [1]}]})";

  const CliResult strict = run_cli("validate " + bad);
  CHECK(strict.status == 2);
  CHECK(contains(strict.output,
                 "violation: components[0] and components[1]: empty support "
                 "with singleton {1} violates the union condition"));

  CHECK(run_cli("validate " + bad + " --paper-compatible").status == 0);

  const std::string garbled = temp_path("cli_garbled.json");
  std::ofstream(garbled) << "{not json";
  CHECK(run_cli("validate " + garbled).status == 2);
  CHECK(run_cli("validate /nonexistent/state.json").status == 2);
}

TEST_CASE("the qubit guard reads its override from the environment") {
  const std::string wide = temp_path("cli_phi17.json");
  CHECK(run_cli("family phi_n --n 17 -o " + wide).status == 0);
  const CliResult rejected = run_cli("validate " + wide);
  CHECK(rejected.status == 2);
  CHECK(contains(rejected.output, "exceeds the guard of 16 qubits"));

  const std::string raised = "PCG_MAX_QUBITS=18 " + std::string(PCG_CLI_PATH) +
                             " validate " + wide + " > /dev/null 2>&1";
  CHECK(std::system(raised.c_str()) == 0);
  const std::string lowered = "PCG_MAX_QUBITS=8 " + std::string(PCG_CLI_PATH) +
                              " validate " + wide + " > /dev/null 2>&1";
  CHECK(std::system(lowered.c_str()) != 0);
}

TEST_CASE("outcome listing prints one line per component") {
  const std::string state = temp_path("cli_ghz3_outcomes.json");
  REQUIRE(run_cli("family ghz3 -o " + state).status == 0);
  const CliResult outcomes = run_cli("outcomes " + state);
  CHECK(outcomes.status == 0);
  CHECK(outcomes.output == "000 1/4\n011 1/4\n101 1/4\n110 1/4\n");
}

TEST_CASE("condition listing emits canonical json") {
  const std::string state = temp_path("cli_ghz3_hardy.json");
  REQUIRE(run_cli("family ghz3 -o " + state).status == 0);

  const CliResult set = run_cli("hardy " + state + " --outcome 000");
  CHECK(set.status == 0);
  const nlohmann::json j = nlohmann::json::parse(set.output);
  CHECK(j["outcome"] == "000");
  REQUIRE(j["conditions"].size() == 3);
  CHECK(j["conditions"][0]["edge"] == nlohmann::json::array({1, 2}));
  CHECK(j["conditions"][0]["alpha"] == -1);
  CHECK(j["conditions"][0]["witnesses"][0]["3"] == 1);

  const CliResult zero = run_cli("hardy " + state + " --outcome 111");
  CHECK(zero.status == 2);
  CHECK(contains(zero.output, "error: outcome has probability zero"));
}

TEST_CASE("full verification text output is stable") {
  const std::string state = temp_path("cli_ghz3_davn.json");
  REQUIRE(run_cli("family ghz3 -o " + state).status == 0);
  const CliResult davn = run_cli("davn " + state);
  CHECK(davn.status == 0);
  CHECK(davn.output ==
        "state: n=3, components=4\n"
        "non-stabilizer: inconclusive: all single-qubit marginals maximally mixed\n"
        "outcome 000  p=1/4  conditions=3  un-colorable [HLQP paradox]\n"
        "outcome 011  p=1/4  conditions=3  un-colorable [HLQP paradox]\n"
        "outcome 101  p=1/4  conditions=3  un-colorable [HLQP paradox]\n"
        "outcome 110  p=1/4  conditions=3  un-colorable [HLQP paradox]\n"
        "davn: true\n"
        "success probability: 4/4\n");
}

TEST_CASE("negative control text output includes lhv and witnesses") {
  const std::string state = temp_path("cli_fig1a.json");
  REQUIRE(run_cli("family fig1a -o " + state).status == 0);
  const CliResult davn = run_cli("davn " + state + " --with-lhv");
  CHECK(davn.status == 0);
  CHECK(davn.output ==
        "state: n=3, components=3\n"
        "non-stabilizer: certified, witness qubit 1, rho = diag(2/3, 1/3)\n"
        "outcome 001  p=1/3  conditions=2  colorable (no paradox), witness (-1,+1,+1)\n"
        "outcome 010  p=1/3  conditions=2  colorable (no paradox), witness (-1,+1,+1)\n"
        "outcome 100  p=1/3  conditions=2  colorable (no paradox), witness (-1,+1,+1)\n"
        "lhv consistent assignments: 6\n"
        "davn: false\n"
        "success probability: 0/3\n");

  CHECK(run_cli("davn " + state + " --expect-davn").status == 1);
}

TEST_CASE("json verification reports carry exact fields") {
  const std::string state = temp_path("cli_phi4.json");
  REQUIRE(run_cli("family phi4 -o " + state).status == 0);
  const CliResult davn = run_cli("davn " + state + " --json --with-lhv");
  CHECK(davn.status == 0);
  const nlohmann::json j = nlohmann::json::parse(davn.output);
  CHECK(j["davn"] == true);
  CHECK(j["success_probability"] == "7/7");
  CHECK(j["lhv_consistent_count"] == 0);
  CHECK(j["nonstabilizer"]["witness_qubit"] == 1);
  CHECK(j["nonstabilizer"]["rho"]["r00"] == "4/7");
  REQUIRE(j["outcomes"].size() == 7);
  CHECK(j["outcomes"][0]["condition_count"] == 6);
  CHECK(j["outcomes"][0]["certificate"].is_array());

  CHECK(run_cli("davn " + state + " --expect-davn").status == 0);
}

TEST_CASE("verification output is byte-identical for any worker count") {
  const std::string state = temp_path("cli_phi4_jobs.json");
  REQUIRE(run_cli("family phi4 -o " + state).status == 0);
  for (const std::string mode : {"", " --json"}) {
    const CliResult serial = run_cli("davn " + state + " --jobs 1" + mode);
    const CliResult wide = run_cli("davn " + state + " --jobs 4" + mode);
    CHECK(serial.status == 0);
    CHECK(wide.status == 0);
    CHECK(serial.output == wide.output);
  }
  CHECK(run_cli("davn " + state + " --jobs 0").status == 2);
  CHECK(run_cli("davn " + state + " --jobs 99").status == 2);
}

TEST_CASE("graph export and coloring verdicts") {
  const std::string state = temp_path("cli_fig1c.json");
  const std::string graph = temp_path("cli_fig1c_011.pcg.json");
  REQUIRE(run_cli("family fig1c -o " + state).status == 0);
  REQUIRE(run_cli("pcg " + state + " --outcome 011 -o " + graph).status == 0);

  const CliResult color = run_cli("color " + graph);
  CHECK(color.status == 0);
  CHECK(color.output == "un-colorable, certificate edges [0,1,2]\n");

  const CliResult dot = run_cli("dot " + graph);
  CHECK(dot.status == 0);
  CHECK(contains(dot.output, "graph pcg {"));
  CHECK(contains(dot.output, "1 -- 2 [color=\"red\"];"));
  CHECK(contains(dot.output, "2 -- 3 [color=\"green\"];"));

  const std::string colorable = temp_path("cli_fig1a_001.pcg.json");
  const std::string fig1a = temp_path("cli_fig1a_state.json");
  REQUIRE(run_cli("family fig1a -o " + fig1a).status == 0);
  REQUIRE(run_cli("pcg " + fig1a + " --outcome 001 -o " + colorable).status == 0);
  const CliResult witness = run_cli("color " + colorable);
  CHECK(witness.status == 0);
  CHECK(witness.output == "colorable, witness (-1,+1,+1)\n");
}

TEST_CASE("assignment scans print count and samples") {
  const std::string state = temp_path("cli_fig1a_lhv.json");
  REQUIRE(run_cli("family fig1a -o " + state).status == 0);

  const CliResult scan = run_cli("lhv " + state);
  CHECK(scan.status == 0);
  CHECK(scan.output ==
        "consistent assignments: 6\n"
        "z=001 x=011\n"
        "z=001 x=100\n"
        "z=010 x=011\n"
        "z=010 x=100\n"
        "z=100 x=011\n");

  const CliResult limited = run_cli("lhv " + state + " --limit 1");
  CHECK(limited.output == "consistent assignments: 6\nz=001 x=011\n");

  const std::string wide = temp_path("cli_phi2n3_5.json");
  REQUIRE(run_cli("family phi_2n3 --n 5 -o " + wide).status == 0);
  CHECK(run_cli("lhv " + wide).status == 2);  // 13 qubits over the default cap
}

TEST_CASE("certification subcommand prints both verdict shapes") {
  const std::string ghz = temp_path("cli_nonstab_ghz3.json");
  const std::string fig1a = temp_path("cli_nonstab_fig1a.json");
  REQUIRE(run_cli("family ghz3 -o " + ghz).status == 0);
  REQUIRE(run_cli("family fig1a -o " + fig1a).status == 0);

  CHECK(run_cli("nonstab " + ghz).output ==
        "inconclusive: all single-qubit marginals maximally mixed\n");
  CHECK(run_cli("nonstab " + fig1a).output ==
        "certified, witness qubit 1, rho = diag(2/3, 1/3)\n");

  const nlohmann::json j =
      nlohmann::json::parse(run_cli("nonstab " + fig1a + " --json").output);
  CHECK(j["certified"] == true);
  CHECK(j["rho"]["r00"] == "2/3");
}

TEST_CASE("top-level parsing errors exit with code 2") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("davn").status == 2);  // missing state file argument
}
