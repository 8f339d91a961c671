#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "psr/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(PSR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "psr_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
  fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("compute runs every rule on the running example") {
  std::string profile = write_scratch("example1.profile", psr::test::kExample1);
  struct Case {
    const char* rule;
    const char* outcome;
  } cases[] = {
      {"do", "[\n    \"d\"\n  ]"},   {"stv", "\"b\",\n    \"d\""}, {"gp", "\"a\",\n    \"d\""},
      {"maxp", "\"a\",\n    \"d\""}, {"maxr", "\"b\",\n    \"d\""},
  };
  for (const Case& c : cases) {
    CliResult r = run_cli("compute --rule " + std::string(c.rule) + " --profile " + profile +
                          " --tau 5");
    CAPTURE(c.rule);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find(c.outcome) != std::string::npos);
  }
}

TEST_CASE("compute picks up the profile's default threshold") {
  std::string profile =
      write_scratch("with_tau.profile", "#! parties: a,b\n#! tau: 50%\n3: a\n1: b\n");
  CliResult r = run_cli("compute --rule do --profile " + profile);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"outcome\": [\n    \"a\"\n  ]") != std::string::npos);
}

TEST_CASE("compute with seats and percent threshold") {
  std::string profile = write_scratch(
      "appd.profile",
      "#! parties: Red,Green,Pink,Blue,Brown\n"
      "8: Red>Pink>Green\n6: Green>Pink>Red\n5: Pink>Green>Red\n"
      "7: Red>Green>Pink\n5: Green>Red>Pink\n5: Pink>Red>Green\n"
      "10: Blue>Pink\n35: Brown>Blue\n4: Pink>Blue>Green\n15: Blue>Brown\n");
  CliResult r = run_cli("compute --rule do --profile " + profile + " --tau 15% --seats 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"Red\": 4") != std::string::npos);
  CHECK(r.output.find("\"Blue\": 3") != std::string::npos);
  CHECK(r.output.find("\"Brown\": 3") != std::string::npos);

  CliResult flat = run_cli("compute --rule stv --profile " + profile +
                           " --tau 15 --seats 10 --format flat");
  CHECK(flat.exit_code == 0);
  CHECK(flat.output.find("Brown\t35\t") != std::string::npos);
}

TEST_CASE("parallel universe flag") {
  std::string profile = write_scratch("tied.profile", "#! parties: a,b\n1: a\n1: b\n");
  CliResult r = run_cli("compute --rule stv --profile " + profile +
                        " --tau 2 --parallel-universe");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"universe\"") != std::string::npos);
}

TEST_CASE("axiom check exit codes distinguish pass and violation") {
  std::string profile = write_scratch("thr.profile", "#! parties: a,b\n3: a>b\n2: b\n");
  CliResult bad = run_cli("axioms check --axiom threshold_monotonicity --rule gp --profile " +
                          profile + " --tau 3 --tau2 4");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("\"kind\": \"violation\"") != std::string::npos);

  CliResult good = run_cli("axioms check --axiom threshold_monotonicity --rule do --profile " +
                           profile + " --tau 3 --tau2 4");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("pass") != std::string::npos);
}

TEST_CASE("guard violations exit with code 3") {
  std::string ids = "p0";
  for (int i = 1; i < 17; ++i) ids += ",p" + std::to_string(i);
  std::string profile = write_scratch("big.profile", "#! parties: " + ids + "\n1: p0\n");
  CliResult r = run_cli("compute --rule maxp --profile " + profile + " --tau 0");
  CHECK(r.exit_code == 3);
}

TEST_CASE("input errors exit with code 2") {
  std::string profile = write_scratch("broken.profile", "#! parties: a\n1: zzz\n");
  CliResult r = run_cli("compute --rule do --profile " + profile + " --tau 0");
  CHECK(r.exit_code == 2);
  CliResult missing = run_cli("compute --rule do --profile /nonexistent --tau 0");
  CHECK(missing.exit_code == 2);
  CliResult badrule = run_cli("compute --rule nope --profile " + profile + " --tau 0");
  CHECK(badrule.exit_code == 2);
}

TEST_CASE("axiom search reports violations with exit code 1") {
  CliResult r = run_cli(
      "axioms search --axiom monotonicity --rule stv --trials 5000 "
      "--max-parties 5 --max-voters 10 --seed 11");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"axiom\": \"monotonicity\"") != std::string::npos);
  CliResult ok = run_cli(
      "axioms search --axiom monotonicity --rule do --trials 200 "
      "--max-parties 4 --max-voters 8 --seed 11");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("experiment sweep emits a flat table") {
  std::string profile = write_scratch("example1.profile", psr::test::kExample1);
  CliResult r = run_cli("experiment sweep --profile " + profile +
                        " --rule stv --tau-from 1 --tau-to 7 --steps 7 --format flat");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("unrepresented_share") != std::string::npos);
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 8);  // header + 7 rows
}

TEST_CASE("experiment truncate") {
  std::string profile = write_scratch("example1.profile", psr::test::kExample1);
  CliResult r = run_cli("experiment truncate --profile " + profile +
                        " --rule gp --tau 5 --k-from 1 --k-to 3 --format flat");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 4);
}

TEST_CASE("experiment noise is byte-identical per seed") {
  std::string profile = write_scratch("example1.profile", psr::test::kExample1);
  std::string args = "experiment noise --profile " + profile +
                     " --rule stv --tau-from 1% --tau-to 40% --steps 4 --samples 15 "
                     "--sigma 0.1 --seed 7";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"p20\"") != std::string::npos);
}

TEST_CASE("strategic classification pipeline") {
  std::string survey = write_scratch("survey.csv",
                                     "respondent_id,intention,two_vote,full_ranking,completed_at\n"
                                     "1,big,big;tiny,big;tiny,\n"
                                     "2,big,tiny;big,tiny;big,\n"
                                     "3,edge,edge,edge,\n"
                                     "4,,tiny,tiny,\n");
  std::string results = write_scratch("results.csv",
                                      "party,share\nbig,40%\nedge,5.5%\ntiny,2%\n");
  CliResult r = run_cli("experiment strategic --survey " + survey + " --results " + results +
                        " --buckets 7,5,6,3 --ranking-source two_vote");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"sincere\"") != std::string::npos);
  CHECK(r.output.find("\"out_to_safe\"") != std::string::npos);
  CHECK(r.output.find("\"excluded_rows\": 1") != std::string::npos);
}

TEST_CASE("zenodo conversion") {
  std::string input = write_scratch("zenodo.csv",
                                    "ID,vote,deux,classement\n"
                                    "5,Liste A,Liste A;Liste B,Liste A;Liste B;Liste C\n");
  std::string map = write_scratch("map.json", R"({
    "respondent_id": "ID",
    "intention": "vote",
    "two_vote": "deux",
    "full_ranking": "classement",
    "party_map": {"Liste A": "a", "Liste B": "b", "Liste C": "c"}
  })");
  std::string out = (scratch_dir() / "converted.csv").string();
  CliResult r = run_cli("convert --from zenodo-csv --to survey-csv --map " + map + " --input " +
                        input + " --output " + out);
  CHECK(r.exit_code == 0);
  std::string converted = psr::read_file(out);
  CHECK(converted.find("respondent_id,intention,two_vote,full_ranking") == 0);
  CHECK(converted.find("5,a,a;b,a;b;c,") != std::string::npos);
}

TEST_CASE("axioms table quick run") {
  CliResult r = run_cli("axioms table --trials 60 --seed 5 --max-parties 4 --max-voters 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("MISMATCH") == std::string::npos);
  CHECK(r.output.find("set_maximality") != std::string::npos);
}
