#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qperm/cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result qperm_run(std::vector<std::string> args) {
  args.insert(args.begin(), "qperm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qperm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_run(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return nlohmann::json::parse(qperm_run(args).out);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(qperm_run({"verify-hopf", "--n", "3", "--cap", "8"}).code == 0);
  CHECK(qperm_run({"verify-grading", "--input", QPERM_TEST_DATA "/broken.grading"}).code == 1);
  CHECK(qperm_run({"verify-grading", "--input", QPERM_TEST_DATA "/z4.grading"}).code == 0);
  CHECK(qperm_run({"present", "--n", "3", "--bogus"}).code == 64);
  CHECK(qperm_run({}).code == 64);
  CHECK(qperm_run({"classify", "--n", "13"}).code == 64);
  CHECK(qperm_run({"subgroups", "--n", "7", "--mode", "brute_force"}).code == 64);
  CHECK(qperm_run({"lemma36", "--n", "3", "--families", "1,1,2"}).code == 64);
  CHECK(qperm_run({"iso-check", "--n", "9"}).code == 64);
  const auto help = qperm_run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-grading") != std::string::npos);
}

TEST_CASE("refutation carries the witness triple") {
  const auto r = qperm_run({"verify-grading", "--input", QPERM_TEST_DATA "/broken.grading"});
  CHECK(r.out.find("witness: ((2), (2), (1, -1, 1, -1))") != std::string::npos);
  const auto j = json_run({"verify-grading", "--input", QPERM_TEST_DATA "/broken.grading"});
  CHECK(j["verdict"] == "refuted");
  CHECK(j["exit_code"] == 1);
  CHECK(j["reports"][0]["witness"] == "((2), (2), (1, -1, 1, -1))");
}

TEST_CASE("structured report schema") {
  const auto j = json_run({"wang", "--n", "4", "--depth", "10"});
  CHECK(j["schema"] == "qperm-run-report/1");
  CHECK(j["command"] == "--format json wang --n 4 --depth 10");
  CHECK(j["config"]["depth"] == 10);
  CHECK(j["verdict"] == "verified");
  CHECK(j["reports"][0]["kind"] == "certificate");
  std::vector<int> dims = j["reports"][0]["details"]["filtration_dimensions"];
  std::vector<int> expected;
  for (int d = 0; d <= 10; ++d) expected.push_back(2 * d + 1);
  CHECK(dims == expected);
  CHECK(j.contains("wall_time_ms"));
}

TEST_CASE("every subcommand runs") {
  const std::vector<std::vector<std::string>> commands{
      {"present", "--n", "2"},
      {"present", "--n", "2", "--semi"},
      {"lemma36", "--n", "3", "--families", "row_orthogonality,row_sum,column_orthogonality"},
      {"lemma37", "--n", "3"},
      {"pi-n", "--n", "3"},
      {"iso-check", "--n", "3"},
      {"coaction", "--n", "3"},
      {"subgroups", "--n", "4"},
      {"classify", "--n", "5", "--cross-check"},
      {"grade", "--blocks", "3,2", "--groups", "Z3,Z2"},
      {"orbit-decompose", "--input", QPERM_TEST_DATA "/z3_z2.grading"},
  };
  for (const auto& c : commands) {
    const auto r = qperm_run(c);
    INFO(c.front());
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: verified") != std::string::npos);
  }
  const auto diag = json_run({"coaction", "--example", "diag-g"});
  CHECK(diag["reports"][0]["details"]["legs"]["semi_magic"] == "refuted");
}

TEST_CASE("files written by the CLI") {
  const auto dir = std::filesystem::temp_directory_path() / "qperm_cli_test";
  std::filesystem::create_directories(dir);
  const auto pres = (dir / "magic2.pres").string();
  CHECK(qperm_run({"present", "--n", "2", "--emit", pres}).code == 0);
  const auto again = json_run({"present", "--input", pres});
  CHECK(again["reports"][0]["completion"]["status"] == "confluent");

  const auto grading = (dir / "g.grading").string();
  CHECK(qperm_run({"grade", "--blocks", "2,2", "--groups", "Z2,Z2", "--emit", grading}).code == 0);
  const auto report = (dir / "r.json").string();
  CHECK(qperm_run({"--output", report, "orbit-decompose", "--input", grading}).code == 0);
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["reports"][1]["kind"] == "orbit");
  CHECK(j["reports"][1]["k"] == 2);
  CHECK(j["command"].get<std::string>().find("--output") == std::string::npos);

  const auto poly = (dir / "polys.txt").string();
  std::ofstream(poly) << "u11.u12\nu11 + u22 # comment\n";
  const auto pi = qperm_run({"pi-n", "--n", "2", "--poly", poly});
  CHECK(pi.out.find("pi_2(1*u11.u12) = 0") != std::string::npos);
  std::filesystem::remove_all(dir);
}
