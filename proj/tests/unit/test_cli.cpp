#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "econreg/cli.hpp"
#include "econreg/workflow.hpp"
#include "helpers.hpp"

using namespace econreg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "econreg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kCsv = std::string(ECONREG_TEST_DATA) + "/synthetic_1959_2001.csv";

fs::path scratch_dir(const std::string& tag) {
  std::random_device rd;
  auto dir = fs::temp_directory_path() / ("econreg-" + tag + "-" + std::to_string(rd()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("paper-verify exit code tracks the suite") {
    const auto r = run({"paper-verify"});
    const auto checks = workflow::paper_consistency_suite();
    const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    CHECK(r.code == (all_pass ? kExitOk : kExitConsistencyFailure));
    CHECK(r.out.find("consistency checks passed") != std::string::npos);
    CHECK(r.out.find("GROSS PRIVATE DOMESTIC INVESTMENT (GPGDI)") != std::string::npos);
    std::size_t lines = 0;
    for (std::size_t p = r.out.find("PASS  ["); p != std::string::npos; p = r.out.find("PASS  [", p + 1)) ++lines;
    for (std::size_t p = r.out.find("FAIL  ["); p != std::string::npos; p = r.out.find("FAIL  [", p + 1)) ++lines;
    CHECK(lines == checks.size());

    const auto j = run({"paper-verify", "--json"});
    CHECK(j.code == r.code);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["checks"].size() == checks.size());
    CHECK(doc["total"] == checks.size());
  }

  TEST_CASE("paper-verify with a fixture file") {
    const auto ok = run({"paper-verify", "--fixture", ECONREG_FIXTURE_PATH});
    CHECK(ok.code == run({"paper-verify"}).code);
    const auto missing = run({"paper-verify", "--fixture", "/nonexistent.json"});
    CHECK(missing.code == kExitAnalysisError);
    CHECK(missing.err.find("UnreadableFile") != std::string::npos);
  }

  TEST_CASE("regress") {
    const auto r = run({"regress", kCsv, "--dep", "CPIU", "--pred", "SP500"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("Model Summary") != std::string::npos);
    CHECK(r.out.find("ANOVA") != std::string::npos);
    CHECK(r.out.find("Coefficients") != std::string::npos);
    CHECK(r.out.find("CPIU = ") != std::string::npos);

    const auto j = run({"regress", kCsv, "--dep", "GPDI", "--pred", "SP500,CPIU,TB3", "--json"});
    REQUIRE(j.code == kExitOk);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.dump().find("\"GPDI\"") != std::string::npos);

    const auto bad = run({"regress", kCsv, "--dep", "CPIU", "--pred", "NOPE"});
    CHECK(bad.code == kExitAnalysisError);
    CHECK(bad.err.find("UnknownVariable") != std::string::npos);
  }

  TEST_CASE("correlate") {
    const auto r = run({"correlate", kCsv, "--vars", "NYSE,DJ,SP500"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("Pearson Correlation") != std::string::npos);
    const auto j = run({"correlate", kCsv, "--vars", "NYSE,DJ", "--json"});
    CHECK(j.code == kExitOk);
    CHECK(nlohmann::json::parse(j.out).contains("matrix"));

    CHECK(run({"correlate", kCsv, "--vars", "NYSE"}).code == kExitUsage);
    CHECK(run({"correlate", kCsv}).code == kExitUsage);
    CHECK(run({"correlate", kCsv, "--vars", "NYSE,DJ", "--json", "--text"}).code == kExitUsage);
    CHECK(run({"correlate", "/nonexistent.csv", "--vars", "A,B"}).code == kExitAnalysisError);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"plot", kCsv, "--x", "SP500", "--y", "GPDI", "--kind", "pie"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("paper-run writes every artifact") {
    const auto dir = scratch_dir("run");
    const auto r = run({"paper-run", kCsv, "--out", dir.string()});
    REQUIRE(r.code == kExitOk);
    for (const char* name : {"table-1-1.txt", "table-2-1.txt", "table-2-3.txt", "table-2-4.txt", "table-2-5.txt",
                             "table-3-1.txt", "table-3-2.txt", "table-3-3.txt", "table-4-1.txt", "table-4-2.txt",
                             "table-4-3.txt", "table-appendix.txt", "results.json", "fig-1-1.svg", "fig-1-6.svg",
                             "fig-2-2.svg", "fig-3-3.svg", "fig-4-4.svg"}) {
      CHECK_MESSAGE(fs::exists(dir / name), name);
    }
    std::ifstream in(dir / "results.json");
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["n"] == 43);
    CHECK(doc["stages"].size() == 4);
    CHECK(r.out.find("selected (DJ, SP500)") != std::string::npos);
    fs::remove_all(dir);
  }

  TEST_CASE("paper-run honours the output directory variable") {
    const auto dir = scratch_dir("env");
    ::setenv("ECONREG_OUTPUT_DIR", dir.string().c_str(), 1);
    const auto r = run({"paper-run", kCsv});
    ::unsetenv("ECONREG_OUTPUT_DIR");
    CHECK(r.code == kExitOk);
    CHECK(fs::exists(dir / "results.json"));
    fs::remove_all(dir);
  }

  TEST_CASE("plot") {
    const auto r = run({"plot", kCsv, "--x", "SP500", "--y", "GPDI"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("<svg") != std::string::npos);
    const auto dir = scratch_dir("plot");
    const auto file = (dir / "cpi.svg").string();
    CHECK(run({"plot", kCsv, "--x", "YEAR", "--y", "CPIU", "--kind", "line", "--out", file}).code == kExitOk);
    CHECK(fs::file_size(file) > 0);
    CHECK(run({"plot", kCsv, "--x", "NOPE", "--y", "CPIU"}).code == kExitAnalysisError);
    fs::remove_all(dir);
  }
}
