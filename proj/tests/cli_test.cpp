// End-to-end tests of the qosc binary: exit-code contract, report schema,
// determinism, and config-file handling. The binary path arrives through the
// PQOSC_BIN environment variable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("PQOSC_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PQOSC_BIN must point at the qosc binary");
  return bin;
}

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json parse_report(const RunResult& r) {
  json report = json::parse(r.out);
  REQUIRE(report.contains("version"));
  REQUIRE(report.contains("timestamp"));
  REQUIRE(report.contains("config"));
  REQUIRE(report.contains("results"));
  REQUIRE(report.contains("overallPass"));
  return report;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify passes with exit code 0 and a well-formed report") {
    RunResult r = run("verify --suite oscillator --modes 3 --p 0.7 --theta 0.4488 --cutoff 5");
    CHECK(r.exit_code == 0);
    json report = parse_report(r);
    CHECK(report.at("overallPass").get<bool>());
    CHECK(report.at("config").at("command") == "verify");
    REQUIRE(!report.at("results").empty());
    std::string previous;
    for (const json& e : report.at("results")) {
      CHECK(e.contains("label"));
      CHECK(e.contains("paperRef"));
      CHECK(e.contains("maxResidual"));
      CHECK(e.at("maxResidual").get<double>() < 1e-10);
      CHECK(e.at("pass").get<bool>());
      std::string label = e.at("label").get<std::string>();
      CHECK(previous <= label);  // results are sorted
      previous = label;
    }
  }

  TEST_CASE("exact mode reports formal zeros") {
    RunResult r = run("verify --suite gl --modes 3 --p 0.7 --theta-pi-over 7 --cutoff 6 --exact");
    CHECK(r.exit_code == 0);
    json report = parse_report(r);
    for (const json& e : report.at("results")) {
      if (e.contains("skipped") && e.at("skipped").get<bool>()) continue;
      CHECK(e.at("exactZero").get<bool>());
      CHECK(e.at("maxResidual").get<double>() == 0.0);
    }
  }

  TEST_CASE("verification failure exits 1") {
    // an impossible tolerance forces at least one float-mode failure
    RunResult r = run("verify --suite oscillator --modes 2 --p 0.7 --theta 0.4 --cutoff 4 "
                      "--tolerance 1e-300");
    CHECK(r.exit_code == 1);
    json report = parse_report(r);
    CHECK(!report.at("overallPass").get<bool>());
  }

  TEST_CASE("flag parse errors exit 2") {
    CHECK(run("verify --no-such-flag 1").exit_code == 2);
    CHECK(run("bogus-command").exit_code == 2);
    CHECK(run("eval --fn nosuchfn --p 0.5").exit_code == 2);
    CHECK(run("verify --suite nosuchsuite --p 0.7 --theta 0.1").exit_code == 2);
  }

  TEST_CASE("domain errors exit 3 and surface in the report") {
    RunResult r = run("eval --fn psi01 --a -2 --p 0.5 --x -0.1");
    CHECK(r.exit_code == 3);
    json report = parse_report(r);
    CHECK(report.contains("error"));
    CHECK(!report.at("overallPass").get<bool>());
  }

  TEST_CASE("eval matches the library value") {
    RunResult r = run("eval --fn psi01 --a -2 --p 0.5 --x -8");
    CHECK(r.exit_code == 0);
    json report = parse_report(r);
    double value = report.at("results").at(0).at("value").get<double>();
    CHECK(value == doctest::Approx(25.431797643001296).epsilon(1e-12));

    RunResult b = run("eval --fn bracket --x 3 --base 2 --p 2");
    CHECK(parse_report(b).at("results").at(0).at("value").get<double>() == doctest::Approx(7.0));
  }

  TEST_CASE("reports are byte-identical apart from the timestamp") {
    const std::string args =
        "verify --suite subhamiltonian --modes 2 --p 0.3 --theta-pi-over 7 --cutoff 5";
    json a = parse_report(run(args));
    json b = parse_report(run(args));
    a.erase("timestamp");
    b.erase("timestamp");
    CHECK(a.dump() == b.dump());
  }

  TEST_CASE("config file values apply and flags override them") {
    const std::string path = "/tmp/qosc_cli_test.conf";
    {
      std::ofstream conf(path);
      conf << "# grid point\n"
           << "p = 0.5\n"
           << "modes = 2\n"
           << "cutoff = 4\n"
           << "theta = 0.1\n";
    }
    RunResult r = run("verify --suite oscillator --config " + path + " --p 0.7");
    CHECK(r.exit_code == 0);
    json report = parse_report(r);
    CHECK(report.at("config").at("p") == "0.7");      // flag wins
    CHECK(report.at("config").at("modes") == "2");    // file fills the gap
    CHECK(report.at("config").at("theta") == "0.1");

    // a format= line must not override the command-line flag
    {
      std::ofstream conf(path);
      conf << "p = 0.5\nmodes = 2\ncutoff = 4\nformat = json\n";
    }
    RunResult t = run("verify --suite oscillator --config " + path + " --format text");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("overall: pass") != std::string::npos);
  }

  TEST_CASE("unknown config keys are rejected with exit 2") {
    const std::string path = "/tmp/qosc_cli_bad.conf";
    {
      std::ofstream conf(path);
      conf << "p = 0.5\nnot_a_key = 7\n";
    }
    CHECK(run("verify --suite oscillator --config " + path).exit_code == 2);
  }

  TEST_CASE("resolve names the satisfying convention with counterexamples") {
    RunResult r = run("qsym --resolve --nmax 4 --alphabet 3");
    CHECK(r.exit_code == 0);
    json report = parse_report(r);
    bool found_summary = false, found_scale1 = false;
    for (const json& e : report.at("results")) {
      std::string label = e.at("label").get<std::string>();
      if (label == "resolve.summary") {
        found_summary = true;
        CHECK(e.at("pass").get<bool>());
        CHECK(e.at("value").get<std::string>() ==
              "distinct-rearrangements/scale-2/input-word-phase");
      }
      if (label.find("scale-1") != std::string::npos && e.contains("counterexample"))
        found_scale1 = true;
    }
    CHECK(found_summary);
    CHECK(found_scale1);
  }

  TEST_CASE("text format emits one line per check") {
    RunResult r = run("qsym --word 2,1 --p 0.7 --theta-pi-over 7 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("qsym.exchange[1]") != std::string::npos);
    CHECK(r.out.find("overall: pass") != std::string::npos);
  }
}
