#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qsym/cli/app.hpp"
#include "qsym/cli/report.hpp"

using namespace qsym::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json report(const std::vector<std::string>& args, int expected_code = 0) {
  const auto o = invoke(args);
  INFO(o.err);
  REQUIRE(o.code == expected_code);
  return json::parse(o.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qsym_test_" + name);
}

}  // namespace

TEST_CASE("verify KC N=3", "[cli]") {
  const auto r = report({"verify", "--model", "kc", "--dim", "3"});
  CHECK(r["status"] == "pass");
  CHECK(r["command"] == "verify");
  std::vector<std::string> names;
  for (const auto& c : r["checks"]) {
    names.push_back(c["name"]);
    CHECK(c["term_count"] == 0);
    CHECK(c["seconds"].is_null());
  }
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(std::find(names.begin(), names.end(), "Q(3): [A,C] relation") != names.end());
  CHECK(std::find(names.begin(), names.end(), "Q(3): [B,C] relation") != names.end());
  CHECK(std::find(names.begin(), names.end(), "Casimir: central form") != names.end());
}

TEST_CASE("verify DSO (4,2)", "[cli]") {
  CHECK(report({"verify", "--model", "dso", "--dim", "4", "--split", "2"})["summary"]["failed"] == 0);
}

TEST_CASE("configuration errors exit with 2", "[cli]") {
  CHECK(invoke({"verify", "--model", "kepler"}).code == 2);
  CHECK(invoke({"verify", "--model", "kepler"}).err.find("Usage") != std::string::npos);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify", "--model", "kc", "--bogus"}).code == 2);
  CHECK(invoke({"verify", "--model", "kc", "--c0", "1"}).code == 2);
  CHECK(invoke({"spectrum", "--model", "kc", "--c0", "symbolic"}).code == 2);
  CHECK(invoke({"spectrum", "--model", "kc", "--c1", "-1"}).code == 2);
  CHECK(invoke({"spectrum", "--model", "kc", "--split", "1"}).code == 2);
  CHECK(invoke({"spectrum", "--model", "dso", "--dim", "4", "--split", "4"}).code == 2);
  CHECK(invoke({"spectrum", "--model", "kc", "--format", "xml"}).code == 2);
  CHECK(invoke({"spectrum", "--model", "kc", "--c0", "one"}).code == 2);
  CHECK(invoke({"scan", "--model", "kc", "--config", "/nonexistent/qsym.json"}).code == 2);
  CHECK(invoke({"verify", "--model", "kc", "--hbar", "symbolic"}).code == 0);
}

TEST_CASE("config files: unknown keys rejected, flags override", "[cli]") {
  const auto bad = temp_file("bad.json");
  std::ofstream(bad) << R"({"model": "kc", "colour": 3})";
  CHECK(invoke({"spectrum", "--config", bad.string()}).code == 2);

  const auto good = temp_file("good.json");
  std::ofstream(good) << R"({"model": "dso", "dim": 4, "split": 2, "p_max": 1, "c1": 0.5, "omega": "1"})";
  const auto r = report({"spectrum", "--config", good.string(), "--dim", "5"});
  CHECK(r["config"]["dim"] == 5);
  CHECK(r["config"]["parameters"]["c1"] == "1/2");
  CHECK(r["config"]["p_max"] == 1);
  std::filesystem::remove(bad);
  std::filesystem::remove(good);
}

TEST_CASE("resource cap aborts with 3", "[cli]") {
  const auto o = invoke({"verify", "--model", "kc", "--max-terms", "5"});
  CHECK(o.code == 3);
  CHECK(o.out.empty());
}

TEST_CASE("spectrum rows", "[cli]") {
  const auto h = report({"spectrum", "--model", "kc", "--dim", "3", "--levels", "3"});
  REQUIRE(h["rows"].size() == 3);
  CHECK(h["rows"][0]["energy_physical_exact"] == "-1/2");
  CHECK(h["rows"][1]["energy_physical_exact"] == "-1/8");
  CHECK(h["rows"][2]["energy_physical_exact"] == "-1/18");
  CHECK(h["rows"][2]["energy_physical"] == -0.0555555555555556);

  const auto d = report({"spectrum", "--model", "dso", "--dim", "4", "--split", "2", "--p-max", "2"});
  std::set<double> energies;
  for (const auto& row : d["rows"]) energies.insert(row["energy_algebraic"].get<double>());
  CHECK(energies == std::set<double>{2, 4, 6});

  const auto c = report({"spectrum", "--model", "kc", "--c1", "2", "--levels", "1"});
  CHECK(c["rows"][0]["energy_physical"] == -0.085786437626905);
  CHECK(c["rows"][0]["energy_physical_exact"].is_null());

  // The literal footnote m-normalization leaves rows without a matching branch.
  const auto footnote = report({"spectrum", "--model", "kc", "--c1", "1", "--levels", "2", "--m-norm", "footnote"}, 1);
  CHECK(footnote["rows"][1]["status"] == "fail");
  CHECK(footnote["rows"][1]["relative_error"].get<double>() > 0.1);  // closest candidate is reported
  CHECK(footnote["summary"]["unmatched"].get<int>() >= 1);
  CHECK(invoke({"spectrum", "--model", "kc", "--m-norm", "half"}).code == 2);
}

TEST_CASE("oracle command", "[cli]") {
  const auto h = report({"oracle", "--model", "kc", "--levels", "3"});
  for (const auto& row : h["rows"]) CHECK(row["relative_error"].get<double>() <= 1e-6);
  const auto d = report({"oracle", "--model", "dso", "--dim", "5", "--split", "2", "--c1", "1", "--p-max", "0"});
  CHECK(std::abs(d["rows"][0]["oracle"].get<double>() - 3.9142136) < 1e-6);
  const auto coarse = report({"oracle", "--model", "kc", "--levels", "1", "--grid", "16"}, 1);
  CHECK(coarse["rows"][0]["converged"] == false);
  CHECK(coarse["summary"]["non_converged"] == 1);
}

TEST_CASE("scan command", "[cli]") {
  const auto h = report({"scan", "--model", "kc", "--p-max", "2"});
  for (const auto& g : h["summary"]["groups"]) {
    CHECK(g["surviving_zero_roots"] == 4);
    bool physical = false;
    const int p = g["p"];
    for (const auto& row : h["rows"]) {
      if (row["p"] == p && row["energy_exact"].is_string()) {
        physical = physical || row["energy_exact"] == "-1/" + std::to_string(2 * (p + 1) * (p + 1));
      }
    }
    CHECK(physical);
  }
  const auto d = report({"scan", "--model", "dso", "--dim", "4", "--split", "2", "--p-max", "3"});
  for (int p = 0; p <= 3; ++p) {
    bool case3 = false;
    for (const auto& row : d["rows"]) {
      case3 = case3 || (row["p"] == p && row["top_root"] == 5 && row["zero_root"].get<int>() <= 4 &&
                        row["energy"].get<double>() == 2.0 * (p + 1));
    }
    CHECK(case3);
  }
  const auto free = report({"scan", "--model", "kc", "--c0", "0"});
  CHECK(free["rows"].empty());
}

TEST_CASE("reports are deterministic", "[cli]") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--model", "dso", "--dim", "3", "--split", "1"},
        std::vector<std::string>{"spectrum", "--model", "kc", "--c1", "1", "--c2", "2", "--l-max", "2"},
        std::vector<std::string>{"oracle", "--model", "kc", "--levels", "2", "--format", "csv"},
        std::vector<std::string>{"scan", "--model", "dso", "--dim", "5", "--split", "2", "--c1", "1"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
  const auto timed = report({"verify", "--model", "kc", "--timing"});
  CHECK(timed["checks"][0]["seconds"].is_number());
}

TEST_CASE("CSV output", "[cli]") {
  const auto o = invoke({"spectrum", "--model", "kc", "--levels", "2", "--format", "csv"});
  REQUIRE(o.code == 0);
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t pos; (pos = o.out.find("\r\n", start)) != std::string::npos; start = pos + 2) {
    lines.push_back(o.out.substr(start, pos - start));
  }
  CHECK(start == o.out.size());
  REQUIRE(lines.size() == 3);
  std::string header;
  for (const auto& c : csv_columns(Command::Spectrum, qsym::model::Kind::KC)) header += (header.empty() ? "" : ",") + c;
  CHECK(lines[0] == header);
  CHECK(lines[1].find("\"u=nu1,top=nu5,eps=(+,+)\"") != std::string::npos);
  CHECK(csv_escape("a\"b") == "\"a\"\"b\"");
  CHECK(csv_escape("plain") == "plain");
}

TEST_CASE("CSV columns match the JSON rows", "[cli]") {
  const std::pair<Command, std::vector<std::string>> cases[] = {
      {Command::Spectrum, {"spectrum", "--model", "dso", "--p-max", "1"}},
      {Command::Oracle, {"oracle", "--model", "dso", "--p-max", "0"}},
      {Command::Scan, {"scan", "--model", "kc", "--p-max", "0"}}};
  for (const auto& [cmd, args] : cases) {
    const auto r = report(args);
    const auto kind = qsym::model::parse_kind(r["config"]["model"]);
    std::vector<std::string> keys;
    for (const auto& [k, v] : r["rows"][0].items()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    auto cols = csv_columns(cmd, kind);
    std::sort(cols.begin(), cols.end());
    CHECK(keys == cols);
  }
}

TEST_CASE("report file and the installed binary", "[cli]") {
  const auto path = temp_file("report.json");
  std::filesystem::remove(path);
  const auto o = invoke({"spectrum", "--model", "kc", "--levels", "1", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["rows"][0]["energy_physical_exact"] == "-1/2");
  std::filesystem::remove(path);

  const std::string cmd = std::string(QSYM_CLI_PATH) + " verify --model kepler >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);
  const std::string ok = std::string(QSYM_CLI_PATH) + " scan --model kc --c0 0 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(ok.c_str())) == 0);
}
