#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lvr/cli.hpp"

using namespace lvr;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lvr_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("wg-table artifact") {
  TempDir dir;
  auto out = dir.file("wg.json");
  CHECK(cli_run({"wg-table", "--k", "2", "--symbolic", "--out", out}) == 0);
  auto artifact = nlohmann::json::parse(slurp(out));
  CHECK(artifact["schema_version"] == "1");
  CHECK(artifact["config_echo"]["k"] == 2);
  CHECK(artifact["convention_flags"].contains("vertex_symmetry"));
  CHECK(artifact["open_question_flags"].size() >= 1);
  // (2) entry is -1/(N^3 - N): numerator [-1], denominator [0,-1,0,1]
  bool found = false;
  for (const auto& row : artifact["data"]) {
    if (row["cycle_type"] != nlohmann::json::array({2})) continue;
    found = true;
    CHECK(row["numerator_coeffs"] == nlohmann::json::array({"-1"}));
    CHECK(row["denominator_coeffs"] == nlohmann::json::array({"0", "-1", "0", "1"}));
  }
  CHECK(found);
}

TEST_CASE("fc artifact and usage errors") {
  TempDir dir;
  auto out = dir.file("fc.json");
  CHECK(cli_run({"fc", "--p", "2", "--n", "5", "--out", out}) == 0);
  auto artifact = nlohmann::json::parse(slurp(out));
  std::vector<std::string> coeffs;
  for (const auto& row : artifact["data"]) coeffs.push_back(row["coefficient"]);
  CHECK(coeffs == std::vector<std::string>{"1", "1", "2", "5", "14", "42"});

  CHECK(cli_run({"fc", "--p", "1", "--n", "5", "--out", out}) == 2);  // usage error
  CHECK(cli_run({"no-such-command"}) == 2);
  CHECK(cli_run({"fc", "--n", "5"}) == 2);  // missing required
}

TEST_CASE("domain errors exit 1") {
  TempDir dir;
  CHECK(cli_run({"wg-moment", "--a", "0", "--b", "0", "--c", "0", "--d", "0", "--N", "0",
                 "--out", dir.file("m.json")}) == 1);
  CHECK(cli_run({"tp", "--p", "2", "--z-re", "0.9", "--out", dir.file("t.json")}) == 1);
}

TEST_CASE("artifacts are byte identical on reruns") {
  TempDir dir;
  auto a = dir.file("a.json"), b = dir.file("b.json");
  for (auto args : {std::vector<std::string>{"logz-series", "--p", "2", "--order", "2"},
                    std::vector<std::string>{"haar-mc", "--N", "2", "--samples", "2000",
                                             "--seed", "11"},
                    std::vector<std::string>{"oracle-mc", "--N", "2", "--seed", "3",
                                             "--sweeps", "500", "--burn-in", "100",
                                             "--lambda", "0.05"}}) {
    auto run = [&](const std::string& out) {
      auto full = args;
      full.push_back("--out");
      full.push_back(out);
      REQUIRE(cli_run(full) == 0);
    };
    run(a);
    run(b);
    CHECK(slurp(a) == slurp(b));
  }
}

TEST_CASE("corner words grammar") {
  TempDir dir;
  auto out = dir.file("cw.json");
  CHECK(cli_run({"corner-words", "--q", "1", "--qbar", "0", "--out", out}) == 0);
  auto artifact = nlohmann::json::parse(slurp(out));
  CHECK(artifact["data"].size() == 1);
  CHECK(artifact["data"][0]["word"] == "R,MdR");
}

TEST_CASE("oracle-wick and borel artifacts") {
  TempDir dir;
  auto out = dir.file("ow.json");
  CHECK(cli_run({"oracle-wick", "--p", "2", "--partition", "1", "--order", "1",
                 "--connected", "--out", out}) == 0);
  auto artifact = nlohmann::json::parse(slurp(out));
  CHECK(artifact["data"]["coefficients"][0]["rational_function_of_N"]["num"] ==
        nlohmann::json::array({"1"}));

  auto bout = dir.file("bo.json");
  CHECK(cli_run({"borel", "--q", "1", "--z-re", "0.5", "--remainders", "1:0.02,2:0.004",
                 "--out", bout}) == 0);
  auto borel = nlohmann::json::parse(slurp(bout));
  CHECK(borel["data"]["in_domain"] == true);
  CHECK(std::abs(borel["data"]["value_re"].get<double>() - 1.0) < 1e-9);
  CHECK(borel["data"].contains("sigma_hat"));
}

TEST_CASE("mc trace csv") {
  TempDir dir;
  auto out = dir.file("mc.json"), trace = dir.file("trace.csv");
  CHECK(cli_run({"oracle-mc", "--N", "2", "--seed", "9", "--sweeps", "300", "--burn-in", "50",
                 "--out", out, "--trace", trace}) == 0);
  std::string csv = slurp(trace);
  CHECK(csv.rfind("sweep,invariant_name,value\n", 0) == 0);
  CHECK(csv.find("tr_power_1") != std::string::npos);
}
