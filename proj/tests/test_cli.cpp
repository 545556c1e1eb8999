#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lacunary/cli.hpp"
#include "lacunary/report.hpp"

using lacunary::cli_main;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lacunary");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("list prints one line per identity") {
  const Run r = run({"list"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    CHECK(line.rfind("EQ", 0) == 0);
    CHECK(line.find(" — ") != std::string::npos);
  }
  CHECK(count == 25);
}

TEST_CASE("verify a passing exact case") {
  const Run r = run({"verify", "--id", "EQ2.13", "--mode", "exact", "--no-timestamp"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["id"] == "EQ2.13");
  CHECK(j["results"][0]["mode"] == "EXACT_COEFF");
  CHECK(j["results"][0]["max_rel_err"] == 0);
  CHECK(j["results"][0]["pass"] == true);
  CHECK(j["run"]["timestamp"].is_null());
  CHECK(j["run"]["seed"] == 7);
}

TEST_CASE("report fields keep their order") {
  const Run r = run({"verify", "--id", "EQ1.11", "--no-timestamp"});
  const std::vector<std::string> keys{"\"id\"", "\"paper_ref\"", "\"mode\"", "\"grid_size\"", "\"truncation\"",
                                      "\"max_abs_err\"", "\"max_rel_err\"", "\"pass\"", "\"notes\""};
  std::size_t pos = r.out.find("\"results\"");
  for (const auto& k : keys) {
    const std::size_t next = r.out.find(k, pos);
    REQUIRE(next != std::string::npos);
    pos = next;
  }
  CHECK(r.out.find("\"run\"") < r.out.find("\"results\""));
}

TEST_CASE("timestamps are written unless disabled") {
  const Run r = run({"verify", "--id", "EQ1.11"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["run"]["timestamp"].is_string());
}

TEST_CASE("unknown ids and bad options are usage errors") {
  const Run bad = run({"verify", "--id", "EQ9.9"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("EQ2.7") != std::string::npos);
  CHECK(run({"verify", "--id", "EQ2.10", "--tol", "1e-6"}).code == 2);
  CHECK(run({"verify", "--id", "EQ2.10", "--mode", "sideways"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--all", "--id", "EQ2.7"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--id", "EQ2.10", "--mode", "exact"}).code == 2);
  CHECK(run({"verify", "--id", "EQ2.10", "--mutate", "EQ0.0"}).code == 2);
}

TEST_CASE("tightening the tolerance is accepted") {
  CHECK(run({"verify", "--id", "EQ2.10", "--tol", "1e-10", "--no-timestamp"}).code == 0);
}

TEST_CASE("a mutated identity fails with exit 1") {
  const Run r = run({"verify", "--id", "EQ2.13", "--mutate", "EQ2.13", "--no-timestamp"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  for (const auto& res : j["results"]) CHECK(res["pass"] == false);
  // mutating an unselected identity leaves the selection untouched
  CHECK(run({"verify", "--id", "EQ2.13", "--mutate", "EQ1.7", "--no-timestamp"}).code == 0);
}

TEST_CASE("fixed seed gives byte-identical reports") {
  const auto a = temp_path("lacunary_cli_a.json"), b = temp_path("lacunary_cli_b.json");
  const std::vector<std::string> base{"verify", "--id", "EQ1.9", "--id", "EQ3.8", "--seed", "3", "--no-timestamp", "--report"};
  auto args_a = base, args_b = base;
  args_a.push_back(a.string());
  args_b.push_back(b.string());
  const Run ra = run(args_a), rb = run(args_b);
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  CHECK(ra.out.find("PASS EQ1.9") != std::string::npos);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
  auto args_c = base;
  args_c[6] = "4";
  args_c.push_back(a.string());
  run(args_c);
  CHECK(slurp(a) != slurp(b));
}

TEST_CASE("csv output") {
  const Run r = run({"verify", "--id", "EQ3.18", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "id,paper_ref,mode,grid_size,truncation,max_abs_err,max_rel_err,pass,notes");
  CHECK(row1.rfind("EQ3.18,", 0) == 0);
  CHECK(row1.find("EXACT_COEFF") != std::string::npos);
  CHECK(row2.find("QUADRATURE") != std::string::npos);
}

TEST_CASE("numeric mode includes quadrature") {
  const Run r = run({"verify", "--id", "EQ3.18", "--mode", "numeric", "--no-timestamp"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["mode"] == "QUADRATURE");
}

TEST_CASE("config file with flag precedence") {
  const auto cfg = temp_path("lacunary_cli_config.json");
  {
    std::ofstream f(cfg);
    f << R"({"ids": ["EQ1.11"], "mode": "exact", "seed": 11, "timestamp": false})";
  }
  const Run r = run({"verify", "--config", cfg.string(), "--seed", "12"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["run"]["seed"] == 12);
  CHECK(j["run"]["timestamp"].is_null());
  CHECK(j["results"][0]["id"] == "EQ1.11");
  {
    std::ofstream f(cfg);
    f << R"({"ids": ["EQ1.11"], "colour": "blue"})";
  }
  CHECK(run({"verify", "--config", cfg.string()}).code == 2);
  CHECK(run({"verify", "--config", "/nonexistent/config.json"}).code == 2);
}

TEST_CASE("unwritable report path") {
  const Run r = run({"verify", "--id", "EQ1.11", "--report", "/nonexistent/dir/report.json", "--no-timestamp"});
  CHECK(r.code == 1);
  CHECK(r.err.find("\"results\"") != std::string::npos);
}

TEST_CASE("max points limits the grid") {
  const Run r = run({"verify", "--id", "EQ2.10", "--max-points", "1", "--no-timestamp"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["results"][0]["grid_size"] == 1);
}

TEST_CASE("derive-aux") {
  const Run p = run({"derive-aux", "--family", "p", "--m", "1"});
  CHECK(p.code == 0);
  const json j = json::parse(p.out);
  CHECK(j["matches_paper"] == true);
  CHECK(j["coefficients"].size() == 3);
  CHECK(j["coefficients"][0]["r_power"] == 2);
  CHECK(j["coefficients"][0]["coefficient"] == "2*t*y^2 + 1");

  const Run q = run({"derive-aux", "--family", "q", "--m", "1"});
  CHECK(q.code == 0);
  CHECK(json::parse(q.out)["matches_paper"] == false);
  CHECK_FALSE(json::parse(q.out)["deviations"].empty());

  CHECK(run({"derive-aux", "--family", "q", "--m", "2"}).code == 2);
  CHECK(run({"derive-aux", "--family", "z"}).code == 2);
}

TEST_CASE("number formatting") {
  CHECK(lacunary::format_number(0.1) == "0.10000000000000001");
  CHECK(lacunary::format_number(0.0) == "0");
  CHECK(lacunary::format_number(1.0 / 0.0) == "null");
}
