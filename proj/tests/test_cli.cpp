#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(STRPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<nlohmann::json> lines(const std::string& out) {
  std::vector<nlohmann::json> v;
  std::istringstream is(out);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) v.push_back(nlohmann::json::parse(line));
  return v;
}

}  // namespace

TEST_CASE("paths") {
  const Result r = run("paths --word 1");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["paths"].size() == 1);
  const Result s = run("paths --word 1,3,2,1,3,2");
  CHECK(nlohmann::json::parse(s.out)["paths"].size() == 7);
  const Result t = run("paths --word 1,3,2,1,3,2 --text");
  CHECK(t.out.find("l3->l1->l4") != std::string::npos);
}

TEST_CASE("polytope") {
  const Result r = run("polytope --word 1,2,1 --lambda 2,2 --coords t --vertices");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coords"] == "t");
  CHECK(j["rows"].size() == 6);
  CHECK(j["vertices"]["vertices"].size() == 7);
}

TEST_CASE("index and small") {
  const auto j = nlohmann::json::parse(run("index --word 1,2,1,4,3,2,1,4,3,2 --delta DDDD").out);
  CHECK(j["index"] == nlohmann::json::array({0, 0, 0, 3}));
  const auto s = nlohmann::json::parse(run("small --word 1,2,1,3,4,3,2,3,1,2").out);
  CHECK(s["small"] == true);
  const auto t = nlohmann::json::parse(run("small --word 1,2,3,2,1,2,4,3,2,1").out);
  CHECK(t["small"] == false);
}

TEST_CASE("bott, resolve and potential") {
  CHECK(run("bott --word 1,3,2,1,3,2").exit_code == 0);
  const auto v = nlohmann::json::parse(run("resolve --word 1,3,2,1,3,2").out);
  CHECK(v["smooth"] == true);
  CHECK(v["rays_match"] == true);
  CHECK(v["bpf"] == true);
  CHECK(v["status"] == "verified");
  const Result p = run("potential --word 1 --text");
  CHECK(p.out == "y1 + q1/y1\n");
  const auto q = nlohmann::json::parse(run("potential --word 1,3,2,1,3,2").out);
  CHECK(q["term_count"] == 13);
}

TEST_CASE("classes and table") {
  CHECK(lines(run("classes --n 4").out).size() == 62);
  const Result full = run("table --n 4");
  CHECK(full.exit_code == 0);
  CHECK(lines(full.out).size() == 62);
  const auto rows = lines(run("table --n 4 --mod-involution").out);
  CHECK(rows.size() == 31);
  int small = 0;
  for (const auto& r : rows) {
    CHECK(r.contains("word"));
    CHECK(r.contains("class_representative"));
    CHECK(r.contains("delta_witness"));
    CHECK(r.contains("index_vector"));
    CHECK(r.contains("gp_count"));
    if (r["small"] == true) ++small;
  }
  // Table 1 marks ten classes as small
  CHECK(small == 10);
  // deterministic output
  CHECK(run("table --n 4 --mod-involution").out == run("table --n 4 --mod-involution").out);
}

TEST_CASE("output file") {
  const std::string path = "strpoly_cli_test_out.json";
  std::remove(path.c_str());
  CHECK(run("small --word 1,2,1 --out " + path).exit_code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["small"] == true);
  std::remove(path.c_str());
}

TEST_CASE("errors") {
  const Result bad = run("paths --word 1,1,2");
  CHECK(bad.exit_code == 1);
  CHECK(nlohmann::json::parse(bad.out)["error"] == "NotReduced");
  CHECK(run("paths --word 1,3").exit_code == 1);
  CHECK(run("index --word 1,2,1").exit_code == 1);
  CHECK(run("nonsense").exit_code == 1);
  const Result ns = run("potential --word 1,2,3,2,1,2,4,3,2,1");
  CHECK(ns.exit_code == 1);
  CHECK(nlohmann::json::parse(ns.out)["error"] == "NotSmallIndices");
  CHECK(run("polytope --word 1,2,1 --coords x").exit_code == 1);
}
