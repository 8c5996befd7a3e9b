#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "og4/cli.hpp"

using namespace og4;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "og4_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("construct writes graph and metadata") {
  auto dir = temp_dir() / "a1";
  int rc = run_cli({"construct", "A1", "--p", "5", "--export", "edge_list",
                    "--out", dir.string()});
  CHECK(rc == exit_ok);
  CHECK(std::filesystem::exists(dir / "A1_p5.edges"));
  CHECK(std::filesystem::exists(dir / "A1_p5_meta.json"));
  CHECK(std::filesystem::exists(dir / "A1_p5_group.json"));
  // 4-valent on 10 vertices: 20 edges
  std::string edges = slurp(dir / "A1_p5.edges");
  CHECK(std::count(edges.begin(), edges.end(), '\n') == 20);
}

TEST_CASE("construct dot export carries one arc per edge") {
  auto dir = temp_dir() / "a1dot";
  int rc = run_cli({"construct", "A1", "--p", "5", "--export", "dot_oriented",
                    "--out", dir.string()});
  CHECK(rc == exit_ok);
  std::string dot = slurp(dir / "A1_p5.dot");
  CHECK(std::count(dot.begin(), dot.end(), '>') == 20);
}

TEST_CASE("construct rejects inadmissible parameters with exit 2") {
  CHECK(run_cli({"construct", "A1", "--p", "7", "--out",
                 (temp_dir() / "bad").string()}) == exit_bad_params);
}

TEST_CASE("construct falls back to a certificate bundle with exit 3") {
  auto dir = temp_dir() / "c4";
  int rc = run_cli({"construct", "C4", "--p", "7", "--export", "edge_list",
                    "--out", dir.string()});
  CHECK(rc == exit_budget);
  CHECK(std::filesystem::exists(dir / "C4_p7_bundle.json"));
  CHECK(std::filesystem::exists(dir / "C4_p7_meta.json"));
}

TEST_CASE("verify family exit codes") {
  auto out = temp_dir() / "a1_report.json";
  CHECK(run_cli({"verify", "A1", "--p", "5", "--out", out.string()}) == exit_ok);
  CHECK(run_cli({"verify", "B1", "--n", "5", "--out",
                 (temp_dir() / "b1_report.json").string()}) == exit_checks_failed);
}

TEST_CASE("verify rejects malformed input with exit 4") {
  auto bad = temp_dir() / "notagraph.json";
  std::ofstream(bad) << "{\"this\": \"is not a pair\"}";
  CHECK(run_cli({"verify", "--input", bad.string()}) == exit_bad_input);
  CHECK(run_cli({"verify", "--input", (temp_dir() / "missing.json").string()}) ==
        exit_bad_input);
}

TEST_CASE("verify accepts a round-tripped pair file") {
  auto inst = build_family(FamilyId::A1, {.p = 5, .n = 0});
  auto file = temp_dir() / "pair.json";
  std::ofstream(file) << pair_to_json_string(*inst.pair);
  auto out = temp_dir() / "pair_report.json";
  CHECK(run_cli({"verify", "--input", file.string(), "--out", out.string()}) ==
        exit_ok);
  CHECK(slurp(out).find("\"oriented\"") != std::string::npos);
}

TEST_CASE("table2 reports are byte-identical across runs") {
  auto out1 = temp_dir() / "sweep1.json";
  auto out2 = temp_dir() / "sweep2.json";
  CHECK(run_cli({"table2", "--families", "A1,A2", "--out", out1.string()}) ==
        exit_ok);
  CHECK(run_cli({"table2", "--families", "A1,A2", "--out", out2.string()}) ==
        exit_ok);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("table2 with a params file") {
  auto params = temp_dir() / "params.json";
  std::ofstream(params) << R"({"instances": [{"family": "A2", "p": 3}]})";
  auto out = temp_dir() / "sweep_params.json";
  CHECK(run_cli({"table2", "--params-file", params.string(), "--out",
                 out.string()}) == exit_ok);
  CHECK(slurp(out).find("\"A2\"") != std::string::npos);

  auto broken = temp_dir() / "broken.json";
  std::ofstream(broken) << "not json";
  CHECK(run_cli({"table2", "--params-file", broken.string()}) == exit_ok);
}

TEST_CASE("serialization helpers") {
  Permutation p = Permutation::from_cycles(3, {{0, 1}});
  auto j = permutation_to_json_string(p);
  CHECK(j.find("[1,0,2]") != std::string::npos);
  CHECK(j.find("(0 1)") != std::string::npos);
  PermGroup g(3, {p});
  CHECK(group_to_json_string(g).find("\"degree\":3") != std::string::npos);
}
