#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dwlab/cli.hpp"
#include "dwlab/generators.hpp"
#include "dwlab/io.hpp"
#include "dwlab/oracles.hpp"
#include "dwlab/sparse.hpp"

using namespace dwlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dwlab_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

const std::string kCanonicalCnf = "c canonical\np cnf 3 4\n1 2 3 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n";
const std::string kK4Edges = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

}  // namespace

TEST_CASE("gen writes the generator's tournament") {
  const Run r = run({"gen", "rotational", "-k", "3"});
  CHECK(r.code == 0);
  CHECK(parse_tournament(r.out) == rotational(3));
  CHECK(parse_tournament(run({"gen", "random", "-n", "9", "--seed", "42"}).out) == random_tournament(9, 42));
  CHECK(parse_tournament(run({"gen", "u", "-n", "6"}).out) == u_tournament(6));
  CHECK(parse_tournament(run({"gen", "acyclic", "-n", "4"}).out) == acyclic(4));
  CHECK(run({"gen", "nonsense"}).code == cli::kExitError);

  TempDir dir;
  const Run to_file = run({"gen", "u", "-n", "5", "-o", dir.file("u5.txt")});
  CHECK(to_file.code == 0);
  CHECK(parse_tournament(slurp(dir.file("u5.txt"))) == u_tournament(5));
  CHECK(to_file.report()["output_digest"] == "fnv1a64:" + [&] {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(slurp(dir.file("u5.txt")))));
    return std::string(buf);
  }());
}

TEST_CASE("dw examples") {
  const std::string rot3 = emit_tournament(rotational(3));
  const json exact = run({"dw", "--exact"}, rot3).report();
  CHECK(exact["value"] == 3);
  CHECK(exact["mode"] == "exact");
  const json serial = run({"dw", "--exact", "--serial"}, rot3).report();
  CHECK(serial["value"] == exact["value"]);
  CHECK(serial["ordering"] == exact["ordering"]);

  const json approx = run({"dw", "--approx"}, rot3).report();
  CHECK(approx["width"] >= 3);
  const json bounds = run({"dw", "--bounds"}, rot3).report();
  CHECK(bounds["lower_min_indegree"] == 3);
  CHECK(bounds["upper_fas"].is_number());

  CHECK(run({"dw"}, rot3).code == cli::kExitError);
  CHECK(run({"dw", "--exact", "--approx"}, rot3).code == cli::kExitError);
  const Run capped = run({"dw", "--exact", "--cap", "5"}, rot3);
  CHECK(capped.code == cli::kExitError);
  CHECK(capped.err.find("cap 5") != std::string::npos);
}

TEST_CASE("verify: Pi(U_8) has width 1 and four backward arcs") {
  const std::string u8 = emit_tournament(u_tournament(8));
  const std::string pi = format_vertices(canonical_u_sequence(UOrderingKind::Pi, 8));
  const Run r = run({"verify", "--ordering", pi, "--width", "1"}, u8);
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["width"] == 1);
  CHECK(j["total_backward"] == 4);
  CHECK(j["matches"] == true);
  CHECK(run({"verify", "--ordering", pi, "--width", "2"}, u8).code == cli::kExitNo);
  CHECK(run({"verify", "--ordering", "0 1 2"}, u8).code == cli::kExitError);
  CHECK(run({"verify"}, u8).code == cli::kExitError);

  TempDir dir;
  std::ofstream(dir.file("pi.txt")) << pi << '\n';
  CHECK(run({"verify", "--ordering-file", dir.file("pi.txt")}, u8).report()["width"] == 1);
}

TEST_CASE("fas --sparse on U_8 lists three arcs, matching the exact oracle") {
  const std::string u8 = emit_tournament(u_tournament(8));
  const json s = run({"fas", "--sparse"}, u8).report();
  CHECK(s["size"] == 3);
  CHECK(s["arcs"].size() == 3);
  CHECK(run({"fas", "--exact"}, u8).report()["size"] == 3);
  CHECK(exact_fas(u_tournament(8)).value == 3);
  const Run not_sparse = run({"fas", "--sparse"}, emit_tournament(rotational(2)));
  CHECK(not_sparse.code == cli::kExitError);
}

TEST_CASE("sparse recognition and certificate") {
  const json s = run({"sparse"}, emit_tournament(u_tournament(8))).report();
  CHECK(s["sparse"] == true);
  CHECK(s["width"] == 1);
  CHECK(s["blocks"].size() == 1);
  const Run no = run({"sparse"}, emit_tournament(rotational(2)));
  CHECK(no.code == cli::kExitNo);
  CHECK(no.report()["sparse"] == false);
  const json m = run({"sparse", "-m", "0"}, emit_tournament(u_tournament(5))).report();
  CHECK(m["sparse"] == true);
  CHECK(m["m"] == json::array({0}));
}

TEST_CASE("fvs and ds exit codes") {
  const std::string tri = "3\n010\n001\n100\n";
  CHECK(run({"fvs", "--exact", "-k", "0"}, tri).code == cli::kExitNo);
  const json one = run({"fvs", "--exact"}, tri).report();
  CHECK(one["size"] == 1);
  CHECK(run({"fvs"}, tri).code == cli::kExitError);

  const std::string r6 = emit_tournament(random_tournament(10, 5));
  const std::size_t min_ds = exact_min_ds(random_tournament(10, 5)).value;
  CHECK(run({"ds", "--exact"}, r6).report()["size"] == min_ds);
  CHECK(run({"ds", "--fpt", "-s", std::to_string(min_ds)}, r6).code == 0);
  CHECK(run({"ds", "--fpt", "-s", std::to_string(min_ds - 1)}, r6).code == cli::kExitNo);
  CHECK(run({"ds", "--fpt", "-s", std::to_string(min_ds), "--randomized", "--seed", "7"}, r6).code == 0);
  CHECK(run({"ds", "--greedy"}, r6).code == 0);
}

TEST_CASE("reduce sat2dw and vc2fvst") {
  TempDir dir;
  const Run sat = run({"reduce", "sat2dw", "-o", dir.file("t.txt"), "--sidecar", dir.file("s.json"), "--assignment",
                       "1 0 0"},
                      kCanonicalCnf);
  REQUIRE(sat.code == 0);
  const json j = sat.report();
  CHECK(j["W"] == 95);
  CHECK(j["threshold"] == 116);
  CHECK(j["n"] == 328);
  CHECK(j["nice_width"] == 115);
  CHECK(j["satisfies"] == true);
  CHECK(j["blocks"]["U"]["size"] == 12);
  CHECK(json::parse(slurp(dir.file("s.json"))) == j);
  CHECK(parse_tournament(slurp(dir.file("t.txt"))).size() == 328);

  const json unsat = run({"reduce", "sat2dw", "-o", dir.file("t2.txt"), "--assignment", "0 0 0"}, kCanonicalCnf).report();
  CHECK(unsat["nice_width"] == 116);

  const Run plain = run({"reduce", "sat2dw"}, kCanonicalCnf);
  CHECK(plain.out == slurp(dir.file("t.txt")));

  CHECK(run({"reduce", "sat2dw"}, "p cnf 3 1\n1 1 2 0\n").code == cli::kExitError);
  CHECK(run({"reduce", "sideways"}, kCanonicalCnf).code == cli::kExitError);

  const Run vc = run({"reduce", "vc2fvst", "-o", dir.file("k4.txt"), "--cover", "0 1 2"}, kK4Edges);
  REQUIRE(vc.code == 0);
  const json v = vc.report();
  CHECK(v["n"] == 32);
  CHECK(v["offset"] == 6);
  CHECK(v["arcs"].size() == 10);
  CHECK(v["fvs_size"] == 9);
  CHECK(run({"verify", "--ordering", format_vertices(v["sparse_ordering"].get<std::vector<Vertex>>())},
            slurp(dir.file("k4.txt")))
            .report()["width"] == 1);
  CHECK(run({"reduce", "vc2fvst", "--cover", "0 1"}, kK4Edges).code == cli::kExitError);
  CHECK(run({"reduce", "vc2fvst"}, "p edge 4 1\ne 1 2\n").code == cli::kExitError);
}

TEST_CASE("bench CSV") {
  const Run b = run({"bench", "--n-min", "3", "--n-max", "5", "--count", "2", "--seed", "9"});
  CHECK(b.code == 0);
  std::istringstream lines(b.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == cli::kBenchHeader);
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    CHECK(line.substr(line.size() - 9) == ",NA,NA,NA");
  }
  CHECK(rows == 6);
  const Run big = run({"bench", "--n-min", "30", "--n-max", "30", "--count", "1"});
  CHECK(big.out.find("30,0,NA,") != std::string::npos);
  const Run timed = run({"bench", "--n-min", "4", "--n-max", "4", "--count", "1", "--timing"});
  CHECK(timed.out.find(",NA,NA,NA") == std::string::npos);
}

TEST_CASE("input errors and help") {
  CHECK(run({}).code == cli::kExitError);
  CHECK(run({"frobnicate"}).code == cli::kExitError);
  const Run bad = run({"dw", "--exact"}, "2\n00\n00\n");
  CHECK(bad.code == cli::kExitError);
  CHECK(bad.err.find("line 3, column 1") != std::string::npos);
  CHECK(run({"dw", "--exact", "-i", "/nonexistent/file"}).code == cli::kExitError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are byte-identical across reruns") {
  const std::string r9 = emit_tournament(random_tournament(9, 3));
  const std::string u8 = emit_tournament(u_tournament(8));
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"gen", "random", "-n", "12", "--seed", "5"}, ""},
      {{"dw", "--exact"}, r9},
      {{"dw", "--approx"}, r9},
      {{"dw", "--bounds"}, r9},
      {{"sparse"}, u8},
      {{"fas", "--sparse"}, u8},
      {{"fas", "--exact"}, r9},
      {{"fvs", "--exact"}, r9},
      {{"ds", "--fpt", "-s", "3", "--randomized", "--seed", "11"}, r9},
      {{"ds", "--greedy"}, r9},
      {{"reduce", "sat2dw", "--assignment", "1 1 1"}, kCanonicalCnf},
      {{"reduce", "vc2fvst"}, kK4Edges},
      {{"verify", "--ordering", "0 1 2 3 4 5 6 7 8"}, r9},
      {{"bench", "--n-min", "4", "--n-max", "7", "--count", "2"}, ""},
  };
  for (const auto& [args, input] : cases) {
    const Run a = run(args, input);
    const Run b = run(args, input);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  const json timed = run({"--timing", "dw", "--approx"}, r9).report();
  CHECK(timed.contains("time_ms"));
  CHECK_FALSE(run({"dw", "--approx"}, r9).report().contains("time_ms"));
}
