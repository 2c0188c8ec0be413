#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "goldens.hpp"
#include "hoppe/cli/cli.hpp"
#include "hoppe/common/error.hpp"
#include "paths.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = hoppe::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string counts_arg(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(goldens::kB44Counts[i]);
  return s;
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hoppe_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("certify in text and json") {
  const auto t = call({"certify", "--monad", data_path("euler.monad"), "--polarization", "1"});
  CHECK(t.code == 0);
  CHECK(t.out.find("verdict: Stable") != std::string::npos);
  const auto j = call({"certify", "--monad", data_path("k_rank3.monad"), "--polarization", "1,1", "--format",
                       "json"});
  CHECK(j.code == 0);
  const json d = json::parse(j.out);
  CHECK(d["kind"] == "stability");
  CHECK(d["verdict"] == "Stable");
  CHECK(d["bundle"]["rank"] == 3);
}

TEST_CASE("certify output is byte-stable") {
  const std::vector<std::string> args{"certify", "--monad", data_path("e_rank2.monad"), "--polarization", "1,1",
                                      "--format", "json"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("h0 and chern") {
  const auto h = call({"h0", "--monad", data_path("k_rank3.monad"), "--twist", "3,3", "--exterior", "2"});
  CHECK(h.code == 0);
  CHECK(h.out == "4\n");
  const auto hq = call({"h0", "--monad", data_path("quartic_k.monad"), "--twist", "1", "--surface",
                        data_path("quartic_x.poly")});
  CHECK(hq.code == 0);
  CHECK(hq.out == "0\n");

  const auto c = call({"chern", "--monad", data_path("euler.monad"), "--cover", "double-plane", "--format", "json"});
  CHECK(c.code == 0);
  const json d = json::parse(c.out);
  CHECK(d.dump().find("18") != std::string::npos);
  const auto dual = call({"chern", "--monad", data_path("ks_2.monad"), "--dual", "--format", "json"});
  CHECK(dual.code == 0);
  CHECK(json::parse(dual.out)["c1"] == json::array({2}));
}

TEST_CASE("lattice subcommands") {
  CHECK(call({"lattice", "genus", "--lattice", "[4 5 2]", "--class", "0,1"}).out == "2\n");
  const auto g = call({"lattice", "gram", "--lattice", "U(2)", "--class", "1,0", "--class", "0,1", "--class",
                       "2,2", "--format", "json"});
  CHECK(g.code == 0);
  CHECK(json::parse(g.out)["det"] == "0");
  const auto e = call({"lattice", "effectivity", "--lattice", "[4 5 2]", "--class", "-2,2", "--polarization",
                       "1,0", "--format", "json"});
  CHECK(e.code == 0);
  CHECK(json::parse(e.out).dump().find("curve-decomposition") != std::string::npos);
  const auto ed = call({"lattice", "expected-dim", "--rank", "3", "--c1-squared", "64", "--c2", "24"});
  CHECK(ed.code == 0);
  CHECK(ed.out == "0\n");
}

TEST_CASE("quartic-run") {
  const auto q = call({"quartic-run", "--surface", data_path("quartic_x.poly"), "--monad",
                       data_path("quartic_k.monad"), "--justify", "-1,2", "--format", "json"});
  CHECK(q.code == 0);
  CHECK(json::parse(q.out)["verdict"] == "Stable");
}

TEST_CASE("count-points is independent of the thread count") {
  const auto one = call({"count-points", "--surface", data_path("b44.poly"), "--prime", "3", "--max-n", "5",
                         "--threads", "1", "--format", "json"});
  const auto four = call({"count-points", "--surface", data_path("b44.poly"), "--prime", "3", "--max-n", "5",
                          "--threads", "4", "--format", "json"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out.find("6566") != std::string::npos);
}

TEST_CASE("picard-bound from counts") {
  const auto nine = call({"picard-bound", "--counts", counts_arg(9), "--prime", "3", "--format", "json"});
  CHECK(nine.code == 0);
  CHECK(json::parse(nine.out)["rank_upper_bound"] == 8);
  const auto ten = call({"picard-bound", "--counts", counts_arg(10), "--prime", "3", "--format", "json"});
  CHECK(json::parse(ten.out)["rank_upper_bound"] == 2);
  CHECK(call({"picard-bound", "--counts", counts_arg(5), "--prime", "3"}).code == 1);
  CHECK(call({"picard-bound", "--prime", "3"}).code == 1);
}

TEST_CASE("usage errors and help") {
  CHECK(call({}).code == 1);
  CHECK(call({"nonsense"}).code == 1);
  CHECK(call({"certify", "--monad", data_path("euler.monad")}).code == 1);
  CHECK(call({"certify", "--monad", data_path("missing.monad"), "--polarization", "1"}).code == 1);
  CHECK(call({"certify", "--monad", data_path("euler.monad"), "--polarization", "1", "--format", "xml"}).code == 1);
  const auto e = call({"lattice", "genus", "--lattice", "[3 1 2]", "--class", "1,0"});
  CHECK(e.code == 1);
  CHECK(e.err.find("error:") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"certify", "--help"}).code == 0);
}

TEST_CASE("an inconclusive certificate exits with 2") {
  const fs::path m = temp_file("split.monad");
  std::ofstream(m) << R"({"name": "split",
    "ambient": {"type": "projective", "dim": 2, "variables": ["x", "y", "z"]},
    "middle": [[0], [-1], [-1]], "target": [[0]], "map_b": [["1", "y", "z"]]})";
  const auto r = call({"certify", "--monad", m.string(), "--polarization", "1"});
  CHECK(r.code == 2);
  CHECK(r.out.find("Inconclusive") != std::string::npos);
}

TEST_CASE("verify accepts fresh documents and rejects tampered ones") {
  const fs::path cert = temp_file("k.json");
  REQUIRE(call({"certify", "--monad", data_path("e_rank2.monad"), "--polarization", "1,1", "--format", "json",
                "--out", cert.string()})
              .code == 0);
  const auto ok = call({"verify", cert.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("MISMATCH") == std::string::npos);

  json d = hoppe::cli::read_json_file(cert.string());
  d["core_checks"][0]["h0"]["lo"] = 1;
  d["core_checks"][0]["h0"]["hi"] = 1;
  const fs::path bad = temp_file("k_bad.json");
  std::ofstream(bad) << d.dump(2);
  const auto r = call({"verify", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.out.find("MISMATCH") != std::string::npos);

  const fs::path prof = temp_file("z.json");
  REQUIRE(call({"picard-bound", "--counts", counts_arg(9), "--prime", "3", "--format", "json", "--out",
                prof.string()})
              .code == 0);
  CHECK(call({"verify", prof.string()}).code == 0);

  const fs::path qc = temp_file("q.json");
  REQUIRE(call({"quartic-run", "--surface", data_path("quartic_x.poly"), "--monad", data_path("quartic_k.monad"),
                "--format", "json", "--out", qc.string()})
              .code == 0);
  CHECK(call({"verify", qc.string()}).code == 0);
}

TEST_CASE("document helpers") {
  CHECK(hoppe::cli::parse_int_list("1,-2, 3") == std::vector<long long>{1, -2, 3});
  CHECK_THROWS_AS(hoppe::cli::parse_int_list("1,,2"), hoppe::Error);
  CHECK(hoppe::cli::parse_fiber_point("2:3") == std::pair<long, long>{2, 3});
  CHECK_THROWS_AS(hoppe::cli::parse_fiber_point("0:0"), hoppe::Error);
  const auto lat = hoppe::cli::resolve_lattice(data_path("quartic_lattice.json"));
  CHECK(lat->determinant() == -17);
  json s = hoppe::cli::read_json_file(data_path("b44.poly"));
  s["extra"] = 1;
  CHECK_THROWS_AS(hoppe::cli::surface_from_json(s), hoppe::DocumentError);
}
