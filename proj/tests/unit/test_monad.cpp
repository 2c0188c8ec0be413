#include <doctest.h>

#include <random>

#include "hoppe/common/error.hpp"
#include "hoppe/monad/chern.hpp"
#include "hoppe/monad/document.hpp"
#include "hoppe/polycore/parser.hpp"
#include "paths.hpp"

using namespace hoppe;
using nlohmann::json;

namespace {

MonadComplex load(const std::string& name) { return load_monad(data_path(name + ".monad")); }

json euler_doc() {
  return json::parse(R"({"name": "euler",
    "ambient": {"type": "projective", "dim": 2, "variables": ["x", "y", "z"]},
    "middle": [[-1], [-1], [-1]], "target": [[0]], "map_b": [["x", "y", "z"]]})");
}

}  // namespace

TEST_CASE("Chern data of the catalogued monads") {
  CHECK(chern_monad(load("euler")) == ChernData{2, MultiDegree{-3}, 3});
  for (int s = 1; s <= 4; ++s) {
    const ChernData k = chern_monad(load("ks_" + std::to_string(s)));
    CHECK(k == ChernData{2, MultiDegree{-s}, s * s});
    CHECK(dual(k) == ChernData{2, MultiDegree{s}, s * s});
  }
  CHECK(chern_monad(load("e_rank2")) == ChernData{2, MultiDegree{1, 1}, 2});
  CHECK(chern_monad(load("k_rank3")) == ChernData{3, MultiDegree{-4, -4}, 12});
  CHECK(chern_monad(load("k_rank3_n2")) == ChernData{3, MultiDegree{-4, -4}, 16});
}

TEST_CASE("Whitney formula against the elementary symmetric closed form") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(1, 6), tw(-5, 5);
  const Ambient P2 = Ambient::projective(2, {"x", "y", "z"});
  const Ambient Q = Ambient::product(1, 1, {"x1", "x2", "y1", "y2"});
  for (int trial = 0; trial < 200; ++trial) {
    const Ambient& amb = trial % 2 ? P2 : Q;
    const std::size_t arity = amb.grading();
    auto random_sheaf = [&] {
      FreeSheaf f{amb, {}};
      const int n = len(rng);
      for (int i = 0; i < n; ++i) {
        std::vector<int> c;
        for (std::size_t g = 0; g < arity; ++g) c.push_back(tw(rng));
        f.twists.emplace_back(c);
      }
      return f;
    };
    const FreeSheaf a = random_sheaf(), b = random_sheaf();
    FreeSheaf sum{amb, a.twists};
    sum.twists.insert(sum.twists.end(), b.twists.begin(), b.twists.end());

    // c1 = sum of twists, c2 = sum over pairs of intersections.
    MultiDegree c1 = MultiDegree::zero(arity);
    long long c2 = 0;
    for (std::size_t i = 0; i < sum.twists.size(); ++i) {
      c1 = c1 + sum.twists[i];
      for (std::size_t j = i + 1; j < sum.twists.size(); ++j)
        c2 += amb.intersect(sum.twists[i], sum.twists[j]);
    }
    const ChernData expect{static_cast<long long>(sum.rank()), c1, c2};
    CHECK(chern_free(sum) == expect);
    CHECK(whitney(amb, chern_free(a), chern_free(b)) == expect);
    CHECK(chern_divide(amb, expect, chern_free(b)) == chern_free(a));
  }
}

TEST_CASE("documents round-trip") {
  for (const char* name : {"euler", "ks_3", "e_rank2", "k_rank3", "k_rank3_n2", "quartic_k"}) {
    const MonadComplex m = load(name);
    const MonadComplex again = monad_from_json(json::parse(monad_to_json(m).dump()));
    CHECK(monad_to_json(again) == monad_to_json(m));
    CHECK(again.map_b() == m.map_b());
  }
}

TEST_CASE("documents reject unknown fields and bad shapes") {
  json d = euler_doc();
  CHECK_NOTHROW(monad_from_json(d));
  d["colour"] = "blue";
  CHECK_THROWS_AS(monad_from_json(d), DocumentError);

  d = euler_doc();
  d["map_b"] = json::parse(R"([["x", "y"]])");
  CHECK_THROWS_AS(monad_from_json(d), Error);

  d = euler_doc();
  d["map_b"] = json::parse(R"([["x", "y", "q"]])");
  CHECK_THROWS_AS(monad_from_json(d), UnknownVariable);

  CHECK_THROWS_AS(load_monad(data_path("missing.monad")), DocumentError);
}

TEST_CASE("validation of the catalogued monads") {
  for (const char* name : {"euler", "ks_2", "e_rank2", "k_rank3", "k_rank3_n2"}) {
    const auto rep = validate(load(name));
    CHECK(rep.structural_ok());
    CHECK(rep.surjectivity_b != MapStatus::RefutedByCommonZero);
    CHECK(rep.surjectivity_b != MapStatus::RefutedAtSamplePoint);
  }
  const auto e = validate(load("e_rank2"));
  CHECK(e.injectivity_a != MapStatus::RefutedByCommonZero);
}

TEST_CASE("validation catches a non-complex and a non-surjective map") {
  json d = json::parse(R"({"name": "bad",
    "ambient": {"type": "product_projective", "dims": [1, 1], "variables": ["x1", "x2", "y1", "y2"]},
    "source": [[0, 0]], "middle": [[1, 0], [1, 0], [0, 1], [0, 1]], "target": [[1, 1]],
    "map_a": [["x1"], ["x2"], ["y1"], ["y2"]], "map_b": [["y1", "y2", "x1", "x2"]]})");
  const MonadComplex m = monad_from_json(d);
  CHECK_FALSE(validate(m).composite_zero);
  CHECK_THROWS_AS(require_valid(m), ValidationError);

  json k = euler_doc();
  k["map_b"] = json::parse(R"([["x", "y", "x"]])");
  CHECK(validate(monad_from_json(k)).surjectivity_b == MapStatus::RefutedByCommonZero);
}

TEST_CASE("restriction to a fiber of P1xP1") {
  const MonadComplex m = load("k_rank3");
  const MonadComplex f = restrict_to_fiber(m, 2, {0, 1});
  CHECK(f.ambient().dims() == std::vector<int>{1});
  CHECK(f.B().rank() == 4);
  // y1 = 0, y2 = 1 kills the entries with y1.
  CHECK(f.map_b().at(0, 0).is_zero());
  CHECK(f.map_b().at(0, 1) == parse_poly("x1", f.ambient()));
  CHECK_THROWS_AS(restrict_to_fiber(m, 2, {0, 0}), InvalidPoint);
}

TEST_CASE("real structure") {
  MonadComplex m = load("euler");
  CHECK(is_real(m));
  m.set_imaginary_parts(std::nullopt, m.map_b());
  CHECK_FALSE(is_real(m));
}
