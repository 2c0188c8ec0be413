#include <doctest.h>

#include "hoppe/common/error.hpp"
#include "hoppe/monad/document.hpp"
#include "hoppe/stability/certify.hpp"
#include "paths.hpp"

using namespace hoppe;
using nlohmann::json;

namespace {

MonadComplex load(const std::string& name) { return load_monad(data_path(name + ".monad")); }

Polarization pol(const MonadComplex& m) {
  return Polarization::on_ambient(m.ambient(), m.ambient().is_product() ? MultiDegree{1, 1} : MultiDegree{1});
}

}  // namespace

TEST_CASE("slopes and polarizations") {
  const MonadComplex e = load("euler");
  CHECK(slope(chern_monad(e), pol(e)) == mpq_class(-3, 2));
  const MonadComplex k = load("k_rank3");
  CHECK(slope(chern_monad(k), pol(k)) == mpq_class(-8, 3));
  CHECK_THROWS_AS(Polarization::on_ambient(k.ambient(), MultiDegree{1, 0}), InvalidArgument);
  CHECK_THROWS_AS(Polarization::on_ambient(k.ambient(), MultiDegree{1}), AmbientMismatch);
  CHECK(pullback_degree(3) == 6);
}

TEST_CASE("twist regions") {
  const MonadComplex e = load("euler");
  const RegionDescriptor r = twist_region(chern_monad(e), 1, pol(e));
  CHECK(r.shape == RegionShape::HalfLine);
  CHECK(r.max_twist == 1);
  CHECK(r.contains(pol(e), MultiDegree{1}));
  CHECK_FALSE(r.contains(pol(e), MultiDegree{2}));

  const MonadComplex k = load("k_rank3");
  const RegionDescriptor r2 = twist_region(chern_monad(k), 2, pol(k));
  CHECK(r2.shape == RegionShape::Band);
  CHECK(r2.degree_bound == 5);
  for (const auto& p : r2.core_points) {
    CHECK(p[0] + p[1] <= 5);
    CHECK(r2.core_floor.leq(p));
  }
}

TEST_CASE("every catalogued bundle certifies Stable") {
  for (const char* name : {"euler", "ks_1", "ks_2", "ks_3", "ks_4", "e_rank2", "k_rank3", "k_rank3_n2"}) {
    const MonadComplex m = load(name);
    const auto cert = certify(m, pol(m));
    INFO(name);
    CHECK(cert.verdict == Verdict::Stable);
    for (const auto& c : cert.core_checks) CHECK(c.result.hi == 0);
  }
}

TEST_CASE("rank-3 certificate contains the expected s = 1 checks") {
  const MonadComplex m = load("k_rank3");
  CertifyOptions opts;
  const auto cert = certify(m, pol(m), opts);
  for (const auto& L : {MultiDegree{2, 0}, MultiDegree{1, 1}, MultiDegree{0, 2}}) {
    bool found = false;
    for (const auto& c : cert.core_checks)
      if (c.s == 1 && c.twist == L) found = true;
    CHECK(found);
  }
}

TEST_CASE("justify covers every twist in the band regions") {
  for (const char* name : {"e_rank2", "k_rank3", "k_rank3_n2"}) {
    const MonadComplex m = load(name);
    const Polarization H = pol(m);
    const auto cert = certify(m, H);
    for (int s = 1; s < cert.chern.rank; ++s)
      for (int k = -12; k <= 12; ++k)
        for (int l = -12; l <= 12; ++l) {
          const auto why = justify(cert, H, s, MultiDegree{k, l});
          INFO(name << " s=" << s << " L=(" << k << "," << l << ")");
          REQUIRE(why.has_value());
          const bool inside = cert.regions[static_cast<std::size_t>(s - 1)].contains(H, MultiDegree{k, l});
          CHECK((*why == "outside region") == !inside);
        }
  }
}

TEST_CASE("options: margin and fiber point") {
  const MonadComplex m = load("e_rank2");
  CertifyOptions opts;
  opts.margin = 1;
  opts.fiber_point = {1, 1};
  const auto cert = certify(m, pol(m), opts);
  CHECK(cert.verdict == Verdict::Stable);
  CHECK(cert.tail_rules.front().cert.point == std::pair<long, long>{1, 1});

  // A deeper core reaches (-2,1), where h1(A(L)) = 2 leaves only the bound [0, 2].
  opts.margin = 2;
  const auto deep = certify(m, pol(m), opts);
  CHECK(deep.verdict == Verdict::Inconclusive);
  CHECK(deep.reason.find("interval") != std::string::npos);
  CHECK(h0_bundle(m, 1, MultiDegree{-2, 1}).hi == 2);
}

TEST_CASE("a split bundle is Inconclusive with a witness twist") {
  const json d = json::parse(R"({"name": "split",
    "ambient": {"type": "projective", "dim": 2, "variables": ["x", "y", "z"]},
    "middle": [[0], [-1], [-1]], "target": [[0]], "map_b": [["1", "y", "z"]]})");
  const MonadComplex m = monad_from_json(d);
  const auto cert = certify(m, pol(m));
  CHECK(cert.verdict == Verdict::Inconclusive);
  REQUIRE(cert.failing_twist.has_value());
  CHECK(*cert.failing_twist == MultiDegree{1});
  CHECK(cert.failing_value.value() == 2);
}

TEST_CASE("certificate documents round-trip") {
  for (const char* name : {"euler", "e_rank2", "k_rank3"}) {
    const MonadComplex m = load(name);
    const auto cert = certify(m, pol(m));
    const auto j = to_json(cert);
    const auto back = certificate_from_json(json::parse(j.dump()));
    CHECK(json::parse(to_json(back).dump()) == json::parse(j.dump()));
    CHECK(render_text(back) == render_text(cert));
  }
  json bad = json::parse(to_json(certify(load("euler"), pol(load("euler")))).dump());
  bad["kind"] = "other";
  CHECK_THROWS_AS(certificate_from_json(bad), DocumentError);
}

TEST_CASE("transfer to the double cover") {
  const MonadComplex m = load("euler");
  const auto t = pullback_transfer(certify(m, pol(m)), CoverSpec::double_plane());
  CHECK(t.cover_chern.c2 == 6);
  CHECK(t.cover_chern.c1_squared == 18);
  const MonadComplex k = load("k_rank3");
  const auto tk = pullback_transfer(certify(k, pol(k)), CoverSpec::double_quadric());
  CHECK(tk.rule == "picard-isomorphism");
  CHECK(tk.cover_chern.c2 == 24);
  CHECK_THROWS_AS(pullback_transfer(certify(m, pol(m)), CoverSpec::double_quadric()), NotApplicable);
}

TEST_CASE("certify rejects unsupported ambients") {
  const MonadComplex q = load("quartic_k");
  CHECK_THROWS(certify(q, Polarization::on_ambient(q.ambient(), MultiDegree{1})));
}
