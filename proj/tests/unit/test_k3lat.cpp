#include <doctest.h>

#include <functional>
#include <random>

#include "hoppe/common/error.hpp"
#include "hoppe/k3lat/cover.hpp"
#include "hoppe/k3lat/effectivity.hpp"
#include "hoppe/k3lat/quartic.hpp"
#include "hoppe/monad/document.hpp"
#include "hoppe/polycore/parser.hpp"
#include "oracles.hpp"
#include "paths.hpp"

using namespace hoppe;

namespace {

const Ambient P3 = Ambient::projective(3, {"x", "y", "z", "w"});

RationalPolynomial quartic_f() {
  return parse_poly(
      "-x*(x + z - w)*(x*w - y*z) + z*(x + z)*(x*y - z^2) + (x*y + w^2)*(y^2 - z*w)", P3);
}

LatticeClass cls(const LatticeRef& l, std::vector<long long> c) { return LatticeClass(l, std::move(c)); }

// Brute-force effectivity oracle on a rank-2 lattice: enumerate possible
// irreducible curve classes in a box, then search for a decomposition of D.
bool decomposable(const LatticeClass& D, const LatticeClass& H) {
  const LatticeRef& lat = D.lattice();
  const long long d = pair(D, H);
  std::vector<LatticeClass> curves;
  for (long long a = -40; a <= 40; ++a)
    for (long long b = -40; b <= 40; ++b) {
      const LatticeClass K = cls(lat, {a, b});
      const long long kd = pair(K, H);
      if (kd >= 1 && kd <= d && self_int(K) >= -2) curves.push_back(K);
    }
  std::function<bool(const LatticeClass&, std::size_t)> rec = [&](const LatticeClass& rest,
                                                                  std::size_t from) {
    const long long rd = pair(rest, H);
    if (rd == 0) return rest.is_zero();
    for (std::size_t i = from; i < curves.size(); ++i)
      if (pair(curves[i], H) <= rd && rec(rest - curves[i], i)) return true;
    return false;
  };
  return rec(D, 0);
}

}  // namespace

TEST_CASE("catalogued lattices") {
  const auto u2 = catalogue_lattice("U(2)");
  CHECK(u2->gram() == IntMatrix{{0, 2}, {2, 0}});
  CHECK(u2->determinant() == -4);
  const auto k3 = catalogue_lattice("K3");
  CHECK(k3->rank() == 22);
  CHECK(k3->determinant() == -1);
  CHECK(catalogue_lattice("E8(-1)")->determinant() == 1);
  const auto q = catalogue_lattice("[4 5 2]");
  CHECK(q->basis() == std::vector<std::string>{"H", "C"});
  CHECK_THROWS_AS(catalogue_lattice("[3 1 2]"), OddSquare);
  CHECK_THROWS_AS(catalogue_lattice("nonsense"), InvalidArgument);
}

TEST_CASE("U(2) classes and the relation R = 2E1 + 2E2") {
  const auto u2 = catalogue_lattice("U(2)");
  const LatticeClass E1 = cls(u2, {1, 0}), E2 = cls(u2, {0, 1});
  const LatticeClass R = E1.scaled(2) + E2.scaled(2);
  const GramResult g2 = gram_of({E1, E2});
  CHECK(g2.gram == IntMatrix{{0, 2}, {2, 0}});
  CHECK(g2.det == -4);
  const GramResult g3 = gram_of({E1, E2, R});
  CHECK(g3.det == 0);
  CHECK(g3.det == oracle::laplace_det(g3.gram));
  // c with c1 E1 + c2 E2 + c3 R = 0 numerically, normalised so that R has coefficient -1.
  auto rel = kernel_relation(g3.gram);
  if (rel[2] > 0)
    for (auto& v : rel) v = -v;
  CHECK(rel == std::vector<long long>{2, 2, -1});
  CHECK(genus(R) == 9);
}

TEST_CASE("the quartic lattice [4 5 2]") {
  const auto q = catalogue_lattice("[4 5 2]");
  const LatticeClass H = cls(q, {1, 0}), C = cls(q, {0, 1});
  CHECK(self_int(C) == 2);
  CHECK(pair(C, H) == 5);
  CHECK(genus(C) == 2);
  CHECK(self_int(H) == 4);
  CHECK(q->determinant() == -17);
  CHECK_THROWS_AS(pair(H, cls(catalogue_lattice("U(2)"), {1, 0})), LatticeMismatch);
}

TEST_CASE("Gram determinants agree with cofactor expansion") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> v(-3, 3);
  const auto k3 = catalogue_lattice("K3");
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<LatticeClass> cs;
    for (int i = 0; i < 4; ++i) {
      std::vector<long long> c(22);
      for (auto& x : c) x = v(rng);
      cs.emplace_back(k3, c);
    }
    const GramResult g = gram_of(cs);
    CHECK(g.det == oracle::laplace_det(g.gram));
  }
}

TEST_CASE("effectivity rules") {
  const auto q = catalogue_lattice("[4 5 2]");
  const LatticeClass H = cls(q, {1, 0});
  const auto zero = not_effective_cert(cls(q, {0, 0}), H);
  CHECK_FALSE(zero.certified);
  CHECK(zero.rule == EffectivityRule::ZeroClass);
  const auto neg = not_effective_cert(cls(q, {-1, 0}), H);
  CHECK(neg.certified);
  CHECK(neg.rule == EffectivityRule::NonPositiveDegree);
  const auto d = not_effective_cert(cls(q, {-2, 2}), H);
  CHECK(d.certified);
  CHECK(d.rule == EffectivityRule::CurveDecomposition);
  CHECK(d.degree == 2);
  CHECK_FALSE(not_effective_cert(H, H).certified);
  CHECK_FALSE(not_effective_cert(cls(q, {0, 1}), H).certified);
}

TEST_CASE("effectivity agrees with brute-force decomposition search") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> c(-6, 6);
  const auto q = catalogue_lattice("[4 5 2]");
  const auto u2 = catalogue_lattice("U(2)");
  int checked = 0;
  for (int trial = 0; trial < 600 && checked < 150; ++trial) {
    const bool quartic = trial % 2 == 0;
    const LatticeRef lat = quartic ? q : u2;
    const LatticeClass H = quartic ? cls(q, {1, 0}) : cls(u2, {1, 1});
    const LatticeClass D = cls(lat, {c(rng), c(rng)});
    const long long deg = pair(D, H);
    if (deg > 8) continue;
    ++checked;
    const auto r = not_effective_cert(D, H);
    if (D.is_zero())
      CHECK_FALSE(r.certified);
    else if (deg <= 0)
      CHECK(r.certified);
    else
      CHECK(r.certified == !decomposable(D, H));
  }
  CHECK(checked >= 100);
}

TEST_CASE("double cover Chern data") {
  const auto plane = CoverSpec::double_plane();
  const CoverChern e = pullback_chern(ChernData{2, MultiDegree{-3}, 3}, plane);
  CHECK(e.c1_base == MultiDegree{-3});
  CHECK(e.c1_squared == 18);
  CHECK(e.c2 == 6);
  for (int s = 1; s <= 4; ++s) CHECK(pullback_chern(ChernData{2, MultiDegree{-s}, s * s}, plane).c2 == 2 * s * s);
  const CoverChern k = pullback_chern(ChernData{3, MultiDegree{-4, -4}, 12}, CoverSpec::double_quadric());
  CHECK(k.c1_squared == 64);
  CHECK(k.c2 == 24);
  CHECK(expected_dim(3, 64, 24) == 0);
  CHECK(expected_dim(2, 2, 2, 1) == 3);
  CHECK_THROWS_AS(pullback_chern(ChernData{2, MultiDegree{-3}, 3}, CoverSpec::quartic()), NotApplicable);
}

TEST_CASE("rigid rank-2 classes on the double plane have expected dimension 0") {
  for (long long k = 0; k <= 10; ++k) {
    const auto [x, y] = rigid_rank2_classes(k);
    CHECK(x == 2 * k + 1);
    CHECK(expected_dim(2, 2 * x * x, y) == 0);
  }
}

TEST_CASE("Hilbert function of R/(f)") {
  const QuarticSurface X(quartic_f());
  for (int d = 0; d <= 12; ++d) {
    CHECK(X.hilbert(d) == quartic_hilbert_formula(d));
    CHECK(X.hilbert(d) == oracle::binom(d + 3, 3) - oracle::binom(d - 1, 3));
  }
  CHECK(quartic_hilbert_formula(1) == 4);
  CHECK(quartic_hilbert_formula(4) == 34);
}

TEST_CASE("normal forms reduce f to zero and respect the ideal") {
  const QuarticSurface X(quartic_f());
  CHECK(X.normal_form(quartic_f()).is_zero());
  const auto g = parse_poly("x*y - 3*z*w", P3);
  CHECK(X.normal_form(g * quartic_f() + g) == X.normal_form(g));
}

TEST_CASE("basepoint of the quartic monad") {
  const QuarticSurface X(quartic_f());
  const MonadComplex m = load_monad(data_path("quartic_k.monad"));
  const auto p = monad_basepoint(m);
  CHECK(p == std::vector<mpq_class>{0, 0, 1, 0});
  CHECK(X.evaluate(p) == -1);
}

TEST_CASE("quartic h0 matches the ideal-membership oracle") {
  const QuarticSurface X(quartic_f());
  const MonadComplex m = load_monad(data_path("quartic_k.monad"));
  for (int k = -1; k <= 5; ++k) CHECK(quartic_h0(X, m, k).value() == oracle::quartic_kernel_h0(quartic_f(), m, k));
  CHECK(quartic_h0(X, m, 1).value() == 0);
  CHECK_THROWS_AS(quartic_h0(X, m, 1, 1), UnsupportedTwist);
}

TEST_CASE("quartic region run covers every twist in the region") {
  const QuarticSurface X(quartic_f());
  const MonadComplex m = load_monad(data_path("quartic_k.monad"));
  const auto cert = quartic_region_run(X, m, catalogue_lattice("[4 5 2]"));
  CHECK(cert.verdict == Verdict::Stable);
  CHECK(cert.chern == ChernData{2, MultiDegree{-3, 0}, 12});
  CHECK(cert.slope == -6);
  REQUIRE(cert.core_checks.size() == 1);
  CHECK(cert.core_checks[0].twist == MultiDegree{1, 0});
  int inside = 0;
  for (int k = -25; k <= 25; ++k)
    for (int l = -25; l <= 25; ++l) {
      const auto why = justify_quartic(cert, MultiDegree{k, l});
      REQUIRE(why.has_value());
      if (4 * k + 5 * l <= 6) {
        ++inside;
        CHECK(*why != "outside region");
      } else {
        CHECK(*why == "outside region");
      }
    }
  CHECK(inside > 0);
  CHECK(justify_quartic(cert, MultiDegree{-1, 2})->rfind("curve-decomposition", 0) == 0);
}

TEST_CASE("quartic errors") {
  CHECK_THROWS_AS(QuarticSurface(parse_poly("x^3*y + z^3", P3)), HomogeneityError);
  CHECK_THROWS_AS(QuarticSurface(parse_poly("x*y", Ambient::projective(2, {"x", "y", "z"}))),
                  AmbientMismatch);
  const QuarticSurface bad(parse_poly("x^4 + y^4 + w^4 + x*z^3", P3));
  const MonadComplex m = load_monad(data_path("quartic_k.monad"));
  CHECK_THROWS_AS(quartic_region_run(bad, m, catalogue_lattice("[4 5 2]")), BasepointFailure);
  CHECK_THROWS_AS(quartic_region_run(QuarticSurface(quartic_f()), m, catalogue_lattice("U(2)")),
                  Error);
}
