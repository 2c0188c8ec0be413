#include <doctest.h>

#include <random>

#include "hoppe/common/error.hpp"
#include "hoppe/polycore/exact_matrix.hpp"
#include "hoppe/polycore/parser.hpp"
#include "hoppe/polycore/poly_matrix.hpp"
#include "hoppe/polycore/section_matrix.hpp"
#include "oracles.hpp"

using namespace hoppe;

namespace {

const Ambient P2 = Ambient::projective(2, {"x", "y", "z"});
const Ambient Q = Ambient::product(1, 1, {"x1", "x2", "y1", "y2"});

}  // namespace

TEST_CASE("parser reads sums, products, powers and parentheses") {
  const auto p = parse_poly("(x + y)^2 - 2*x*y", P2);
  CHECK(p == parse_poly("x^2 + y^2", P2));
  CHECK(parse_poly("-x1*y1 + 3*x2*y2", Q).render() == "-x1*y1 + 3*x2*y2");
  CHECK(parse_poly("0", P2).is_zero());
  CHECK(parse_poly("7", P2).is_constant());
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_poly("x + w", P2), UnknownVariable);
  CHECK_THROWS_AS(parse_poly("x +", P2), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(x + y", P2), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x ** 2", P2), SyntaxError);
}

TEST_CASE("render round-trips through the parser") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5), expo(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    RationalPolynomial p(Q);
    for (int t = 0; t < 4; ++t) {
      const int a = expo(rng), b = expo(rng);
      p.add_term({a, 3 - a, b, 3 - b}, coeff(rng));
    }
    CHECK(parse_poly(p.render(), Q) == p);
  }
}

TEST_CASE("homogeneity on the bigraded ring") {
  const auto p = parse_poly("x1^2*y1 + x1*x2*y2", Q);
  REQUIRE(p.homogeneous_degree().has_value());
  CHECK(*p.homogeneous_degree() == MultiDegree{2, 1});
  CHECK_FALSE(parse_poly("x1 + y1", Q).homogeneous_degree().has_value());
  CHECK(RationalPolynomial(Q).is_homogeneous_of(MultiDegree{5, -3}));
}

TEST_CASE("monomial bases match counting") {
  for (int a = -1; a <= 6; ++a)
    for (int b = -1; b <= 6; ++b)
      CHECK(static_cast<long long>(monomial_basis(Q, MultiDegree{a, b}).size()) ==
            oracle::h0_line({2, 2}, {a, b}));
  for (int d = -2; d <= 9; ++d)
    CHECK(static_cast<long long>(monomial_basis(P2, MultiDegree{d}).size()) ==
          oracle::binom(d + 2, 2));
}

TEST_CASE("monomial basis is in canonical order") {
  const auto basis = monomial_basis(P2, MultiDegree{2});
  for (std::size_t i = 1; i < basis.size(); ++i) CHECK(canonical_before(P2, basis[i - 1], basis[i]));
  CHECK(basis.front() == Exponent{2, 0, 0});
}

TEST_CASE("rank-nullity on random exact matrices") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 9), val(-4, 4), den(1, 3), sparse(0, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    ExactMatrix m(r, c);
    oracle::QMatrix q(r, std::vector<mpq_class>(c));
    // Low-rank products show up often enough to exercise dependencies.
    const bool product = trial % 3 == 0;
    const std::size_t inner = static_cast<std::size_t>(dim(rng) % 3 + 1);
    std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(inner)), b(inner, std::vector<mpq_class>(c));
    for (auto& row : a)
      for (auto& v : row) v = mpq_class(val(rng), den(rng));
    for (auto& row : b)
      for (auto& v : row) v = mpq_class(val(rng), den(rng));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        mpq_class v;
        if (product) {
          for (std::size_t k = 0; k < inner; ++k) v += a[i][k] * b[k][j];
        } else if (sparse(rng)) {
          v = mpq_class(val(rng), den(rng));
        }
        v.canonicalize();
        m.at(i, j) = v;
        q[i][j] = v;
      }
    const std::size_t rk = rank(m);
    CHECK(rk == oracle::gauss_rank(q));
    CHECK(rk + kernel_dim(m) == c);
    if (product) CHECK(rk <= inner);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-6, 6), dim(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    ExactMatrix m(n, n);
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        g[i][j] = val(rng);
        m.at(i, j) = static_cast<long>(g[i][j]);
      }
    CHECK(determinant(m) == mpq_class(oracle::laplace_det(g)));
  }
}

TEST_CASE("section matrix of the Euler map") {
  PolyMatrix b(P2, 1, 3);
  b.set(0, 0, parse_poly("x", P2));
  b.set(0, 1, parse_poly("y", P2));
  b.set(0, 2, parse_poly("z", P2));
  const std::vector<MultiDegree> src(3, MultiDegree{-1}), tgt{MultiDegree{0}};
  // Columns: three copies of H^0(O(1)); rows: H^0(O(2)).
  const ExactMatrix m = section_matrix(b, src, tgt, MultiDegree{2});
  CHECK(m.cols() == 9);
  CHECK(m.rows() == 6);
  CHECK(rank(m) == 6);
  CHECK(kernel_dim(m) == 3);
  CHECK(kernel_dim(section_matrix(b, src, tgt, MultiDegree{1})) == 0);
}

TEST_CASE("section matrix rejects inhomogeneous entries") {
  PolyMatrix b(P2, 1, 2);
  b.set(0, 0, parse_poly("x", P2));
  b.set(0, 1, parse_poly("y^2", P2));
  CHECK_THROWS_AS(check_map_homogeneity(b, {MultiDegree{-1}, MultiDegree{-1}}, {MultiDegree{0}}),
                  HomogeneityError);
}

TEST_CASE("substitution into another ambient") {
  const Ambient P1 = Ambient::projective(1, {"s", "t"});
  const auto p = parse_poly("x*y - z^2", P2);
  const auto r = substitute(p, {{"x", parse_poly("s^2", P1)}, {"y", parse_poly("t^2", P1)},
                                {"z", parse_poly("s*t", P1)}},
                            P1);
  CHECK(r.is_zero());
}
