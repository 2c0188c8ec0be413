#include <doctest.h>

#include <random>

#include "goldens.hpp"
#include "hoppe/common/error.hpp"
#include "hoppe/polycore/parser.hpp"
#include "hoppe/zeta/charpoly.hpp"
#include "hoppe/zeta/point_count.hpp"
#include "oracles.hpp"
#include "paths.hpp"

#include <json.hpp>
#include <fstream>

using namespace hoppe;

namespace {

const Ambient Q = Ambient::product(1, 1, {"x0", "x1", "y0", "y1"});

RationalPolynomial b44() {
  std::ifstream in(data_path("b44.poly"));
  const auto j = nlohmann::json::parse(in);
  return parse_poly(j.at("polynomial").get<std::string>(), Q);
}

RationalPolynomial random_branch(std::mt19937& rng, unsigned p) {
  std::uniform_int_distribution<int> c(0, static_cast<int>(p) - 1);
  RationalPolynomial f(Q);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) f.add_term({a, 4 - a, b, 4 - b}, c(rng));
  if (f.is_zero()) f.add_term({4, 0, 4, 0}, 1);
  return f;
}

mpz_class ipow(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

// Power sums of a monic polynomial (constant term first) by the forward
// Newton recurrence.
std::vector<mpz_class> forward_power_sums(const std::vector<mpz_class>& c, std::size_t m) {
  const std::size_t d = c.size() - 1;
  auto a = [&](long long i) -> mpz_class { return i >= 0 ? c[static_cast<std::size_t>(i)] : mpz_class(0); };
  std::vector<mpz_class> s(m + 1, 0);
  for (std::size_t k = 1; k <= m; ++k) {
    mpz_class v = k <= d ? mpz_class(-static_cast<long>(k) * a(static_cast<long long>(d - k))) : mpz_class(0);
    for (std::size_t i = 1; i < k && i <= d; ++i) v -= a(static_cast<long long>(d - i)) * s[k - i];
    s[k] = v;
  }
  return s;
}

std::vector<mpz_class> multiply(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

TEST_CASE("field axioms in table and polynomial modes") {
  std::mt19937_64 rng(99);
  for (auto [p, n] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 3u}, {7u, 2u}, {3u, 9u}, {3u, 13u}}) {
    const FqField F(p, n);
    INFO("p=" << p << " n=" << n);
    CHECK(F.has_tables() == (F.q() <= FqField::kTableLimit));
    CHECK(is_irreducible(F.modulus(), p));
    std::uniform_int_distribution<std::uint64_t> e(0, F.q() - 1);
    for (int t = 0; t < 300; ++t) {
      const auto a = e(rng), b = e(rng), c = e(rng);
      CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      std::uint64_t fr = a;
      for (unsigned i = 0; i < n; ++i) fr = F.frobenius(fr);
      CHECK(fr == a);
    }
    const auto g = F.generator();
    for (auto r : prime_factors(F.q() - 1)) CHECK(F.pow(g, (F.q() - 1) / r) != 1);
    CHECK(F.pow(g, F.q() - 1) == 1);
  }
}

TEST_CASE("smallest irreducible polynomials") {
  CHECK(smallest_irreducible(3, 2) == std::vector<unsigned>{1, 0, 1});
  CHECK(smallest_irreducible(2, 3) == std::vector<unsigned>{1, 1, 0, 1});
  CHECK_FALSE(is_irreducible({2, 0, 1}, 3));  // x^2 + 2 = (x - 1)(x + 1) mod 3
}

TEST_CASE("Zech logarithms") {
  const FqField F(3, 5);
  REQUIRE(F.has_tables());
  const auto& z = F.zech();
  for (std::uint64_t i = 0; i + 1 < F.q(); ++i) {
    const auto v = F.add(1, F.exp(i));
    if (v == 0)
      CHECK(z[i] == FqField::kZeroLog);
    else
      CHECK(F.exp(static_cast<std::uint64_t>(z[i])) == v);
  }
}

TEST_CASE("quadratic character is multiplicative") {
  std::mt19937_64 rng(4);
  for (auto [p, n] : {std::pair{3u, 1u}, {3u, 4u}, {5u, 2u}, {3u, 13u}}) {
    const FqField F(p, n);
    std::uniform_int_distribution<std::uint64_t> e(0, F.q() - 1);
    for (int t = 0; t < 500; ++t) {
      const auto a = e(rng), b = e(rng);
      CHECK(F.quad_char(F.mul(a, b)) == F.quad_char(a) * F.quad_char(b));
      if (a != 0) CHECK(F.quad_char(F.mul(a, a)) == 1);
      const auto euler = F.pow(a, (F.q() - 1) / 2);
      CHECK(F.quad_char(a) == (a == 0 ? 0 : euler == 1 ? 1 : -1));
    }
  }
  if (FqField(3, 3).q() <= 1000) {
    const FqField F(3, 3);
    int squares = 0;
    for (std::uint64_t a = 1; a < F.q(); ++a) squares += F.quad_char(a) == 1;
    CHECK(squares == static_cast<int>((F.q() - 1) / 2));
  }
}

TEST_CASE("field errors") {
  CHECK_THROWS_AS(FqField(2, 3).quad_char(1), EvenCharacteristic);
  CHECK_THROWS_AS(FqField(9, 1), NotPrime);
  CHECK_THROWS_AS(FqField(3, 30), TooLarge);
  CHECK_THROWS_AS(reduce_branch(b44(), 2), EvenCharacteristic);
  CHECK_THROWS_AS(reduce_branch(b44(), 15), NotPrime);
}

TEST_CASE("N_1 and N_2 of B against brute-force enumeration") {
  const auto f = b44();
  CHECK(count_points(f, 3, 1) == oracle::brute_count_fp(f, 3));
  CHECK(count_points(f, 3, 2) == oracle::brute_count_f9(f));
  CHECK(count_points(f, 3, 1) == goldens::kB44Counts[0]);
  CHECK(count_points(f, 3, 2) == goldens::kB44Counts[1]);
  CHECK(count_points(f, 5, 1) == oracle::brute_count_fp(f, 5));
  CHECK(count_points(f, 7, 1) == oracle::brute_count_fp(f, 7));
}

TEST_CASE("random branch curves against brute-force enumeration") {
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_branch(rng, 3);
    CHECK(count_points(f, 3, 1) == oracle::brute_count_fp(f, 3));
    CHECK(count_points(f, 3, 2) == oracle::brute_count_f9(f));
  }
  for (unsigned p : {5u, 7u, 11u}) {
    const auto f = random_branch(rng, p);
    CHECK(count_points(f, p, 1) == oracle::brute_count_fp(f, p));
  }
}

TEST_CASE("counts are independent of the worker count and the partition") {
  const auto f = b44();
  for (unsigned n = 1; n <= 6; ++n) {
    const auto one = count_points(f, 3, n, 1);
    CHECK(count_points(f, 3, n, 2) == one);
    CHECK(count_points(f, 3, n, 8) == one);
  }
  const FqField F(3, 4);
  const auto br = reduce_branch(f, 3);
  std::mt19937 rng(1);
  for (int t = 0; t < 10; ++t) {
    std::uniform_int_distribution<std::uint64_t> cut(0, F.q() + 1);
    std::uint64_t a = cut(rng), b = cut(rng);
    if (a > b) std::swap(a, b);
    CHECK(count_fibers(F, br, 0, a) + count_fibers(F, br, a, b) + count_fibers(F, br, b, F.q() + 1) ==
          count_points(F, br));
  }
}

TEST_CASE("golden counts for n <= 7 and the Weil audit") {
  const auto rows = count_series(b44(), 3, 7, 1);
  for (const auto& r : rows) CHECK(r.points == goldens::kB44Counts[r.n - 1]);
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < goldens::kB44Counts.size(); ++i) {
    q *= 3;
    const long long t = lefschetz_trace(goldens::kB44Counts[i], q);
    CHECK(weil_bound_ok(t, q));
  }
  CHECK(lefschetz_trace(14, 3) == 4);
}

TEST_CASE("integer polynomial helpers") {
  // x^n - 1 is the product of Phi_d over d | n.
  for (unsigned long n = 1; n <= 30; ++n) {
    IntPoly prod(std::vector<mpz_class>{1});
    unsigned long deg = 0;
    for (unsigned long d = 1; d <= n; ++d)
      if (n % d == 0) {
        prod = prod * cyclotomic(d);
        deg += euler_phi(d);
      }
    std::vector<mpz_class> xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    CHECK(prod == IntPoly(xn));
    CHECK(deg == n);
  }
  const IntPoly P = cyclotomic(3) * cyclotomic(3) * cyclotomic(8);
  const auto fac = cyclotomic_factors(P, 20);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].k == 3);
  CHECK(fac[0].multiplicity == 2);
  CHECK(cyclotomic_degree(fac) == 8);
  IntPoly quot, rem;
  divmod_monic(P, cyclotomic(8), quot, rem);
  CHECK(rem.is_zero());
  CHECK(quot == cyclotomic(3) * cyclotomic(3));
}

TEST_CASE("Sturm root counting and the unit-circle test") {
  const IntPoly p(oracle::poly_from_roots({1, 2, -3}));
  CHECK(real_roots_in(p, 0, 5) == 2);
  CHECK(real_roots_in(p, -3, -3) == 1);
  CHECK(real_roots_in(p, mpq_class(3, 2), mpq_class(5, 2)) == 1);
  CHECK(roots_on_unit_circle(cyclotomic(7) * cyclotomic(12)));
  // 3T^2 - 2T + 3 has complex roots of modulus 1; T^2 - 3T + 1 has real roots off the circle.
  CHECK(roots_on_unit_circle(IntPoly(std::vector<mpz_class>{3, -2, 3})));
  CHECK_FALSE(roots_on_unit_circle(IntPoly(std::vector<mpz_class>{1, -3, 1})));
}

TEST_CASE("Newton identities against polynomials with known roots") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long long> r(-7, 7);
  for (int t = 0; t < 50; ++t) {
    std::vector<long long> roots(static_cast<std::size_t>(t % 8 + 1));
    for (auto& x : roots) x = r(rng);
    const auto coeffs = oracle::poly_from_roots(roots);
    std::vector<mpq_class> s;
    for (std::size_t k = 1; k <= roots.size(); ++k) {
      mpz_class v = 0;
      for (auto x : roots) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(static_cast<long>(x)).get_mpz_t(), k);
        v += pw;
      }
      s.emplace_back(v);
    }
    const auto e = newton_elementary(s);
    std::vector<mpz_class> ez;
    for (const auto& v : e) {
      REQUIRE(v.get_den() == 1);
      ez.push_back(v.get_num());
    }
    CHECK(from_elementary(ez) == IntPoly(coeffs));
    const auto ps = power_sums(IntPoly(coeffs), roots.size() + 3);
    const auto fw = forward_power_sums(coeffs, roots.size() + 3);
    for (std::size_t k = 1; k <= roots.size() + 3; ++k) CHECK(ps[k - 1] == fw[k]);
  }
}

TEST_CASE("charpoly reconstruction from synthetic counts") {
  // P(T) = (T^2 + 3T + 9)(T^4 + 81) prod (T^2 - c T + 9): roots of absolute
  // value q = 3, six of them q times a root of unity.
  const unsigned p = 3;
  std::vector<mpz_class> P{9, 3, 1};
  P = multiply(P, {81, 0, 0, 0, 1});
  for (long c : {1L, -2L, 4L, -5L, 5L, 2L, -1L}) P = multiply(P, {9, -c, 1});
  REQUIRE(P.size() == 21);
  const auto s = forward_power_sums(P, 10);
  std::vector<std::uint64_t> counts;
  for (unsigned n = 1; n <= 10; ++n) {
    const mpz_class q = ipow(p, n);
    const mpz_class N = 1 + q * q + 2 * q + s[n];
    counts.push_back(N.get_ui());
  }
  const ZetaProfile full = assemble_charpoly(counts, p, 2);
  bool found = false;
  for (const auto& c : full.candidates)
    if (!c.eliminated) {
      CHECK(c.poly == IntPoly(P));
      CHECK(c.contribution == 6);
      found = true;
    }
  CHECK(found);
  CHECK(rank_upper_bound(full) == 8);

  // Nine counts leave the middle coefficient free; the bound stays sound.
  counts.pop_back();
  const ZetaProfile nine = assemble_charpoly(counts, p, 2);
  CHECK(rank_upper_bound(nine) >= 8);
  counts.pop_back();
  CHECK_THROWS_AS(assemble_charpoly(counts, p, 2), InsufficientCounts);
}

TEST_CASE("inconsistent counts are rejected") {
  std::vector<std::uint64_t> counts{17, 100, 800, 6500, 59000, 530000, 4790000, 43000000, 387000000};
  CHECK_THROWS_AS(assemble_charpoly(counts, 3, 2), NoConsistentCandidate);
}

TEST_CASE("zeta profile of B") {
  std::vector<std::uint64_t> nine(goldens::kB44Counts.begin(), goldens::kB44Counts.begin() + 9);
  const ZetaProfile prof9 = assemble_charpoly(nine, 3, 2);
  // With N_1..N_9 the middle coefficient is free and A = 78732 (Phi_3 Phi_8)
  // survives every exact test.
  CHECK(rank_upper_bound(prof9) == 8);
  const auto& plus = prof9.candidates[0];
  CHECK(plus.free_middle);
  bool admissible = false;
  for (const auto& sp : plus.specials)
    if (sp.middle == 78732) {
      admissible = sp.admissible;
      CHECK(sp.cyclotomic_degree == 6);
    } else {
      CHECK_FALSE(sp.admissible);
    }
  CHECK(admissible);
  CHECK(prof9.candidates[1].eliminated);

  const ZetaProfile prof10 = assemble_charpoly(goldens::kB44Counts, 3, 2);
  CHECK(rank_upper_bound(prof10) == 2);
  const auto j = to_json(prof10);
  CHECK(j["kind"] == "zeta-profile");
  CHECK(j["rank_upper_bound"] == 2);
}
