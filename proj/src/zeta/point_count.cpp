#include "hoppe/zeta/point_count.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "hoppe/common/error.hpp"

namespace hoppe {

ReducedBranch reduce_branch(const RationalPolynomial& f, unsigned p) {
  const Ambient& amb = f.ambient();
  if (!amb.is_product() || amb.dims() != std::vector<int>{1, 1})
    throw AmbientMismatch("the branch curve must live on P^1 x P^1");
  if (p == 2) throw EvenCharacteristic("double covers are counted in odd characteristic");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const auto deg = f.homogeneous_degree();
  if (!deg) throw HomogeneityError("the branch curve must be bihomogeneous");
  ReducedBranch r;
  r.p = p;
  r.dx = (*deg)[0];
  r.dy = (*deg)[1];
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1)
      throw CoefficientReduction("coefficient " + c.get_str() + " is not an integer");
    mpz_class m;
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_num_mpz_t(), p);
    const unsigned v = static_cast<unsigned>(m.get_ui());
    if (v != 0) r.terms.push_back({v, e[0], e[1], e[2], e[3]});
  }
  if (r.terms.empty()) throw CoefficientReduction("the curve vanishes identically mod " + std::to_string(p));
  return r;
}

namespace {

inline std::int32_t log_add(std::int32_t a, std::int32_t b, const std::int32_t* zech,
                            std::int32_t m) {
  if (a < 0) return b;
  if (b < 0) return a;
  std::int32_t d = b - a;
  if (d < 0) d += m;
  const std::int32_t z = zech[d];
  if (z < 0) return FqField::kZeroLog;
  std::int32_t s = a + z;
  if (s >= m) s -= m;
  return s;
}

inline unsigned weight_of_log(std::int32_t v) { return v < 0 ? 1u : ((v & 1) == 0 ? 2u : 0u); }

std::uint64_t fibers_tables(const FqField& F, const ReducedBranch& f, std::uint64_t begin,
                            std::uint64_t end) {
  const std::uint64_t q = F.q();
  const auto m = static_cast<std::int32_t>(q - 1);
  const std::int32_t* zech = F.zech().data();
  const int D = f.dy;
  std::vector<std::int32_t> coeff_log;
  for (const auto& t : f.terms) coeff_log.push_back(F.log(t.coeff));
  std::vector<std::int32_t> c(static_cast<std::size_t>(D) + 1);

  std::uint64_t total = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    // Coefficients C_j of y0^{D-j} y1^j on this fiber, as logs.
    std::fill(c.begin(), c.end(), FqField::kZeroLog);
    for (std::size_t k = 0; k < f.terms.size(); ++k) {
      const auto& t = f.terms[k];
      std::int32_t v;
      if (i == q) {
        if (t.x0 != 0) continue;
        v = coeff_log[k];
      } else if (i == 0) {
        if (t.x1 != 0) continue;
        v = coeff_log[k];
      } else {
        const std::int64_t ls = static_cast<std::int64_t>(i - 1);
        v = static_cast<std::int32_t>((coeff_log[k] + ls * t.x1) % m);
      }
      auto& slot = c[static_cast<std::size_t>(t.y1)];
      slot = log_add(slot, v, zech, m);
    }
    // y = [1 : 0] and y = [0 : 1].
    total += weight_of_log(c[0]);
    total += weight_of_log(c[static_cast<std::size_t>(D)]);
    // y = [1 : g^lt]; Horner in t from the top coefficient.
    for (std::int32_t lt = 0; lt < m; ++lt) {
      std::int32_t v = c[static_cast<std::size_t>(D)];
      for (int j = D - 1; j >= 0; --j) {
        if (v >= 0) {
          v += lt;
          if (v >= m) v -= m;
        }
        v = log_add(v, c[static_cast<std::size_t>(j)], zech, m);
      }
      total += weight_of_log(v);
    }
  }
  return total;
}

std::uint64_t fibers_generic(const FqField& F, const ReducedBranch& f, std::uint64_t begin,
                             std::uint64_t end) {
  const std::uint64_t q = F.q();
  const int D = f.dy;
  std::uint64_t total = 0;
  auto weight = [&](FqField::Elem v) { return static_cast<std::uint64_t>(1 + F.quad_char(v)); };
  std::vector<FqField::Elem> c(static_cast<std::size_t>(D) + 1);
  for (std::uint64_t i = begin; i < end; ++i) {
    const FqField::Elem x0 = i == q ? 0 : 1;
    const FqField::Elem x1 = i == q ? 1 : (i == 0 ? 0 : F.pow(F.generator(), i - 1));
    std::fill(c.begin(), c.end(), 0);
    for (const auto& t : f.terms) {
      const FqField::Elem v =
          F.mul(F.from_int(t.coeff), F.mul(F.pow(x0, static_cast<std::uint64_t>(t.x0)),
                                           F.pow(x1, static_cast<std::uint64_t>(t.x1))));
      auto& slot = c[static_cast<std::size_t>(t.y1)];
      slot = F.add(slot, v);
    }
    total += weight(c[0]) + weight(c[static_cast<std::size_t>(D)]);
    for (std::uint64_t k = 1; k < q; ++k) {
      const FqField::Elem t = F.pow(F.generator(), k - 1);
      FqField::Elem v = c[static_cast<std::size_t>(D)];
      for (int j = D - 1; j >= 0; --j) v = F.add(F.mul(v, t), c[static_cast<std::size_t>(j)]);
      total += weight(v);
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_fibers(const FqField& F, const ReducedBranch& f, std::uint64_t begin,
                           std::uint64_t end) {
  if (F.p() != f.p) throw InvalidArgument("field and branch curve have different characteristic");
  end = std::min(end, F.q() + 1);
  if (begin >= end) return 0;
  return F.has_tables() ? fibers_tables(F, f, begin, end) : fibers_generic(F, f, begin, end);
}

std::uint64_t count_points(const FqField& F, const ReducedBranch& f, unsigned threads) {
  const std::uint64_t fibers = F.q() + 1;
  threads = std::max(1u, threads);
  if (threads == 1 || fibers < 2 * threads) return count_fibers(F, f, 0, fibers);
  // Interleaved blocks keep the workers balanced; block sums are added in
  // a fixed order.
  const std::uint64_t block = std::max<std::uint64_t>(1, fibers / (threads * 16));
  const std::uint64_t blocks = (fibers + block - 1) / block;
  std::vector<std::uint64_t> partial(blocks, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t b = w; b < blocks; b += threads)
        partial[b] = count_fibers(F, f, b * block, (b + 1) * block);
    });
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

std::uint64_t count_points(const RationalPolynomial& f, unsigned p, unsigned n, unsigned threads) {
  const ReducedBranch r = reduce_branch(f, p);
  return count_points(FqField(p, n), r, threads);
}

long long lefschetz_trace(std::uint64_t points, std::uint64_t q) {
  return static_cast<long long>(points) - 1 - static_cast<long long>(q * q);
}

bool weil_bound_ok(long long trace, std::uint64_t q, int b2) {
  return static_cast<unsigned long long>(std::llabs(trace)) <= static_cast<unsigned long long>(b2) * q;
}

std::vector<CountRow> count_series(const RationalPolynomial& f, unsigned p, unsigned max_n,
                                   unsigned threads) {
  const ReducedBranch r = reduce_branch(f, p);
  std::vector<CountRow> rows;
  for (unsigned n = 1; n <= max_n; ++n) {
    const FqField F(p, n);
    CountRow row;
    row.n = n;
    row.q = F.q();
    row.points = count_points(F, r, threads);
    row.trace = lefschetz_trace(row.points, row.q);
    row.weil_ok = weil_bound_ok(row.trace, row.q);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hoppe
