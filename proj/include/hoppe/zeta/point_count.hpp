#pragma once

#include <cstdint>
#include <vector>

#include "hoppe/polycore/polynomial.hpp"
#include "hoppe/zeta/field.hpp"

namespace hoppe {

// A branch curve on P^1 x P^1 with coefficients reduced mod p.
struct ReducedBranch {
  struct Term {
    unsigned coeff = 0;  // nonzero mod p
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  };
  unsigned p = 0;
  int dx = 0;
  int dy = 0;
  std::vector<Term> terms;
};

// Requires integer coefficients, odd p, and a curve that stays nonzero mod p.
ReducedBranch reduce_branch(const RationalPolynomial& f, unsigned p);

// Points of the double cover w^2 = f over F: every point P of
// P^1 x P^1 contributes 1 + chi(f(P)). Fibers over the first factor are
// split across `threads` workers; the total does not depend on the split.
std::uint64_t count_points(const FqField& F, const ReducedBranch& f, unsigned threads = 1);
std::uint64_t count_points(const RationalPolynomial& f, unsigned p, unsigned n, unsigned threads = 1);

// Contribution of the fibers with index in [begin, end): index i < q is
// x = [1 : s_i] and index q is x = [0 : 1]; s_0 = 0, s_i = g^{i-1}.
std::uint64_t count_fibers(const FqField& F, const ReducedBranch& f, std::uint64_t begin,
                           std::uint64_t end);

struct CountRow {
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t points = 0;
  long long trace = 0;  // N - 1 - q^2
  bool weil_ok = true;  // |trace| <= 22 q
};

long long lefschetz_trace(std::uint64_t points, std::uint64_t q);
bool weil_bound_ok(long long trace, std::uint64_t q, int b2 = 22);

std::vector<CountRow> count_series(const RationalPolynomial& f, unsigned p, unsigned max_n,
                                   unsigned threads = 1);

}  // namespace hoppe
