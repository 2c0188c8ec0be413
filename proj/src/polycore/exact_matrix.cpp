#include "hoppe/polycore/exact_matrix.hpp"

#include <utility>

#include "hoppe/common/error.hpp"

namespace hoppe {

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix shapes do not compose");
  ExactMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Scales every row by the lcm of its denominators. Row scaling by nonzero
// factors preserves rank.
IntRows integer_rows(const ExactMatrix& m, mpz_class* total_scale) {
  IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  if (total_scale) *total_scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& v = m.at(r, c);
      mpz_divexact(rows[r][c].get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
      rows[r][c] *= v.get_num();
    }
    if (total_scale) *total_scale *= l;
  }
  return rows;
}

// In-place fraction-free elimination. Returns the rank; `sign` tracks row
// swaps and `last_pivot` the final pivot (the determinant for full-rank
// square input).
std::size_t bareiss(IntRows& a, std::size_t cols, int* sign, mpz_class* last_pivot) {
  const std::size_t nrows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  if (sign) *sign = 1;
  mpz_class t;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && a[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      if (sign) *sign = -*sign;
    }
    const mpz_class& p = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const mpz_class f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (a[i][j]*p - f*a[r][j]) / prev, exact.
        t = a[i][j] * p;
        t -= f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = p;
    ++r;
  }
  if (last_pivot) *last_pivot = prev;
  return r;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntRows a = integer_rows(m, nullptr);
  return bareiss(a, m.cols(), nullptr, nullptr);
}

std::size_t kernel_dim(const ExactMatrix& m) { return m.cols() - rank(m); }

mpq_class determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  mpz_class scale;
  IntRows a = integer_rows(m, &scale);
  int sign = 1;
  mpz_class last;
  const std::size_t r = bareiss(a, m.cols(), &sign, &last);
  if (r < m.rows()) return 0;
  mpq_class d(last * sign, scale);
  d.canonicalize();
  return d;
}

}  // namespace hoppe
