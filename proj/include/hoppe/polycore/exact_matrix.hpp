#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace hoppe {

// Dense matrix of exact rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  mpq_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const = default;

  static ExactMatrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

// Rank by fraction-free (Bareiss) elimination over the integers after each
// row is scaled to clear denominators.
std::size_t rank(const ExactMatrix& m);
std::size_t kernel_dim(const ExactMatrix& m);

// Determinant of a square matrix, fraction-free.
mpq_class determinant(const ExactMatrix& m);

}  // namespace hoppe
