#pragma once

#include <cstddef>
#include <vector>

#include "hoppe/polycore/polynomial.hpp"

namespace hoppe {

// Matrix of polynomials over one ambient, row-major.
class PolyMatrix {
 public:
  PolyMatrix(Ambient ambient, std::size_t rows, std::size_t cols);

  const Ambient& ambient() const { return ambient_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const RationalPolynomial& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, RationalPolynomial p);

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const;

  // Applies `fn` to every entry, producing a matrix over `target`.
  template <typename Fn>
  PolyMatrix map_entries(const Ambient& target, Fn&& fn) const {
    PolyMatrix out(target, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, fn(at(r, c)));
    return out;
  }

 private:
  Ambient ambient_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RationalPolynomial> data_;
};

}  // namespace hoppe
