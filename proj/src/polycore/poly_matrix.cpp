#include "hoppe/polycore/poly_matrix.hpp"

#include <algorithm>

#include "hoppe/common/error.hpp"

namespace hoppe {

PolyMatrix::PolyMatrix(Ambient ambient, std::size_t rows, std::size_t cols)
    : ambient_(std::move(ambient)), rows_(rows), cols_(cols),
      data_(rows * cols, RationalPolynomial(ambient_)) {}

void PolyMatrix::set(std::size_t r, std::size_t c, RationalPolynomial p) {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix entry out of range");
  if (!(p.ambient() == ambient_)) throw AmbientMismatch("entry ambient differs from matrix ambient");
  data_[r * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("polynomial matrix shapes do not compose");
  if (!(ambient_ == o.ambient_)) throw AmbientMismatch("matrices over different ambients");
  PolyMatrix r(ambient_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      RationalPolynomial acc(ambient_);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc += at(i, k) * o.at(k, j);
      }
      r.data_[i * o.cols_ + j] = std::move(acc);
    }
  return r;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& p) { return p.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return ambient_ == o.ambient_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace hoppe
