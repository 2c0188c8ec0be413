#include "hoppe/polycore/section_matrix.hpp"

#include <map>

#include "hoppe/common/error.hpp"

namespace hoppe {

void check_map_homogeneity(const PolyMatrix& map, const std::vector<MultiDegree>& source,
                           const std::vector<MultiDegree>& target) {
  if (map.rows() != target.size() || map.cols() != source.size())
    throw ValidationError("map is " + std::to_string(map.rows()) + "x" +
                          std::to_string(map.cols()) + " but twists require " +
                          std::to_string(target.size()) + "x" + std::to_string(source.size()));
  for (std::size_t i = 0; i < map.rows(); ++i)
    for (std::size_t j = 0; j < map.cols(); ++j) {
      const MultiDegree want = target[i] - source[j];
      if (!map.at(i, j).is_homogeneous_of(want))
        throw HomogeneityError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                               map.at(i, j).render() + " is not homogeneous of degree " +
                               want.str());
    }
}

ExactMatrix section_matrix(const PolyMatrix& map, const std::vector<MultiDegree>& source,
                           const std::vector<MultiDegree>& target, const MultiDegree& L) {
  check_map_homogeneity(map, source, target);
  const Ambient& amb = map.ambient();

  std::vector<std::size_t> row_offset, col_offset;
  std::vector<std::map<Exponent, std::size_t>> row_index(target.size());
  std::size_t nrows = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    row_offset.push_back(nrows);
    auto basis = monomial_basis(amb, target[i] + L);
    for (std::size_t k = 0; k < basis.size(); ++k) row_index[i].emplace(basis[k], nrows + k);
    nrows += basis.size();
  }
  std::vector<std::vector<Exponent>> col_basis;
  std::size_t ncols = 0;
  for (const auto& s : source) {
    col_offset.push_back(ncols);
    col_basis.push_back(monomial_basis(amb, s + L));
    ncols += col_basis.back().size();
  }

  ExactMatrix m(nrows, ncols);
  Exponent prod(static_cast<std::size_t>(amb.num_vars()));
  for (std::size_t j = 0; j < source.size(); ++j)
    for (std::size_t k = 0; k < col_basis[j].size(); ++k) {
      const Exponent& mono = col_basis[j][k];
      const std::size_t col = col_offset[j] + k;
      for (std::size_t i = 0; i < target.size(); ++i)
        for (const auto& [e, c] : map.at(i, j).terms()) {
          for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = e[v] + mono[v];
          m.at(row_index[i].at(prod), col) += c;
        }
    }
  return m;
}

}  // namespace hoppe
