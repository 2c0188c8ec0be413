#pragma once

#include <vector>

#include "hoppe/polycore/exact_matrix.hpp"
#include "hoppe/polycore/poly_matrix.hpp"

namespace hoppe {

// Throws HomogeneityError unless every nonzero entry (i,j) of `map` is
// homogeneous of multidegree target[i] - source[j].
void check_map_homogeneity(const PolyMatrix& map, const std::vector<MultiDegree>& source,
                           const std::vector<MultiDegree>& target);

// Matrix of H^0(sum O(source_j + L)) -> H^0(sum O(target_i + L)) in monomial
// bases. Columns are the concatenated bases of source_j + L, rows those of
// target_i + L.
ExactMatrix section_matrix(const PolyMatrix& map, const std::vector<MultiDegree>& source,
                           const std::vector<MultiDegree>& target, const MultiDegree& L);

}  // namespace hoppe
