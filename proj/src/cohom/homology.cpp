#include <map>
#include <tuple>

#include "hoppe/cohom/cohom.hpp"
#include "hoppe/common/error.hpp"
#include "hoppe/polycore/section_matrix.hpp"

namespace hoppe {

namespace {

// Rows of the stacked system: (block, summand, x0 exponent, x1 exponent).
using RowKey = std::tuple<int, std::size_t, int, int>;

// dim ker of the connecting map d2 : ker(H^1(A(L)) -> H^1(B(L))) -> coker(H^0(B(L)) -> H^0(C(L)))
// on P^1. H^1(O(d)) has the basis x0^-i x1^-(-d-i), 1 <= i <= -d-1. A class
// xi whose image a(xi) is a coboundary splits as a(xi) = eta1 - eta0 with
// eta1 regular where x1 != 0 (x0 exponent >= 0); b(eta1) is then a global
// section of C(L). xi lies in ker d2 iff that section is in the image of
// H^0(B(L)). Solving for (xi, y) with a(xi) = 0 in H^1(B(L)) and
// b(eta1(xi)) = Bmat y gives nullity(stacked) = dim ker d2 + nullity(Bmat).
long long cech_kernel_d2(const MonadComplex& m, const MultiDegree& L, const ExactMatrix& bmat,
                         CohomResult& res) {
  const Ambient& amb = m.ambient();
  const PolyMatrix& a = *m.map_a();
  const PolyMatrix& b = m.map_b();

  struct Laurent {
    std::size_t summand;
    int e0, e1;
    mpq_class coef;
  };

  std::map<RowKey, std::size_t> row_index;
  auto row_of = [&](const RowKey& k) {
    auto [it, inserted] = row_index.try_emplace(k, row_index.size());
    return it->second;
  };
  // Fix the H^0(C(L)) rows first so they line up with bmat.
  for (std::size_t i = 0; i < m.C().rank(); ++i)
    for (const auto& e : monomial_basis(amb, m.C().twists[i] + L)) row_of({1, i, e[0], e[1]});

  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> xi_cols;
  for (std::size_t r = 0; r < m.A().rank(); ++r) {
    const int d = (m.A().twists[r] + L)[0];
    for (int i = 1; i <= -d - 1; ++i) {
      const int u0 = -i, u1 = d + i;
      std::vector<Laurent> eta1;
      std::vector<std::pair<std::size_t, mpq_class>> col;
      for (std::size_t j = 0; j < m.B().rank(); ++j)
        for (const auto& [e, c] : a.at(j, r).terms()) {
          const int e0 = e[0] + u0, e1 = e[1] + u1;
          if (e0 < 0 && e1 < 0)
            col.emplace_back(row_of({0, j, e0, e1}), c);
          else if (e0 >= 0)
            eta1.push_back({j, e0, e1, c});
        }
      for (std::size_t ci = 0; ci < m.C().rank(); ++ci)
        for (const auto& t : eta1)
          for (const auto& [e, c] : b.at(ci, t.summand).terms())
            col.emplace_back(row_of({1, ci, e[0] + t.e0, e[1] + t.e1}), c * t.coef);
      xi_cols.push_back(std::move(col));
    }
  }

  const std::size_t nxi = xi_cols.size();
  ExactMatrix stacked(row_index.size(), nxi + bmat.cols());
  for (std::size_t c = 0; c < nxi; ++c)
    for (const auto& [row, v] : xi_cols[c]) stacked.at(row, c) += v;
  for (std::size_t r = 0; r < bmat.rows(); ++r)
    for (std::size_t c = 0; c < bmat.cols(); ++c) stacked.at(r, nxi + c) = -bmat.at(r, c);

  res.matrices.push_back(witness_of("Cech system for d2", stacked));
  return static_cast<long long>(res.matrices.back().nullity) -
         static_cast<long long>(kernel_dim(bmat));
}

}  // namespace

CohomResult h0_homology(const MonadComplex& m, const MultiDegree& L) {
  if (m.kind() != MonadKind::Homology) throw ValidationError("h0_homology needs a homology monad");
  const Ambient& amb = m.ambient();
  const ExactMatrix bmat = section_matrix(m.map_b(), m.B().twists, m.C().twists, L);
  CohomResult res;
  res.matrices.push_back(witness_of("H0(B(L)) -> H0(C(L))", bmat));
  const long long h0k = static_cast<long long>(res.matrices.back().nullity);
  const long long h0a = h_line_sum(amb, m.A().twists, L, 0);
  const long long h1a = h_line_sum(amb, m.A().twists, L, 1);
  res.lo = h0k - h0a;
  res.hi = res.lo + h1a;
  res.method = CohomMethod::HomologyBound;
  res.notes.push_back("h0(K(L)) = " + std::to_string(h0k) + ", h0(A(L)) = " +
                      std::to_string(h0a) + ", h1(A(L)) = " + std::to_string(h1a));
  if (h1a == 0) return res;
  if (!amb.is_product() && amb.dims()[0] == 1) {
    const long long kd2 = cech_kernel_d2(m, L, bmat, res);
    res.lo = res.hi = h0k - h0a + kd2;
    res.method = CohomMethod::HomologyCech;
    res.notes.push_back("dim ker d2 = " + std::to_string(kd2));
  }
  return res;
}

}  // namespace hoppe
