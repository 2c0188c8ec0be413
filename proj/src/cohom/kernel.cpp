#include <algorithm>

#include "hoppe/cohom/cohom.hpp"
#include "hoppe/common/error.hpp"
#include "hoppe/polycore/section_matrix.hpp"

namespace hoppe {

CohomResult h0_kernel(const MonadComplex& m, const MultiDegree& L) {
  if (m.kind() != MonadKind::Kernel) throw ValidationError("h0_kernel needs a kernel monad");
  const ExactMatrix sm = section_matrix(m.map_b(), m.B().twists, m.C().twists, L);
  CohomResult r;
  r.method = CohomMethod::SectionKernel;
  r.matrices.push_back(witness_of("H0(B(L)) -> H0(C(L))", sm));
  r.lo = r.hi = static_cast<long long>(r.matrices.back().nullity);
  return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t s) {
  std::vector<std::vector<std::size_t>> out;
  if (s > n) return out;
  std::vector<std::size_t> cur(s);
  for (std::size_t i = 0; i < s; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = s;
    while (i > 0 && cur[i - 1] == n - s + (i - 1)) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < s; ++j) cur[j] = cur[j - 1] + 1;
  }
}

CohomResult h0_exterior(const MonadComplex& m, int s, const MultiDegree& L) {
  if (m.kind() != MonadKind::Kernel)
    throw UnsupportedOperation("exterior powers are only supported for kernel monads");
  if (m.C().rank() != 1)
    throw UnsupportedCokernelRank("target has rank " + std::to_string(m.C().rank()));
  const std::size_t nb = m.B().rank();
  if (s < 1 || static_cast<std::size_t>(s) > nb - 1)
    throw IndexOutOfRange("exterior power " + std::to_string(s) + " outside [1, " +
                          std::to_string(nb - 1) + "]");
  if (s == 1) {
    CohomResult r = h0_kernel(m, L);
    r.method = CohomMethod::ExteriorKernel;
    return r;
  }
  const Ambient& amb = m.ambient();
  const auto cols = subsets(nb, static_cast<std::size_t>(s));
  const auto rows = subsets(nb, static_cast<std::size_t>(s - 1));
  auto twist_of = [&](const std::vector<std::size_t>& idx, const MultiDegree& base) {
    MultiDegree t = base;
    for (auto i : idx) t = t + m.B().twists[i];
    return t;
  };
  const MultiDegree zero = MultiDegree::zero(amb.grading());
  std::vector<MultiDegree> source, target;
  for (const auto& I : cols) source.push_back(twist_of(I, zero));
  for (const auto& J : rows) target.push_back(twist_of(J, m.C().twists[0]));

  // psi_s(e_I) = sum_r (-1)^r b_{i_r} e_{I \ i_r}.
  PolyMatrix psi(amb, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& I = cols[c];
    for (std::size_t r = 0; r < I.size(); ++r) {
      std::vector<std::size_t> J;
      for (std::size_t k = 0; k < I.size(); ++k)
        if (k != r) J.push_back(I[k]);
      const auto row = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), J) -
                                                rows.begin());
      const RationalPolynomial& b = m.map_b().at(0, I[r]);
      psi.set(row, c, r % 2 == 0 ? b : -b);
    }
  }
  const ExactMatrix sm = section_matrix(psi, source, target, L);
  CohomResult res;
  res.method = CohomMethod::ExteriorKernel;
  res.matrices.push_back(witness_of("H0(L^" + std::to_string(s) + "B(L)) -> H0(L^" +
                                        std::to_string(s - 1) + "B(C+L))",
                                    sm));
  res.lo = res.hi = static_cast<long long>(res.matrices.back().nullity);
  return res;
}

CohomResult h0_bundle(const MonadComplex& m, int s, const MultiDegree& L) {
  if (m.kind() == MonadKind::Kernel) {
    if (s == 1 && m.C().rank() != 1) return h0_kernel(m, L);
    return h0_exterior(m, s, L);
  }
  if (s != 1)
    throw UnsupportedOperation("exterior powers of homology monads (s = " + std::to_string(s) +
                               ")");
  return h0_homology(m, L);
}

}  // namespace hoppe
