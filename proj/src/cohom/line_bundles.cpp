#include "hoppe/cohom/cohom.hpp"
#include "hoppe/common/error.hpp"

namespace hoppe {

std::string to_string(CohomMethod m) {
  switch (m) {
    case CohomMethod::ClosedForm: return "ClosedForm";
    case CohomMethod::SectionKernel: return "SectionKernel";
    case CohomMethod::ExteriorKernel: return "ExteriorKernel";
    case CohomMethod::HomologyBound: return "HomologyBound";
    case CohomMethod::HomologyCech: return "HomologyCech";
    case CohomMethod::FiberDescent: return "FiberDescent";
  }
  return "ClosedForm";
}

MatrixWitness witness_of(std::string label, const ExactMatrix& m) {
  const std::size_t r = rank(m);
  return {std::move(label), m.rows(), m.cols(), r, m.cols() - r};
}

long long CohomResult::value() const {
  if (!exact())
    throw UnsupportedOperation("h0 is only bounded: [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  return lo;
}

std::string CohomResult::str() const {
  if (exact()) return std::to_string(lo);
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long h_projective(int n, int d, int i) {
  if (i == 0) return d >= 0 ? binom(n + d, n) : 0;
  if (i == n) return h_projective(n, -d - n - 1, 0);
  return 0;
}

}  // namespace

long long h_line(const Ambient& amb, const MultiDegree& d, int i) {
  if (i < 0 || i > amb.dimension())
    throw IndexOutOfRange("cohomological degree " + std::to_string(i) + " on " + amb.describe());
  if (d.arity() != amb.grading()) throw AmbientMismatch("twist arity " + d.str());
  if (!amb.is_product()) return h_projective(amb.dims()[0], d[0], i);
  const int n1 = amb.dims()[0], n2 = amb.dims()[1];
  long long total = 0;
  for (int p = 0; p <= std::min(i, n1); ++p) {
    const int q = i - p;
    if (q > n2) continue;
    total += h_projective(n1, d[0], p) * h_projective(n2, d[1], q);
  }
  return total;
}

long long h_line_sum(const Ambient& amb, const std::vector<MultiDegree>& twists,
                     const MultiDegree& L, int i) {
  long long total = 0;
  for (const auto& t : twists) total += h_line(amb, t + L, i);
  return total;
}

}  // namespace hoppe
