#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hoppe/monad/monad.hpp"
#include "hoppe/polycore/exact_matrix.hpp"

namespace hoppe {

enum class CohomMethod {
  ClosedForm,
  SectionKernel,
  ExteriorKernel,
  HomologyBound,
  // Exact h^0 of a homology monad on P^1 through the connecting map of the
  // hypercohomology spectral sequence, computed on the standard Cech cover.
  HomologyCech,
  FiberDescent,
};

std::string to_string(CohomMethod m);

struct MatrixWitness {
  std::string label;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

MatrixWitness witness_of(std::string label, const ExactMatrix& m);

struct CohomResult {
  long long lo = 0;
  long long hi = 0;
  CohomMethod method = CohomMethod::ClosedForm;
  std::vector<MatrixWitness> matrices;
  std::vector<std::string> notes;

  bool exact() const { return lo == hi; }
  // Throws UnsupportedOperation when the result is an interval.
  long long value() const;
  std::string str() const;
};

// h^i of O(d) on P^n or a product of two projective spaces.
long long h_line(const Ambient& amb, const MultiDegree& d, int i);
long long h_line_sum(const Ambient& amb, const std::vector<MultiDegree>& twists,
                     const MultiDegree& L, int i);

CohomResult h0_kernel(const MonadComplex& m, const MultiDegree& L);

// h^0 of (Lambda^s K)(L) for a kernel monad with rank-1 target.
CohomResult h0_exterior(const MonadComplex& m, int s, const MultiDegree& L);

// Twists of Lambda^s of a free sheaf, over s-subsets in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t s);

CohomResult h0_homology(const MonadComplex& m, const MultiDegree& L);

// h^0((Lambda^s F)(L)) for the bundle F described by the monad.
CohomResult h0_bundle(const MonadComplex& m, int s, const MultiDegree& L);

// Vanish-on-divisor descent. Restricts the monad at `point` of factor
// `restricted_axis` (1 or 2) of P^1 x P^1, checks that the fiber has no
// sections after twisting by `fiber_twist`, and derives
//   h^0((Lambda^s F)(L)) = 0  for every L with L[surviving] <= fiber_twist,
// where `surviving` is the other factor. Sections are pushed down along
// the restricted factor until the ambient twists are negative.
struct TailCertificate {
  int s = 1;
  int restricted_axis = 2;
  std::pair<long, long> point{0, 1};
  int surviving_axis = 1;
  int fiber_twist = -1;
  CohomResult fiber;
  // Along the restricted axis every h^0 agrees with its value at this
  // component or below, where the outright vanishing holds.
  int terminal_component = 0;
  CohomResult result;
};

TailCertificate tail_vanish(const MonadComplex& m, int s, int restricted_axis,
                            std::pair<long, long> point, int fiber_twist);

}  // namespace hoppe
