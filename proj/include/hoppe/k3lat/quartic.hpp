#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoppe/stability/certificate.hpp"

namespace hoppe {

// A quartic surface X = Z(f) in P^3 and its homogeneous coordinate ring
// R/(f). Normal forms eliminate the lex-largest monomial of f (variables
// ordered as in the ambient), so (R/(f))_d has the monomials of degree d
// not divisible by it as a basis.
class QuarticSurface {
 public:
  explicit QuarticSurface(RationalPolynomial f);

  const Ambient& ambient() const { return f_.ambient(); }
  const RationalPolynomial& equation() const { return f_; }
  const Exponent& leading_monomial() const { return lead_; }

  std::vector<Exponent> standard_basis(int d) const;
  long long hilbert(int d) const { return static_cast<long long>(standard_basis(d).size()); }
  RationalPolynomial normal_form(const RationalPolynomial& p) const;
  mpq_class evaluate(const std::vector<mpq_class>& point) const;

 private:
  RationalPolynomial f_;
  Exponent lead_;
  mpq_class lead_coeff_;
};

// dim (R/(f))_d = C(d+3,3) - C(d-1,3) for a quartic.
long long quartic_hilbert_formula(int d);

// h^0(X, ker(map)(k) (x) O(lC)) for a map O(source) -> O(target) of sums of
// line bundles on P^3, through the graded pieces of R/(f). Only l = 0.
CohomResult quartic_h0(const QuarticSurface& X, const PolyMatrix& map,
                       const std::vector<int>& source, const std::vector<int>& target, int k,
                       int l = 0);
CohomResult quartic_h0(const QuarticSurface& X, const MonadComplex& m, int k, int l = 0);

// The point of P^3 where the linear entries of a kernel monad's row all
// vanish; f must be nonzero there for K to be locally free on X.
std::vector<mpq_class> monad_basepoint(const MonadComplex& m);

// Stability of K = ker(b) restricted to X, polarized by H in a Picard
// lattice with basis (H, C). Twists are L = kH + lC.
StabilityCertificate quartic_region_run(const QuarticSurface& X, const MonadComplex& m,
                                        LatticeRef lattice);

// The rule covering twist L = (k, l) in a quartic certificate.
std::optional<std::string> justify_quartic(const StabilityCertificate& c, const MultiDegree& L);

}  // namespace hoppe
