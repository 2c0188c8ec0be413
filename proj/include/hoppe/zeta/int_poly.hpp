#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hoppe {

// Dense polynomial with integer coefficients, constant term first; no
// trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly monomial(std::size_t degree, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const mpz_class& leading() const { return c_.back(); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const mpz_class& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  mpz_class eval(const mpz_class& x) const;
  IntPoly derivative() const;
  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Division by a monic polynomial; exact over Z.
void divmod_monic(const IntPoly& a, const IntPoly& monic, IntPoly& quot, IntPoly& rem);

unsigned long euler_phi(unsigned long k);
IntPoly cyclotomic(unsigned long k);

// Multiplicities of Phi_k in P for every k with phi(k) <= max_phi.
struct CyclotomicFactor {
  unsigned long k = 0;
  int multiplicity = 0;
};
std::vector<CyclotomicFactor> cyclotomic_factors(const IntPoly& p, unsigned long max_phi);
int cyclotomic_degree(const std::vector<CyclotomicFactor>& f);

// Number of distinct real roots of p in the closed interval [lo, hi], by
// Sturm sequences over Q.
int real_roots_in(const IntPoly& p, const mpq_class& lo, const mpq_class& hi);

// True when every complex root of p lies on the unit circle. p must be
// palindromic or antipalindromic (p(T) = +-T^d p(1/T)).
bool roots_on_unit_circle(const IntPoly& p);

// Power sums s_1..s_m to elementary symmetric e_0..e_m by Newton's
// identities; exact over Q.
std::vector<mpq_class> newton_elementary(const std::vector<mpq_class>& power_sums);
// Monic polynomial prod (T - a_i) from e_0..e_d.
IntPoly from_elementary(const std::vector<mpz_class>& e);
// Power sums s_1..s_m of the roots of a monic polynomial.
std::vector<mpz_class> power_sums(const IntPoly& monic, std::size_t m);

}  // namespace hoppe
