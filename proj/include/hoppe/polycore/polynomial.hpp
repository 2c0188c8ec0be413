#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hoppe/polycore/ambient.hpp"

namespace hoppe {

using Exponent = std::vector<int>;

// True when `a` precedes `b` in the canonical monomial order: groups are
// compared in order, and within a group by total degree (descending), then
// lexicographically by exponent (descending).
bool canonical_before(const Ambient& ambient, const Exponent& a, const Exponent& b);

MultiDegree exponent_degree(const Ambient& ambient, const Exponent& e);

// All monomials of multidegree d, in canonical order. Empty when any
// component of d is negative.
std::vector<Exponent> monomial_basis(const Ambient& ambient, const MultiDegree& d);

class RationalPolynomial {
 public:
  using TermMap = std::map<Exponent, mpq_class>;

  explicit RationalPolynomial(Ambient ambient);

  static RationalPolynomial constant(const Ambient& ambient, const mpq_class& c);
  static RationalPolynomial variable(const Ambient& ambient, int index);
  static RationalPolynomial monomial(const Ambient& ambient, Exponent e, const mpq_class& c = 1);

  const Ambient& ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  mpq_class coefficient(const Exponent& e) const;

  // Multidegree when every term shares one; nullopt for the zero polynomial
  // or an inhomogeneous one.
  std::optional<MultiDegree> homogeneous_degree() const;
  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous_of(const MultiDegree& d) const;

  // Adds c * x^e to the polynomial.
  void add_term(const Exponent& e, const mpq_class& c);

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator-() const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial scaled(const mpq_class& c) const;
  RationalPolynomial pow(unsigned k) const;
  RationalPolynomial& operator+=(const RationalPolynomial& o);

  bool operator==(const RationalPolynomial& o) const;

  // Canonical text, readable back by parse_poly for integer coefficients.
  std::string render() const;

 private:
  void check_same_ambient(const RationalPolynomial& o) const;

  Ambient ambient_;
  TermMap terms_;
};

// Substitutes variables of p by polynomials living in `target`. Variables
// that are not assigned are carried over by name and must exist in target.
RationalPolynomial substitute(const RationalPolynomial& p,
                              const std::map<std::string, RationalPolynomial>& assignment,
                              const Ambient& target);

}  // namespace hoppe
