#pragma once

#include <cstdint>
#include <vector>

namespace hoppe {

// F_q with q = p^n. Elements are encoded as integers sum c_i p^i, where
// c_0 + c_1 x + ... + c_{n-1} x^{n-1} is the residue modulo the defining
// polynomial. For q <= kTableLimit the field also carries discrete-log
// and Zech tables with respect to a fixed generator.
class FqField {
 public:
  using Elem = std::uint64_t;
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 40;
  static constexpr std::int32_t kZeroLog = -1;

  FqField(unsigned p, unsigned n);

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }
  // Coefficients of the monic modulus, constant term first.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }
  Elem generator() const { return generator_; }

  Elem from_int(long long v) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  // -1, 0 or +1. Throws EvenCharacteristic for p = 2.
  int quad_char(Elem a) const;

  // Table access; only valid when has_tables().
  std::int32_t log(Elem a) const { return a == 0 ? kZeroLog : log_[a]; }
  Elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
  // zech()[i] = log(1 + g^i), or kZeroLog when 1 + g^i = 0.
  const std::vector<std::int32_t>& zech() const { return zech_; }

 private:
  Elem mul_poly(Elem a, Elem b) const;
  void find_generator();
  void build_tables();

  unsigned p_;
  unsigned n_;
  std::uint64_t q_;
  std::vector<unsigned> modulus_;
  Elem generator_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::int32_t> log_;
  std::vector<std::int32_t> zech_;
};

FqField make_field(unsigned p, unsigned n);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Lexicographically smallest monic irreducible polynomial of degree n over
// F_p (coefficients compared from x^{n-1} down to the constant term).
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned n);
bool is_irreducible(const std::vector<unsigned>& f, unsigned p);

}  // namespace hoppe
