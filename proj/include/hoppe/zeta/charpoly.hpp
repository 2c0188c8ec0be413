#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "hoppe/zeta/int_poly.hpp"

namespace hoppe {

// A value of the middle coefficient that makes some Phi_k divide the
// normalized polynomial, when the counts leave that coefficient free.
struct SpecialMiddle {
  mpz_class middle;
  std::vector<unsigned long> forced_by;
  std::vector<CyclotomicFactor> factors;
  int cyclotomic_degree = 0;
  bool admissible = false;
  std::string reason;
};

// One sign of the functional equation T^d P(q^2/T) = sign * q^d P(T) for
// the factor P of the Frobenius characteristic polynomial left after
// removing the k_alg known eigenvalues q.
struct CharpolyCandidate {
  int sign = 1;
  // The counts do not determine the middle coefficient; `poly` carries 0
  // there and `specials` lists the cyclotomic values.
  bool free_middle = false;
  IntPoly poly;        // P(T), monic of degree d
  IntPoly normalized;  // P(qT) / q^floor(d/2): integer, roots alpha/q
  bool eliminated = false;
  std::string reason;
  std::vector<CyclotomicFactor> factors;
  std::vector<SpecialMiddle> specials;
  // Largest number of roots alpha with alpha/q a root of unity.
  int contribution = 0;
};

struct ZetaProfile {
  unsigned p = 0;
  int k_alg = 2;
  int b2 = 22;
  std::vector<std::uint64_t> counts;
  std::vector<long long> traces;
  std::vector<bool> weil_ok;
  std::vector<mpz_class> power_sums;  // of the degree-d factor
  std::vector<mpz_class> elementary;  // e_0..e_m
  std::vector<CharpolyCandidate> candidates;
};

// counts[i] = N_{i+1} over F_{p^{i+1}}.
ZetaProfile assemble_charpoly(const std::vector<std::uint64_t>& counts, unsigned p, int k_alg = 2);

// k_alg + the largest contribution of a surviving candidate.
int rank_upper_bound(const ZetaProfile& profile);

nlohmann::ordered_json to_json(const ZetaProfile& profile);

}  // namespace hoppe
