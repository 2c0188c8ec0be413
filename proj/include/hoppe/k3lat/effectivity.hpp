#pragma once

#include <set>
#include <string>
#include <vector>

#include "hoppe/k3lat/lattice.hpp"

namespace hoppe {

enum class EffectivityRule {
  ZeroClass,           // D = 0: the empty divisor, not a curve class
  NonPositiveDegree,   // D.H <= 0 and D != 0
  CurveDecomposition,  // no sum of possible curve classes equals D
};

std::string to_string(EffectivityRule r);

// A class that could carry an irreducible curve: K.H >= 1 and K^2 >= -2.
struct CurveCandidate {
  std::vector<long long> coords;
  long long degree = 0;
  long long square = 0;
};

struct EffectivityResult {
  // True only for a proof that D is not effective; false means Unknown.
  bool certified = false;
  EffectivityRule rule = EffectivityRule::ZeroClass;
  long long degree = 0;
  std::string note;
  // Rule iii: all candidates of degree 1..D.H, and every degree-(D.H) sum
  // they can form (D is certified iff it is not among them).
  std::vector<CurveCandidate> candidates;
  std::size_t reachable_count = 0;
};

// All K with K.H = degree and K^2 >= -2 in a rank-2 lattice where H^2 > 0
// and the orthogonal complement of H is negative definite.
std::vector<CurveCandidate> curve_candidates(const LatticeClass& H, long long degree);

// Sums of multisets of candidates whose degrees add up to exactly `degree`.
std::set<std::vector<long long>> reachable_sums(const LatticeClass& H, long long degree);

EffectivityResult not_effective_cert(const LatticeClass& D, const LatticeClass& H);

}  // namespace hoppe
