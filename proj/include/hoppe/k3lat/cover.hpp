#pragma once

#include <string>
#include <utility>

#include "hoppe/monad/chern.hpp"

namespace hoppe {

enum class CoverFamily { DoublePlane, DoubleQuadric, Quartic };

std::string to_string(CoverFamily f);

struct CoverSpec {
  Ambient base;
  CoverFamily family;
  // pi^* : Pic(base) -> Pic(X) is an isomorphism. Set only for the two
  // catalogued double-cover families.
  bool pic_isomorphism = false;
  std::string description;

  static CoverSpec double_plane();
  static CoverSpec double_quadric();
  static CoverSpec quartic();
  bool is_double_cover() const { return family != CoverFamily::Quartic; }
};

// Chern data of pi^*E on a double cover. c1 is pi^* of the base class.
struct CoverChern {
  long long rank = 0;
  MultiDegree c1_base;
  long long c1_squared = 0;
  long long c2 = 0;

  std::string str() const;
};

CoverChern pullback_chern(const ChernData& c, const CoverSpec& cover);

// Expected dimension of the moduli space on a surface with chi(O) = chi.
long long expected_dim(long long r, long long c1_sq, long long c2, long long chi = 2);

// The rigid rank-2 classes on the double plane: c1 = x pi^*O(1), c2 = y
// with x = 2k + 1, y = 2k^2 + 2k + 2.
std::pair<long long, long long> rigid_rank2_classes(long long k);

}  // namespace hoppe
