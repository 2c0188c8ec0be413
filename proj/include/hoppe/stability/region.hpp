#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "hoppe/stability/polarization.hpp"

namespace hoppe {

enum class RegionShape { HalfLine, Band, LatticeStrata };

std::string to_string(RegionShape s);

// Twists L with deg_H(L) <= -s*mu.
//
// HalfLine (P^2): k <= max_twist. Band (P^1 x P^1): two tails
// {L : L[i] < core_floor[i]} and a finite core of twists L >= core_floor,
// listed with its maximal elements. LatticeStrata (Picard lattice): the
// region is cut into strata by degree; core points are the twists that need
// a cohomology computation.
struct RegionDescriptor {
  int s = 1;
  mpq_class bound;  // -s * mu
  long long degree_bound = 0;  // floor(bound); deg_H(L) is an integer
  RegionShape shape = RegionShape::HalfLine;
  long long max_twist = 0;  // P^2 only
  MultiDegree core_floor;
  std::vector<MultiDegree> core_points;
  std::vector<MultiDegree> maximal_points;

  bool contains(const Polarization& H, const MultiDegree& L) const;
};

mpq_class floor_q(const mpq_class& q);

RegionDescriptor twist_region(const ChernData& c, int s, const Polarization& H,
                              std::optional<MultiDegree> core_floor = std::nullopt);

}  // namespace hoppe
