#include "hoppe/k3lat/cover.hpp"

#include "hoppe/common/error.hpp"

namespace hoppe {

std::string to_string(CoverFamily f) {
  switch (f) {
    case CoverFamily::DoublePlane: return "double-plane";
    case CoverFamily::DoubleQuadric: return "double-quadric";
    case CoverFamily::Quartic: return "quartic";
  }
  return "quartic";
}

CoverSpec CoverSpec::double_plane() {
  return {Ambient::projective(2, {"x", "y", "z"}), CoverFamily::DoublePlane, true,
          "double cover of P^2 branched over a sextic, Pic = <2>"};
}

CoverSpec CoverSpec::double_quadric() {
  return {Ambient::product(1, 1, {"x1", "x2", "y1", "y2"}), CoverFamily::DoubleQuadric, true,
          "double cover of P^1xP^1 branched over a (4,4) curve, Pic = U(2)"};
}

CoverSpec CoverSpec::quartic() {
  return {Ambient::projective(3, {"x", "y", "z", "w"}), CoverFamily::Quartic, false,
          "quartic surface in P^3, no covering map"};
}

std::string CoverChern::str() const {
  const std::string base = c1_base.arity() == 1 ? "(" + c1_base.str() + ")" : c1_base.str();
  return "rank " + std::to_string(rank) + ", c1 = pi^*O" + base +
         ", c1^2 = " + std::to_string(c1_squared) + ", c2 = " + std::to_string(c2);
}

CoverChern pullback_chern(const ChernData& c, const CoverSpec& cover) {
  if (!cover.is_double_cover())
    throw NotApplicable("pullback_chern needs a double cover, got " + to_string(cover.family));
  if (c.c1.arity() != cover.base.grading())
    throw AmbientMismatch("Chern data does not live on the cover's base");
  return {c.rank, c.c1, 2 * cover.base.intersect(c.c1, c.c1), 2 * c.c2};
}

long long expected_dim(long long r, long long c1_sq, long long c2, long long chi) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  return 2 * r * c2 - (r - 1) * c1_sq - (r * r - 1) * chi;
}

std::pair<long long, long long> rigid_rank2_classes(long long k) {
  return {2 * k + 1, 2 * k * k + 2 * k + 2};
}

}  // namespace hoppe
