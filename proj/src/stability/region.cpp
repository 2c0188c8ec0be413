#include "hoppe/stability/region.hpp"

#include "hoppe/common/error.hpp"

namespace hoppe {

std::string to_string(RegionShape s) {
  switch (s) {
    case RegionShape::HalfLine: return "half-line";
    case RegionShape::Band: return "band";
    case RegionShape::LatticeStrata: return "lattice-strata";
  }
  return "half-line";
}

mpq_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return mpq_class(f);
}

bool RegionDescriptor::contains(const Polarization& H, const MultiDegree& L) const {
  if (H.is_lattice()) {
    const auto& lat = H.lattice_class().lattice();
    std::vector<long long> coords(L.components().begin(), L.components().end());
    return H.degree(LatticeClass(lat, coords)) <= degree_bound;
  }
  return H.degree(L) <= degree_bound;
}

RegionDescriptor twist_region(const ChernData& c, int s, const Polarization& H,
                              std::optional<MultiDegree> core_floor) {
  if (H.is_lattice()) throw InvalidArgument("twist_region needs an ambient polarization");
  if (s < 1 || s > c.rank - 1)
    throw IndexOutOfRange("s = " + std::to_string(s) + " for rank " + std::to_string(c.rank));
  const Ambient& amb = H.ambient();
  RegionDescriptor r;
  r.s = s;
  r.bound = -s * slope(c, H);
  r.degree_bound = floor_q(r.bound).get_num().get_si();
  r.shape = amb.is_product() ? RegionShape::Band : RegionShape::HalfLine;
  if (r.shape == RegionShape::HalfLine) {
    // deg_H O(k) = k*h on P^2.
    const long long h = H.ambient_class()[0];
    r.max_twist = r.degree_bound >= 0 ? r.degree_bound / h : -((-r.degree_bound + h - 1) / h);
    r.core_points.push_back(MultiDegree{static_cast<int>(r.max_twist)});
    r.maximal_points = r.core_points;
    return r;
  }
  r.core_floor = core_floor.value_or(MultiDegree{0, 0});
  const MultiDegree& f = r.core_floor;
  for (int k = f[0]; H.degree(MultiDegree{k, f[1]}) <= r.degree_bound; ++k)
    for (int l = f[1]; H.degree(MultiDegree{k, l}) <= r.degree_bound; ++l)
      r.core_points.push_back(MultiDegree{k, l});
  for (const auto& p : r.core_points) {
    bool dominated = false;
    for (const auto& q : r.core_points)
      if (q != p && p.leq(q)) {
        dominated = true;
        break;
      }
    if (!dominated) r.maximal_points.push_back(p);
  }
  return r;
}

}  // namespace hoppe
