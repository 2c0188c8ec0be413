#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "hoppe/k3lat/lattice.hpp"
#include "hoppe/monad/chern.hpp"

namespace hoppe {

// An ample class H, either on an ambient surface (hyperplane-basis
// coordinates) or in a Picard lattice.
class Polarization {
 public:
  static Polarization on_ambient(const Ambient& amb, const MultiDegree& cls);
  static Polarization on_lattice(const LatticeClass& cls);

  bool is_lattice() const { return lattice_class_.has_value(); }
  const Ambient& ambient() const { return *ambient_; }
  const MultiDegree& ambient_class() const { return cls_; }
  const LatticeClass& lattice_class() const { return *lattice_class_; }

  long long self_intersection() const { return self_int_; }
  long long degree(const MultiDegree& c1) const;
  long long degree(const LatticeClass& c1) const;

  std::string str() const;

 private:
  std::optional<Ambient> ambient_;
  MultiDegree cls_;
  std::optional<LatticeClass> lattice_class_;
  long long self_int_ = 0;
};

mpq_class slope_from_degree(long long degree, long long rank);
mpq_class slope(const ChernData& c, const Polarization& H);

// deg_{pi^*H}(pi^*L) = 2 deg_H(L) on a double cover.
long long pullback_degree(long long degree);

}  // namespace hoppe
