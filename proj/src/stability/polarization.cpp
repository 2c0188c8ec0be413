#include "hoppe/stability/polarization.hpp"

#include "hoppe/common/error.hpp"

namespace hoppe {

Polarization Polarization::on_ambient(const Ambient& amb, const MultiDegree& cls) {
  if (!amb.is_surface()) throw InvalidArgument("polarization needs a surface, got " + amb.describe());
  if (cls.arity() != amb.grading()) throw AmbientMismatch("polarization class " + cls.str());
  for (std::size_t i = 0; i < cls.arity(); ++i)
    if (cls[i] <= 0) throw InvalidArgument("polarization " + cls.str() + " is not ample");
  Polarization p;
  p.ambient_ = amb;
  p.cls_ = cls;
  p.self_int_ = amb.intersect(cls, cls);
  if (p.self_int_ <= 0) throw InvalidArgument("polarization has non-positive self-intersection");
  return p;
}

Polarization Polarization::on_lattice(const LatticeClass& cls) {
  Polarization p;
  p.lattice_class_ = cls;
  p.self_int_ = self_int(cls);
  if (p.self_int_ <= 0) throw InvalidArgument("polarization has non-positive self-intersection");
  return p;
}

long long Polarization::degree(const MultiDegree& c1) const {
  if (!ambient_) throw InvalidArgument("lattice polarization applied to an ambient class");
  return ambient_->intersect(c1, cls_);
}

long long Polarization::degree(const LatticeClass& c1) const {
  if (!lattice_class_) throw InvalidArgument("ambient polarization applied to a lattice class");
  return pair(c1, *lattice_class_);
}

std::string Polarization::str() const {
  if (lattice_class_) return lattice_class_->str() + " in " + lattice_class_->lattice()->name();
  return "O" + (cls_.arity() == 1 ? "(" + cls_.str() + ")" : cls_.str()) + " on " +
         ambient_->describe();
}

mpq_class slope_from_degree(long long degree, long long rank) {
  if (rank < 1) throw ZeroRank("slope of a rank-0 sheaf");
  mpq_class m{mpz_class(static_cast<long>(degree)), mpz_class(static_cast<long>(rank))};
  m.canonicalize();
  return m;
}

mpq_class slope(const ChernData& c, const Polarization& H) {
  return slope_from_degree(H.degree(c.c1), c.rank);
}

long long pullback_degree(long long degree) { return 2 * degree; }

}  // namespace hoppe
