#include "hoppe/monad/monad.hpp"

#include "hoppe/common/error.hpp"
#include "hoppe/polycore/section_matrix.hpp"

namespace hoppe {

namespace {

void check_sheaf(const FreeSheaf& f, const Ambient& amb, const char* label) {
  if (!(f.ambient == amb)) throw ValidationError(std::string(label) + " lives on another ambient");
  for (const auto& t : f.twists)
    if (t.arity() != amb.grading())
      throw ValidationError(std::string(label) + " twist " + t.str() + " has wrong arity");
}

}  // namespace

MonadComplex::MonadComplex(std::string name, FreeSheaf a, FreeSheaf b, FreeSheaf c,
                           std::optional<PolyMatrix> map_a, PolyMatrix map_b)
    : name_(std::move(name)), A_(std::move(a)), B_(std::move(b)), C_(std::move(c)),
      map_a_(std::move(map_a)), map_b_(std::move(map_b)) {
  const Ambient& amb = B_.ambient;
  check_sheaf(A_, amb, "source");
  check_sheaf(C_, amb, "target");
  if (!(map_b_.ambient() == amb)) throw ValidationError("map_b lives on another ambient");
  if (map_b_.rows() != C_.rank() || map_b_.cols() != B_.rank())
    throw ValidationError("map_b must be rank(target) x rank(middle)");
  if (A_.rank() == 0) {
    if (map_a_) throw ValidationError("map_a given without a source");
  } else {
    if (!map_a_) throw ValidationError("source given without map_a");
    if (!(map_a_->ambient() == amb)) throw ValidationError("map_a lives on another ambient");
    if (map_a_->rows() != B_.rank() || map_a_->cols() != A_.rank())
      throw ValidationError("map_a must be rank(middle) x rank(source)");
  }
  if (B_.rank() < C_.rank() + A_.rank())
    throw ValidationError("rank(middle) must be at least rank(source) + rank(target)");
}

std::size_t MonadComplex::bundle_rank() const { return B_.rank() - C_.rank() - A_.rank(); }

void MonadComplex::set_imaginary_parts(std::optional<PolyMatrix> a_im,
                                       std::optional<PolyMatrix> b_im) {
  if (a_im && (!map_a_ || a_im->rows() != map_a_->rows() || a_im->cols() != map_a_->cols()))
    throw ValidationError("imaginary part of map_a has the wrong shape");
  if (b_im && (b_im->rows() != map_b_.rows() || b_im->cols() != map_b_.cols()))
    throw ValidationError("imaginary part of map_b has the wrong shape");
  imag_a_ = std::move(a_im);
  imag_b_ = std::move(b_im);
}

bool is_real(const MonadComplex& m) {
  const bool a_real = !m.imaginary_a() || m.imaginary_a()->is_zero();
  const bool b_real = !m.imaginary_b() || m.imaginary_b()->is_zero();
  return a_real && b_real;
}

MonadComplex restrict_to_fiber(const MonadComplex& m, int axis, std::pair<long, long> point) {
  const Ambient& amb = m.ambient();
  if (!amb.is_product() || amb.dims() != std::vector<int>{1, 1})
    throw InvalidArgument("fiber restriction needs P^1xP^1, got " + amb.describe());
  if (axis != 1 && axis != 2) throw InvalidArgument("axis must be 1 or 2");
  if (point.first == 0 && point.second == 0) throw InvalidPoint("[0:0] is not a point of P^1");

  const std::size_t fixed = static_cast<std::size_t>(axis - 1);
  const std::size_t kept = 1 - fixed;
  const int kb = amb.group_begin(kept);
  Ambient line = Ambient::projective(1, {amb.var_name(kb), amb.var_name(kb + 1)});
  const int fb = amb.group_begin(fixed);
  std::map<std::string, RationalPolynomial> assignment{
      {amb.var_name(fb), RationalPolynomial::constant(line, point.first)},
      {amb.var_name(fb + 1), RationalPolynomial::constant(line, point.second)},
  };
  auto restrict_sheaf = [&](const FreeSheaf& f) {
    FreeSheaf r{line, {}};
    for (const auto& t : f.twists) r.twists.push_back(MultiDegree{t[kept]});
    return r;
  };
  auto restrict_map = [&](const PolyMatrix& p) {
    return p.map_entries(line, [&](const RationalPolynomial& e) {
      return substitute(e, assignment, line);
    });
  };
  std::optional<PolyMatrix> a;
  if (m.map_a()) a = restrict_map(*m.map_a());
  MonadComplex r(m.name() + "|fiber", restrict_sheaf(m.A()), restrict_sheaf(m.B()),
                 restrict_sheaf(m.C()), std::move(a), restrict_map(m.map_b()));
  check_map_homogeneity(r.map_b(), r.B().twists, r.C().twists);
  if (r.map_a()) check_map_homogeneity(*r.map_a(), r.A().twists, r.B().twists);
  return r;
}

}  // namespace hoppe
