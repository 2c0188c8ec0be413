#include "hoppe/k3lat/quartic.hpp"

#include <algorithm>
#include <map>

#include "hoppe/common/error.hpp"
#include "hoppe/monad/document.hpp"
#include "hoppe/polycore/exact_matrix.hpp"

namespace hoppe {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long as_int(int v) { return static_cast<long long>(v); }

}  // namespace

QuarticSurface::QuarticSurface(RationalPolynomial f) : f_(std::move(f)) {
  const Ambient& amb = f_.ambient();
  if (amb.is_product() || amb.dims()[0] != 3)
    throw AmbientMismatch("a quartic surface lives in P^3, got " + amb.describe());
  if (f_.is_zero() || !f_.is_homogeneous_of(MultiDegree{4}))
    throw HomogeneityError("the equation of X must be a nonzero homogeneous quartic");
  const auto& top = *f_.terms().rbegin();
  lead_ = top.first;
  lead_coeff_ = top.second;
}

std::vector<Exponent> QuarticSurface::standard_basis(int d) const {
  std::vector<Exponent> out;
  for (auto& e : monomial_basis(ambient(), MultiDegree{d}))
    if (!divides(lead_, e)) out.push_back(std::move(e));
  return out;
}

RationalPolynomial QuarticSurface::normal_form(const RationalPolynomial& p) const {
  if (!(p.ambient() == ambient())) throw AmbientMismatch("polynomial is not on the ambient of X");
  RationalPolynomial work = p, out(ambient());
  // Each step removes the lex-largest remaining term or replaces it by
  // strictly smaller ones, so the loop terminates.
  while (!work.is_zero()) {
    const auto [e, c] = *work.terms().rbegin();
    if (divides(lead_, e)) {
      Exponent q(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) q[i] = e[i] - lead_[i];
      work = work - RationalPolynomial::monomial(ambient(), q, c / lead_coeff_) * f_;
    } else {
      out.add_term(e, c);
      work.add_term(e, -c);
    }
  }
  return out;
}

mpq_class QuarticSurface::evaluate(const std::vector<mpq_class>& point) const {
  if (point.size() != 4) throw InvalidPoint("a point of P^3 has 4 coordinates");
  mpq_class sum = 0;
  for (const auto& [e, c] : f_.terms()) {
    mpq_class t = c;
    for (std::size_t i = 0; i < 4; ++i)
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    sum += t;
  }
  return sum;
}

long long quartic_hilbert_formula(int d) {
  if (d < 0) return 0;
  return binom(d + 3, 3) - binom(d - 1, 3);
}

CohomResult quartic_h0(const QuarticSurface& X, const PolyMatrix& map,
                       const std::vector<int>& source, const std::vector<int>& target, int k,
                       int l) {
  if (l != 0)
    throw UnsupportedTwist("h0 on the quartic is computed for hyperplane twists only (l = " +
                           std::to_string(l) + ")");
  if (map.rows() != target.size() || map.cols() != source.size())
    throw ValidationError("map shape does not match the twists");
  if (!(map.ambient() == X.ambient())) throw AmbientMismatch("map is not on the ambient of X");

  std::vector<std::map<Exponent, std::size_t>> row_index(target.size());
  std::size_t rows = 0;
  for (std::size_t i = 0; i < target.size(); ++i)
    for (const auto& e : X.standard_basis(target[i] + k)) row_index[i][e] = rows++;
  std::vector<std::vector<Exponent>> col_basis(source.size());
  std::size_t cols = 0;
  for (std::size_t j = 0; j < source.size(); ++j) {
    col_basis[j] = X.standard_basis(source[j] + k);
    cols += col_basis[j].size();
  }

  ExactMatrix M(rows, cols);
  std::size_t col = 0;
  for (std::size_t j = 0; j < source.size(); ++j)
    for (const auto& e : col_basis[j]) {
      const RationalPolynomial mono = RationalPolynomial::monomial(X.ambient(), e);
      for (std::size_t i = 0; i < target.size(); ++i) {
        if (map.at(i, j).is_zero()) continue;
        if (!map.at(i, j).is_homogeneous_of(MultiDegree{target[i] - source[j]}))
          throw HomogeneityError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") has the wrong degree");
        const RationalPolynomial image = X.normal_form(map.at(i, j) * mono);
        for (const auto& [te, tc] : image.terms())
          M.at(row_index[i].at(te), col) = tc;
      }
      ++col;
    }

  CohomResult r;
  r.method = CohomMethod::SectionKernel;
  const MatrixWitness w =
      witness_of("(R/f) graded pieces at k = " + std::to_string(k), M);
  r.lo = r.hi = static_cast<long long>(w.nullity);
  r.matrices.push_back(w);
  r.notes.push_back("h0 = nullity of the induced map on R/(f), by left exactness and "
                    "projective normality of X");
  return r;
}

CohomResult quartic_h0(const QuarticSurface& X, const MonadComplex& m, int k, int l) {
  if (m.kind() != MonadKind::Kernel) throw UnsupportedOperation("quartic_h0 needs a kernel monad");
  std::vector<int> src, tgt;
  for (const auto& t : m.B().twists) src.push_back(t[0]);
  for (const auto& t : m.C().twists) tgt.push_back(t[0]);
  return quartic_h0(X, m.map_b(), src, tgt, k, l);
}

std::vector<mpq_class> monad_basepoint(const MonadComplex& m) {
  const Ambient& amb = m.ambient();
  const int n = amb.num_vars();
  ExactMatrix coeff(m.map_b().rows() * m.map_b().cols(), static_cast<std::size_t>(n));
  std::size_t row = 0;
  for (std::size_t i = 0; i < m.map_b().rows(); ++i)
    for (std::size_t j = 0; j < m.map_b().cols(); ++j, ++row) {
      const auto& p = m.map_b().at(i, j);
      if (!p.is_zero() && !p.is_homogeneous_of(MultiDegree{1}))
        throw UnsupportedOperation("basepoint search needs linear entries");
      for (const auto& [e, c] : p.terms())
        for (int v = 0; v < n; ++v)
          if (e[static_cast<std::size_t>(v)] == 1) coeff.at(row, static_cast<std::size_t>(v)) = c;
    }
  if (kernel_dim(coeff) != 1)
    throw UnsupportedOperation("the entries of b do not cut out a single point");

  // Reduced row echelon form; the free column gives the kernel vector.
  std::vector<std::vector<mpq_class>> a(coeff.rows(), std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < coeff.rows(); ++r)
    for (int c = 0; c < n; ++c) a[r][static_cast<std::size_t>(c)] = coeff.at(r, static_cast<std::size_t>(c));
  std::vector<int> pivot_col;
  std::size_t pr = 0;
  for (int c = 0; c < n && pr < a.size(); ++c) {
    std::size_t sel = pr;
    while (sel < a.size() && a[sel][static_cast<std::size_t>(c)] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[pr]);
    const mpq_class inv = 1 / a[pr][static_cast<std::size_t>(c)];
    for (auto& x : a[pr]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == pr || a[r][static_cast<std::size_t>(c)] == 0) continue;
      const mpq_class f = a[r][static_cast<std::size_t>(c)];
      for (int cc = 0; cc < n; ++cc)
        a[r][static_cast<std::size_t>(cc)] -= f * a[pr][static_cast<std::size_t>(cc)];
    }
    pivot_col.push_back(c);
    ++pr;
  }
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<mpq_class> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    v[static_cast<std::size_t>(pivot_col[r])] = -a[r][static_cast<std::size_t>(free_col)];
  return v;
}

namespace {

struct QuarticSetup {
  LatticeRef lattice;
  long long h2 = 0;  // H^2
  long long hc = 0;  // H.C
  int b_max = 0;
};

long long twist_degree(const QuarticSetup& q, const MultiDegree& L) {
  return q.h2 * as_int(L[0]) + q.hc * as_int(L[1]);
}

void check_lattice(const LatticeRef& lat) {
  if (lat->rank() != 2) throw LatticeMismatch("the Picard lattice must have rank 2 with basis (H, C)");
  if (lat->entry(0, 0) != 4)
    throw LatticeMismatch("H^2 = " + std::to_string(lat->entry(0, 0)) + ", a quartic has H^2 = 4");
}

}  // namespace

StabilityCertificate quartic_region_run(const QuarticSurface& X, const MonadComplex& m,
                                        LatticeRef lattice) {
  require_valid(m);
  if (!(m.ambient() == X.ambient())) throw AmbientMismatch("monad and X live on different P^3");
  if (m.kind() != MonadKind::Kernel || m.C().rank() != 1)
    throw UnsupportedOperation("the quartic pipeline needs a kernel monad onto a line bundle");
  if (m.bundle_rank() != 2) throw UnsupportedOperation("the quartic pipeline handles rank 2");
  check_lattice(lattice);

  StabilityCertificate cert;
  cert.bundle_id = m.name();
  cert.surface = "X = Z(f) in P^3";
  cert.real = is_real(m);
  cert.source["quartic"] = X.equation().render();
  cert.source["monad"] = monad_to_json(m);
  cert.source["lattice"] = {{"name", lattice->name()},
                            {"basis", lattice->basis()},
                            {"gram", lattice->gram()}};

  const auto base = monad_basepoint(m);
  const mpq_class fx = X.evaluate(base);
  std::string pt = "[";
  for (std::size_t i = 0; i < base.size(); ++i) pt += (i ? ":" : "") + base[i].get_str();
  pt += "]";
  if (fx == 0) throw BasepointFailure("f vanishes at " + pt + ", where b drops rank");
  cert.notes.push_back("basepoint check: f" + pt + " = " + fx.get_str() +
                       " != 0, so K is locally free on X");

  QuarticSetup q{lattice, lattice->entry(0, 0), lattice->entry(0, 1), 0};
  long long e1 = 0, e2 = 0;
  std::vector<int> b;
  for (const auto& t : m.B().twists) b.push_back(t[0]);
  for (std::size_t i = 0; i < b.size(); ++i) {
    e1 += b[i];
    for (std::size_t j = i + 1; j < b.size(); ++j) e2 += as_int(b[i]) * b[j];
  }
  const long long c = m.C().twists[0][0];
  q.b_max = *std::max_element(b.begin(), b.end());
  const long long a = e1 - c;
  cert.chern = {2, MultiDegree{static_cast<int>(a), 0}, (e2 - e1 * c + c * c) * q.h2};
  const LatticeClass H(lattice, {1, 0});
  const Polarization pol = Polarization::on_lattice(H);
  cert.polarization = pol.str();
  cert.slope = slope_from_degree(a * q.h2, 2);
  cert.options = CertifyOptions{};
  cert.notes.push_back(cert.real ? "maps have rational coefficients: the bundle carries a real structure"
                                 : "maps have non-real coefficients");
  cert.notes.push_back("H0(K(L)) embeds in the sections of O(b_j)H + L; all vanish once "
                       "D = L + " + std::to_string(q.b_max) + "H is not effective");

  RegionDescriptor region;
  region.s = 1;
  region.bound = -cert.slope;
  region.degree_bound = floor_q(region.bound).get_num().get_si();
  region.shape = RegionShape::LatticeStrata;

  // Twist L and D = L + b_max H determine each other.
  auto twist_of = [&](const std::vector<long long>& D) {
    return MultiDegree{static_cast<int>(D[0] - q.b_max), static_cast<int>(D[1])};
  };
  const long long d_max = region.degree_bound + q.b_max * q.h2;
  std::vector<MultiDegree> pending;

  {
    StratumRecord st;
    st.degree = std::min<long long>(0, d_max);
    st.rule = EffectivityRule::NonPositiveDegree;
    st.certified = true;
    st.note = "every D != 0 with D.H <= " + std::to_string(st.degree) + " is not effective";
    if (d_max >= 0) {
      st.exceptions.push_back(twist_of({0, 0}));
      st.note += "; D = 0 needs a cohomology computation";
    }
    cert.strata.push_back(st);
  }
  for (long long d = 1; d <= d_max; ++d) {
    StratumRecord st;
    st.degree = d;
    st.rule = EffectivityRule::CurveDecomposition;
    for (long long e = 1; e <= d; ++e) {
      auto cs = curve_candidates(H, e);
      st.candidates.insert(st.candidates.end(), cs.begin(), cs.end());
    }
    const auto reach = reachable_sums(H, d);
    st.reachable_count = reach.size();
    for (const auto& D : reach) st.exceptions.push_back(twist_of(D));
    st.certified = true;
    st.note = reach.empty() ? "no curve candidates sum to degree " + std::to_string(d)
                            : "classes outside the listed sums are not effective";
    cert.strata.push_back(st);
  }
  for (const auto& st : cert.strata) pending.insert(pending.end(), st.exceptions.begin(), st.exceptions.end());

  cert.verdict = Verdict::Stable;
  for (const auto& L : pending) {
    region.core_points.push_back(L);
    region.maximal_points.push_back(L);
    if (L[1] != 0) {
      if (cert.verdict == Verdict::Stable) {
        cert.verdict = Verdict::Inconclusive;
        cert.reason = "effectivity of D = L + " + std::to_string(q.b_max) +
                      "H is not excluded and l != 0";
        cert.failing_twist = L;
      }
      continue;
    }
    CoreCheck check{1, L, quartic_h0(X, m, L[0], 0)};
    const long long v = check.result.hi;
    cert.core_checks.push_back(check);
    if (v != 0 && cert.verdict == Verdict::Stable) {
      cert.verdict = Verdict::Inconclusive;
      cert.reason = "h0 does not vanish at a dispatched twist";
      cert.failing_twist = L;
      cert.failing_value = v;
    }
  }
  cert.regions.push_back(region);
  cert.notes.push_back("region: twists kH + lC with " + std::to_string(q.h2) + "k + " +
                       std::to_string(q.hc) + "l <= " + std::to_string(region.degree_bound));
  return cert;
}

std::optional<std::string> justify_quartic(const StabilityCertificate& c, const MultiDegree& L) {
  if (c.regions.size() != 1 || c.regions[0].shape != RegionShape::LatticeStrata)
    throw InvalidArgument("not a quartic certificate");
  const auto& src = c.source;
  const IntMatrix gram = src.at("lattice").at("gram").get<IntMatrix>();
  const MonadComplex m = monad_from_json(src.at("monad"));
  QuarticSetup q{nullptr, gram[0][0], gram[0][1], 0};
  q.b_max = m.B().twists.front()[0];
  for (const auto& t : m.B().twists) q.b_max = std::max(q.b_max, t[0]);
  if (twist_degree(q, L) > c.regions[0].degree_bound) return "outside region";
  for (const auto& k : c.core_checks)
    if (k.twist == L) {
      if (k.result.hi == 0) return "h0 computed on R/(f): 0";
      return std::nullopt;
    }
  const long long Dk = as_int(L[0]) + q.b_max, Dl = L[1];
  const long long d = gram[0][0] * Dk + gram[0][1] * Dl;
  if (d <= 0 && (Dk != 0 || Dl != 0))
    return "non-positive-degree: D = " + std::to_string(Dk) + "H + " + std::to_string(Dl) +
           "C has D.H = " + std::to_string(d);
  for (const auto& st : c.strata)
    if (st.degree == d && st.rule == EffectivityRule::CurveDecomposition) {
      if (std::find(st.exceptions.begin(), st.exceptions.end(), L) != st.exceptions.end())
        return std::nullopt;
      return "curve-decomposition: D = " + std::to_string(Dk) + "H + " + std::to_string(Dl) +
             "C is not a sum of curve candidates of degree " + std::to_string(d);
    }
  return std::nullopt;
}

}  // namespace hoppe
