#include <random>

#include "hoppe/common/error.hpp"
#include "hoppe/monad/monad.hpp"
#include "hoppe/polycore/section_matrix.hpp"

namespace hoppe {

std::string to_string(MapStatus s) {
  switch (s) {
    case MapStatus::ProvedByMonomialCover: return "ProvedByMonomialCover";
    case MapStatus::ProvedByRandomizedRank: return "ProvedByRandomizedRank";
    case MapStatus::RefutedByCommonZero: return "RefutedByCommonZero";
    case MapStatus::RefutedAtSamplePoint: return "RefutedAtSamplePoint";
    case MapStatus::Unknown: return "Unknown";
    case MapStatus::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

namespace {

constexpr int kMaxCoverVars = 20;

// For a list of polynomials that are all monomials (or zero), decides
// whether they have a common zero in the ambient. A common zero is a set Z
// of vanishing coordinates that meets every monomial's support and leaves
// at least one coordinate of every group nonzero.
std::optional<bool> monomials_have_common_zero(const std::vector<RationalPolynomial>& entries) {
  if (entries.empty()) return true;
  const Ambient& amb = entries.front().ambient();
  const int nv = amb.num_vars();
  if (nv > kMaxCoverVars) return std::nullopt;
  std::vector<unsigned> supports;
  for (const auto& p : entries) {
    if (p.is_zero()) continue;
    if (!p.is_monomial()) return std::nullopt;
    unsigned mask = 0;
    const auto& e = p.terms().begin()->first;
    for (int i = 0; i < nv; ++i)
      if (e[static_cast<std::size_t>(i)] > 0) mask |= 1u << i;
    if (mask == 0) return false;  // nonzero constant never vanishes
    supports.push_back(mask);
  }
  std::vector<unsigned> groups;
  for (std::size_t g = 0; g < amb.grading(); ++g) {
    unsigned mask = 0;
    for (int i = 0; i < amb.group_size(g); ++i) mask |= 1u << (amb.group_begin(g) + i);
    groups.push_back(mask);
  }
  for (unsigned z = 0; z < (1u << nv); ++z) {
    bool valid = true;
    for (unsigned g : groups)
      if ((z & g) == g) valid = false;
    if (!valid) continue;
    bool hits_all = true;
    for (unsigned s : supports)
      if ((z & s) == 0) {
        hits_all = false;
        break;
      }
    if (hits_all) return true;
  }
  return false;
}

mpq_class evaluate(const RationalPolynomial& p, const std::vector<mpq_class>& pt) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= pt[i];
    acc += t;
  }
  return acc;
}

// Full rank (rows when `surjective`, else cols) at random points.
MapStatus randomized_rank(const PolyMatrix& m, bool surjective, int trials) {
  if (trials <= 0) return MapStatus::Unknown;
  const Ambient& amb = m.ambient();
  std::mt19937_64 rng(0x5eed1234ULL);
  std::uniform_int_distribution<int> dist(-50, 50);
  const std::size_t want = surjective ? m.rows() : m.cols();
  for (int t = 0; t < trials; ++t) {
    std::vector<mpq_class> pt(static_cast<std::size_t>(amb.num_vars()));
    for (std::size_t g = 0; g < amb.grading(); ++g) {
      bool nonzero = false;
      while (!nonzero)
        for (int i = 0; i < amb.group_size(g); ++i) {
          const int v = dist(rng);
          pt[static_cast<std::size_t>(amb.group_begin(g) + i)] = v;
          nonzero = nonzero || v != 0;
        }
    }
    ExactMatrix ev(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) ev.at(r, c) = evaluate(m.at(r, c), pt);
    if (rank(ev) < want) return MapStatus::RefutedAtSamplePoint;
  }
  return MapStatus::ProvedByRandomizedRank;
}

MapStatus map_status(const PolyMatrix& m, bool surjective, int trials, bool* used_random) {
  *used_random = false;
  const bool single = surjective ? m.rows() == 1 : m.cols() == 1;
  if (single) {
    std::vector<RationalPolynomial> entries;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c));
    if (auto common = monomials_have_common_zero(entries))
      return *common ? MapStatus::RefutedByCommonZero : MapStatus::ProvedByMonomialCover;
  }
  *used_random = true;
  return randomized_rank(m, surjective, trials);
}

}  // namespace

ValidationReport validate(const MonadComplex& m, int random_trials) {
  ValidationReport rep;
  try {
    check_map_homogeneity(m.map_b(), m.B().twists, m.C().twists);
    if (m.map_a()) check_map_homogeneity(*m.map_a(), m.A().twists, m.B().twists);
  } catch (const Error& e) {
    rep.homogeneous = false;
    rep.homogeneity_detail = e.what();
  }
  if (m.map_a()) rep.composite_zero = (m.map_b() * *m.map_a()).is_zero();

  bool random_b = false, random_a = false;
  if (m.C().rank() == 0)
    rep.surjectivity_b = MapStatus::NotApplicable;
  else
    rep.surjectivity_b = map_status(m.map_b(), true, random_trials, &random_b);
  if (m.map_a()) rep.injectivity_a = map_status(*m.map_a(), false, random_trials, &random_a);
  if (random_a || random_b) rep.randomized_trials = random_trials;
  return rep;
}

void require_valid(const MonadComplex& m) {
  ValidationReport rep = validate(m, 0);
  if (!rep.homogeneous) throw ValidationError(rep.homogeneity_detail);
  if (!rep.composite_zero) throw ValidationError("composite b.a is not zero");
}

}  // namespace hoppe
