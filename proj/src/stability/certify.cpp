#include "hoppe/stability/certify.hpp"

#include "hoppe/common/error.hpp"
#include "hoppe/monad/document.hpp"

namespace hoppe {

std::string to_string(Verdict v) { return v == Verdict::Stable ? "Stable" : "Inconclusive"; }

namespace {

void fail(StabilityCertificate& cert, const std::string& reason,
          std::optional<MultiDegree> twist = std::nullopt,
          std::optional<long long> value = std::nullopt) {
  if (cert.verdict == Verdict::Inconclusive && !cert.reason.empty()) return;
  cert.verdict = Verdict::Inconclusive;
  cert.reason = reason;
  cert.failing_twist = std::move(twist);
  cert.failing_value = value;
}

// Searches for the highest surviving twist at which the fiber has no
// sections, starting at -1 - margin.
std::optional<TailCertificate> find_tail(const MonadComplex& m, int s, int bounded_component,
                                         const CertifyOptions& opt, std::string& why) {
  const int restricted = 3 - bounded_component;
  const int start = -1 - opt.margin;
  for (int t = start; t >= start - opt.fiber_search_depth; --t) {
    try {
      return tail_vanish(m, s, restricted, opt.fiber_point, t);
    } catch (const FiberNotVanishing& e) {
      why = e.what();
    } catch (const NoTerminalBound& e) {
      why = e.what();
    }
  }
  return std::nullopt;
}

void certify_plane(const MonadComplex& m, const Polarization& H, int s, StabilityCertificate& cert) {
  RegionDescriptor region = twist_region(cert.chern, s, H);
  const MultiDegree top = region.maximal_points.front();
  CoreCheck check{s, top, h0_bundle(m, s, top)};
  const long long hi = check.result.hi;
  cert.core_checks.push_back(check);
  cert.regions.push_back(region);
  if (hi != 0) {
    fail(cert, "h0 does not vanish at the top of the region", top, hi);
    return;
  }
  cert.propagations.push_back({s, top, {}, "k <= " + top.str()});
}

void certify_product(const MonadComplex& m, const Polarization& H, int s,
                     const CertifyOptions& opt, StabilityCertificate& cert) {
  MultiDegree floor{0, 0};
  for (int comp = 1; comp <= 2; ++comp) {
    std::string why;
    auto tail = find_tail(m, s, comp, opt, why);
    if (!tail) {
      RegionDescriptor region = twist_region(cert.chern, s, H);
      cert.regions.push_back(region);
      fail(cert, "no vanishing fiber for the tail in component " + std::to_string(comp) +
                     " (s = " + std::to_string(s) + "): " + why);
      return;
    }
    floor[static_cast<std::size_t>(comp - 1)] = tail->fiber_twist + 1;
    cert.tail_rules.push_back({*tail, comp, tail->fiber_twist});
  }
  RegionDescriptor region = twist_region(cert.chern, s, H, floor);
  cert.regions.push_back(region);
  std::vector<MultiDegree> zero_tops;
  for (const auto& top : region.maximal_points) {
    CoreCheck check{s, top, h0_bundle(m, s, top)};
    const long long hi = check.result.hi;
    cert.core_checks.push_back(check);
    if (hi != 0)
      fail(cert,
           check.result.exact() ? "h0 does not vanish at a maximal core twist"
                                : "h0 is only bounded by an interval at a maximal core twist",
           top, hi);
    else
      zero_tops.push_back(top);
  }
  for (const auto& top : zero_tops) {
    Propagation p{s, top, {}, "core twists below " + top.str()};
    for (const auto& L : region.core_points) {
      if (L == top || !L.leq(top)) continue;
      // Each twist is attributed to the first maximal point above it.
      bool earlier = false;
      for (const auto& other : zero_tops) {
        if (other == top) break;
        if (L.leq(other)) earlier = true;
      }
      if (!earlier) p.covered.push_back(L);
    }
    cert.propagations.push_back(std::move(p));
  }
}

}  // namespace

StabilityCertificate certify(const MonadComplex& m, const Polarization& H,
                             const CertifyOptions& options) {
  require_valid(m);
  const Ambient& amb = m.ambient();
  if (H.is_lattice() || !(H.ambient() == amb))
    throw InvalidArgument("polarization does not live on the monad's ambient");
  const bool plane = !amb.is_product() && amb.dims()[0] == 2;
  const bool quadric = amb.is_product() && amb.dims() == std::vector<int>{1, 1};
  if (!plane && !quadric) throw UnsupportedOperation("certify supports P^2 and P^1xP^1");

  StabilityCertificate cert;
  cert.bundle_id = m.name();
  cert.surface = amb.describe();
  cert.chern = chern_monad(m);
  cert.real = is_real(m);
  cert.polarization = H.str();
  cert.slope = slope(cert.chern, H);
  cert.options = options;
  cert.source["monad"] = monad_to_json(m);
  cert.source["polarization"] = H.ambient_class().components();

  const ValidationReport rep = validate(m);
  cert.notes.push_back("surjectivity of b: " + to_string(rep.surjectivity_b));
  if (m.map_a()) cert.notes.push_back("injectivity of a: " + to_string(rep.injectivity_a));
  cert.notes.push_back(cert.real ? "maps have rational coefficients: the bundle carries a real structure"
                                 : "maps have non-real coefficients");
  cert.notes.push_back("certifies mu-stability; mu-stable bundles are Gieseker stable and simple");
  cert.notes.push_back("expected moduli dimension on " + amb.describe() + " (chi(O) = 1): " +
                       std::to_string(expected_dim(cert.chern.rank, c1_squared(amb, cert.chern),
                                                   cert.chern.c2, 1)));

  cert.verdict = Verdict::Stable;
  for (int s = 1; s < cert.chern.rank; ++s) {
    if (plane)
      certify_plane(m, H, s, cert);
    else
      certify_product(m, H, s, options, cert);
  }
  return cert;
}

TransferredStatement pullback_transfer(const StabilityCertificate& cert, const CoverSpec& cover) {
  if (cert.verdict != Verdict::Stable)
    throw NotApplicable("certificate verdict is " + to_string(cert.verdict));
  if (!cover.is_double_cover()) throw NotApplicable("the cover is not a double cover");
  if (cert.surface != cover.base.describe())
    throw NotApplicable("certificate lives on " + cert.surface + ", cover base is " +
                        cover.base.describe());
  TransferredStatement t;
  const bool plane_rank2 = cert.surface == "P^2" && cert.chern.rank == 2;
  if (plane_rank2) {
    t.rule = "rank-2-double-plane";
    t.statement = "pi^*E is mu-stable for pi^*H: E is a stable rank-2 bundle on P^2 and pi is a "
                  "branched double cover";
  } else if (cover.pic_isomorphism && !cert.core_checks.empty()) {
    t.rule = "picard-isomorphism";
    t.statement = "pi^*E is mu-stable for pi^*H: pi^* is an isomorphism on Picard groups, so every "
                  "twist of the cover is pulled back and the vanishing checks transfer with "
                  "doubled degrees";
  } else {
    throw NotApplicable("pi^* is not known to be an isomorphism on Picard groups");
  }
  t.cover_chern = pullback_chern(cert.chern, cover);
  for (const auto& r : cert.regions) t.cover_degree_bounds.push_back(pullback_degree(r.degree_bound));
  return t;
}

}  // namespace hoppe
