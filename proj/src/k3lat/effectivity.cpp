#include "hoppe/k3lat/effectivity.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hoppe/common/error.hpp"

namespace hoppe {

std::string to_string(EffectivityRule r) {
  switch (r) {
    case EffectivityRule::ZeroClass: return "zero-class";
    case EffectivityRule::NonPositiveDegree: return "non-positive-degree";
    case EffectivityRule::CurveDecomposition: return "curve-decomposition";
  }
  return "zero-class";
}

namespace {

constexpr std::size_t kMaxReachable = 2'000'000;

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long long x1, y1;
  const long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<CurveCandidate> curve_candidates(const LatticeClass& H, long long degree) {
  const GramLattice& lat = *H.lattice();
  if (lat.rank() != 2) throw InvalidArgument("curve enumeration needs a rank-2 lattice");
  if (self_int(H) <= 0) throw InvalidArgument("polarization must have positive square");
  const auto& g = lat.gram();
  const long long alpha = g[0][0] * H.coords()[0] + g[0][1] * H.coords()[1];
  const long long beta = g[1][0] * H.coords()[0] + g[1][1] * H.coords()[1];
  long long x, y;
  const long long d = ext_gcd(alpha, beta, x, y);
  std::vector<CurveCandidate> out;
  if (d == 0 || degree % d != 0) return out;

  const std::vector<long long> k0 = {x * (degree / d), y * (degree / d)};
  const std::vector<long long> w = {beta / d, -alpha / d};
  const LatticeClass K0(H.lattice(), k0), W(H.lattice(), w);
  const long long ww = self_int(W), kw = pair(K0, W), kk = self_int(K0);
  if (ww >= 0) throw InvalidArgument("orthogonal complement of H is not negative definite");
  auto square_at = [&](long long t) { return kk + 2 * t * kw + t * t * ww; };
  auto push = [&](long long t) {
    out.push_back({{k0[0] + t * w[0], k0[1] + t * w[1]}, degree, square_at(t)});
  };
  // Q(t) is concave with vertex at -kw/ww; scan outwards from it.
  const long long vertex = floor_div(-kw, ww);
  for (long long t = vertex; square_at(t) >= -2; --t) push(t);
  for (long long t = vertex + 1; square_at(t) >= -2; ++t) push(t);
  std::sort(out.begin(), out.end(),
            [](const CurveCandidate& a, const CurveCandidate& b) { return a.coords < b.coords; });
  return out;
}

std::set<std::vector<long long>> reachable_sums(const LatticeClass& H, long long degree) {
  if (degree <= 0) return {};
  std::vector<std::vector<CurveCandidate>> cand(static_cast<std::size_t>(degree) + 1);
  for (long long e = 1; e <= degree; ++e) cand[static_cast<std::size_t>(e)] = curve_candidates(H, e);
  std::vector<std::set<std::vector<long long>>> reach(static_cast<std::size_t>(degree) + 1);
  reach[0].insert({0, 0});
  for (long long k = 1; k <= degree; ++k) {
    auto& cur = reach[static_cast<std::size_t>(k)];
    for (long long e = 1; e <= k; ++e)
      for (const auto& base : reach[static_cast<std::size_t>(k - e)])
        for (const auto& c : cand[static_cast<std::size_t>(e)]) {
          cur.insert({base[0] + c.coords[0], base[1] + c.coords[1]});
          if (cur.size() > kMaxReachable) throw TooLarge("decomposition search exceeds its budget");
        }
  }
  return reach[static_cast<std::size_t>(degree)];
}

EffectivityResult not_effective_cert(const LatticeClass& D, const LatticeClass& H) {
  EffectivityResult r;
  r.degree = pair(D, H);
  if (D.is_zero()) {
    r.rule = EffectivityRule::ZeroClass;
    r.note = "D = 0 is the class of the empty divisor, which has a section; not a curve class";
    return r;
  }
  if (r.degree <= 0) {
    r.rule = EffectivityRule::NonPositiveDegree;
    r.certified = true;
    r.note = "D.H = " + std::to_string(r.degree) + " <= 0 and D != 0";
    return r;
  }
  r.rule = EffectivityRule::CurveDecomposition;
  try {
    for (long long e = 1; e <= r.degree; ++e) {
      auto c = curve_candidates(H, e);
      r.candidates.insert(r.candidates.end(), c.begin(), c.end());
    }
    const auto reach = reachable_sums(H, r.degree);
    r.reachable_count = reach.size();
    r.certified = !reach.count(D.coords());
    r.note = r.certified ? "no multiset of curve candidates of total degree " +
                               std::to_string(r.degree) + " sums to D"
                         : "D is a sum of curve candidates; effectivity not excluded";
  } catch (const Error& e) {
    r.certified = false;
    r.note = e.what();
  }
  return r;
}

}  // namespace hoppe
