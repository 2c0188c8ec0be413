#include <algorithm>
#include <climits>

#include "hoppe/cohom/cohom.hpp"
#include "hoppe/common/error.hpp"

namespace hoppe {

TailCertificate tail_vanish(const MonadComplex& m, int s, int restricted_axis,
                            std::pair<long, long> point, int fiber_twist) {
  const Ambient& amb = m.ambient();
  if (!amb.is_product() || amb.dims() != std::vector<int>{1, 1})
    throw InvalidArgument("tail rule needs P^1xP^1, got " + amb.describe());
  if (restricted_axis != 1 && restricted_axis != 2) throw InvalidArgument("axis must be 1 or 2");

  TailCertificate cert;
  cert.s = s;
  cert.restricted_axis = restricted_axis;
  cert.point = point;
  cert.surviving_axis = 3 - restricted_axis;
  cert.fiber_twist = fiber_twist;

  const MonadComplex fiber = restrict_to_fiber(m, restricted_axis, point);
  cert.fiber = h0_bundle(fiber, s, MultiDegree{fiber_twist});
  if (cert.fiber.hi != 0)
    throw FiberNotVanishing("h0 on the fiber at [" + std::to_string(point.first) + ":" +
                            std::to_string(point.second) + "] twisted by " +
                            std::to_string(fiber_twist) + " is " + cert.fiber.str());

  const std::size_t fx = static_cast<std::size_t>(restricted_axis - 1);
  const std::size_t sv = 1 - fx;

  // Lambda^s F sits inside Lambda^s B (kernel case) or between H^0(K) and
  // H^1(A) (homology case); the descent stops once those vanish.
  int worst = INT_MIN;
  for (const auto& I : subsets(m.B().rank(), static_cast<std::size_t>(s))) {
    int w = 0;
    for (auto i : I) w += m.B().twists[i][fx];
    worst = std::max(worst, w);
  }
  if (m.kind() == MonadKind::Homology) {
    for (const auto& t : m.A().twists) {
      if (t[sv] + fiber_twist >= 0)
        throw NoTerminalBound("h1 of the source does not vanish along the tail: twist " +
                              t.str() + " with surviving component " +
                              std::to_string(fiber_twist));
      worst = std::max(worst, t[fx]);
    }
  }
  cert.terminal_component = -1 - worst;

  cert.result.lo = cert.result.hi = 0;
  cert.result.method = CohomMethod::FiberDescent;
  cert.result.matrices = cert.fiber.matrices;
  const std::string fxs = std::to_string(fx + 1), svs = std::to_string(sv + 1);
  cert.result.notes.push_back("fiber h0 = 0 at surviving twist " + std::to_string(fiber_twist) +
                              ", hence at every lower twist");
  cert.result.notes.push_back("for component " + svs + " <= " + std::to_string(fiber_twist) +
                              ", h0 is unchanged when component " + fxs + " decreases by 1");
  cert.result.notes.push_back("h0 vanishes outright once component " + fxs +
                              " <= " + std::to_string(cert.terminal_component));
  return cert;
}

}  // namespace hoppe
