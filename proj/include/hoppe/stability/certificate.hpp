#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "hoppe/cohom/cohom.hpp"
#include "hoppe/k3lat/effectivity.hpp"
#include "hoppe/stability/region.hpp"

namespace hoppe {

struct CertifyOptions {
  std::pair<long, long> fiber_point{0, 1};
  // The fiber search starts at surviving twist -1 - margin, so the core's
  // corner is at most (-margin, -margin).
  int margin = 0;
  // How many twists below the start the fiber search may go.
  int fiber_search_depth = 16;
};

struct CoreCheck {
  int s = 1;
  MultiDegree twist;
  CohomResult result;
};

struct Propagation {
  int s = 1;
  MultiDegree from;
  // Twists covered because they lie below `from` componentwise; on P^2
  // the whole half-line below `from` is covered.
  std::vector<MultiDegree> covered;
  std::string region;
};

struct TailRecord {
  TailCertificate cert;
  // Index (1 or 2) of the bounded component and its bound.
  int bounded_component = 1;
  int bound = -1;
};

// One stratum {D.H = degree} of a lattice-polarized region, treated by an
// effectivity rule.
struct StratumRecord {
  long long degree = 0;
  EffectivityRule rule = EffectivityRule::NonPositiveDegree;
  bool certified = false;
  std::vector<MultiDegree> exceptions;  // twists in the stratum not covered by the rule
  std::vector<CurveCandidate> candidates;
  std::size_t reachable_count = 0;
  std::string note;
};

enum class Verdict { Stable, Inconclusive };

struct StabilityCertificate {
  std::string bundle_id;
  std::string surface;
  ChernData chern;
  bool real = true;
  std::string polarization;
  mpq_class slope;
  std::vector<RegionDescriptor> regions;
  std::vector<CoreCheck> core_checks;
  std::vector<Propagation> propagations;
  std::vector<TailRecord> tail_rules;
  std::vector<StratumRecord> strata;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::optional<MultiDegree> failing_twist;
  std::optional<long long> failing_value;
  std::vector<std::string> notes;
  CertifyOptions options;
  // Input documents, embedded so the certificate can be replayed.
  nlohmann::ordered_json source;
};

std::string to_string(Verdict v);

nlohmann::ordered_json to_json(const StabilityCertificate& c);
StabilityCertificate certificate_from_json(const nlohmann::json& j);
std::string render_text(const StabilityCertificate& c);

nlohmann::ordered_json to_json(const CohomResult& r);
CohomResult cohom_result_from_json(const nlohmann::json& j);

// For a P^2 or P^1 x P^1 certificate: the rule that covers twist L for
// exterior power s, or nullopt when L is in the region but uncovered.
// Twists outside the region yield "outside region".
std::optional<std::string> justify(const StabilityCertificate& c, const Polarization& H, int s,
                                   const MultiDegree& L);

}  // namespace hoppe
