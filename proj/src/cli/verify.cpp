#include <sstream>

#include "hoppe/cli/cli.hpp"
#include "hoppe/common/error.hpp"
#include "hoppe/k3lat/quartic.hpp"
#include "hoppe/monad/document.hpp"
#include "hoppe/polycore/parser.hpp"
#include "hoppe/stability/certify.hpp"
#include "hoppe/zeta/charpoly.hpp"
#include "hoppe/zeta/point_count.hpp"

namespace hoppe::cli {

using nlohmann::json;

namespace {

json plain(const nlohmann::ordered_json& j) { return json::parse(j.dump()); }

bool same_result(const CohomResult& a, const CohomResult& b) {
  if (a.lo != b.lo || a.hi != b.hi || a.method != b.method) return false;
  if (a.matrices.size() != b.matrices.size()) return false;
  for (std::size_t i = 0; i < a.matrices.size(); ++i) {
    const auto &x = a.matrices[i], &y = b.matrices[i];
    if (x.label != y.label || x.rows != y.rows || x.cols != y.cols || x.rank != y.rank ||
        x.nullity != y.nullity)
      return false;
  }
  return true;
}

class Checker {
 public:
  explicit Checker(VerifyReport& r) : r_(r) {}
  void operator()(bool ok, const std::string& what) {
    ++r_.checked;
    if (!ok) r_.ok = false;
    r_.lines.push_back(std::string(ok ? "ok       " : "MISMATCH ") + what);
  }

 private:
  VerifyReport& r_;
};

std::string twist_str(const MultiDegree& d) { return d.str(); }

void verify_ambient_certificate(const StabilityCertificate& cert, Checker& check) {
  const MonadComplex m = monad_from_json(cert.source.at("monad"));
  const auto comps = cert.source.at("polarization").get<std::vector<int>>();
  const Polarization H = Polarization::on_ambient(m.ambient(), MultiDegree(comps));

  check(chern_monad(m) == cert.chern, "chern " + cert.chern.str());
  for (const auto& c : cert.core_checks) {
    const CohomResult r = h0_bundle(m, c.s, c.twist);
    check(same_result(r, c.result),
          "core s=" + std::to_string(c.s) + " L=" + twist_str(c.twist) + ": h0 " + r.str());
  }
  for (const auto& t : cert.tail_rules) {
    const TailCertificate re = tail_vanish(m, t.cert.s, t.cert.restricted_axis, t.cert.point,
                                           t.cert.fiber_twist);
    check(same_result(re.fiber, t.cert.fiber) && same_result(re.result, t.cert.result) &&
              re.terminal_component == t.cert.terminal_component,
          "tail s=" + std::to_string(t.cert.s) + " axis " + std::to_string(t.cert.restricted_axis) +
              " fiber twist " + std::to_string(t.cert.fiber_twist));
  }
  for (const auto& reg : cert.regions) {
    std::optional<MultiDegree> floor;
    if (reg.shape == RegionShape::Band) floor = reg.core_floor;
    const RegionDescriptor re = twist_region(cert.chern, reg.s, H, floor);
    check(re.core_points == reg.core_points && re.degree_bound == reg.degree_bound,
          "region s=" + std::to_string(reg.s) + " (" + to_string(reg.shape) + ")");
  }
  const StabilityCertificate again = certify(m, H, cert.options);
  check(plain(to_json(again)) == plain(to_json(cert)),
        "replay of the whole certificate: " + to_string(again.verdict));
}

void verify_quartic_certificate(const StabilityCertificate& cert, Checker& check) {
  const MonadComplex m = monad_from_json(cert.source.at("monad"));
  const QuarticSurface X(parse_poly(cert.source.at("quartic").get<std::string>(), m.ambient()));
  const auto& lj = cert.source.at("lattice");
  const LatticeRef lat = lattice_from_json(json::parse(lj.dump()));

  for (const auto& c : cert.core_checks) {
    const CohomResult r = quartic_h0(X, m, c.twist[0], c.twist[1]);
    check(same_result(r, c.result), "core L=" + twist_str(c.twist) + ": h0 " + r.str());
  }
  const StabilityCertificate again = quartic_region_run(X, m, lat);
  check(again.strata.size() == cert.strata.size(), "stratum count");
  for (std::size_t i = 0; i < cert.strata.size() && i < again.strata.size(); ++i) {
    const auto &a = cert.strata[i], &b = again.strata[i];
    check(a.degree == b.degree && a.rule == b.rule && a.certified == b.certified &&
              a.exceptions == b.exceptions && a.reachable_count == b.reachable_count,
          "stratum D.H = " + std::to_string(a.degree) + " (" + to_string(a.rule) + ")");
  }
  check(plain(to_json(again)) == plain(to_json(cert)),
        "replay of the whole certificate: " + to_string(again.verdict));
}

void verify_zeta(const json& doc, bool recount, unsigned threads, Checker& check) {
  const unsigned p = doc.at("p").get<unsigned>();
  const int k_alg = doc.at("k_alg").get<int>();
  std::vector<std::uint64_t> counts;
  for (const auto& row : doc.at("counts")) counts.push_back(row.at("N").get<std::uint64_t>());
  if (recount) {
    if (!doc.contains("source") || !doc.at("source").contains("surface"))
      throw DocumentError("--recount needs the surface embedded under 'source'");
    const SurfaceDoc s = surface_from_json(doc.at("source").at("surface"));
    const auto rows = count_series(s.equation, p, static_cast<unsigned>(counts.size()), threads);
    for (std::size_t i = 0; i < rows.size(); ++i)
      check(rows[i].points == counts[i],
            "N_" + std::to_string(i + 1) + " = " + std::to_string(rows[i].points));
  }
  const ZetaProfile prof = assemble_charpoly(counts, p, k_alg);
  auto again = to_json(prof);
  if (doc.contains("source")) again["source"] = doc.at("source");
  check(plain(again) == doc, "reassembled zeta profile");
}

}  // namespace

VerifyReport verify_document(const json& doc, bool recount, unsigned threads) {
  VerifyReport report;
  Checker check(report);
  const std::string kind = doc.value("kind", std::string());
  if (kind == "zeta-profile") {
    verify_zeta(doc, recount, threads, check);
    return report;
  }
  const StabilityCertificate cert = certificate_from_json(doc);
  check(plain(to_json(cert)) == doc, "document round-trip");
  if (cert.source.contains("quartic"))
    verify_quartic_certificate(cert, check);
  else
    verify_ambient_certificate(cert, check);
  return report;
}

}  // namespace hoppe::cli
