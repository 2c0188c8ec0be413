#include <sstream>

#include "hoppe/common/error.hpp"
#include "hoppe/stability/certificate.hpp"

namespace hoppe {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json md(const MultiDegree& d) { return d.components(); }

MultiDegree md_from(const json& j) { return MultiDegree(j.get<std::vector<int>>()); }

ordered_json md_list(const std::vector<MultiDegree>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& d : v) a.push_back(md(d));
  return a;
}

std::vector<MultiDegree> md_list_from(const json& j) {
  std::vector<MultiDegree> v;
  for (const auto& x : j) v.push_back(md_from(x));
  return v;
}

CohomMethod method_from(const std::string& s) {
  for (auto m : {CohomMethod::ClosedForm, CohomMethod::SectionKernel, CohomMethod::ExteriorKernel,
                 CohomMethod::HomologyBound, CohomMethod::HomologyCech, CohomMethod::FiberDescent})
    if (to_string(m) == s) return m;
  throw DocumentError("unknown method '" + s + "'");
}

EffectivityRule rule_from(const std::string& s) {
  for (auto r : {EffectivityRule::ZeroClass, EffectivityRule::NonPositiveDegree,
                 EffectivityRule::CurveDecomposition})
    if (to_string(r) == s) return r;
  throw DocumentError("unknown effectivity rule '" + s + "'");
}

ordered_json candidate_json(const CurveCandidate& c) {
  ordered_json j;
  j["coords"] = c.coords;
  j["degree"] = c.degree;
  j["square"] = c.square;
  return j;
}

}  // namespace

ordered_json to_json(const CohomResult& r) {
  ordered_json j;
  j["lo"] = r.lo;
  j["hi"] = r.hi;
  j["method"] = to_string(r.method);
  ordered_json ms = ordered_json::array();
  for (const auto& m : r.matrices) {
    ordered_json w;
    w["label"] = m.label;
    w["rows"] = m.rows;
    w["cols"] = m.cols;
    w["rank"] = m.rank;
    w["nullity"] = m.nullity;
    ms.push_back(w);
  }
  j["matrices"] = ms;
  j["notes"] = r.notes;
  return j;
}

CohomResult cohom_result_from_json(const json& j) {
  CohomResult r;
  r.lo = j.at("lo").get<long long>();
  r.hi = j.at("hi").get<long long>();
  r.method = method_from(j.at("method").get<std::string>());
  for (const auto& w : j.at("matrices"))
    r.matrices.push_back({w.at("label").get<std::string>(), w.at("rows").get<std::size_t>(),
                          w.at("cols").get<std::size_t>(), w.at("rank").get<std::size_t>(),
                          w.at("nullity").get<std::size_t>()});
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

ordered_json to_json(const StabilityCertificate& c) {
  ordered_json j;
  j["kind"] = "stability";
  ordered_json b;
  b["id"] = c.bundle_id;
  b["surface"] = c.surface;
  b["rank"] = c.chern.rank;
  b["c1"] = md(c.chern.c1);
  b["c2"] = c.chern.c2;
  b["real"] = c.real;
  j["bundle"] = b;
  j["polarization"] = c.polarization;
  j["slope"] = c.slope.get_str();
  ordered_json opt;
  opt["fiber_point"] = {c.options.fiber_point.first, c.options.fiber_point.second};
  opt["margin"] = c.options.margin;
  opt["fiber_search_depth"] = c.options.fiber_search_depth;
  j["options"] = opt;

  ordered_json regions = ordered_json::array();
  for (const auto& r : c.regions) {
    ordered_json x;
    x["s"] = r.s;
    x["bound"] = r.bound.get_str();
    x["degree_bound"] = r.degree_bound;
    x["shape"] = to_string(r.shape);
    if (r.shape == RegionShape::Band) x["core_floor"] = md(r.core_floor);
    if (r.shape == RegionShape::HalfLine) x["max_twist"] = r.max_twist;
    x["core_points"] = md_list(r.core_points);
    x["maximal_points"] = md_list(r.maximal_points);
    regions.push_back(x);
  }
  j["regions"] = regions;

  ordered_json checks = ordered_json::array();
  for (const auto& k : c.core_checks) {
    ordered_json x;
    x["s"] = k.s;
    x["twist"] = md(k.twist);
    x["h0"] = to_json(k.result);
    checks.push_back(x);
  }
  j["core_checks"] = checks;

  ordered_json props = ordered_json::array();
  for (const auto& p : c.propagations) {
    ordered_json x;
    x["s"] = p.s;
    x["from"] = md(p.from);
    x["covered"] = md_list(p.covered);
    x["region"] = p.region;
    props.push_back(x);
  }
  j["monotone_propagations"] = props;

  ordered_json tails = ordered_json::array();
  for (const auto& t : c.tail_rules) {
    ordered_json x;
    x["s"] = t.cert.s;
    x["bounded_component"] = t.bounded_component;
    x["bound"] = t.bound;
    x["restricted_axis"] = t.cert.restricted_axis;
    x["point"] = {t.cert.point.first, t.cert.point.second};
    x["fiber_twist"] = t.cert.fiber_twist;
    x["fiber_h0"] = to_json(t.cert.fiber);
    x["terminal_component"] = t.cert.terminal_component;
    x["result"] = to_json(t.cert.result);
    tails.push_back(x);
  }
  j["tail_rules"] = tails;

  if (!c.strata.empty()) {
    ordered_json strata = ordered_json::array();
    for (const auto& s : c.strata) {
      ordered_json x;
      x["degree"] = s.degree;
      x["rule"] = to_string(s.rule);
      x["certified"] = s.certified;
      x["exceptions"] = md_list(s.exceptions);
      ordered_json cands = ordered_json::array();
      for (const auto& cc : s.candidates) cands.push_back(candidate_json(cc));
      x["candidates"] = cands;
      x["reachable_count"] = s.reachable_count;
      x["note"] = s.note;
      strata.push_back(x);
    }
    j["strata"] = strata;
  }

  j["verdict"] = to_string(c.verdict);
  j["reason"] = c.reason;
  j["failing_twist"] = c.failing_twist ? md(*c.failing_twist) : ordered_json(nullptr);
  j["failing_value"] = c.failing_value ? ordered_json(*c.failing_value) : ordered_json(nullptr);
  j["notes"] = c.notes;
  j["source"] = c.source;
  return j;
}

StabilityCertificate certificate_from_json(const json& j) {
  try {
    if (j.at("kind").get<std::string>() != "stability")
      throw DocumentError("not a stability certificate");
    StabilityCertificate c;
    const auto& b = j.at("bundle");
    c.bundle_id = b.at("id").get<std::string>();
    c.surface = b.at("surface").get<std::string>();
    c.chern = {b.at("rank").get<long long>(), md_from(b.at("c1")), b.at("c2").get<long long>()};
    c.real = b.at("real").get<bool>();
    c.polarization = j.at("polarization").get<std::string>();
    c.slope = mpq_class(j.at("slope").get<std::string>());
    const auto& opt = j.at("options");
    const auto fp = opt.at("fiber_point").get<std::vector<long>>();
    c.options.fiber_point = {fp.at(0), fp.at(1)};
    c.options.margin = opt.at("margin").get<int>();
    c.options.fiber_search_depth = opt.at("fiber_search_depth").get<int>();
    for (const auto& x : j.at("regions")) {
      RegionDescriptor r;
      r.s = x.at("s").get<int>();
      r.bound = mpq_class(x.at("bound").get<std::string>());
      r.degree_bound = x.at("degree_bound").get<long long>();
      const std::string shape = x.at("shape").get<std::string>();
      if (shape == "band") {
        r.shape = RegionShape::Band;
        r.core_floor = md_from(x.at("core_floor"));
      } else if (shape == "half-line") {
        r.shape = RegionShape::HalfLine;
        r.max_twist = x.at("max_twist").get<long long>();
      } else if (shape == "lattice-strata") {
        r.shape = RegionShape::LatticeStrata;
      } else {
        throw DocumentError("unknown region shape '" + shape + "'");
      }
      r.core_points = md_list_from(x.at("core_points"));
      r.maximal_points = md_list_from(x.at("maximal_points"));
      c.regions.push_back(std::move(r));
    }
    for (const auto& x : j.at("core_checks"))
      c.core_checks.push_back(
          {x.at("s").get<int>(), md_from(x.at("twist")), cohom_result_from_json(x.at("h0"))});
    for (const auto& x : j.at("monotone_propagations"))
      c.propagations.push_back({x.at("s").get<int>(), md_from(x.at("from")),
                                md_list_from(x.at("covered")), x.at("region").get<std::string>()});
    for (const auto& x : j.at("tail_rules")) {
      TailRecord t;
      t.cert.s = x.at("s").get<int>();
      t.bounded_component = x.at("bounded_component").get<int>();
      t.bound = x.at("bound").get<int>();
      t.cert.restricted_axis = x.at("restricted_axis").get<int>();
      t.cert.surviving_axis = 3 - t.cert.restricted_axis;
      const auto p = x.at("point").get<std::vector<long>>();
      t.cert.point = {p.at(0), p.at(1)};
      t.cert.fiber_twist = x.at("fiber_twist").get<int>();
      t.cert.fiber = cohom_result_from_json(x.at("fiber_h0"));
      t.cert.terminal_component = x.at("terminal_component").get<int>();
      t.cert.result = cohom_result_from_json(x.at("result"));
      c.tail_rules.push_back(std::move(t));
    }
    if (j.contains("strata"))
      for (const auto& x : j.at("strata")) {
        StratumRecord s;
        s.degree = x.at("degree").get<long long>();
        s.rule = rule_from(x.at("rule").get<std::string>());
        s.certified = x.at("certified").get<bool>();
        s.exceptions = md_list_from(x.at("exceptions"));
        for (const auto& cc : x.at("candidates"))
          s.candidates.push_back({cc.at("coords").get<std::vector<long long>>(),
                                  cc.at("degree").get<long long>(),
                                  cc.at("square").get<long long>()});
        s.reachable_count = x.at("reachable_count").get<std::size_t>();
        s.note = x.at("note").get<std::string>();
        c.strata.push_back(std::move(s));
      }
    c.verdict = j.at("verdict").get<std::string>() == "Stable" ? Verdict::Stable
                                                               : Verdict::Inconclusive;
    c.reason = j.at("reason").get<std::string>();
    if (!j.at("failing_twist").is_null()) c.failing_twist = md_from(j.at("failing_twist"));
    if (!j.at("failing_value").is_null()) c.failing_value = j.at("failing_value").get<long long>();
    c.notes = j.at("notes").get<std::vector<std::string>>();
    c.source = j.at("source");
    return c;
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed certificate: ") + e.what());
  }
}

std::string render_text(const StabilityCertificate& c) {
  std::ostringstream o;
  o << "bundle: " << c.bundle_id << " on " << c.surface << "\n";
  o << "chern: " << c.chern.str() << "\n";
  o << "polarization: " << c.polarization << "\n";
  o << "slope: " << c.slope.get_str() << "\n";
  for (const auto& r : c.regions) {
    o << "region s=" << r.s << ": deg_H(L) <= " << r.degree_bound << " (-s*mu = "
      << r.bound.get_str() << ")";
    if (r.shape == RegionShape::Band)
      o << ", core floor " << r.core_floor.str() << ", " << r.core_points.size()
        << " core twists, " << r.maximal_points.size() << " maximal";
    else if (r.shape == RegionShape::HalfLine)
      o << ", k <= " << r.max_twist;
    else
      o << ", stratified by D.H";
    o << "\n";
  }
  for (const auto& k : c.core_checks)
    o << "check s=" << k.s << " L=" << k.twist.str() << ": h0 = " << k.result.str() << " ("
      << to_string(k.result.method) << ")\n";
  for (const auto& p : c.propagations)
    o << "propagate s=" << p.s << " from " << p.from.str() << ": " << p.region << " ("
      << p.covered.size() << " twists)\n";
  for (const auto& t : c.tail_rules)
    o << "tail s=" << t.cert.s << ": component " << t.bounded_component << " <= " << t.bound
      << " via fiber at [" << t.cert.point.first << ":" << t.cert.point.second
      << "] of factor " << t.cert.restricted_axis << ", fiber h0 = " << t.cert.fiber.str()
      << ", terminal component " << t.cert.terminal_component << "\n";
  for (const auto& s : c.strata)
    o << "stratum D.H=" << s.degree << ": " << to_string(s.rule)
      << (s.certified ? " certified" : " NOT certified") << " (" << s.note << ")\n";
  o << "verdict: " << to_string(c.verdict);
  if (c.verdict != Verdict::Stable) {
    o << " (" << c.reason;
    if (c.failing_twist) o << "; twist " << c.failing_twist->str();
    if (c.failing_value) o << ", h0 = " << *c.failing_value;
    o << ")";
  }
  o << "\n";
  return o.str();
}

std::optional<std::string> justify(const StabilityCertificate& c, const Polarization& H, int s,
                                   const MultiDegree& L) {
  const RegionDescriptor* region = nullptr;
  for (const auto& r : c.regions)
    if (r.s == s) region = &r;
  if (!region) return std::nullopt;
  if (!region->contains(H, L)) return "outside region";
  if (region->shape == RegionShape::LatticeStrata) return std::nullopt;
  if (region->shape == RegionShape::HalfLine) {
    for (const auto& p : c.propagations)
      if (p.s == s && L.leq(p.from)) return "below checked twist " + p.from.str();
    return std::nullopt;
  }
  for (const auto& t : c.tail_rules)
    if (t.cert.s == s && L[static_cast<std::size_t>(t.bounded_component - 1)] <= t.bound)
      return "tail on component " + std::to_string(t.bounded_component);
  for (const auto& k : c.core_checks)
    if (k.s == s && k.twist == L && k.result.hi == 0) return "core check";
  for (const auto& p : c.propagations)
    if (p.s == s)
      for (const auto& x : p.covered)
        if (x == L) return "propagated from " + p.from.str();
  return std::nullopt;
}

}  // namespace hoppe
