#include "hoppe/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "hoppe/common/error.hpp"
#include "hoppe/k3lat/cover.hpp"
#include "hoppe/k3lat/effectivity.hpp"
#include "hoppe/k3lat/quartic.hpp"
#include "hoppe/monad/document.hpp"
#include "hoppe/stability/certify.hpp"
#include "hoppe/zeta/charpoly.hpp"
#include "hoppe/zeta/point_count.hpp"

namespace hoppe::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUndecided = 2;

struct Output {
  std::string format = "text";
  std::string path;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", path, "Write the result to this file instead of stdout");
  }
  bool json() const { return format == "json"; }

  void emit(const std::string& text, std::ostream& out) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DocumentError("cannot write '" + path + "'");
    f << text;
  }
  void emit(const ordered_json& j, std::ostream& out) const { emit(j.dump(2) + "\n", out); }
};

MultiDegree parse_twist(const std::string& text) {
  const auto v = parse_int_list(text);
  std::vector<int> c;
  for (auto x : v) {
    if (x < -1000000 || x > 1000000) throw InvalidArgument("twist component out of range");
    c.push_back(static_cast<int>(x));
  }
  return MultiDegree(c);
}

LatticeClass parse_class(const LatticeRef& lat, const std::string& text) {
  return LatticeClass(lat, parse_int_list(text));
}

std::string join_ints(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

ordered_json int_matrix_json(const IntMatrix& m) {
  ordered_json a = ordered_json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

std::string coeff_str(const IntPoly& P) {
  std::string s = "[";
  for (int i = 0; i <= P.degree(); ++i)
    s += (i ? ", " : "") + P.coeff(static_cast<std::size_t>(i)).get_str();
  return s + "]";
}

std::string factor_str(const std::vector<CyclotomicFactor>& f) {
  if (f.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += (i ? " " : "") + std::string("Phi_") + std::to_string(f[i].k);
    if (f[i].multiplicity > 1) s += "^" + std::to_string(f[i].multiplicity);
  }
  return s;
}

std::string profile_text(const ZetaProfile& prof) {
  std::ostringstream s;
  s << "p = " << prof.p << ", k_alg = " << prof.k_alg << ", counts N_1..N_" << prof.counts.size()
    << "\n";
  for (const auto& c : prof.candidates) {
    s << "candidate sign " << (c.sign > 0 ? "+1" : "-1") << ": "
      << (c.eliminated ? "eliminated" : "survives") << " (" << c.reason << ")\n";
    s << "  coefficients " << coeff_str(c.poly) << "\n";
    if (!c.eliminated && !c.free_middle)
      s << "  cyclotomic part " << factor_str(c.factors) << ", contribution " << c.contribution
        << "\n";
    for (const auto& sp : c.specials)
      s << "  middle " << sp.middle.get_str() << ": " << factor_str(sp.factors) << ", "
        << (sp.admissible ? "admissible" : "inadmissible") << " (" << sp.reason << ")\n";
    if (c.free_middle) s << "  contribution " << c.contribution << "\n";
  }
  try {
    s << "rank_upper_bound " << rank_upper_bound(prof) << "\n";
  } catch (const NoCandidate&) {
    s << "rank_upper_bound unknown: every candidate was eliminated\n";
  }
  return s.str();
}

std::vector<std::uint64_t> counts_from_rows(const std::vector<CountRow>& rows) {
  std::vector<std::uint64_t> c;
  for (const auto& r : rows) c.push_back(r.points);
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability certificates for monad bundles, K3 lattice tools and point counts",
               "hoppe"};
  app.require_subcommand(1);
  std::function<int()> action;

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "Run the Hoppe criterion on P^2 or P^1xP^1");
  std::string monad_path, polarization, fiber_point = "0:1";
  int margin = 0;
  Output certify_out;
  certify_cmd->add_option("--monad", monad_path, "Monad document")->required();
  certify_cmd->add_option("--polarization", polarization, "Ample class, e.g. 1 or 1,1")->required();
  certify_cmd->add_option("--fiber-point", fiber_point, "Point a:b of P^1 for the fiber rule")
      ->capture_default_str();
  certify_cmd->add_option("--margin", margin, "Extra twists below the core corner")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  certify_out.add_flags(certify_cmd);
  certify_cmd->callback([&] {
    action = [&]() -> int {
      const MonadComplex m = load_monad(monad_path);
      CertifyOptions opts;
      opts.fiber_point = parse_fiber_point(fiber_point);
      opts.margin = margin;
      const auto cert = certify(m, parse_polarization(m.ambient(), polarization), opts);
      if (certify_out.json())
        certify_out.emit(to_json(cert), out);
      else
        certify_out.emit(render_text(cert), out);
      return cert.verdict == Verdict::Stable ? kOk : kUndecided;
    };
  });

  // h0
  auto* h0_cmd = app.add_subcommand("h0", "h^0 of an exterior power of the bundle, twisted");
  std::string h0_monad, twist, h0_surface;
  int exterior = 1;
  Output h0_out;
  h0_cmd->add_option("--monad", h0_monad, "Monad document")->required();
  h0_cmd->add_option("--twist", twist, "Twist a or a,b")->required();
  h0_cmd->add_option("--exterior", exterior, "Exterior power s")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  h0_cmd->add_option("--surface", h0_surface,
                     "Quartic surface document; the twist is then k or k,l in the basis (H, C)");
  h0_out.add_flags(h0_cmd);
  h0_cmd->callback([&] {
    action = [&]() -> int {
      const MonadComplex m = load_monad(h0_monad);
      const MultiDegree L = parse_twist(twist);
      CohomResult r;
      if (!h0_surface.empty()) {
        if (exterior != 1) throw UnsupportedOperation("on a quartic only --exterior 1 is supported");
        if (L.arity() < 1 || L.arity() > 2) throw InvalidArgument("quartic twist is k or k,l");
        const QuarticSurface X(load_surface(h0_surface).equation);
        r = quartic_h0(X, m, L[0], L.arity() == 2 ? L[1] : 0);
      } else {
        r = h0_bundle(m, exterior, L);
      }
      if (h0_out.json()) {
        ordered_json j;
        j["kind"] = "h0";
        j["monad"] = m.name();
        j["exterior"] = exterior;
        j["twist"] = L.components();
        j["result"] = to_json(r);
        h0_out.emit(j, out);
      } else {
        h0_out.emit((r.exact() ? std::to_string(r.lo)
                               : "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]") +
                        "\n",
                    out);
      }
      return r.exact() ? kOk : kUndecided;
    };
  });

  // chern
  auto* chern_cmd = app.add_subcommand("chern", "Chern data of the bundle of a monad");
  std::string chern_monad_path, cover_name;
  bool use_dual = false;
  Output chern_out;
  chern_cmd->add_option("--monad", chern_monad_path, "Monad document")->required();
  chern_cmd->add_flag("--dual", use_dual, "Report the dual bundle");
  chern_cmd->add_option("--cover", cover_name, "Pull back to a double cover")
      ->check(CLI::IsMember({"double-plane", "double-quadric"}));
  chern_out.add_flags(chern_cmd);
  chern_cmd->callback([&] {
    action = [&]() -> int {
      const MonadComplex m = load_monad(chern_monad_path);
      ChernData c = chern_monad(m);
      if (use_dual) c = dual(c);
      ordered_json j;
      j["kind"] = "chern";
      j["monad"] = m.name();
      j["dual"] = use_dual;
      j["rank"] = c.rank;
      j["c1"] = c.c1.components();
      j["c2"] = c.c2;
      j["c1_squared"] = c1_squared(m.ambient(), c);
      std::string text = c.str() + "\n";
      if (m.ambient().is_surface()) {
        const long long ed = expected_dim(c.rank, c1_squared(m.ambient(), c), c.c2, 1);
        j["expected_dim"] = ed;
        text += "expected dimension on " + m.ambient().describe() + " " + std::to_string(ed) + "\n";
      }
      if (!cover_name.empty()) {
        const CoverSpec cover =
            cover_name == "double-plane" ? CoverSpec::double_plane() : CoverSpec::double_quadric();
        const CoverChern pc = pullback_chern(c, cover);
        const long long ed = expected_dim(pc.rank, pc.c1_squared, pc.c2);
        j["cover"] = {{"family", to_string(cover.family)},
                      {"c1_base", pc.c1_base.components()},
                      {"c1_squared", pc.c1_squared},
                      {"c2", pc.c2},
                      {"expected_dim", ed}};
        text += "on the cover: " + pc.str() + "\nexpected dimension " + std::to_string(ed) + "\n";
      }
      if (chern_out.json())
        chern_out.emit(j, out);
      else
        chern_out.emit(text, out);
      return kOk;
    };
  });

  // lattice
  auto* lattice_cmd = app.add_subcommand("lattice", "Intersection-lattice computations");
  lattice_cmd->require_subcommand(1);
  std::string lattice_spec = "K3", lat_pol;
  std::vector<std::string> classes;
  Output lat_out;
  auto lattice_sub = [&](const std::string& name, const std::string& help, bool needs_pol) {
    auto* c = lattice_cmd->add_subcommand(name, help);
    c->add_option("--lattice", lattice_spec, "Catalogue name or lattice document")
        ->capture_default_str();
    c->add_option("--class", classes, "Class coordinates a,b,...; repeatable");
    if (needs_pol) c->add_option("--polarization", lat_pol, "Ample class coordinates")->required();
    lat_out.add_flags(c);
    return c;
  };
  auto need_classes = [&](std::size_t n, const std::string& what) {
    if (classes.size() != n)
      throw InvalidArgument(what + " takes exactly " + std::to_string(n) + " --class option(s)");
  };

  lattice_sub("pair", "Intersection number of two classes", false)->callback([&] {
    action = [&]() -> int {
      need_classes(2, "pair");
      const auto lat = resolve_lattice(lattice_spec);
      const long long v = pair(parse_class(lat, classes[0]), parse_class(lat, classes[1]));
      if (lat_out.json())
        lat_out.emit(ordered_json{{"kind", "pair"}, {"lattice", lat->name()}, {"value", v}}, out);
      else
        lat_out.emit(std::to_string(v) + "\n", out);
      return kOk;
    };
  });
  lattice_sub("gram", "Gram matrix and determinant of a list of classes", false)->callback([&] {
    action = [&]() -> int {
      if (classes.empty()) throw InvalidArgument("gram needs at least one --class");
      const auto lat = resolve_lattice(lattice_spec);
      std::vector<LatticeClass> cls;
      for (const auto& c : classes) cls.push_back(parse_class(lat, c));
      const GramResult g = gram_of(cls);
      std::vector<long long> relation;
      if (g.det == 0) relation = kernel_relation(g.gram);
      if (lat_out.json()) {
        ordered_json j{{"kind", "gram"}, {"lattice", lat->name()}};
        j["gram"] = int_matrix_json(g.gram);
        j["det"] = g.det.get_str();
        j["relation"] = relation.empty() ? ordered_json(nullptr) : ordered_json(relation);
        lat_out.emit(j, out);
      } else {
        std::string text;
        for (const auto& row : g.gram) text += "[" + join_ints(row) + "]\n";
        text += "det " + g.det.get_str() + "\n";
        if (!relation.empty()) text += "relation " + join_ints(relation) + "\n";
        lat_out.emit(text, out);
      }
      return kOk;
    };
  });
  lattice_sub("genus", "Arithmetic genus D^2/2 + 1 of a class", false)->callback([&] {
    action = [&]() -> int {
      need_classes(1, "genus");
      const auto lat = resolve_lattice(lattice_spec);
      const LatticeClass d = parse_class(lat, classes[0]);
      const long long g = genus(d);
      if (lat_out.json())
        lat_out.emit(ordered_json{{"kind", "genus"}, {"lattice", lat->name()}, {"square", self_int(d)},
                                  {"genus", g}},
                     out);
      else
        lat_out.emit(std::to_string(g) + "\n", out);
      return kOk;
    };
  });
  lattice_sub("effectivity", "Try to certify that a class is not effective", true)->callback([&] {
    action = [&]() -> int {
      need_classes(1, "effectivity");
      const auto lat = resolve_lattice(lattice_spec);
      const auto r = not_effective_cert(parse_class(lat, classes[0]), parse_class(lat, lat_pol));
      if (lat_out.json()) {
        ordered_json j{{"kind", "effectivity"}, {"lattice", lat->name()}};
        j["certified"] = r.certified;
        j["rule"] = to_string(r.rule);
        j["degree"] = r.degree;
        j["note"] = r.note;
        j["candidates"] = r.candidates.size();
        j["reachable_count"] = r.reachable_count;
        lat_out.emit(j, out);
      } else {
        lat_out.emit(std::string(r.certified ? "not effective" : "unknown") + " (" +
                         to_string(r.rule) + "): " + r.note + "\n",
                     out);
      }
      return r.certified ? kOk : kUndecided;
    };
  });

  auto* ed_cmd = lattice_cmd->add_subcommand("expected-dim", "Expected moduli dimension on a K3");
  long long ed_rank = 2, ed_c1sq = 0, ed_c2 = 0, ed_chi = 2;
  ed_cmd->add_option("--rank", ed_rank, "Rank r")->required();
  ed_cmd->add_option("--c1-squared", ed_c1sq, "c1^2")->required();
  ed_cmd->add_option("--c2", ed_c2, "c2")->required();
  ed_cmd->add_option("--chi", ed_chi, "chi(O)")->capture_default_str();
  lat_out.add_flags(ed_cmd);
  ed_cmd->callback([&] {
    action = [&]() -> int {
      const long long v = expected_dim(ed_rank, ed_c1sq, ed_c2, ed_chi);
      if (lat_out.json())
        lat_out.emit(ordered_json{{"kind", "expected-dim"}, {"value", v}}, out);
      else
        lat_out.emit(std::to_string(v) + "\n", out);
      return kOk;
    };
  });

  auto* rigid_cmd =
      lattice_cmd->add_subcommand("rigid-classes", "Rigid rank-2 classes on the double plane");
  long long rigid_max = 4;
  rigid_cmd->add_option("--max-k", rigid_max, "List k = 0..max")->capture_default_str();
  lat_out.add_flags(rigid_cmd);
  rigid_cmd->callback([&] {
    action = [&]() -> int {
      if (rigid_max < 0 || rigid_max > 100000) throw InvalidArgument("--max-k out of range");
      ordered_json rows = ordered_json::array();
      std::string text;
      for (long long k = 0; k <= rigid_max; ++k) {
        const auto [x, y] = rigid_rank2_classes(k);
        rows.push_back({{"k", k}, {"c1", x}, {"c2", y}, {"expected_dim", expected_dim(2, 2 * x * x, y)}});
        text += "k = " + std::to_string(k) + ": c1 = " + std::to_string(x) + " pi^*O(1), c2 = " +
                std::to_string(y) + "\n";
      }
      if (lat_out.json())
        lat_out.emit(ordered_json{{"kind", "rigid-classes"}, {"classes", rows}}, out);
      else
        lat_out.emit(text, out);
      return kOk;
    };
  });

  // quartic-run
  auto* quartic_cmd = app.add_subcommand("quartic-run", "Stability on a quartic K3 surface");
  std::string q_surface, q_monad, q_lattice = "[4 5 2]";
  std::vector<std::string> q_justify;
  Output q_out;
  quartic_cmd->add_option("--surface", q_surface, "Quartic surface document")->required();
  quartic_cmd->add_option("--monad", q_monad, "Kernel monad on P^3")->required();
  quartic_cmd->add_option("--lattice", q_lattice, "Picard lattice with basis (H, C)")
      ->capture_default_str();
  quartic_cmd->add_option("--justify", q_justify, "Explain how twist k,l is covered; repeatable");
  q_out.add_flags(quartic_cmd);
  quartic_cmd->callback([&] {
    action = [&]() -> int {
      const QuarticSurface X(load_surface(q_surface).equation);
      const auto cert = quartic_region_run(X, load_monad(q_monad), resolve_lattice(q_lattice));
      if (q_out.json()) {
        q_out.emit(to_json(cert), out);
      } else {
        std::string text = render_text(cert);
        for (const auto& t : q_justify) {
          const MultiDegree L = parse_twist(t);
          if (L.arity() != 2) throw InvalidArgument("--justify takes k,l");
          const auto why = justify_quartic(cert, L);
          text += "twist " + L.str() + ": " + (why ? *why : std::string("not covered")) + "\n";
        }
        q_out.emit(text, out);
      }
      return cert.verdict == Verdict::Stable ? kOk : kUndecided;
    };
  });

  // count-points and picard-bound
  auto* count_cmd = app.add_subcommand("count-points", "Points of w^2 = f over F_{p^n}");
  auto* picard_cmd = app.add_subcommand("picard-bound", "Upper bound on the geometric Picard number");
  std::string z_surface, z_counts;
  unsigned prime = 0, max_n = 9, threads = 1;
  int k_alg = 2;
  Output z_out;
  for (auto* c : {count_cmd, picard_cmd}) {
    c->add_option("--prime", prime, "Odd prime p")->required();
    c->add_option("--max-n", max_n, "Count over F_{p^n} for n = 1..max")
        ->check(CLI::Range(1u, 40u))
        ->capture_default_str();
    c->add_option("--threads", threads, "Worker threads")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    z_out.add_flags(c);
  }
  count_cmd->add_option("--surface", z_surface, "Branch curve document on P^1xP^1")->required();
  picard_cmd->add_option("--surface", z_surface, "Branch curve document on P^1xP^1");
  picard_cmd->add_option("--counts", z_counts, "Use N_1,N_2,... instead of counting");
  picard_cmd->add_option("--k-alg", k_alg, "Number of known algebraic classes")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();

  count_cmd->callback([&] {
    action = [&]() -> int {
      const SurfaceDoc s = load_surface(z_surface);
      const auto rows = count_series(s.equation, prime, max_n, threads);
      if (z_out.json()) {
        ordered_json j{{"kind", "point-counts"}, {"surface", surface_to_json(s)}, {"p", prime}};
        ordered_json a = ordered_json::array();
        for (const auto& r : rows)
          a.push_back({{"n", r.n}, {"q", r.q}, {"N", r.points}, {"trace", r.trace},
                       {"weil_ok", r.weil_ok}});
        j["counts"] = a;
        z_out.emit(j, out);
      } else {
        std::string text;
        for (const auto& r : rows)
          text += std::to_string(r.n) + ", " + std::to_string(r.q) + ", " +
                  std::to_string(r.points) + ", " + std::to_string(r.trace) + "\n";
        z_out.emit(text, out);
      }
      return kOk;
    };
  });
  picard_cmd->callback([&] {
    action = [&]() -> int {
      if (z_surface.empty() == z_counts.empty())
        throw InvalidArgument("picard-bound takes exactly one of --surface and --counts");
      std::vector<std::uint64_t> counts;
      ordered_json source;
      if (!z_surface.empty()) {
        const SurfaceDoc s = load_surface(z_surface);
        counts = counts_from_rows(count_series(s.equation, prime, max_n, threads));
        source["surface"] = surface_to_json(s);
      } else {
        for (auto v : parse_int_list(z_counts)) {
          if (v < 0) throw InvalidArgument("point counts are non-negative");
          counts.push_back(static_cast<std::uint64_t>(v));
        }
      }
      const ZetaProfile prof = assemble_charpoly(counts, prime, k_alg);
      if (z_out.json()) {
        ordered_json j = to_json(prof);
        if (!source.empty()) j["source"] = source;
        z_out.emit(j, out);
      } else {
        z_out.emit(profile_text(prof), out);
      }
      try {
        rank_upper_bound(prof);
      } catch (const NoCandidate&) {
        return kUndecided;
      }
      return kOk;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Recompute every dimension recorded in a document");
  std::string verify_path;
  bool recount = false;
  unsigned verify_threads = 1;
  Output verify_out;
  verify_cmd->add_option("document", verify_path, "Certificate or zeta profile (JSON)")->required();
  verify_cmd->add_flag("--recount", recount, "Also recount points for a zeta profile");
  verify_cmd->add_option("--threads", verify_threads, "Worker threads for --recount")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  verify_out.add_flags(verify_cmd);
  verify_cmd->callback([&] {
    action = [&]() -> int {
      const VerifyReport r = verify_document(read_json_file(verify_path), recount, verify_threads);
      if (verify_out.json()) {
        verify_out.emit(ordered_json{{"kind", "verify"}, {"ok", r.ok}, {"checked", r.checked},
                                     {"lines", r.lines}},
                        out);
      } else {
        std::string text;
        for (const auto& l : r.lines) text += l + "\n";
        text += std::string(r.ok ? "verified" : "FAILED") + ": " + std::to_string(r.checked) +
                " checks\n";
        verify_out.emit(text, out);
      }
      return r.ok ? kOk : kUndecided;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  try {
    return action ? action() : kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: DocumentError: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace hoppe::cli
