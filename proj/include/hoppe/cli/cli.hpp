#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hoppe/k3lat/lattice.hpp"
#include "hoppe/polycore/polynomial.hpp"
#include "hoppe/stability/polarization.hpp"

namespace hoppe::cli {

// Runs one command. args excludes the program name. Exit codes: 0 success,
// 2 inconclusive or unknown outcome, 1 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Documents.
nlohmann::json read_json_file(const std::string& path);

struct SurfaceDoc {
  std::string name;
  RationalPolynomial equation;
};
SurfaceDoc surface_from_json(const nlohmann::json& j);
SurfaceDoc load_surface(const std::string& path);
nlohmann::ordered_json surface_to_json(const SurfaceDoc& s);

LatticeRef lattice_from_json(const nlohmann::json& j);
nlohmann::ordered_json lattice_to_json(const GramLattice& lat);
// A catalogue name such as "[4 5 2]" or "U(2)", or a path to a lattice document.
LatticeRef resolve_lattice(const std::string& spec);

std::vector<long long> parse_int_list(const std::string& text);
std::pair<long, long> parse_fiber_point(const std::string& text);
Polarization parse_polarization(const Ambient& amb, const std::string& text);

// Re-derives every recorded dimension of a certificate or zeta profile.
struct VerifyReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> lines;
};
VerifyReport verify_document(const nlohmann::json& doc, bool recount = false,
                             unsigned threads = 1);

}  // namespace hoppe::cli
