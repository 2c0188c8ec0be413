#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "hoppe/cli/cli.hpp"
#include "hoppe/common/error.hpp"
#include "hoppe/monad/document.hpp"
#include "hoppe/polycore/parser.hpp"

namespace hoppe::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& what) {
  if (!j.is_object()) throw DocumentError(what + " must be an object");
  for (const auto& [key, v] : j.items())
    if (!allowed.count(key)) throw DocumentError("unknown field '" + key + "' in " + what);
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError("'" + path + "' is not valid JSON: " + e.what());
  }
}

SurfaceDoc surface_from_json(const json& j) {
  reject_unknown(j, {"name", "ambient", "polynomial"}, "surface document");
  if (!j.contains("ambient") || !j.contains("polynomial"))
    throw DocumentError("surface document needs 'ambient' and 'polynomial'");
  const Ambient amb = ambient_from_json(j.at("ambient"));
  return {j.value("name", std::string("surface")),
          parse_poly(j.at("polynomial").get<std::string>(), amb)};
}

SurfaceDoc load_surface(const std::string& path) { return surface_from_json(read_json_file(path)); }

ordered_json surface_to_json(const SurfaceDoc& s) {
  ordered_json j;
  j["name"] = s.name;
  j["ambient"] = ambient_to_json(s.equation.ambient());
  j["polynomial"] = s.equation.render();
  return j;
}

LatticeRef lattice_from_json(const json& j) {
  reject_unknown(j, {"name", "basis", "gram"}, "lattice document");
  if (!j.contains("basis") || !j.contains("gram"))
    throw DocumentError("lattice document needs 'basis' and 'gram'");
  return make_lattice(j.value("name", std::string("lattice")),
                      j.at("basis").get<std::vector<std::string>>(), j.at("gram").get<IntMatrix>());
}

ordered_json lattice_to_json(const GramLattice& lat) {
  ordered_json j;
  j["name"] = lat.name();
  j["basis"] = lat.basis();
  j["gram"] = lat.gram();
  return j;
}

LatticeRef resolve_lattice(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return lattice_from_json(read_json_file(spec));
  return catalogue_lattice(spec);
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("'" + text + "' is not a comma-separated list of integers");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw InvalidArgument("'" + text + "' is not a comma-separated list of integers");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty integer list");
  return out;
}

std::pair<long, long> parse_fiber_point(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("fiber point must look like a:b");
  const auto a = parse_int_list(text.substr(0, colon));
  const auto b = parse_int_list(text.substr(colon + 1));
  if (a.size() != 1 || b.size() != 1) throw InvalidArgument("fiber point must look like a:b");
  if (a[0] == 0 && b[0] == 0) throw InvalidPoint("[0:0] is not a point of P^1");
  return {static_cast<long>(a[0]), static_cast<long>(b[0])};
}

Polarization parse_polarization(const Ambient& amb, const std::string& text) {
  const auto v = parse_int_list(text);
  std::vector<int> c(v.begin(), v.end());
  return Polarization::on_ambient(amb, MultiDegree(c));
}

}  // namespace hoppe::cli
