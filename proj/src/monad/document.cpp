#include "hoppe/monad/document.hpp"

#include <fstream>
#include <set>

#include "hoppe/common/error.hpp"
#include "hoppe/polycore/parser.hpp"

namespace hoppe {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw DocumentError(std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw DocumentError("unknown field '" + key + "' in " + what);
}

MultiDegree twist_from_json(const json& j, std::size_t arity) {
  std::vector<int> c;
  if (j.is_number_integer()) {
    c.push_back(j.get<int>());
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw DocumentError("twist components must be integers");
      c.push_back(v.get<int>());
    }
  } else {
    throw DocumentError("twist must be an integer or an array of integers");
  }
  if (c.size() != arity)
    throw DocumentError("twist has " + std::to_string(c.size()) + " components, expected " +
                        std::to_string(arity));
  return MultiDegree(std::move(c));
}

FreeSheaf sheaf_from_json(const json& j, const Ambient& amb, const char* what) {
  if (!j.is_array()) throw DocumentError(std::string(what) + " must be an array of twists");
  FreeSheaf f{amb, {}};
  for (const auto& t : j) f.twists.push_back(twist_from_json(t, amb.grading()));
  return f;
}

PolyMatrix matrix_from_json(const json& j, const Ambient& amb, std::size_t rows, std::size_t cols,
                            const char* what) {
  if (!j.is_array() || j.size() != rows)
    throw DocumentError(std::string(what) + " must have " + std::to_string(rows) + " rows");
  PolyMatrix m(amb, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw DocumentError(std::string(what) + " row " + std::to_string(r) + " must have " +
                          std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string()) throw DocumentError(std::string(what) + " entries must be strings");
      m.set(r, c, parse_poly(row[c].get<std::string>(), amb));
    }
  }
  return m;
}

ordered_json sheaf_to_json(const FreeSheaf& f) {
  ordered_json a = ordered_json::array();
  for (const auto& t : f.twists) a.push_back(t.components());
  return a;
}

ordered_json matrix_to_json(const PolyMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).render());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Ambient ambient_from_json(const json& j) {
  reject_unknown(j, {"type", "dim", "dims", "variables"}, "ambient");
  if (!j.contains("type")) throw DocumentError("ambient needs a type");
  const std::string type = j.at("type").get<std::string>();
  std::vector<std::string> names;
  if (j.contains("variables")) names = j.at("variables").get<std::vector<std::string>>();
  try {
    if (type == "projective") {
      if (!j.contains("dim")) throw DocumentError("projective ambient needs dim");
      const int n = j.at("dim").get<int>();
      return names.empty() ? Ambient::projective(n) : Ambient::projective(n, names);
    }
    if (type == "product_projective") {
      if (!j.contains("dims")) throw DocumentError("product ambient needs dims");
      const auto dims = j.at("dims").get<std::vector<int>>();
      if (dims.size() != 2) throw DocumentError("product ambient needs two dims");
      return names.empty() ? Ambient::product(dims[0], dims[1])
                           : Ambient::product(dims[0], dims[1], names);
    }
  } catch (const InvalidArgument& e) {
    throw DocumentError(e.what());
  }
  throw DocumentError("unknown ambient type '" + type + "'");
}

ordered_json ambient_to_json(const Ambient& amb) {
  ordered_json j;
  if (amb.is_product()) {
    j["type"] = "product_projective";
    j["dims"] = amb.dims();
  } else {
    j["type"] = "projective";
    j["dim"] = amb.dims()[0];
  }
  j["variables"] = amb.var_names();
  return j;
}

MonadComplex monad_from_json(const json& j) {
  reject_unknown(j, {"name", "ambient", "source", "middle", "target", "map_a", "map_b",
                     "map_a_imag", "map_b_imag"},
                 "monad document");
  for (const char* key : {"ambient", "middle", "target", "map_b"})
    if (!j.contains(key)) throw DocumentError(std::string("monad document needs '") + key + "'");
  try {
    const Ambient amb = ambient_from_json(j.at("ambient"));
    const std::string name = j.value("name", std::string("monad"));
    FreeSheaf a{amb, {}};
    if (j.contains("source")) a = sheaf_from_json(j.at("source"), amb, "source");
    FreeSheaf b = sheaf_from_json(j.at("middle"), amb, "middle");
    FreeSheaf c = sheaf_from_json(j.at("target"), amb, "target");
    std::optional<PolyMatrix> map_a;
    if (j.contains("map_a")) map_a = matrix_from_json(j.at("map_a"), amb, b.rank(), a.rank(), "map_a");
    PolyMatrix map_b = matrix_from_json(j.at("map_b"), amb, c.rank(), b.rank(), "map_b");
    std::optional<PolyMatrix> im_a, im_b;
    if (j.contains("map_a_imag"))
      im_a = matrix_from_json(j.at("map_a_imag"), amb, b.rank(), a.rank(), "map_a_imag");
    if (j.contains("map_b_imag"))
      im_b = matrix_from_json(j.at("map_b_imag"), amb, c.rank(), b.rank(), "map_b_imag");
    MonadComplex m(name, a, b, c, std::move(map_a), std::move(map_b));
    if (im_a || im_b) m.set_imaginary_parts(std::move(im_a), std::move(im_b));
    return m;
  } catch (const json::exception& e) {
    throw DocumentError(e.what());
  }
}

MonadComplex load_monad(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DocumentError("'" + path + "': " + e.what());
  }
  return monad_from_json(j);
}

ordered_json monad_to_json(const MonadComplex& m) {
  ordered_json j;
  j["name"] = m.name();
  j["ambient"] = ambient_to_json(m.ambient());
  if (m.A().rank()) j["source"] = sheaf_to_json(m.A());
  j["middle"] = sheaf_to_json(m.B());
  j["target"] = sheaf_to_json(m.C());
  if (m.map_a()) j["map_a"] = matrix_to_json(*m.map_a());
  j["map_b"] = matrix_to_json(m.map_b());
  if (m.imaginary_a()) j["map_a_imag"] = matrix_to_json(*m.imaginary_a());
  if (m.imaginary_b()) j["map_b_imag"] = matrix_to_json(*m.imaginary_b());
  return j;
}

}  // namespace hoppe
