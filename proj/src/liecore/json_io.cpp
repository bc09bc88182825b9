#include "qfl/liecore/json_io.hpp"

#include <fstream>
#include <set>

#include "qfl/errors.hpp"

namespace qfl::liecore {

using nlohmann::json;

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(exactlin::to_string(x));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m.to_dense()) out.push_back(vector_to_json(row));
  return out;
}

json to_json(const LieAlgebra& g) {
  json br = json::array();
  for (const auto& [ij, terms] : g.brackets()) {
    json t = json::array();
    for (const auto& [k, c] : terms) t.push_back({{"k", k}, {"c", exactlin::to_string(c)}});
    br.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", t}});
  }
  return {{"dim", g.dim()}, {"labels", g.labels()}, {"brackets", br}};
}

namespace {

std::size_t index_field(const json& obj, const char* key, const std::string& where, std::size_t bound) {
  const std::string field = where + "." + key;
  if (!obj.is_object() || !obj.contains(key)) throw InputError("missing field " + field);
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError(field + " must be a non-negative integer");
  const auto x = v.get<unsigned long long>();
  if (x >= bound) throw InputError(field + " = " + std::to_string(x) + " is out of range");
  return static_cast<std::size_t>(x);
}

Scalar scalar_field(const json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return exactlin::parse_scalar(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Scalar(exactlin::Integer(std::to_string(v.get<long long>())));
  throw InputError(field + " must be a rational string \"p/q\" or an integer");
}

}  // namespace

LieAlgebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("algebra document must be a JSON object");
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer() || doc.at("dim").get<long long>() < 0) {
    throw InputError("field dim must be a non-negative integer");
  }
  const auto n = doc.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array() || l.size() != n) throw InputError("field labels must be an array of dim strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string()) throw InputError("labels[" + std::to_string(i) + "] must be a string");
      labels.push_back(l[i].get<std::string>());
    }
  }
  LieAlgebra g(n, labels);
  if (!doc.contains("brackets")) return g;
  const json& br = doc.at("brackets");
  if (!br.is_array()) throw InputError("field brackets must be an array");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < br.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    const std::size_t i = index_field(br[e], "i", where, n);
    const std::size_t j = index_field(br[e], "j", where, n);
    if (i >= j) throw InputError(where + ": only entries with i < j are allowed");
    if (!seen.insert({i, j}).second) throw InputError(where + ": duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    if (!br[e].contains("terms") || !br[e].at("terms").is_array()) throw InputError(where + ".terms must be an array");
    const json& terms = br[e].at("terms");
    std::set<std::size_t> ks;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      const std::size_t k = index_field(terms[t], "k", tw, n);
      if (!ks.insert(k).second) throw InputError(tw + ".k: duplicate target index");
      if (!terms[t].contains("c")) throw InputError("missing field " + tw + ".c");
      g.add_term(i, j, k, scalar_field(terms[t].at("c"), tw + ".c"));
    }
  }
  return g;
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open algebra file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
  return algebra_from_json(doc);
}

}  // namespace qfl::liecore
