#include "svf/params.hpp"

#include "svf/errors.hpp"

namespace svf {

namespace {

Rational parse_field(const nlohmann::json& node, const std::string& where) {
  if (!node.is_string())
    throw InputError(where + ": expected a rational string");
  try {
    return Rational::parse(node.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<Rational> parse_list(const nlohmann::json& node,
                                 const std::string& where) {
  if (!node.is_array()) throw InputError(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(parse_field(node[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

BoundaryVector parse_vector(const nlohmann::json& node,
                            const std::string& where) {
  if (!node.is_array() || node.size() != 2)
    throw InputError(where + ": expected a 2-element array");
  return BoundaryVector{parse_field(node[0], where + "[0]"),
                        parse_field(node[1], where + "[1]")};
}

nlohmann::ordered_json vector_to_json(const BoundaryVector& v) {
  return nlohmann::ordered_json::array({v.c1.str(), v.c2.str()});
}

}  // namespace

ModelParams params_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("parameter file must be an object");

  ModelParams p;
  if (!doc.contains("c")) throw InputError("missing field 'c'");
  p.c = parse_field(doc["c"], "c");
  if (p.c.is_zero()) throw InputError("crossing constant c must be nonzero");

  if (doc.contains("u")) p.u = parse_list(doc["u"], "u");
  if (doc.contains("v")) p.v = parse_list(doc["v"], "v");

  if (!doc.contains("vectors")) throw InputError("missing field 'vectors'");
  const auto& vecs = doc["vectors"];
  if (!vecs.is_object()) throw InputError("'vectors' must be an object");
  for (const char* key : {"n", "e", "s", "w"})
    if (!vecs.contains(key))
      throw InputError(std::string("vectors: missing key '") + key + "'");
  p.vectors.north = parse_vector(vecs["n"], "vectors.n");
  p.vectors.east = parse_vector(vecs["e"], "vectors.e");
  p.vectors.south = parse_vector(vecs["s"], "vectors.s");
  p.vectors.west = parse_vector(vecs["w"], "vectors.w");

  if (doc.contains("split")) {
    const auto& split = doc["split"];
    if (!split.is_array() || split.size() != 2 ||
        !split[0].is_number_integer() || !split[1].is_number_integer())
      throw InputError("'split' must be an array of two integers");
    const long long n = split[0].get<long long>();
    const long long m = split[1].get<long long>();
    if (n < 0 || m < 0 || n > 64 || m > 64)
      throw InputError("'split' entries out of range");
    p.split = {static_cast<int>(n), static_cast<int>(m)};
  }
  return p;
}

ordered_json params_to_json(const ModelParams& params) {
  ordered_json doc;
  doc["c"] = params.c.str();
  doc["u"] = ordered_json::array();
  for (const auto& x : params.u) doc["u"].push_back(x.str());
  doc["v"] = ordered_json::array();
  for (const auto& x : params.v) doc["v"].push_back(x.str());
  doc["vectors"] = ordered_json::object();
  doc["vectors"]["n"] = vector_to_json(params.vectors.north);
  doc["vectors"]["e"] = vector_to_json(params.vectors.east);
  doc["vectors"]["s"] = vector_to_json(params.vectors.south);
  doc["vectors"]["w"] = vector_to_json(params.vectors.west);
  if (params.split)
    doc["split"] = ordered_json::array({params.split->first,
                                        params.split->second});
  return doc;
}

}  // namespace svf
