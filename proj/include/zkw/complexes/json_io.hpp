#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/errors.hpp"

namespace zkw {

/// {"m": n, "facets": [[...], ...]} plus "labels" when the labels are not 1..n.
inline nlohmann::ordered_json complex_to_json(const SimplicialComplex& k) {
  nlohmann::ordered_json j;
  j["m"] = k.vertex_count();
  bool standard = true;
  for (std::size_t i = 0; i < k.labels().size(); ++i) standard = standard && k.labels()[i] == static_cast<int>(i) + 1;
  if (!standard) j["labels"] = k.labels();
  j["facets"] = nlohmann::ordered_json::array();
  for (const auto& f : k.facets()) j["facets"].push_back(f);
  return j;
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
      throw ValidationError("complex JSON needs the fields \"m\" and \"facets\"");
    const int m = j.at("m").get<int>();
    std::vector<Face> facets = j.at("facets").get<std::vector<Face>>();
    if (j.contains("labels")) {
      auto labels = j.at("labels").get<std::vector<int>>();
      if (static_cast<int>(labels.size()) != m) throw ValidationError("\"labels\" must list m vertices");
      return SimplicialComplex::from_facets(labels, facets);
    }
    return SimplicialComplex::from_facets(m, facets);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed complex JSON: ") + e.what());
  }
}

inline SimplicialComplex complex_from_json_text(const std::string& text) {
  try {
    return complex_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
}

}  // namespace zkw
