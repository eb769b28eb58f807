#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gvec/algebra.hpp"
#include "gvec/types.hpp"

namespace gvec {

/// Malformed input documents and argument strings.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"vertices": n, "arrows": [{"name", "source", "target"}], "relations":
/// [[{"coeff", "path"}]], "nilpotency": m}. Vertices are 1-based in the file;
/// a path ["b", "a"] means b after a.
inline AlgebraSpec parseAlgebraSpec(const nlohmann::json& doc) {
  try {
    AlgebraSpec s;
    s.quiver.vertexCount = doc.at("vertices").get<int>();
    for (const auto& a : doc.at("arrows"))
      s.quiver.arrows.push_back(
          {a.at("name").get<std::string>(), a.at("source").get<int>() - 1, a.at("target").get<int>() - 1});
    if (doc.contains("relations"))
      for (const auto& r : doc.at("relations")) {
        Relation rel;
        for (const auto& t : r) rel.push_back({t.at("coeff").get<std::int64_t>(), t.at("path").get<std::vector<std::string>>()});
        s.relations.push_back(std::move(rel));
      }
    s.nilpotency = doc.at("nilpotency").get<int>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("algebra document: ") + e.what());
  }
}

inline AlgebraSpec loadAlgebraSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parseAlgebraSpec(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline nlohmann::json toJson(const AlgebraSpec& s) {
  nlohmann::json arrows = nlohmann::json::array(), relations = nlohmann::json::array();
  for (const auto& a : s.quiver.arrows)
    arrows.push_back({{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
  for (const auto& r : s.relations) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r) terms.push_back({{"coeff", t.coeff}, {"path", t.path}});
    relations.push_back(terms);
  }
  return {{"vertices", s.quiver.vertexCount}, {"arrows", arrows}, {"relations", relations}, {"nilpotency", s.nilpotency}};
}

/// "1,-1,0" -> (1,-1,0).
inline GVector parseGVector(const std::string& text) {
  GVector g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw InputError("not an integer list: '" + text + "'");
    g.c.push_back(v);
  }
  if (g.c.empty()) throw InputError("empty vector");
  return g;
}

}  // namespace gvec
