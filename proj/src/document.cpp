#include "lfp/document.hpp"

#include <json.hpp>

namespace lfp {

using nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

PolytopeDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON: " + std::string(e.what()), "", line, col);
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object", "");
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "dim" && key != "vertices") throw ParseError("unknown field \"" + key + "\"", "/" + key);

  PolytopeDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name must be a string", "/name");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("dim")) throw ParseError("missing field dim", "/dim");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw ParseError("dim must be a positive integer", "/dim");
  doc.dim = j["dim"].get<std::size_t>();
  if (!j.contains("vertices")) throw ParseError("missing field vertices", "/vertices");
  const auto& vs = j["vertices"];
  if (!vs.is_array()) throw ParseError("vertices must be an array", "/vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string at = "/vertices/" + std::to_string(i);
    if (!vs[i].is_array()) throw ParseError("vertex must be an array of rational strings", at);
    if (vs[i].size() != doc.dim)
      throw ParseError("vertex has " + std::to_string(vs[i].size()) + " coordinates, expected " + std::to_string(doc.dim), at);
    Point p;
    for (std::size_t c = 0; c < vs[i].size(); ++c) {
      const std::string field = at + "/" + std::to_string(c);
      const auto& e = vs[i][c];
      if (e.is_string()) {
        try {
          p.push_back(Rational::parse(e.get<std::string>()));
        } catch (const Error& err) {
          throw ParseError("malformed rational \"" + e.get<std::string>() + "\": " + err.what(), field);
        }
      } else if (e.is_number_integer()) {
        p.push_back(Rational::parse(e.dump()));
      } else {
        throw ParseError("coordinate must be a rational string such as \"3/4\"", field);
      }
    }
    doc.vertices.push_back(std::move(p));
  }
  return doc;
}

std::string emit_document(const PolytopeDocument& doc) {
  ordered_json j;
  if (doc.name) j["name"] = *doc.name;
  j["dim"] = doc.dim;
  j["vertices"] = ordered_json::array();
  for (const auto& v : doc.vertices) {
    ordered_json row = ordered_json::array();
    for (const auto& c : v) row.push_back(c.str());
    j["vertices"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

PolytopeDocument to_document(const Polytope& p, std::optional<std::string> name) {
  return PolytopeDocument{std::move(name), p.dim(), p.vertices()};
}

Polytope to_polytope(const PolytopeDocument& doc) { return Polytope(doc.dim, doc.vertices); }

}  // namespace lfp
