#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfp/errors.hpp"
#include "lfp/geometry.hpp"

namespace lfp {

/// Malformed polytope input. `field` is a JSON pointer such as
/// "/vertices/2/1"; `line` and `column` are set for syntax errors.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string field, std::optional<std::size_t> line = std::nullopt,
             std::optional<std::size_t> column = std::nullopt)
      : Error(message), field_(std::move(field)), line_(line), column_(column) {}

  const std::string& field() const { return field_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }

 private:
  std::string field_;
  std::optional<std::size_t> line_, column_;
};

/// {"name"?: string, "dim": int, "vertices": [[rational-string, ...], ...]}
struct PolytopeDocument {
  std::optional<std::string> name;
  std::size_t dim = 0;
  std::vector<Point> vertices;

  friend bool operator==(const PolytopeDocument&, const PolytopeDocument&) = default;
};

/// Throws ParseError with a location on any schema or syntax problem.
PolytopeDocument parse_document(const std::string& text);

/// Canonical JSON text; parse_document(emit_document(d)) == d.
std::string emit_document(const PolytopeDocument& doc);

PolytopeDocument to_document(const Polytope& p, std::optional<std::string> name = std::nullopt);

/// Builds the polytope; geometric problems surface as the usual Error types.
Polytope to_polytope(const PolytopeDocument& doc);

}  // namespace lfp
