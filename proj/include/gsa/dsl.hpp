#pragma once

// Text (.gsa) and JSON forms of atlases with an optional S_n action.
//
//   kind vector 2            # or: weighted D, mixed N D
//   nmanifold true
//   chart U { x even @(0,0)  y odd @(0,1) ... }
//   transition U -> V { forward { y = y + ... } inverse { ... } }
//   cocycle U V W
//   action symmetric { perm 2 1 { chart U { y = Y ... } } }
//
// Omitted entries in forward/inverse/chart blocks map a coordinate to the
// coordinate of the same name. Missing permutations are generated from the
// adjacent transpositions, which must then be present.

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "gsa/action.hpp"

namespace gsa {

struct ParseError : std::runtime_error {
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

struct Document {
  AtlasPtr atlas;
  std::optional<ActionTable> action;
};

Document parse_document(std::string_view text, const std::string& source = "<input>");
std::string emit_document(const Document& doc);

nlohmann::json to_json(const Document& doc);
/// Throws ParseError (line 0) on schema violations.
Document from_json(const nlohmann::json& j, const std::string& source = "<json>");

/// Reads .json files as JSON and anything else as the text format.
Document load_document(const std::string& path);

}  // namespace gsa
