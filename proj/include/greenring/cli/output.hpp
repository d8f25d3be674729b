#pragma once

#include <string>

#include <json.hpp>

#include "greenring/element.hpp"

namespace greenring::cli {

enum class Mode { exact, mod_induced, mod_projective };

std::string mode_name(Mode mode);
/// Throws std::invalid_argument for unknown names.
Mode parse_mode(const std::string& name);

/// One computed value, as printed by the command-line tool.
///
/// JSON layout (keys in this order):
///   {"group": 2^n, "query": {...}, "result": [{"dim": i, "mult": "k"}, ...],
///    "dimension": "d", "mode": "exact"}
/// Multiplicities and the dimension are decimal strings; summands ascend.
struct OutputRecord {
  Index group = 0;
  nlohmann::ordered_json query = nlohmann::ordered_json::object();
  GreenElement result;
  Mode mode = Mode::exact;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::ordered_json to_json(const OutputRecord& record);
/// Inverse of to_json; rejects malformed records and a dimension that does
/// not match the result.
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// Compact single-line JSON.
std::string serialize(const OutputRecord& record);
OutputRecord parse_record(const std::string& text);

/// Text form of an element: `V5 + 2*V8 + 6*V16`, `-2*V3`, `0`.
std::string render_text(const GreenElement& e);

}  // namespace greenring::cli
