#include "greenring/cli/output.hpp"

#include <stdexcept>

namespace greenring::cli {

using nlohmann::ordered_json;

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::exact: return "exact";
    case Mode::mod_induced: return "mod_induced";
    case Mode::mod_projective: return "mod_projective";
  }
  throw std::invalid_argument("unknown mode");
}

Mode parse_mode(const std::string& name) {
  if (name == "exact") return Mode::exact;
  if (name == "mod_induced") return Mode::mod_induced;
  if (name == "mod_projective") return Mode::mod_projective;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

ordered_json to_json(const OutputRecord& record) {
  ordered_json j;
  j["group"] = record.group;
  j["query"] = record.query;
  ordered_json result = ordered_json::array();
  for (const auto& [i, m] : record.result.terms()) {
    ordered_json term;
    term["dim"] = i;
    term["mult"] = m.str();
    result.push_back(std::move(term));
  }
  j["result"] = std::move(result);
  j["dimension"] = dim(record.result).str();
  j["mode"] = mode_name(record.mode);
  return j;
}

OutputRecord record_from_json(const ordered_json& j) {
  try {
    OutputRecord r;
    r.group = j.at("group").get<Index>();
    r.query = j.at("query");
    if (!r.query.is_object()) throw std::invalid_argument("query must be an object");
    std::vector<GreenElement::Term> terms;
    Index previous = 0;
    for (const auto& term : j.at("result")) {
      const Index i = term.at("dim").get<Index>();
      if (i <= previous) throw std::invalid_argument("result indices must ascend");
      previous = i;
      const BigInt m(term.at("mult").get<std::string>());
      if (m == 0) throw std::invalid_argument("zero multiplicity in result");
      terms.emplace_back(i, m);
    }
    r.result = GreenElement::from_terms(std::move(terms));
    if (BigInt(j.at("dimension").get<std::string>()) != dim(r.result))
      throw std::invalid_argument("dimension does not match the result");
    r.mode = parse_mode(j.at("mode").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::string serialize(const OutputRecord& record) { return to_json(record).dump(); }

OutputRecord parse_record(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  return record_from_json(j);
}

std::string render_text(const GreenElement& e) { return to_string(e); }

}  // namespace greenring::cli
