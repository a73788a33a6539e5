#include "abelcyc/report_json.hpp"

#include <regex>

namespace abelcyc {

nlohmann::json to_json(const PowerOccurrence& occ) {
  return {{"start", occ.start}, {"period", occ.period}, {"exponent", occ.exponent.fraction_str()}};
}

nlohmann::json to_json(const AvoidanceReport& report) {
  nlohmann::json j;
  j["word"] = report.word.str();
  j["mode"] = to_string(report.mode);
  j["kind"] = to_string(report.kind);
  j["exponent"] = report.threshold.str() + (report.strict_plus ? "+" : "");
  j["verdict"] = report.verdict;
  j["witness"] = report.witness ? to_json(*report.witness) : nlohmann::json(nullptr);
  return j;
}

std::string validate_report_json(const nlohmann::json& j) {
  static const std::regex exponent_re(R"(^[0-9]+(/[0-9]+)?\+?$)");
  static const std::regex fraction_re(R"(^[0-9]+/[0-9]+$)");
  static const std::regex word_re(R"(^[0-9a-z#]*$)");
  if (!j.is_object()) return "report is not an object";
  for (const char* key : {"word", "mode", "kind", "exponent", "verdict", "witness"}) {
    if (!j.contains(key)) return std::string("missing field ") + key;
  }
  if (!j["word"].is_string() || !std::regex_match(j["word"].get<std::string>(), word_re)) {
    return "word must be a word string";
  }
  const auto mode = j["mode"];
  if (!mode.is_string() || (mode != "cyclic" && mode != "circular" && mode != "linear")) {
    return "bad mode";
  }
  const auto kind = j["kind"];
  if (!kind.is_string() || (kind != "abelian" && kind != "ordinary")) return "bad kind";
  if (!j["exponent"].is_string() || !std::regex_match(j["exponent"].get<std::string>(), exponent_re)) {
    return "bad exponent";
  }
  if (!j["verdict"].is_boolean()) return "verdict must be boolean";
  const auto& w = j["witness"];
  if (w.is_null()) {
    return j["verdict"].get<bool>() ? "" : "failed verdict without witness";
  }
  if (!w.is_object()) return "witness must be an object or null";
  if (!w.contains("start") || !w["start"].is_number_unsigned()) return "bad witness start";
  if (!w.contains("period") || !w["period"].is_number_unsigned()) return "bad witness period";
  if (!w.contains("exponent") || !w["exponent"].is_string() ||
      !std::regex_match(w["exponent"].get<std::string>(), fraction_re)) {
    return "bad witness exponent";
  }
  return "";
}

}  // namespace abelcyc
