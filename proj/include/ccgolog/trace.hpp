#pragma once

// Trace documents and their text / JSON renderings.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ccgolog/domain.hpp"
#include "ccgolog/engine.hpp"
#include "ccgolog/rational.hpp"

namespace ccgolog {

struct TraceRow {
  Rational time;
  std::string action;              // name, "waitFor" for waits
  std::vector<std::string> args;   // waitFor carries its condition
  std::string display;             // e.g. "startGo(50)"
};

struct TraceDocument {
  std::string status;
  std::size_t steps = 0;
  std::vector<TraceRow> entries;
  std::vector<std::pair<std::string, std::string>> final_fluents;  // hidden flags omitted
  std::string reason;                                               // empty when completed
};

inline TraceDocument make_trace_document(const ProjectionResult& r) {
  TraceDocument doc;
  doc.status = to_string(r.outcome);
  doc.steps = r.steps;
  if (!r.completed()) doc.reason = r.reason;
  for (const TraceEntry& e : r.trace) {
    TraceRow row{e.time.value(), e.action.name(), {}, to_trace_string(e.action)};
    if (e.action.is_wait_for()) {
      row.args.push_back(to_string(e.action.condition()));
    } else {
      for (const Value& v : e.action.named_action().args) row.args.push_back(to_string(v));
    }
    doc.entries.push_back(std::move(row));
  }
  const Valuation& v = r.situation.valuation;
  for (const auto& [name, f] : v.continuous) {
    if (!is_hidden_name(name)) doc.final_fluents.emplace_back(name, to_string(f));
  }
  for (const auto& [name, value] : v.discrete) {
    if (!is_hidden_name(name)) doc.final_fluents.emplace_back(name, to_string(value));
  }
  std::sort(doc.final_fluents.begin(), doc.final_fluents.end());
  return doc;
}

enum class TraceFormat { kText, kJson };

inline nlohmann::ordered_json to_json(const TraceDocument& doc) {
  nlohmann::ordered_json out;
  out["status"] = doc.status;
  out["steps"] = doc.steps;
  out["entries"] = nlohmann::ordered_json::array();
  for (const TraceRow& row : doc.entries) {
    out["entries"].push_back({{"t_rational", to_fraction_string(row.time)},
                              {"t", row.time.get_d()},
                              {"action", row.action},
                              {"args", row.args}});
  }
  out["final"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : doc.final_fluents) out["final"][name] = value;
  if (!doc.reason.empty()) out["reason"] = doc.reason;
  return out;
}

/// Text: one "<time, 6 decimals>\t<action>" line per entry, then "# "
/// lines for status, steps, reason and final fluent values.
inline std::string format_trace(const TraceDocument& doc, TraceFormat format) {
  if (format == TraceFormat::kJson) return to_json(doc).dump(2) + "\n";
  std::string out;
  for (const TraceRow& row : doc.entries) {
    out += to_decimal_string(row.time) + "\t" + row.display + "\n";
  }
  out += "# status " + doc.status + "\n";
  out += "# steps " + std::to_string(doc.steps) + "\n";
  if (!doc.reason.empty()) out += "# reason " + doc.reason + "\n";
  for (const auto& [name, value] : doc.final_fluents) out += "# final " + name + " " + value + "\n";
  return out;
}

}  // namespace ccgolog
