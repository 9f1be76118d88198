#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gdiff/census.hpp"
#include "gdiff/codec.hpp"
#include "gdiff/propositions.hpp"
#include "gdiff/solvers.hpp"

namespace gdiff {

using json = nlohmann::ordered_json;

inline json sets_to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(s.to_vector());
  return out;
}

/// {prop, instance_g6, status, witness_sets, note}
inline json report_to_json(const CheckReport& r) {
  return json{{"prop", r.prop},
              {"instance_g6", r.instance_g6},
              {"status", status_name(r.status)},
              {"witness_sets", sets_to_json(r.witness_sets)},
              {"note", r.note}};
}

inline json summary_to_json(const CensusSummary& s) {
  json counts = json::object();
  for (const auto& id : s.props) {
    const StatusCounts& c = s.counts.at(id);
    counts[id] = {{"pass", c.pass}, {"fail", c.fail}, {"vacuous", c.vacuous}, {"skipped", c.skipped}};
  }
  json out{{"instances", s.instances}, {"props", s.props}, {"counts", counts}};
  if (s.n_max > 0) {
    out["n_min"] = s.n_min;
    out["n_max"] = s.n_max;
  }
  return out;
}

inline json record_to_json(const std::string& g6, const InvariantRecord& rec) {
  json out{{"instance_g6", g6}, {"n", rec.n}, {"m", rec.m}};
  json skipped = json::object();
  for (const auto& [name, field] : rec.fields()) {
    if (field->value) {
      out[name] = *field->value;
    } else {
      out[name] = nullptr;
      skipped[name] = field->skipped;
    }
  }
  out["skipped"] = skipped;
  return out;
}

namespace detail {
inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// "0 2|1 3": members space-separated, sets bar-separated.
inline std::string sets_to_field(const std::vector<VertexSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += '|';
    bool first = true;
    for (Vertex v : sets[i]) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}
}  // namespace detail

inline std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = "prop,instance_g6,status,witness_sets,note\n";
  for (const auto& r : reports) {
    out += r.prop + "," + detail::csv_quote(r.instance_g6) + "," + std::string(status_name(r.status)) + "," +
           detail::csv_quote(detail::sets_to_field(r.witness_sets)) + "," + detail::csv_quote(r.note) + "\n";
  }
  return out;
}

inline std::string summary_to_csv(const CensusSummary& s) {
  std::string out = "prop,instances,pass,fail,vacuous,skipped\n";
  for (const auto& id : s.props) {
    const StatusCounts& c = s.counts.at(id);
    out += id + "," + std::to_string(c.total()) + "," + std::to_string(c.pass) + "," + std::to_string(c.fail) + "," +
           std::to_string(c.vacuous) + "," + std::to_string(c.skipped) + "\n";
  }
  return out;
}

inline std::string records_to_csv(const std::vector<std::pair<std::string, InvariantRecord>>& recs) {
  std::string out = "instance_g6,n,m";
  for (const auto& [name, f] : InvariantRecord{}.fields()) out += "," + name;
  out += "\n";
  for (const auto& [g6, rec] : recs) {
    out += detail::csv_quote(g6) + "," + std::to_string(rec.n) + "," + std::to_string(rec.m);
    for (const auto& [name, f] : rec.fields()) out += "," + (f->value ? std::to_string(*f->value) : std::string());
    out += "\n";
  }
  return out;
}

}  // namespace gdiff
