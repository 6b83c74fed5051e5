#include "pcg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pcg/error.hpp"

namespace pcg {

using nlohmann::json;

namespace {

json support_to_json(QubitSet set) {
  return json(set_to_indices(set));
}

int int_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw PcgError(where + ": missing integer field \"" + key + "\"");
  }
  return j[key].get<int>();
}

std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace

json state_to_json(const PcgStateSpec& state) {
  json components = json::array();
  for (const Component& c : state.components) {
    components.push_back({{"sign", c.sign}, {"support", support_to_json(c.support)}});
  }
  return {{"n", state.n}, {"components", components}};
}

RawState raw_state_from_json(const json& j) {
  if (!j.is_object()) throw PcgError("state json: top level must be an object");
  RawState raw;
  raw.n = int_field(j, "n", "state json");
  if (!j.contains("components") || !j["components"].is_array()) {
    throw PcgError("state json: missing \"components\" array");
  }
  for (const json& cj : j["components"]) {
    if (!cj.is_object()) throw PcgError("state json: component must be an object");
    RawComponent rc;
    rc.sign = int_field(cj, "sign", "state json component");
    if (!cj.contains("support") || !cj["support"].is_array()) {
      throw PcgError("state json component: missing \"support\" array");
    }
    for (const json& q : cj["support"]) {
      if (!q.is_number_integer()) {
        throw PcgError("state json component: support entries must be integers");
      }
      rc.support.push_back(q.get<int>());
    }
    raw.components.push_back(std::move(rc));
  }
  return raw;
}

json violations_to_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const Violation& v : violations) {
    out.push_back({{"kind", v.kind},
                   {"components", v.components},
                   {"message", v.message}});
  }
  return out;
}

json condition_set_to_json(const ConditionSet& set) {
  json conditions = json::array();
  for (const HardyCondition& c : set.conditions) {
    json witnesses = json::array();
    for (const ZAssignment& w : c.witnesses) {
      json assignment = json::object();
      for (int q : set_to_indices(w.domain)) {
        assignment[std::to_string(q)] = w.value(q);
      }
      witnesses.push_back(std::move(assignment));
    }
    conditions.push_back({{"edge", support_to_json(c.edge)},
                          {"alpha", c.alpha},
                          {"witnesses", std::move(witnesses)}});
  }
  return {{"outcome", set.outcome.bitstring()}, {"conditions", conditions}};
}

json pcg_to_json(const Pcg& graph) {
  json marks = json::array();
  for (int q = 1; q <= graph.n; ++q) marks.push_back(graph.mark(q));
  json edges = json::array();
  for (const PcgEdge& e : graph.edges) {
    edges.push_back({{"vertices", support_to_json(e.vertices)}, {"weight", e.weight}});
  }
  return {{"n", graph.n}, {"marks", marks}, {"edges", edges}};
}

Pcg pcg_from_json(const json& j) {
  if (!j.is_object()) throw PcgError("pcg json: top level must be an object");
  Pcg graph;
  graph.n = int_field(j, "n", "pcg json");
  if (graph.n < 1 || graph.n > kMaxQubits) {
    throw PcgError("pcg json: vertex count out of range");
  }
  if (!j.contains("marks") || !j["marks"].is_array() ||
      j["marks"].size() != static_cast<std::size_t>(graph.n)) {
    throw PcgError("pcg json: \"marks\" must list one value per vertex");
  }
  for (int q = 1; q <= graph.n; ++q) {
    const json& m = j["marks"][q - 1];
    if (!m.is_number_integer() || (m != 1 && m != -1)) {
      throw PcgError("pcg json: marks must be +1 or -1");
    }
    if (m == -1) graph.hollow |= qubit_bit(q);
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw PcgError("pcg json: missing \"edges\" array");
  }
  for (const json& ej : j["edges"]) {
    if (!ej.is_object()) throw PcgError("pcg json: edge must be an object");
    PcgEdge edge;
    edge.weight = int_field(ej, "weight", "pcg json edge");
    if (edge.weight != 1 && edge.weight != -1) {
      throw PcgError("pcg json edge: weight must be +1 or -1");
    }
    if (!ej.contains("vertices") || !ej["vertices"].is_array()) {
      throw PcgError("pcg json edge: missing \"vertices\" array");
    }
    for (const json& vq : ej["vertices"]) {
      if (!vq.is_number_integer()) {
        throw PcgError("pcg json edge: vertices must be integers");
      }
      const int q = vq.get<int>();
      if (q < 1 || q > graph.n) throw PcgError("pcg json edge: vertex out of range");
      if (contains(edge.vertices, q)) {
        throw PcgError("pcg json edge: vertex listed twice");
      }
      edge.vertices |= qubit_bit(q);
    }
    if (set_size(edge.vertices) < 2) {
      throw PcgError("pcg json edge: needs at least two vertices");
    }
    graph.edges.push_back(edge);
  }
  return graph;
}

json nonstabilizer_to_json(const NonstabilizerResult& result) {
  if (!result.certified) {
    return {{"certified", false}, {"reason", result.reason}};
  }
  return {{"certified", true},
          {"witness_qubit", result.witness_qubit},
          {"rho",
           {{"r00", rational_str(result.rho.r00)},
            {"r01", rational_str(result.rho.r01)},
            {"r10", rational_str(result.rho.r10)},
            {"r11", rational_str(result.rho.r11)}}}};
}

json report_to_json(const DavnReport& report) {
  json outcomes = json::array();
  for (const OutcomeRecord& record : report.records) {
    json entry = {{"outcome", record.outcome.bitstring()},
                  {"probability", rational_str(record.probability)},
                  {"condition_count", record.condition_count()},
                  {"colorable", record.verdict.colorable}};
    if (record.verdict.colorable) {
      json values = json::array();
      for (int q = 1; q <= record.outcome.n; ++q) {
        values.push_back(record.verdict.witness.value(q));
      }
      entry["witness"] = std::move(values);
    } else if (record.verdict.certificate) {
      entry["certificate"] = *record.verdict.certificate;
    }
    outcomes.push_back(std::move(entry));
  }
  json out = {{"davn", report.davn},
              // Emitted unreduced so the denominator stays the outcome count.
              {"success_probability", std::to_string(report.uncolorable_count) +
                                          "/" + std::to_string(report.state_size)},
              {"nonstabilizer", nonstabilizer_to_json(report.nonstabilizer)},
              {"outcomes", std::move(outcomes)}};
  if (report.lhv_consistent_count) {
    out["lhv_consistent_count"] = *report.lhv_consistent_count;
  }
  return out;
}

PcgStateSpec load_state_file(const std::string& path,
                             const ValidationOptions& options) {
  std::ifstream in(path);
  if (!in) throw PcgError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PcgError(path + ": " + e.what());
  }
  const ValidationResult result = validate_pcg_state(raw_state_from_json(j), options);
  if (!result.ok()) {
    std::ostringstream msg;
    msg << path << ": invalid state";
    for (const Violation& v : result.violations) msg << "\n  " << v.message;
    throw PcgError(msg.str());
  }
  return *result.spec;
}

Pcg load_pcg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PcgError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PcgError(path + ": " + e.what());
  }
  return pcg_from_json(j);
}

}  // namespace pcg
