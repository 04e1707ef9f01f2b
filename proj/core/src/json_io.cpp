#include "hedonic/json_io.hpp"

#include <algorithm>

#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

[[noreturn]] void malformed(const std::string& message) {
  throw DomainError(errc::malformed_input, message);
}

int require_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    malformed(std::string("expected integer field '") + key + "'");
  return doc[key].get<int>();
}

bool require_bool(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_boolean())
    malformed(std::string("expected boolean field '") + key + "'");
  return doc[key].get<bool>();
}

std::string require_string(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string())
    malformed(std::string("expected string field '") + key + "'");
  return doc[key].get<std::string>();
}

constexpr std::int64_t kSafeIntegerBound = 1ll << 53;

}  // namespace

Json rational_to_json(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  if (boost::multiprecision::denominator(value) == 1 && num > -kSafeIntegerBound &&
      num < kSafeIntegerBound)
    return Json(num.convert_to<std::int64_t>());
  return Json(format_rational(value));
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      malformed(e.what());
    }
  }
  malformed("rational must be an integer or a 'p/q' string");
}

Json serialize_instance(const HedonicGame& game) {
  int n = game.agent_count();
  Json doc;
  doc["n"] = n;
  switch (game.game_class()) {
    case GameClass::Aeg:
      doc["class"] = "aeg";
      break;
    case GameClass::Afg:
      doc["class"] = "afg";
      break;
    default:
      doc["class"] = "general";
      break;
  }
  doc["symmetric"] = game.symmetric();

  bool friends_enemies =
      game.game_class() == GameClass::Aeg || game.game_class() == GameClass::Afg;
  if (friends_enemies && game.symmetric()) {
    Json edges = Json::array();
    for (auto [u, v] : game.mutual_friendship_graph().edges())
      edges.push_back(Json::array({u, v}));
    doc["edges"] = std::move(edges);
    return doc;
  }

  Json valuations = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational& v = game.valuation(i, j);
      if (!friends_enemies && v == 0) continue;
      Json entry;
      entry["from"] = i;
      entry["to"] = j;
      entry["value"] = rational_to_json(v);
      valuations.push_back(std::move(entry));
    }
  doc["valuations"] = std::move(valuations);
  return doc;
}

HedonicGame parse_instance(const Json& doc) {
  if (!doc.is_object()) malformed("instance must be an object");
  int n = require_int(doc, "n");
  if (n < 1) malformed("agent count must be positive");
  std::string cls_name = require_string(doc, "class");
  GameClass cls;
  if (cls_name == "general")
    cls = GameClass::General;
  else if (cls_name == "aeg")
    cls = GameClass::Aeg;
  else if (cls_name == "afg")
    cls = GameClass::Afg;
  else
    malformed("class must be one of general, aeg, afg");
  bool symmetric = require_bool(doc, "symmetric");

  bool has_edges = doc.contains("edges");
  bool has_valuations = doc.contains("valuations");
  if (has_edges && has_valuations) malformed("give either edges or valuations, not both");

  if (has_edges) {
    if (cls == GameClass::General) malformed("edge lists describe aeg/afg instances only");
    if (!symmetric) malformed("an edge list implies a symmetric instance");
    if (!doc["edges"].is_array()) malformed("edges must be an array");
    SimpleGraph graph(n);
    for (const Json& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        malformed("each edge must be a pair of vertex ids");
      int u = e[0].get<int>();
      int v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) malformed("edge endpoints out of range");
      if (graph.has_edge(u, v)) malformed("duplicate edge");
      graph.add_edge(u, v);
    }
    return cls == GameClass::Aeg ? HedonicGame::aeg_from_graph(graph)
                                 : HedonicGame::afg_from_graph(graph);
  }

  if (!has_valuations) {
    if (cls != GameClass::General)
      malformed("aeg/afg instances need an edge list or a full valuation table");
    return HedonicGame(n, std::vector<Rational>(static_cast<size_t>(n) * n, Rational(0)),
                       GameClass::General, symmetric);
  }

  if (!doc["valuations"].is_array()) malformed("valuations must be an array");
  std::vector<Rational> table(static_cast<size_t>(n) * n, Rational(0));
  std::vector<bool> given(static_cast<size_t>(n) * n, false);
  for (const Json& entry : doc["valuations"]) {
    if (!entry.is_object()) malformed("each valuation must be an object");
    int from = require_int(entry, "from");
    int to = require_int(entry, "to");
    if (from < 0 || to < 0 || from >= n || to >= n) malformed("valuation endpoint out of range");
    if (from == to) malformed("self valuations are fixed at zero");
    if (!entry.contains("value")) malformed("valuation entry needs a value");
    size_t idx = static_cast<size_t>(from) * n + to;
    if (given[idx]) malformed("duplicate valuation entry");
    given[idx] = true;
    table[idx] = rational_from_json(entry["value"]);
  }
  if (cls != GameClass::General) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && !given[static_cast<size_t>(i) * n + j])
          malformed("aeg/afg valuation tables must cover every ordered pair");
  }
  try {
    return HedonicGame(n, std::move(table), cls, symmetric);
  } catch (const DomainError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
}

Json serialize_partition(const Partition& partition) {
  Json coalitions = Json::array();
  for (const auto& c : partition.coalitions()) coalitions.push_back(Json(c));
  Json doc;
  doc["coalitions"] = std::move(coalitions);
  return doc;
}

Partition parse_partition(const Json& doc, int agent_count) {
  if (!doc.is_object() || !doc.contains("coalitions") || !doc["coalitions"].is_array())
    malformed("partition must be an object with a coalitions array");
  std::vector<std::vector<AgentId>> coalitions;
  for (const Json& c : doc["coalitions"]) {
    if (!c.is_array()) malformed("each coalition must be an array of agent ids");
    std::vector<AgentId> members;
    for (const Json& m : c) {
      if (!m.is_number_integer()) malformed("agent ids must be integers");
      members.push_back(m.get<AgentId>());
    }
    coalitions.push_back(std::move(members));
  }
  try {
    return Partition(agent_count, std::move(coalitions));
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
}

Json serialize_graph(const SimpleGraph& graph) {
  Json edges = Json::array();
  for (auto [u, v] : graph.edges()) edges.push_back(Json::array({u, v}));
  Json doc;
  doc["n"] = graph.vertex_count();
  doc["edges"] = std::move(edges);
  return doc;
}

SimpleGraph parse_graph(const Json& doc) {
  if (!doc.is_object()) malformed("graph must be an object");
  int n = require_int(doc, "n");
  if (n < 0) malformed("vertex count must be non-negative");
  if (!doc.contains("edges") || !doc["edges"].is_array()) malformed("graph needs an edges array");
  SimpleGraph graph(n);
  for (const Json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      malformed("each edge must be a pair of vertex ids");
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) malformed("edge endpoints out of range");
    if (graph.has_edge(u, v)) malformed("duplicate edge");
    graph.add_edge(u, v);
  }
  return graph;
}

Json serialize_packing(const Packing& packing, int vertex_count) {
  Json parts = Json::array();
  for (const auto& part : packing.parts) parts.push_back(Json(part));
  Json doc;
  doc["parts"] = std::move(parts);
  doc["covered"] = packing.covered();
  doc["is_factor"] = packing.is_factor(vertex_count);
  return doc;
}

Json serialize_solve_result(const SolveResult& result) {
  Json doc;
  doc["partition"] = serialize_partition(result.partition);
  doc["product"] = format_rational(result.welfare.product);
  doc["nw_approx"] = nash_welfare_display(result.welfare);
  doc["method"] = solve_method_name(result.method);
  doc["guarantee"] = format_rational(result.guarantee);
  doc["degenerate"] = result.degenerate;
  return doc;
}

Json serialize_deviation(const Deviation& deviation) {
  Json doc;
  doc["agent"] = deviation.agent;
  doc["from"] = deviation.from;
  if (deviation.to)
    doc["to"] = *deviation.to;
  else
    doc["to"] = "singleton";
  return doc;
}

Json serialize_stability(const std::optional<Deviation>& witness) {
  Json doc;
  doc["stable"] = !witness.has_value();
  doc["witness_deviation"] = witness ? serialize_deviation(*witness) : Json(nullptr);
  return doc;
}

Json serialize_dynamics(const DynamicsResult& result) {
  Json steps = Json::array();
  for (const DynamicsStep& step : result.trace) {
    Json entry = serialize_deviation(step.deviation);
    entry["product"] = format_rational(step.product);
    entry["ir"] = step.individually_rational;
    steps.push_back(std::move(entry));
  }
  Json doc;
  doc["start_product"] = format_rational(result.start_product);
  doc["start_ir"] = result.start_individually_rational;
  doc["steps"] = std::move(steps);
  doc["steps_taken"] = static_cast<int>(result.trace.size());
  doc["final_partition"] = serialize_partition(result.final_partition);
  doc["step_limit_hit"] = result.step_limit_hit;
  return doc;
}

Json serialize_reduction(const ReductionOutput& output) {
  Json doc;
  doc["instance"] = serialize_instance(output.game);
  doc["size_bound"] = output.size_bound ? Json(*output.size_bound) : Json(nullptr);
  doc["count_bound"] = output.count_bound ? Json(*output.count_bound) : Json(nullptr);
  doc["witness"] = output.witness ? serialize_partition(*output.witness) : Json(nullptr);
  doc["target_product"] =
      output.target_welfare ? Json(format_rational(output.target_welfare->product)) : Json(nullptr);
  doc["provenance"] = output.provenance;
  return doc;
}

}  // namespace hedonic
