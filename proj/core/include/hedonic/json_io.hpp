#pragma once

#include <nlohmann/json.hpp>

#include "hedonic/dynamics.hpp"
#include "hedonic/game.hpp"
#include "hedonic/packing.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/reductions.hpp"
#include "hedonic/solvers.hpp"
#include "hedonic/stability.hpp"

namespace hedonic {

using Json = nlohmann::json;

// Wire formats. Rationals travel as JSON integers when they fit safely and
// as "p/q" strings otherwise; both are accepted on input and survive
// round-trips bit for bit. Schema violations throw
// DomainError(malformed-input).
//
// Instance: {"n", "class": "general"|"aeg"|"afg", "symmetric",
//            "valuations": [{"from","to","value"}...] or "edges": [[u,v]...]}
// Omitted valuation pairs default to 0 for general games; aeg/afg need
// either the full table or the mutual friendship edge list. A restricted
// value-set game serializes under class "general".

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json serialize_instance(const HedonicGame& game);
HedonicGame parse_instance(const Json& doc);

Json serialize_partition(const Partition& partition);
Partition parse_partition(const Json& doc, int agent_count);

Json serialize_graph(const SimpleGraph& graph);
SimpleGraph parse_graph(const Json& doc);

Json serialize_packing(const Packing& packing, int vertex_count);

Json serialize_solve_result(const SolveResult& result);

Json serialize_deviation(const Deviation& deviation);
Json serialize_stability(const std::optional<Deviation>& witness);

Json serialize_dynamics(const DynamicsResult& result);

Json serialize_reduction(const ReductionOutput& output);

}  // namespace hedonic
