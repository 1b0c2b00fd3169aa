#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "degseq/analysis.hpp"
#include "degseq/graph.hpp"
#include "degseq/hajos.hpp"
#include "degseq/oracle.hpp"

namespace degseq {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// graph6, header-less. Decoding accepts an optional ">>graph6<<" header and
// throws ParseError on malformed input.
std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(std::string_view text);

std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

Json to_json(const StarSubdivisionWitness& w);
StarSubdivisionWitness witness_from_json(const Json& j);  // ParseError on bad shape

Json to_json(const ConstructionPlan& p);
Json to_json(const BoundReport& r);
Json to_json(const SweepReport& r);

/// Fixed-width table: one row per check.
std::string sweep_summary(const SweepReport& r);

} // namespace degseq
