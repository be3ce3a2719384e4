#pragma once

#include <string>

#include <json.hpp>

#include "squares/big_clique.hpp"
#include "squares/structure_checks.hpp"

namespace squares {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(const PartitionSizes& sizes);
Json to_json(const LemmaAWitness& witness);
Json to_json(const ColoringResult& coloring);

// {instance, D, omega, threshold, applicable, triple, S, partition_sizes,
//  bound, slack, elapsed_ms, v} for a structured or exact solve.
Json solve_report(const std::string& instance, const SimpleGraph& base, int D, const StructuredOmega& result,
                  double elapsed_ms);

// Same schema plus "status" for a characterization check.
Json characterization_report(const std::string& instance, const SimpleGraph& base, int D,
                             const CharacterizationReport& report, double elapsed_ms);

// Serialization with sorted keys; `indent` < 0 gives one line.
std::string dump(const Json& j, int indent = 2);

}  // namespace squares
