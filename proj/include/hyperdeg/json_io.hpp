#pragma once

#include <json.hpp>

#include "hyperdeg/allocation.hpp"
#include "hyperdeg/bounds.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/experiments.hpp"
#include "hyperdeg/oracle.hpp"

namespace hyperdeg {

// JSON views used by the command-line tool and the experiment harness.
// nlohmann::json objects keep keys sorted, so serialized output is stable.

nlohmann::json json_of(const SimplicityReport& report);
nlohmann::json json_of(const BoundValue& bound);
nlohmann::json json_of(const AsymptoticDiagnostics& cond);
nlohmann::json allocation_json(const BoxAllocation& alloc);

nlohmann::json json_of(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

// include_timing=false drops the "timing" object (the only fields that vary
// between identical re-runs).
nlohmann::json json_of(const ExperimentReport& report, bool include_timing = true);
nlohmann::json json_of(const ScalingReport& report, bool include_timing = true);

nlohmann::json oracle_distribution_json(const DegreeSequence& pi, const BoxAllocation& boxes,
                                        const OutcomeDistribution& dist);

}  // namespace hyperdeg
