#include "hyperdeg/json_io.hpp"

#include <sstream>

namespace hyperdeg {

using nlohmann::json;

json json_of(const SimplicityReport& report) {
  return json{{"loop_count", report.loop_count},
              {"parallel_pair_count", report.parallel_pair_count},
              {"is_simple", report.is_simple}};
}

json json_of(const BoundValue& bound) {
  return json{{"value", bound.value},
              {"clamped", bound.clamped},
              {"precondition_ok", bound.precondition_ok},
              {"preconditions", bound.preconditions},
              {"components", bound.components}};
}

json json_of(const AsymptoticDiagnostics& cond) {
  return json{{"C", cond.c},
              {"alpha", cond.alpha},
              {"alpha_in_range", cond.alpha_in_range},
              {"d1_within_cap", cond.d1_within_cap},
              {"applicable", cond.applicable},
              {"rho", cond.rho},
              {"rho_term", cond.rho_term},
              {"deficit_ratio", cond.deficit_ratio},
              {"deficit_vanishing", cond.deficit_vanishing}};
}

json allocation_json(const BoxAllocation& alloc) {
  json boxes = json::object();
  for (std::size_t i = 0; i < alloc.box_count(); ++i) {
    json counts = json::object();
    for (const auto& [v, c] : alloc.boxes()[i].counts) counts[std::to_string(v)] = c;
    boxes[std::to_string(i + 1)] = counts;
  }
  return json{{"sizes", alloc.sizes()}, {"boxes", boxes}};
}

json json_of(const ExperimentConfig& config) {
  json seq;
  switch (config.sequence.kind) {
    case SequenceSpec::Kind::Regular:
      seq = json{{"type", "regular"}, {"n", config.sequence.n}, {"d", config.sequence.d}};
      break;
    case SequenceSpec::Kind::TwoBlock:
      seq = json{{"type", "two_block"}, {"n", config.sequence.n}};
      break;
    case SequenceSpec::Kind::Explicit:
      seq = json{{"type", "explicit"}, {"degrees", config.sequence.degrees}};
      break;
  }
  json j{{"sequence", seq},
         {"k", config.k},
         {"algorithm", to_string(config.algorithm)},
         {"trials", config.trials},
         {"seed", config.seed}};
  if (config.m)
    j["m"] = *config.m;
  else
    j["m"] = "auto";
  if (!config.output.empty()) j["output"] = config.output;
  if (!config.csv.empty()) j["csv"] = config.csv;
  return j;
}

ExperimentConfig experiment_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("experiment config must be a JSON object");
  ExperimentConfig config;

  const json& seq = j.at("sequence");
  const std::string type = seq.at("type").get<std::string>();
  if (type == "regular") {
    config.sequence.kind = SequenceSpec::Kind::Regular;
    config.sequence.n = seq.at("n").get<std::int64_t>();
    config.sequence.d = seq.at("d").get<std::int64_t>();
  } else if (type == "two_block") {
    config.sequence.kind = SequenceSpec::Kind::TwoBlock;
    config.sequence.n = seq.at("n").get<std::int64_t>();
  } else if (type == "explicit") {
    config.sequence.kind = SequenceSpec::Kind::Explicit;
    config.sequence.degrees = seq.at("degrees").get<std::vector<std::int64_t>>();
  } else {
    throw std::invalid_argument("unknown sequence type: " + type);
  }

  config.k = j.at("k").get<int>();

  const std::string alg = j.value("algorithm", "greedy");
  if (alg == "greedy")
    config.algorithm = Algorithm::Sampler;
  else if (alg == "split")
    config.algorithm = Algorithm::SplitSampler;
  else if (alg == "baseline")
    config.algorithm = Algorithm::Baseline;
  else
    throw std::invalid_argument("unknown algorithm: " + alg);

  if (j.contains("m") && !j.at("m").is_null()) {
    const json& m = j.at("m");
    if (m.is_string()) {
      if (m.get<std::string>() != "auto")
        throw std::invalid_argument("m must be an integer or \"auto\"");
    } else {
      config.m = m.get<std::int64_t>();
    }
  }

  config.trials = j.at("trials").get<std::int64_t>();
  config.seed = j.at("seed").get<std::uint64_t>();
  config.output = j.value("output", "");
  config.csv = j.value("csv", "");
  return config;
}

json json_of(const ExperimentReport& rep, bool include_timing) {
  json bounds;
  for (const auto& [name, bound] : rep.bounds) bounds[name] = json_of(bound);

  json j{{"config", json_of(rep.config)},
         {"n", rep.n},
         {"sigma", rep.sigma},
         {"trials", rep.trials},
         {"simple_count", rep.simple_count},
         {"simple_frequency", rep.simple_frequency},
         {"standard_error", rep.standard_error},
         {"mean_loop_count", rep.mean_loop_count},
         {"loop_count_stddev", rep.loop_count_stddev},
         {"mean_parallel_pairs", rep.mean_parallel_pairs},
         {"allocation_errors", rep.allocation_errors},
         {"bounds", bounds},
         {"loop_expectation_lower_bound", rep.loop_lower_bound},
         {"preconditions_ok", rep.preconditions_ok},
         {"bound_vacuous", rep.bound_vacuous},
         {"verdict", rep.pass ? "PASS" : "FAIL"}};
  if (rep.config.algorithm == Algorithm::SplitSampler) j["m"] = rep.m_used;
  if (include_timing) j["timing"] = json{{"mean_trial_seconds", rep.mean_trial_seconds}};
  return j;
}

json json_of(const ScalingReport& rep, bool include_timing) {
  json points = json::array();
  for (const ScalingPoint& p : rep.points) {
    json point{{"sigma_target", p.sigma_target}, {"sigma", p.sigma}, {"n", p.n}, {"reps", p.reps}};
    if (include_timing) point["median_seconds"] = p.median_seconds;
    points.push_back(point);
  }
  json j{{"k", rep.k}, {"d", rep.d}, {"points", points}, {"slope_defined", rep.slope_defined}};
  if (!rep.note.empty()) j["note"] = rep.note;
  if (include_timing && rep.slope_defined) {
    j["slope"] = rep.slope;
    j["pass"] = rep.pass;
  }
  return j;
}

json oracle_distribution_json(const DegreeSequence& pi, const BoxAllocation& boxes,
                              const OutcomeDistribution& dist) {
  const Uniformity k(static_cast<int>(boxes.box_count()) - 1);
  json outcomes = json::array();
  Rational simple_total = 0;
  for (const auto& [edges, p] : dist) {
    json edge_rows = json::array();
    for (const Edge& e : edges) edge_rows.push_back(e.vertices());
    Hypergraph h(static_cast<std::int64_t>(pi.size()), k, edges);
    const SimplicityReport report = simplicity_report(h);
    if (report.is_simple) simple_total += p;
    std::ostringstream exact;
    exact << p;
    outcomes.push_back(json{{"edges", edge_rows},
                            {"probability", exact.str()},
                            {"probability_double", static_cast<double>(p)},
                            {"is_simple", report.is_simple}});
  }
  std::ostringstream simple_exact;
  simple_exact << simple_total;
  return json{{"n", static_cast<std::int64_t>(pi.size())},
              {"k", k.value()},
              {"sigma", pi.sigma()},
              {"allocation_sizes", boxes.sizes()},
              {"outcome_count", outcomes.size()},
              {"outcomes", outcomes},
              {"simple_probability", simple_exact.str()},
              {"simple_probability_double", static_cast<double>(simple_total)}};
}

}  // namespace hyperdeg
