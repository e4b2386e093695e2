#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hyperdeg/baseline.hpp"
#include "hyperdeg/bounds.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/experiments.hpp"
#include "hyperdeg/json_io.hpp"
#include "hyperdeg/oracle.hpp"
#include "hyperdeg/sampler.hpp"

namespace {

using hyperdeg::Uniformity;
using nlohmann::json;

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::int64_t resolve_m(const std::string& m_text, const hyperdeg::DegreeSequence& pi,
                       Uniformity k) {
  if (m_text == "auto") return hyperdeg::compute_m(pi, k);
  std::size_t used = 0;
  std::int64_t m = 0;
  try {
    m = std::stoll(m_text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("--m must be an integer or 'auto'");
  }
  if (used != m_text.size()) throw std::invalid_argument("--m must be an integer or 'auto'");
  return m;
}

json summary_json(const char* algorithm, const hyperdeg::DegreeSequence& pi, Uniformity k,
                  const hyperdeg::SamplerOutcome& outcome, std::uint64_t seed,
                  const std::string& out_path) {
  json j{{"algorithm", algorithm},
         {"n", static_cast<std::int64_t>(pi.size())},
         {"k", k.value()},
         {"sigma", pi.sigma()},
         {"edges", outcome.rounds},
         {"simplicity", hyperdeg::json_of(outcome.report)},
         {"seed", seed},
         {"out", out_path}};
  if (!outcome.allocation_sizes.empty()) j["allocation_sizes"] = outcome.allocation_sizes;
  return j;
}

int cmd_validate(const std::string& seqfile, int k_arg) {
  const Uniformity k(k_arg);
  const auto degrees = hyperdeg::read_degree_file(seqfile);
  try {
    const auto pi = hyperdeg::validate_sequence(degrees, k);
    print_json(json{{"valid", true},
                    {"n", static_cast<std::int64_t>(pi.size())},
                    {"k", k.value()},
                    {"sigma", pi.sigma()},
                    {"d1", pi.max_degree()}});
    return 0;
  } catch (const hyperdeg::ValidationError& e) {
    print_json(json{{"valid", false},
                    {"error", hyperdeg::to_string(e.failure())},
                    {"message", e.what()}});
    return 1;
  }
}

int cmd_sample(const std::string& seqfile, int k_arg, int alg, const std::string& m_text,
               std::uint64_t seed, const std::string& out_path, bool dump_allocation) {
  const Uniformity k(k_arg);
  const auto pi = hyperdeg::validate_sequence(hyperdeg::read_degree_file(seqfile), k);

  const std::int64_t m = alg == 4 ? resolve_m(m_text, pi, k) : 0;
  hyperdeg::SamplerOutcome outcome = [&] {
    if (alg == 3) return hyperdeg::sample_hypergraph(pi, k, seed);
    return hyperdeg::sample_hypergraph_2(pi, k, m, seed);
  }();

  if (out_path == "-") {
    hyperdeg::write_edge_list(std::cout, outcome.hypergraph);
    return 0;
  }
  hyperdeg::write_edge_list_file(out_path, outcome.hypergraph);
  json j = summary_json(alg == 3 ? "greedy" : "split", pi, k, outcome, seed, out_path);
  if (alg == 4) j["m"] = m;
  if (dump_allocation) {
    const auto alloc = alg == 3 ? hyperdeg::prepared_allocation(pi, k)
                                : hyperdeg::prepared_split_allocation(pi, k, m);
    j["allocation"] = hyperdeg::allocation_json(alloc);
  }
  print_json(j);
  return 0;
}

int cmd_baseline(const std::string& seqfile, int k_arg, std::uint64_t seed,
                 const std::string& out_path) {
  const Uniformity k(k_arg);
  const auto pi = hyperdeg::validate_sequence(hyperdeg::read_degree_file(seqfile), k);
  const auto outcome = hyperdeg::config_model_sample(pi, k, seed);

  if (out_path == "-") {
    hyperdeg::write_edge_list(std::cout, outcome.hypergraph);
    return 0;
  }
  hyperdeg::write_edge_list_file(out_path, outcome.hypergraph);
  json j = summary_json("baseline", pi, k, outcome, seed, out_path);
  j["loop_expectation_lower_bound"] = hyperdeg::config_model_loop_lower_bound(pi, k);
  print_json(j);
  return 0;
}

int cmd_bounds(const std::string& seqfile, int k_arg, const std::string& m_text, double C,
               double alpha) {
  const Uniformity k(k_arg);
  const auto pi = hyperdeg::validate_sequence(hyperdeg::read_degree_file(seqfile), k);

  json out;
  out["sampler"] = hyperdeg::json_of(hyperdeg::bound_simple_probability(pi, k));

  json diagnostics{{"n", static_cast<std::int64_t>(pi.size())},
                   {"k", k.value()},
                   {"sigma", pi.sigma()},
                   {"asymptotics", hyperdeg::json_of(hyperdeg::asymptotic_diagnostics(pi, k, C, alpha))}};

  const auto alloc = hyperdeg::prepared_allocation(pi, k);
  if (hyperdeg::is_valid_allocation(alloc, pi, k)) {
    out["allocation"] = hyperdeg::json_of(hyperdeg::bound_simple_probability_allocation(alloc, pi));
  } else {
    diagnostics["allocation_skipped"] = "greedy allocation exceeds the sigma/k cap";
  }

  if (k.value() >= 4) {
    const std::int64_t m = resolve_m(m_text, pi, k);
    diagnostics["m"] = m;
    out["split_sampler"] = hyperdeg::json_of(hyperdeg::bound_simple_probability_split(pi, k, m));
    const auto split = hyperdeg::prepared_split_allocation(pi, k, m);
    if (hyperdeg::is_valid_allocation(split, pi, k)) {
      out["split_allocation"] =
          hyperdeg::json_of(hyperdeg::bound_simple_probability_allocation(split, pi));
    } else {
      diagnostics["split_allocation_skipped"] = "split allocation exceeds the sigma/k cap";
    }
  }

  const double loop_bound = hyperdeg::config_model_loop_lower_bound(pi, k);
  out["baseline_loops"] = json{{"value", loop_bound},
                               {"clamped", loop_bound},
                               {"precondition_ok", true},
                               {"preconditions", json::object()},
                               {"components", json::object()}};
  out["diagnostics"] = diagnostics;
  print_json(out);
  return 0;
}

int cmd_oracle(const std::string& seqfile, int k_arg, std::uint64_t seed, std::int64_t trials,
               std::int64_t cap) {
  const Uniformity k(k_arg);
  const auto pi = hyperdeg::validate_sequence(hyperdeg::read_degree_file(seqfile), k);
  const auto alloc = hyperdeg::prepared_allocation(pi, k);
  if (!hyperdeg::is_valid_allocation(alloc, pi, k))
    throw hyperdeg::AllocationError("greedy allocation exceeds the sigma/k cap");

  const auto dist = hyperdeg::exact_distribution(pi, alloc, cap);
  json out = hyperdeg::oracle_distribution_json(pi, alloc, dist);
  out["seed"] = seed;
  out["trials"] = trials;

  if (trials > 0) {
    std::map<std::vector<hyperdeg::Edge>, std::int64_t> counts;
    std::int64_t simple = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      hyperdeg::Rng rng(hyperdeg::trial_seed(seed, static_cast<std::uint64_t>(t)));
      auto edges = hyperdeg::sample_edges(pi, alloc, rng);
      hyperdeg::Hypergraph h(static_cast<std::int64_t>(pi.size()), k, edges);
      if (hyperdeg::simplicity_report(h).is_simple) ++simple;
      ++counts[hyperdeg::canonical_edge_multiset(std::move(edges))];
    }
    std::size_t idx = 0;
    std::int64_t matched = 0;
    for (const auto& [edges, p] : dist) {
      std::int64_t c = 0;
      if (auto it = counts.find(edges); it != counts.end()) c = it->second;
      matched += c;
      out["outcomes"][idx]["mc_frequency"] =
          static_cast<double>(c) / static_cast<double>(trials);
      ++idx;
    }
    out["mc_simple_frequency"] = static_cast<double>(simple) / static_cast<double>(trials);
    // any sampled outcome missing from the exact support signals a bug
    out["mc_outcomes_outside_support"] = trials - matched;
  }
  print_json(out);
  return 0;
}

int cmd_experiment(const std::string& configfile) {
  std::ifstream in(configfile);
  if (!in) throw std::invalid_argument("cannot open config file: " + configfile);
  json cfg;
  in >> cfg;
  const auto config = hyperdeg::experiment_config_from_json(cfg);
  const auto report = hyperdeg::run_experiment(config);
  const json out = hyperdeg::json_of(report);
  print_json(out);

  if (!config.output.empty()) {
    std::ofstream f(config.output, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + config.output);
    f << out.dump(2) << '\n';
  }
  if (!config.csv.empty()) {
    std::ifstream probe(config.csv);
    const bool fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
    probe.close();
    std::ofstream f(config.csv, std::ios::app);
    if (!f) throw std::invalid_argument("cannot open csv file: " + config.csv);
    if (fresh) f << hyperdeg::experiment_csv_header();
    f << hyperdeg::experiment_csv_row(report);
  }
  return 0;
}

int cmd_scaling(int k_arg, const std::vector<std::int64_t>& sizes, std::int64_t d,
                std::uint64_t seed) {
  const Uniformity k(k_arg);
  const auto report = hyperdeg::runtime_scaling_probe(k, sizes, d, seed);
  print_json(hyperdeg::json_of(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prescribed-degree k-uniform hypergraph sampling and bound evaluation"};
  app.require_subcommand(1);

  std::string seqfile, m_text = "auto", out_path, configfile;
  int k_arg = 0, alg = 3;
  std::uint64_t seed = 0;
  std::int64_t trials = 0, cap = hyperdeg::kDefaultOracleSigmaCap, d_scaling = 10;
  double c_coeff = 1.0, alpha = 0.5;
  std::vector<std::int64_t> sizes;

  auto* validate = app.add_subcommand("validate", "check a degree sequence for admissibility");
  validate->add_option("seqfile", seqfile, "degree sequence file")->required();
  validate->add_option("--k", k_arg, "edge cardinality")->required();

  bool dump_allocation = false;
  auto* sample = app.add_subcommand("sample", "sample a hypergraph with the prescribed degrees");
  sample->add_option("seqfile", seqfile)->required();
  sample->add_option("--k", k_arg)->required();
  sample->add_option("--alg", alg, "3 = one greedy allocation, 4 = split allocation")
      ->check(CLI::IsMember({3, 4}));
  sample->add_option("--m", m_text, "split index (integer) or 'auto'");
  sample->add_option("--seed", seed)->required();
  sample->add_option("--out", out_path, "edge list file, or - for stdout")->required();
  sample->add_flag("--dump-allocation", dump_allocation, "include the box allocation in the summary");

  auto* bounds = app.add_subcommand("bounds", "evaluate the probability bounds");
  bounds->add_option("seqfile", seqfile)->required();
  bounds->add_option("--k", k_arg)->required();
  bounds->add_option("--m", m_text);
  bounds->add_option("--C", c_coeff, "degree-cap coefficient for the condition report");
  bounds->add_option("--alpha", alpha, "degree-cap exponent for the condition report");

  auto* oracle = app.add_subcommand("oracle", "exact outcome distribution on a tiny instance");
  oracle->add_option("seqfile", seqfile)->required();
  oracle->add_option("--k", k_arg)->required();
  oracle->add_option("--seed", seed)->required();
  oracle->add_option("--trials", trials, "optional Monte Carlo cross-check trials");
  oracle->add_option("--cap", cap, "sigma tractability cap");

  auto* baseline = app.add_subcommand("baseline", "configuration-model sample");
  baseline->add_option("seqfile", seqfile)->required();
  baseline->add_option("--k", k_arg)->required();
  baseline->add_option("--seed", seed)->required();
  baseline->add_option("--out", out_path)->required();

  auto* experiment = app.add_subcommand("experiment", "run a Monte Carlo experiment from JSON");
  experiment->add_option("configfile", configfile)->required();

  auto* scaling = app.add_subcommand("scaling", "time the sampler across sigma targets");
  scaling->add_option("--k", k_arg)->required();
  scaling->add_option("--sizes", sizes, "sigma targets")->delimiter(',')->required();
  scaling->add_option("--d", d_scaling, "regular degree");
  scaling->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(seqfile, k_arg);
    if (app.got_subcommand(sample))
      return cmd_sample(seqfile, k_arg, alg, m_text, seed, out_path, dump_allocation);
    if (app.got_subcommand(bounds)) return cmd_bounds(seqfile, k_arg, m_text, c_coeff, alpha);
    if (app.got_subcommand(oracle)) return cmd_oracle(seqfile, k_arg, seed, trials, cap);
    if (app.got_subcommand(baseline)) return cmd_baseline(seqfile, k_arg, seed, out_path);
    if (app.got_subcommand(experiment)) return cmd_experiment(configfile);
    if (app.got_subcommand(scaling)) return cmd_scaling(k_arg, sizes, d_scaling, seed);
    std::cerr << "error: no subcommand selected\n";
    return 64;
  } catch (const hyperdeg::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hyperdeg::AllocationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hyperdeg::EmptyBoxDrawAttempt& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const hyperdeg::InvalidM& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hyperdeg::TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hyperdeg::InfeasibleRepair& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hyperdeg::InfeasibleParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
