#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "hyperdeg/experiments.hpp"
#include "hyperdeg/json_io.hpp"

using namespace hyperdeg;
using doctest::Approx;

TEST_CASE("regular family generator") {
  auto pi = generate_regular(300, 3, Uniformity(3));
  CHECK(pi.size() == 300);
  CHECK(pi.sigma() == 900);
  CHECK(pi.max_degree() == 3);

  CHECK_THROWS_AS(generate_regular(5, 3, Uniformity(4)), InfeasibleParameters);  // 4 | 15 fails
  CHECK_THROWS_AS(generate_regular(0, 3, Uniformity(3)), InfeasibleParameters);
  CHECK_THROWS_AS(generate_regular(6, 0, Uniformity(3)), InfeasibleParameters);
}

TEST_CASE("two-block family traces") {
  SUBCASE("k=3 at n=64 needs two +1 repairs") {
    auto pi = generate_two_block(64, Uniformity(3));
    REQUIRE(pi.size() == 64);
    CHECK(pi.sigma() == 66);
    CHECK(pi.degrees()[0] == 2);
    CHECK(pi.degrees()[1] == 2);
    CHECK(pi.degrees()[2] == 1);
    CHECK(pi.degrees()[63] == 1);
  }

  SUBCASE("k=4 at n=64 is all ones") {
    auto pi = generate_two_block(64, Uniformity(4));
    REQUIRE(pi.size() == 64);
    CHECK(pi.sigma() == 64);
    CHECK(pi.max_degree() == 1);
  }

  SUBCASE("tiny n cannot be repaired") {
    CHECK_THROWS_AS(generate_two_block(2, Uniformity(4)), InfeasibleRepair);
  }

  SUBCASE("head block dominates at large n") {
    auto pi = generate_two_block(10000, Uniformity(4));
    REQUIRE(pi.size() == 10000);
    CHECK(pi.degrees()[0] == 12);    // floor(10^4 / ln^3(10^4))
    CHECK(pi.degrees()[9] == 12);    // ceil(ln 10^4) = 10 head entries
    CHECK(pi.degrees()[10] == 10);   // floor(100 / ln 10^4)
    CHECK(pi.sigma() == 100020);
  }
}

TEST_CASE("random valid sequences are admissible by construction") {
  Rng rng(55);
  for (int iter = 0; iter < 100; ++iter) {
    const int k = 3 + static_cast<int>(rng.below(5));
    auto pi = generate_random_valid(30, 6, Uniformity(k), rng);
    CHECK(pi.size() >= static_cast<std::size_t>(k));
    CHECK(pi.size() <= 30);
    CHECK(pi.sigma() % k == 0);
    CHECK(static_cast<std::int64_t>(k) * pi.max_degree() <= pi.sigma());
  }
}

TEST_CASE("algorithm names") {
  CHECK(std::string(to_string(Algorithm::Sampler)) == "greedy");
  CHECK(std::string(to_string(Algorithm::SplitSampler)) == "split");
  CHECK(std::string(to_string(Algorithm::Baseline)) == "baseline");
}

TEST_CASE("greedy-sampler experiment on a deterministic instance") {
  ExperimentConfig config;
  config.sequence.kind = SequenceSpec::Kind::Explicit;
  config.sequence.degrees = {3, 3, 3, 3};
  config.k = 3;
  config.algorithm = Algorithm::Sampler;
  config.trials = 500;
  config.seed = 7;

  auto rep = run_experiment(config);
  CHECK(rep.n == 4);
  CHECK(rep.sigma == 12);
  CHECK(rep.trials == 500);
  CHECK(rep.simple_count == 500);  // single possible outcome, simple
  CHECK(rep.simple_frequency == 1.0);
  CHECK(rep.allocation_errors == 0);
  CHECK(rep.bounds.count("sampler") == 1);
  CHECK(rep.bounds.count("allocation") == 1);
  CHECK(rep.preconditions_ok);
  CHECK(rep.bound_vacuous);  // raw closed-form bound is negative at sigma 12
  CHECK(rep.pass);
  CHECK(rep.loop_lower_bound == Approx(4.0 / 11.0));
}

TEST_CASE("greedy-sampler experiment with a binding bound") {
  ExperimentConfig config;
  config.sequence.kind = SequenceSpec::Kind::Regular;
  config.sequence.n = 300;
  config.sequence.d = 3;
  config.k = 3;
  config.algorithm = Algorithm::Sampler;
  config.trials = 300;
  config.seed = 11;

  auto rep = run_experiment(config);
  CHECK(rep.bounds.at("sampler").value == Approx(0.73).epsilon(1e-12));
  CHECK_FALSE(rep.bound_vacuous);
  CHECK(rep.preconditions_ok);
  CHECK(rep.allocation_errors == 0);
  CHECK(rep.simple_frequency >= 0.73 - 3 * rep.standard_error);
  CHECK(rep.pass);
}

TEST_CASE("split-sampler experiment picks m automatically") {
  ExperimentConfig config;
  config.sequence.kind = SequenceSpec::Kind::TwoBlock;
  config.sequence.n = 64;
  config.k = 4;
  config.algorithm = Algorithm::SplitSampler;
  config.trials = 400;
  config.seed = 21;

  auto rep = run_experiment(config);
  CHECK(rep.sigma == 64);
  CHECK(rep.m_used == 13);
  CHECK(rep.bounds.at("split_sampler").value == Approx(1.0 - 15.0 / 64.0).epsilon(1e-12));
  CHECK(rep.bounds.at("split_sampler").precondition_ok);
  CHECK(rep.bounds.count("allocation") == 1);
  CHECK(rep.allocation_errors == 0);
  CHECK(rep.pass);

  // explicit m overrides the automatic choice
  config.m = 1;
  auto forced = run_experiment(config);
  CHECK(forced.m_used == 1);
  CHECK_FALSE(forced.bounds.at("split_sampler").precondition_ok);
}

TEST_CASE("baseline experiment verdict uses the loop bound") {
  ExperimentConfig config;
  config.sequence.kind = SequenceSpec::Kind::Explicit;
  config.sequence.degrees = {3, 3, 3, 3};
  config.k = 3;
  config.algorithm = Algorithm::Baseline;
  config.trials = 3000;
  config.seed = 5;

  auto rep = run_experiment(config);
  CHECK(rep.loop_lower_bound == Approx(4.0 / 11.0).epsilon(1e-12));
  CHECK(rep.mean_loop_count >=
        rep.loop_lower_bound - 3 * rep.loop_count_stddev / std::sqrt(3000.0));
  CHECK(rep.pass);
  CHECK(rep.allocation_errors == 0);
}

TEST_CASE("experiment rejects bad configurations") {
  ExperimentConfig config;
  config.sequence.kind = SequenceSpec::Kind::Explicit;
  config.sequence.degrees = {3, 3, 3, 3};
  config.k = 3;
  config.trials = 0;
  CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
}

TEST_CASE("csv header and rows stay in sync") {
  const std::string header = experiment_csv_header();
  const auto cols = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;

  ExperimentConfig config;
  config.sequence.kind = SequenceSpec::Kind::Explicit;
  config.sequence.degrees = {3, 3, 3, 3};
  config.k = 3;
  config.algorithm = Algorithm::Sampler;
  config.trials = 10;
  config.seed = 3;
  auto rep = run_experiment(config);
  const std::string row = experiment_csv_row(rep);
  CHECK(static_cast<std::size_t>(std::count(row.begin(), row.end(), ',')) + 1 == cols);
  CHECK(row.find("greedy,explicit,4,") == 0);
}

TEST_CASE("experiment config json round-trip") {
  ExperimentConfig config;
  config.sequence.kind = SequenceSpec::Kind::TwoBlock;
  config.sequence.n = 128;
  config.k = 4;
  config.algorithm = Algorithm::SplitSampler;
  config.m = 17;
  config.trials = 250;
  config.seed = 99;
  config.output = "out.json";
  config.csv = "rows.csv";

  auto back = experiment_config_from_json(json_of(config));
  CHECK(back.sequence.kind == SequenceSpec::Kind::TwoBlock);
  CHECK(back.sequence.n == 128);
  CHECK(back.k == 4);
  CHECK(back.algorithm == Algorithm::SplitSampler);
  REQUIRE(back.m.has_value());
  CHECK(*back.m == 17);
  CHECK(back.trials == 250);
  CHECK(back.seed == 99);
  CHECK(back.output == "out.json");
  CHECK(back.csv == "rows.csv");

  config.m.reset();
  auto auto_m = experiment_config_from_json(json_of(config));
  CHECK_FALSE(auto_m.m.has_value());
}

TEST_CASE("scaling probe fits a slope over two sizes") {
  auto rep = runtime_scaling_probe(Uniformity(3), {300, 600}, 10, 1);
  REQUIRE(rep.points.size() == 2);
  CHECK(rep.points[0].sigma == 300);
  CHECK(rep.points[0].n == 30);
  CHECK(rep.points[1].sigma == 600);
  CHECK(rep.points[1].n == 60);
  CHECK(rep.points[0].median_seconds > 0);
  CHECK(rep.slope_defined);

  auto single = runtime_scaling_probe(Uniformity(3), {300}, 10, 1);
  CHECK_FALSE(single.slope_defined);
  CHECK_FALSE(single.note.empty());
}

TEST_CASE("smallest two-block size with a live split bound") {
  CHECK(find_smallest_two_block_n(Uniformity(4), {2, 64}) == 64);
  CHECK(find_smallest_two_block_n(Uniformity(4), {2}) == 0);
  CHECK_THROWS_AS(find_smallest_two_block_n(Uniformity(3), {64}), std::invalid_argument);
  CHECK(default_two_block_grid().front() == 64);
}
