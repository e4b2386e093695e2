#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperdeg/bounds.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/rng.hpp"

namespace hyperdeg {

// The benchmark-family generator could not be repaired into an admissible
// sequence at this size.
class InfeasibleRepair : public std::runtime_error {
 public:
  explicit InfeasibleRepair(const std::string& message) : std::runtime_error(message) {}
};

// Requested generator parameters admit no valid sequence.
class InfeasibleParameters : public std::runtime_error {
 public:
  explicit InfeasibleParameters(const std::string& message) : std::runtime_error(message) {}
};

// d-regular sequence of length n; throws InfeasibleParameters when k does not
// divide n*d or the cap fails.
DegreeSequence generate_regular(std::int64_t n, std::int64_t d, Uniformity k);

// Two-block benchmark family: ceil(ln n) entries of floor(n / ln(n)^3)
// followed by n - ceil(ln n) entries of floor(sqrt(n) / ln n), with repairs:
// (a) raise the head value to the tail value if it fell below it, and
// (b) add (k - sigma mod k) mod k to the rightmost entries that can grow
// without breaking the non-increasing order. Throws InfeasibleRepair when the
// repaired sequence still fails admissibility.
DegreeSequence generate_two_block(std::int64_t n, Uniformity k);

// Random admissible sequence with n in [k, n_max] and entries in [1, d_max],
// using repair (b) above. Rejection-samples until admissible.
DegreeSequence generate_random_valid(std::int64_t n_max, std::int64_t d_max, Uniformity k,
                                     Rng& rng);

enum class Algorithm { Sampler, SplitSampler, Baseline };

const char* to_string(Algorithm a);

struct SequenceSpec {
  enum class Kind { Regular, TwoBlock, Explicit } kind = Kind::Regular;
  std::int64_t n = 0;
  std::int64_t d = 0;                 // Regular only
  std::vector<std::int64_t> degrees;  // Explicit only
};

struct ExperimentConfig {
  SequenceSpec sequence;
  int k = 3;
  Algorithm algorithm = Algorithm::Sampler;
  std::optional<std::int64_t> m;  // split sampler; nullopt = computed
  std::int64_t trials = 1;
  RngSeed seed = 0;
  std::string output;  // report JSON file; empty = stdout only
  std::string csv;     // optional CSV append target
};

struct ExperimentReport {
  ExperimentConfig config;
  std::int64_t n = 0;
  std::int64_t sigma = 0;
  std::int64_t m_used = 0;  // split sampler only, else 0
  std::int64_t trials = 0;
  std::int64_t simple_count = 0;
  double simple_frequency = 0.0;
  double standard_error = 0.0;
  double mean_loop_count = 0.0;
  double loop_count_stddev = 0.0;
  double mean_parallel_pairs = 0.0;
  std::int64_t allocation_errors = 0;
  std::map<std::string, BoundValue> bounds;
  double loop_lower_bound = 0.0;  // configuration-model expected-loop bound
  bool preconditions_ok = false;
  bool bound_vacuous = false;
  bool pass = false;
  double mean_trial_seconds = 0.0;
};

// Runs the configured trial loop with per-trial seeds base+t, evaluates every
// applicable bound, and scores the verdict:
//   samplers:  PASS iff (raw bound < 0, flagged vacuous) or
//              freq >= bound - 3*stderr, and no AllocationError when the
//              bound's preconditions hold;
//   baseline:  PASS iff mean loop count >= loop bound - 3*sem.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentReport& report);

struct ScalingPoint {
  std::int64_t sigma_target = 0;
  std::int64_t sigma = 0;  // achieved (n rounded to a feasible multiple)
  std::int64_t n = 0;
  int reps = 0;
  double median_seconds = 0.0;
};

struct ScalingReport {
  int k = 3;
  std::int64_t d = 0;
  std::vector<ScalingPoint> points;
  double slope = 0.0;  // least-squares slope of log t vs log sigma
  bool slope_defined = false;
  bool pass = false;  // slope <= 1.3
  std::string note;
};

// End-to-end sampler timings on d-regular sequences sized to hit the sigma
// targets as closely as divisibility allows.
ScalingReport runtime_scaling_probe(Uniformity k, const std::vector<std::int64_t>& sigma_targets,
                                    std::int64_t d = 10, RngSeed seed = 1);

// Smallest n in the grid where the two-block family gives a positive raw
// split-sampler bound with its preconditions satisfied; 0 when none does.
std::int64_t find_smallest_two_block_n(Uniformity k, const std::vector<std::int64_t>& grid);
std::vector<std::int64_t> default_two_block_grid();

}  // namespace hyperdeg
