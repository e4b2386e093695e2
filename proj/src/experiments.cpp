#include "hyperdeg/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hyperdeg/baseline.hpp"
#include "hyperdeg/sampler.hpp"

namespace hyperdeg {

namespace {

// shared divisibility repair: add (k - sigma mod k) mod k ones, each to the
// rightmost entry that can grow without breaking the non-increasing order
void repair_divisibility(std::vector<std::int64_t>& d, int k) {
  std::int64_t sigma = std::accumulate(d.begin(), d.end(), std::int64_t{0});
  std::int64_t need = (k - sigma % k) % k;
  while (need > 0) {
    std::size_t j = d.size() - 1;
    while (j > 0 && d[j] + 1 > d[j - 1]) --j;
    ++d[j];
    --need;
  }
}

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Sampler: return "greedy";
    case Algorithm::SplitSampler: return "split";
    case Algorithm::Baseline: return "baseline";
  }
  return "unknown";
}

DegreeSequence generate_regular(std::int64_t n, std::int64_t d, Uniformity k) {
  if (n < 1 || d < 1) throw InfeasibleParameters("regular sequence needs n >= 1 and d >= 1");
  if ((n * d) % k.value() != 0) {
    std::ostringstream msg;
    msg << "k = " << k.value() << " does not divide n*d = " << n * d;
    throw InfeasibleParameters(msg.str());
  }
  try {
    return validate_sequence(std::vector<std::int64_t>(static_cast<std::size_t>(n), d), k);
  } catch (const ValidationError& e) {
    throw InfeasibleParameters(std::string("regular sequence inadmissible: ") + e.what());
  }
}

DegreeSequence generate_two_block(std::int64_t n, Uniformity k) {
  if (n < 2) throw InfeasibleRepair("two-block family needs n >= 2");
  const double ln = std::log(static_cast<double>(n));
  std::int64_t head_count = static_cast<std::int64_t>(std::ceil(ln));
  head_count = std::min(head_count, n);
  std::int64_t head = static_cast<std::int64_t>(std::floor(static_cast<double>(n) / (ln * ln * ln)));
  const std::int64_t tail =
      static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n)) / ln));
  if (tail < 1) {
    std::ostringstream msg;
    msg << "tail value floors to zero at n = " << n;
    throw InfeasibleRepair(msg.str());
  }
  if (head < tail) head = tail;  // keep the sequence non-increasing

  std::vector<std::int64_t> d(static_cast<std::size_t>(head_count), head);
  d.resize(static_cast<std::size_t>(n), tail);
  repair_divisibility(d, k.value());
  try {
    return validate_sequence(std::move(d), k);
  } catch (const ValidationError& e) {
    std::ostringstream msg;
    msg << "repair failed at n = " << n << ": " << e.what();
    throw InfeasibleRepair(msg.str());
  }
}

DegreeSequence generate_random_valid(std::int64_t n_max, std::int64_t d_max, Uniformity k,
                                     Rng& rng) {
  if (n_max < k.value() || d_max < 1)
    throw InfeasibleParameters("random sequence needs n_max >= k and d_max >= 1");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::int64_t n =
        k.value() + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n_max - k.value() + 1)));
    std::vector<std::int64_t> d(static_cast<std::size_t>(n));
    for (auto& x : d) x = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(d_max)));
    std::sort(d.begin(), d.end(), std::greater<>());
    repair_divisibility(d, k.value());
    try {
      return validate_sequence(std::move(d), k);
    } catch (const ValidationError&) {
      continue;  // max degree can exceed sigma/k for small n; redraw
    }
  }
  throw InfeasibleParameters("rejection sampling found no admissible sequence");
}

namespace {

DegreeSequence build_sequence(const SequenceSpec& spec, Uniformity k) {
  switch (spec.kind) {
    case SequenceSpec::Kind::Regular: return generate_regular(spec.n, spec.d, k);
    case SequenceSpec::Kind::TwoBlock: return generate_two_block(spec.n, k);
    case SequenceSpec::Kind::Explicit: return validate_sequence(spec.degrees, k);
  }
  throw std::invalid_argument("unknown sequence kind");
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("experiment needs at least one trial");
  const Uniformity k(config.k);
  const DegreeSequence pi = build_sequence(config.sequence, k);

  ExperimentReport rep;
  rep.config = config;
  rep.n = static_cast<std::int64_t>(pi.size());
  rep.sigma = pi.sigma();
  rep.trials = config.trials;

  std::int64_t m = 0;
  if (config.algorithm == Algorithm::SplitSampler) {
    m = config.m ? *config.m : compute_m(pi, k);
    rep.m_used = m;
  }

  rep.bounds.emplace("sampler", bound_simple_probability(pi, k));
  if (k.value() >= 4) {
    const std::int64_t mb = (config.algorithm == Algorithm::SplitSampler) ? m : compute_m(pi, k);
    rep.bounds.emplace("split_sampler", bound_simple_probability_split(pi, k, mb));
  }
  if (config.algorithm == Algorithm::Sampler) {
    const BoxAllocation alloc = prepared_allocation(pi, k);
    if (is_valid_allocation(alloc, pi, k))
      rep.bounds.emplace("allocation", bound_simple_probability_allocation(alloc, pi));
  } else if (config.algorithm == Algorithm::SplitSampler) {
    const BoxAllocation alloc = prepared_split_allocation(pi, k, m);
    if (is_valid_allocation(alloc, pi, k))
      rep.bounds.emplace("allocation", bound_simple_probability_allocation(alloc, pi));
  }
  rep.loop_lower_bound = config_model_loop_lower_bound(pi, k);

  std::int64_t successes = 0;
  std::int64_t loops_sum = 0;
  double loops_sq_sum = 0.0;
  std::int64_t parallel_sum = 0;

  const double t0 = now_seconds();
  for (std::int64_t t = 0; t < config.trials; ++t) {
    const RngSeed seed = trial_seed(config.seed, static_cast<std::uint64_t>(t));
    try {
      SamplerOutcome out = [&] {
        switch (config.algorithm) {
          case Algorithm::Sampler: return sample_hypergraph(pi, k, seed);
          case Algorithm::SplitSampler: return sample_hypergraph_2(pi, k, m, seed);
          case Algorithm::Baseline: return config_model_sample(pi, k, seed);
        }
        throw std::invalid_argument("unknown algorithm");
      }();
      ++successes;
      if (out.report.is_simple) ++rep.simple_count;
      loops_sum += out.report.loop_count;
      loops_sq_sum += static_cast<double>(out.report.loop_count) *
                      static_cast<double>(out.report.loop_count);
      parallel_sum += out.report.parallel_pair_count;
    } catch (const AllocationError&) {
      ++rep.allocation_errors;
    }
  }
  rep.mean_trial_seconds = (now_seconds() - t0) / static_cast<double>(config.trials);

  if (successes > 0) {
    const double ns = static_cast<double>(successes);
    rep.simple_frequency = static_cast<double>(rep.simple_count) / ns;
    rep.standard_error = std::sqrt(rep.simple_frequency * (1.0 - rep.simple_frequency) / ns);
    rep.mean_loop_count = static_cast<double>(loops_sum) / ns;
    rep.mean_parallel_pairs = static_cast<double>(parallel_sum) / ns;
    const double var = loops_sq_sum / ns - rep.mean_loop_count * rep.mean_loop_count;
    rep.loop_count_stddev = var > 0 ? std::sqrt(var) : 0.0;
  }

  if (config.algorithm == Algorithm::Baseline) {
    rep.preconditions_ok = true;
    rep.bound_vacuous = false;
    const double sem =
        successes > 0 ? rep.loop_count_stddev / std::sqrt(static_cast<double>(successes)) : 0.0;
    rep.pass = successes > 0 && rep.mean_loop_count >= rep.loop_lower_bound - 3.0 * sem;
  } else {
    const BoundValue& bound = config.algorithm == Algorithm::Sampler
                                  ? rep.bounds.at("sampler")
                                  : rep.bounds.at("split_sampler");
    rep.preconditions_ok = bound.precondition_ok;
    rep.bound_vacuous = bound.value < 0.0;
    const bool frequency_ok =
        rep.bound_vacuous ||
        (successes > 0 && rep.simple_frequency >= bound.value - 3.0 * rep.standard_error);
    const bool errors_ok = !rep.preconditions_ok || rep.allocation_errors == 0;
    rep.pass = frequency_ok && errors_ok;
  }
  return rep;
}

std::string experiment_csv_header() {
  return "algorithm,kind,n,d,k,m,sigma,trials,seed,simple_count,simple_frequency,"
         "standard_error,mean_loop_count,mean_parallel_pairs,allocation_errors,"
         "bound_value,bound_preconditions_ok,bound_vacuous,loop_lower_bound,pass\n";
}

std::string experiment_csv_row(const ExperimentReport& rep) {
  const char* kind = rep.config.sequence.kind == SequenceSpec::Kind::Regular     ? "regular"
                     : rep.config.sequence.kind == SequenceSpec::Kind::TwoBlock ? "two_block"
                                                                                 : "explicit";
  const BoundValue* bound = nullptr;
  if (rep.config.algorithm == Algorithm::Sampler)
    bound = &rep.bounds.at("sampler");
  else if (rep.config.algorithm == Algorithm::SplitSampler)
    bound = &rep.bounds.at("split_sampler");

  std::ostringstream out;
  out << to_string(rep.config.algorithm) << ',' << kind << ',' << rep.n << ','
      << rep.config.sequence.d << ',' << rep.config.k << ',' << rep.m_used << ',' << rep.sigma
      << ',' << rep.trials << ',' << rep.config.seed << ',' << rep.simple_count << ','
      << rep.simple_frequency << ',' << rep.standard_error << ',' << rep.mean_loop_count << ','
      << rep.mean_parallel_pairs << ',' << rep.allocation_errors << ','
      << (bound ? bound->value : 0.0) << ',' << (bound ? bound->precondition_ok : true) << ','
      << rep.bound_vacuous << ',' << rep.loop_lower_bound << ',' << rep.pass << '\n';
  return out.str();
}

ScalingReport runtime_scaling_probe(Uniformity k, const std::vector<std::int64_t>& sigma_targets,
                                    std::int64_t d, RngSeed seed) {
  ScalingReport rep;
  rep.k = k.value();
  rep.d = d;

  std::vector<std::int64_t> targets = sigma_targets;
  std::sort(targets.begin(), targets.end());

  for (const std::int64_t target : targets) {
    // n must keep n*d divisible by k and n >= k
    const std::int64_t step = k.value() / std::gcd(static_cast<std::int64_t>(k.value()), d);
    const std::int64_t min_n = ((k.value() + step - 1) / step) * step;
    std::int64_t n = static_cast<std::int64_t>(
                         std::llround(static_cast<double>(target) / static_cast<double>(d * step))) *
                     step;
    n = std::max(n, min_n);

    const DegreeSequence pi = generate_regular(n, d, k);
    ScalingPoint point;
    point.sigma_target = target;
    point.n = n;
    point.sigma = pi.sigma();
    point.reps = pi.sigma() < 50000 ? 31 : pi.sigma() < 500000 ? 11 : 5;

    sample_hypergraph(pi, k, seed);  // warm-up, untimed
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(point.reps));
    for (int r = 0; r < point.reps; ++r) {
      const double t0 = now_seconds();
      sample_hypergraph(pi, k, trial_seed(seed, static_cast<std::uint64_t>(r) + 1));
      times.push_back(now_seconds() - t0);
    }
    std::sort(times.begin(), times.end());
    point.median_seconds = times[times.size() / 2];
    rep.points.push_back(point);
  }

  if (rep.points.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double np = static_cast<double>(rep.points.size());
    for (const ScalingPoint& p : rep.points) {
      const double x = std::log(static_cast<double>(p.sigma));
      const double y = std::log(std::max(p.median_seconds, 1e-9));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    rep.slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
    rep.slope_defined = true;
    rep.pass = rep.slope <= 1.3;
  } else {
    rep.note = "insufficient points for a slope (need at least two sizes)";
  }
  return rep;
}

std::int64_t find_smallest_two_block_n(Uniformity k, const std::vector<std::int64_t>& grid) {
  if (k.value() < 4) throw std::invalid_argument("split bound search needs k >= 4");
  std::vector<std::int64_t> sorted_grid = grid;
  std::sort(sorted_grid.begin(), sorted_grid.end());
  for (const std::int64_t n : sorted_grid) {
    try {
      const DegreeSequence pi = generate_two_block(n, k);
      const std::int64_t m = compute_m(pi, k);
      const BoundValue bound = bound_simple_probability_split(pi, k, m);
      if (bound.value > 0.0 && bound.precondition_ok) return n;
    } catch (const InfeasibleRepair&) {
      continue;
    }
  }
  return 0;
}

std::vector<std::int64_t> default_two_block_grid() {
  return {64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
}

}  // namespace hyperdeg
