#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hyperdeg/allocation.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/rational.hpp"

namespace hyperdeg {

// A probability lower bound plus what went into it. `value` is the raw
// formula result and may be negative (vacuous bound); experiment verdicts
// always compare against the raw value, never the clamp.
struct BoundValue {
  double value = 0.0;
  double clamped = 0.0;  // max(0, min(1, value))
  bool precondition_ok = true;
  std::map<std::string, bool> preconditions;
  std::map<std::string, double> components;
};

// 1 - ((k+1)/2) * (3k/2)^(k-2) * d_1^k / sigma^(k-2).
// Precondition: k(k+1) * d_{k+2} <= sigma (d_{k+2} = 0 when n < k+2).
BoundValue bound_simple_probability(const DegreeSequence& pi, Uniformity k);
Rational bound_simple_probability_exact(const DegreeSequence& pi, Uniformity k);

// 1 - (3k(k+1)/4) * d_m^3 / sigma, for the split sampler.
// Preconditions: k(k+1) * d_{k-2} <= sigma and 5k(k+1) * d_m <= 4 sigma.
BoundValue bound_simple_probability_split(const DegreeSequence& pi, Uniformity k, std::int64_t m);

// Allocation-specific bound:
// 1 - sum_l [ min_{j != l} binom(|B_j|, 2) * prod_{i != l} maxdeg(B_i) / |B_i| ],
// where maxdeg(B) is the largest degree among the box's support. A term is 0
// whenever some box other than the excluded one is empty.
BoundValue bound_simple_probability_allocation(const BoxAllocation& boxes, const DegreeSequence& pi);
Rational bound_simple_probability_allocation_exact(const BoxAllocation& boxes, const DegreeSequence& pi);

// Expected-loop-count lower bound for the k-block configuration model:
// sum_i binom(d_i, 2) / (binom(k, 2) * (sigma - 1)).
double config_model_loop_lower_bound(const DegreeSequence& pi, Uniformity k);

// Asymptotic-regime diagnostics for d_1 <= C * n^alpha style conditions.
struct AsymptoticDiagnostics {
  double c = 0.0;
  double alpha = 0.0;
  bool alpha_in_range = false;   // alpha < 1 - 2/k
  bool d1_within_cap = false;    // d_1 <= C * n^alpha
  bool applicable = false;       // both of the above
  double rho = 0.0;              // d_1 / d_n
  double rho_term = 0.0;         // d_1^2 * (rho / n)^(k-2)
  double deficit_ratio = 0.0;    // d_1^k / sigma^(k-2)
  bool deficit_vanishing = false;  // deficit_ratio < 1 (finite-n stand-in)
};

AsymptoticDiagnostics asymptotic_diagnostics(const DegreeSequence& pi, Uniformity k, double C,
                                         double alpha);

}  // namespace hyperdeg
