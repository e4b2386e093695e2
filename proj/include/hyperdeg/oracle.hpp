#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperdeg/allocation.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/rational.hpp"

namespace hyperdeg {

// Instance exceeds the exact-enumeration cap.
class TooLarge : public std::runtime_error {
 public:
  explicit TooLarge(const std::string& message) : std::runtime_error(message) {}
};

inline constexpr std::int64_t kDefaultOracleSigmaCap = 14;

// Outcomes keyed by canonical edge multiset: each edge ascending, edges sorted.
using OutcomeDistribution = std::map<std::vector<Edge>, Rational>;

std::vector<Edge> canonical_edge_multiset(std::vector<Edge> edges);

// Exact output distribution of the drawing loop on this allocation, by full
// enumeration of the draw tree with memoization on box states. Probabilities
// are exact rationals and sum to 1. Throws TooLarge above the sigma cap.
OutcomeDistribution exact_distribution(const DegreeSequence& pi, const BoxAllocation& boxes,
                                       std::int64_t sigma_cap = kDefaultOracleSigmaCap);

// Total probability of outcomes that are simple hypergraphs.
Rational exact_simple_probability(const DegreeSequence& pi, const BoxAllocation& boxes,
                                  std::int64_t sigma_cap = kDefaultOracleSigmaCap);

}  // namespace hyperdeg
