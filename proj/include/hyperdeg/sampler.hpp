#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperdeg/allocation.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/rng.hpp"

namespace hyperdeg {

// The greedy fill produced a box above the sigma/k cap, so the allocation is
// unusable. This is an input-dependent outcome, not a bug.
class AllocationError : public std::runtime_error {
 public:
  explicit AllocationError(const std::string& message) : std::runtime_error(message) {}
};

// A round tried to draw from an empty box. Unreachable when the allocation is
// valid; if it fires, the sampler itself is broken.
class EmptyBoxDrawAttempt : public std::logic_error {
 public:
  explicit EmptyBoxDrawAttempt(const std::string& message) : std::logic_error(message) {}
};

// m outside [1, n] for the split sampler.
class InvalidM : public std::runtime_error {
 public:
  explicit InvalidM(const std::string& message) : std::runtime_error(message) {}
};

struct SamplerOutcome {
  Hypergraph hypergraph;
  SimplicityReport report;
  std::vector<std::int64_t> allocation_sizes;  // as drawn from (non-increasing)
  std::int64_t rounds = 0;                     // sigma / k
};

// Core drawing loop: sigma/k rounds; each round skips the lowest-index box of
// minimal size and draws one ball uniformly from every other box (ascending
// index), without replacement. Requires is_valid_allocation(boxes, pi, k)
// where k = box_count - 1.
std::vector<Edge> sample_edges(const DegreeSequence& pi, const BoxAllocation& boxes, Rng& rng);

// The allocations the two samplers draw from, after the size-descending
// relabel but before the cap check. Exposed so bounds can be evaluated on the
// exact allocation a run would use.
BoxAllocation prepared_allocation(const DegreeSequence& pi, Uniformity k);
BoxAllocation prepared_split_allocation(const DegreeSequence& pi, Uniformity k, std::int64_t m);

// Greedy k+1-box allocation, size-descending relabel, validity check, then
// the drawing loop. Throws AllocationError when the greedy fill breaks the
// sigma/k cap (the only failure mode left after validate_sequence).
SamplerOutcome sample_hypergraph(const DegreeSequence& pi, Uniformity k, RngSeed seed);

// Largest m in [1, n] with (k+1) * (d_m + ... + d_n) >= 4 * sigma.
// Exact integer arithmetic; requires k >= 4.
std::int64_t compute_m(const DegreeSequence& pi, Uniformity k);

// Split variant for k >= 4: the degree tail d_m..d_n greedily fills boxes
// 1..4 and the head d_1..d_{m-1} fills boxes 5..k+1, both keeping original
// vertex ids; then relabel, validate, draw.
SamplerOutcome sample_hypergraph_2(const DegreeSequence& pi, Uniformity k, std::int64_t m,
                                   RngSeed seed);

}  // namespace hyperdeg
