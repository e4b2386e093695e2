#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hyperdeg/allocation.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/oracle.hpp"
#include "hyperdeg/rng.hpp"
#include "hyperdeg/sampler.hpp"

namespace testutil {

inline hyperdeg::DegreeSequence seq(std::vector<std::int64_t> degrees, int k) {
  return hyperdeg::validate_sequence(std::move(degrees), hyperdeg::Uniformity(k));
}

inline hyperdeg::Box box(std::initializer_list<std::pair<hyperdeg::VertexId, std::int64_t>> counts) {
  hyperdeg::Box b;
  for (const auto& [v, c] : counts) {
    b.counts.emplace_back(v, c);
    b.size += c;
  }
  return b;
}

inline hyperdeg::BoxAllocation alloc(std::vector<hyperdeg::Box> boxes) {
  return hyperdeg::BoxAllocation(std::move(boxes));
}

// Monte Carlo estimate of P(simple) for the drawing loop on a fixed
// allocation, with per-trial seeds base+t.
inline double mc_simple_frequency(const hyperdeg::DegreeSequence& pi,
                                  const hyperdeg::BoxAllocation& boxes, std::int64_t trials,
                                  hyperdeg::RngSeed base_seed) {
  const int k = static_cast<int>(boxes.box_count()) - 1;
  std::int64_t simple = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    hyperdeg::Rng rng(hyperdeg::trial_seed(base_seed, static_cast<std::uint64_t>(t)));
    auto edges = hyperdeg::sample_edges(pi, boxes, rng);
    hyperdeg::Hypergraph h(static_cast<std::int64_t>(pi.size()), hyperdeg::Uniformity(k),
                           std::move(edges));
    if (hyperdeg::simplicity_report(h).is_simple) ++simple;
  }
  return static_cast<double>(simple) / static_cast<double>(trials);
}

}  // namespace testutil
