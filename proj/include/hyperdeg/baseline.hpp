#pragma once

#include "hyperdeg/core.hpp"
#include "hyperdeg/rng.hpp"
#include "hyperdeg/sampler.hpp"

namespace hyperdeg {

// Generalized configuration model: lay out sigma half-edges (d_i copies of
// vertex i), shuffle them uniformly, and cut the permutation into consecutive
// blocks of k. Matches every degree by construction; loops and parallel edges
// are both possible.
SamplerOutcome config_model_sample(const DegreeSequence& pi, Uniformity k, Rng& rng);
SamplerOutcome config_model_sample(const DegreeSequence& pi, Uniformity k, RngSeed seed);

}  // namespace hyperdeg
