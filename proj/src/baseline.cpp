#include "hyperdeg/baseline.hpp"

#include <utility>

namespace hyperdeg {

SamplerOutcome config_model_sample(const DegreeSequence& pi, Uniformity k, Rng& rng) {
  const std::int64_t sigma = pi.sigma();
  const int kk = k.value();
  if (sigma % kk != 0)
    throw ValidationError(ValidationFailure::SigmaNotDivisible,
                          "sigma is not a multiple of this k");

  std::vector<VertexId> half_edges;
  half_edges.reserve(static_cast<std::size_t>(sigma));
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (std::int64_t c = 0; c < pi.degrees()[i]; ++c)
      half_edges.push_back(static_cast<VertexId>(i + 1));
  }

  // Fisher-Yates
  for (std::size_t i = half_edges.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(half_edges[i], half_edges[j]);
  }

  const std::int64_t rounds = sigma / kk;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(rounds));
  for (std::int64_t r = 0; r < rounds; ++r) {
    std::vector<VertexId> block(half_edges.begin() + r * kk, half_edges.begin() + (r + 1) * kk);
    edges.push_back(Edge(std::move(block)));
  }

  Hypergraph h(static_cast<std::int64_t>(pi.size()), k, std::move(edges));
  SimplicityReport report = simplicity_report(h);
  return SamplerOutcome{std::move(h), report, {}, rounds};
}

SamplerOutcome config_model_sample(const DegreeSequence& pi, Uniformity k, RngSeed seed) {
  Rng rng(seed);
  return config_model_sample(pi, k, rng);
}

}  // namespace hyperdeg
