#include "hyperdeg/sampler.hpp"

#include <algorithm>
#include <sstream>

namespace hyperdeg {

namespace {

// Drawing loop without the validity re-check; callers guarantee a valid
// allocation whose box count is k+1 and whose total is sigma.
std::vector<Edge> draw_all_rounds(const DegreeSequence& pi, const BoxAllocation& alloc, Rng& rng) {
  const std::size_t box_count = alloc.box_count();
  const int k = static_cast<int>(box_count) - 1;

  // flatten to ball vectors so one draw is O(1) via swap-remove
  std::vector<std::vector<VertexId>> balls(box_count);
  std::vector<std::int64_t> size(box_count);
  for (std::size_t b = 0; b < box_count; ++b) {
    const Box& box = alloc.boxes()[b];
    balls[b].reserve(static_cast<std::size_t>(box.size));
    for (const auto& [v, c] : box.counts) {
      for (std::int64_t r = 0; r < c; ++r) balls[b].push_back(v);
    }
    size[b] = box.size;
  }

  const std::int64_t rounds = pi.sigma() / k;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(rounds));
  std::vector<VertexId> drawn(static_cast<std::size_t>(k));

  for (std::int64_t round = 0; round < rounds; ++round) {
    std::size_t jmin = 0;
    for (std::size_t j = 1; j < box_count; ++j) {
      if (size[j] < size[jmin]) jmin = j;
    }
    std::size_t slot = 0;
    for (std::size_t b = 0; b < box_count; ++b) {
      if (b == jmin) continue;
      if (size[b] == 0) {
        std::ostringstream msg;
        msg << "draw from empty box " << b + 1 << " in round " << round + 1;
        throw EmptyBoxDrawAttempt(msg.str());
      }
      const std::size_t idx = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(size[b])));
      drawn[slot++] = balls[b][idx];
      balls[b][idx] = balls[b][static_cast<std::size_t>(size[b]) - 1];
      --size[b];
    }
    edges.push_back(Edge(drawn));
  }
  return edges;
}

// k | sigma and k * d_1 <= sigma; samplers re-check so a hand-built
// DegreeSequence validated for a different k cannot slip through.
void require_admissible(const DegreeSequence& pi, Uniformity k) {
  if (pi.sigma() % k.value() != 0)
    throw ValidationError(ValidationFailure::SigmaNotDivisible,
                          "sigma is not a multiple of this k");
  if (k.value() * pi.max_degree() > pi.sigma())
    throw ValidationError(ValidationFailure::MaxDegreeTooLarge,
                          "k * d_1 exceeds sigma for this k");
}

SamplerOutcome finish(const DegreeSequence& pi, Uniformity k, const BoxAllocation& alloc,
                      Rng& rng) {
  std::vector<Edge> edges = draw_all_rounds(pi, alloc, rng);
  Hypergraph h(static_cast<std::int64_t>(pi.size()), k, std::move(edges));
  SimplicityReport report = simplicity_report(h);
  return SamplerOutcome{std::move(h), report, alloc.sizes(), pi.sigma() / k.value()};
}

}  // namespace

std::vector<Edge> sample_edges(const DegreeSequence& pi, const BoxAllocation& boxes, Rng& rng) {
  if (boxes.box_count() < 4)
    throw std::invalid_argument("allocation needs at least 4 boxes (k >= 3)");
  const Uniformity k(static_cast<int>(boxes.box_count()) - 1);
  if (!is_valid_allocation(boxes, pi, k))
    throw std::invalid_argument("allocation does not belong to the sampler's family");
  return draw_all_rounds(pi, boxes, rng);
}

BoxAllocation prepared_allocation(const DegreeSequence& pi, Uniformity k) {
  return sorted_by_size_desc(greedy_allocation(pi, k.value() + 1));
}

BoxAllocation prepared_split_allocation(const DegreeSequence& pi, Uniformity k, std::int64_t m) {
  if (k.value() < 4) throw std::invalid_argument("split sampler needs k >= 4");
  const std::int64_t n = static_cast<std::int64_t>(pi.size());
  if (m < 1 || m > n) {
    std::ostringstream msg;
    msg << "m = " << m << " outside [1, " << n << "]";
    throw InvalidM(msg.str());
  }
  const auto& d = pi.degrees();
  const std::vector<std::int64_t> head(d.begin(), d.begin() + (m - 1));
  const std::vector<std::int64_t> tail(d.begin() + (m - 1), d.end());

  // tail into 4 boxes, head into the remaining k-3, original vertex ids
  BoxAllocation tail_boxes = greedy_allocation(tail, static_cast<VertexId>(m), 4);
  BoxAllocation head_boxes = greedy_allocation(head, 1, k.value() - 3);

  std::vector<Box> combined = tail_boxes.boxes();
  for (const Box& b : head_boxes.boxes()) combined.push_back(b);
  return sorted_by_size_desc(BoxAllocation(std::move(combined)));
}

SamplerOutcome sample_hypergraph(const DegreeSequence& pi, Uniformity k, RngSeed seed) {
  require_admissible(pi, k);
  BoxAllocation alloc = prepared_allocation(pi, k);
  if (!is_valid_allocation(alloc, pi, k)) {
    // everything but the size cap holds by construction
    std::ostringstream msg;
    msg << "greedy allocation exceeds the sigma/k cap: largest box " << alloc.sizes().front()
        << ", cap " << pi.sigma() / k.value();
    throw AllocationError(msg.str());
  }
  Rng rng(seed);
  return finish(pi, k, alloc, rng);
}

std::int64_t compute_m(const DegreeSequence& pi, Uniformity k) {
  if (k.value() < 4) throw std::invalid_argument("compute_m needs k >= 4");
  const std::int64_t kk = k.value();
  std::int64_t tail = 0;
  for (std::int64_t m = static_cast<std::int64_t>(pi.size()); m >= 1; --m) {
    tail += pi.degrees()[static_cast<std::size_t>(m) - 1];
    if ((kk + 1) * tail >= 4 * pi.sigma()) return m;
  }
  // m = 1 always qualifies: (k+1) * sigma >= 4 * sigma for k >= 3
  return 1;
}

SamplerOutcome sample_hypergraph_2(const DegreeSequence& pi, Uniformity k, std::int64_t m,
                                   RngSeed seed) {
  require_admissible(pi, k);
  BoxAllocation alloc = prepared_split_allocation(pi, k, m);

  if (!is_valid_allocation(alloc, pi, k)) {
    std::ostringstream msg;
    msg << "split allocation exceeds the sigma/k cap: largest box " << alloc.sizes().front()
        << ", cap " << pi.sigma() / k.value() << ", m = " << m;
    throw AllocationError(msg.str());
  }
  Rng rng(seed);
  return finish(pi, k, alloc, rng);
}

}  // namespace hyperdeg
