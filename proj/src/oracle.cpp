#include "hyperdeg/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hyperdeg {

namespace {

// Mutable mirror of a BoxAllocation during enumeration.
struct State {
  std::vector<std::vector<std::pair<VertexId, std::int64_t>>> boxes;
  std::vector<std::int64_t> sizes;
  std::int64_t total = 0;
};

State state_of(const BoxAllocation& alloc) {
  State s;
  s.boxes.reserve(alloc.box_count());
  s.sizes.reserve(alloc.box_count());
  for (const Box& b : alloc.boxes()) {
    s.boxes.push_back(b.counts);
    s.sizes.push_back(b.size);
    s.total += b.size;
  }
  return s;
}

// Box states are compared after one round of draws, so the flat key must
// distinguish box boundaries; -1 never collides with vertex ids or counts.
using Key = std::vector<std::int64_t>;

Key key_of(const State& s) {
  Key key;
  for (const auto& box : s.boxes) {
    for (const auto& [v, c] : box) {
      key.push_back(v);
      key.push_back(c);
    }
    key.push_back(-1);
  }
  return key;
}

using Memo = std::map<Key, OutcomeDistribution>;

const OutcomeDistribution& evaluate(const State& state, Memo& memo) {
  Key key = key_of(state);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  OutcomeDistribution dist;
  if (state.total == 0) {
    dist[{}] = Rational(1);
    return memo.emplace(std::move(key), std::move(dist)).first->second;
  }

  const std::size_t bc = state.boxes.size();
  std::size_t jmin = 0;
  for (std::size_t j = 1; j < bc; ++j) {
    if (state.sizes[j] < state.sizes[jmin]) jmin = j;
  }

  std::vector<std::size_t> active;  // boxes drawn from this round
  for (std::size_t b = 0; b < bc; ++b) {
    if (b != jmin) active.push_back(b);
  }

  // odometer over one support choice per active box
  std::vector<std::size_t> pick(active.size(), 0);
  for (;;) {
    Rational prob = 1;
    State next = state;
    std::vector<VertexId> chosen;
    chosen.reserve(active.size());
    for (std::size_t a = 0; a < active.size(); ++a) {
      const std::size_t b = active[a];
      const auto& [v, c] = state.boxes[b][pick[a]];
      prob *= Rational(c, state.sizes[b]);
      chosen.push_back(v);
      auto& nb = next.boxes[b];
      if (nb[pick[a]].second == 1)
        nb.erase(nb.begin() + static_cast<std::ptrdiff_t>(pick[a]));
      else
        --nb[pick[a]].second;
      --next.sizes[b];
      --next.total;
    }

    const Edge edge{chosen};
    for (const auto& [rest, q] : evaluate(next, memo)) {
      std::vector<Edge> outcome = rest;
      outcome.insert(std::upper_bound(outcome.begin(), outcome.end(), edge), edge);
      dist[std::move(outcome)] += prob * q;
    }

    // advance the odometer
    std::size_t a = 0;
    while (a < active.size()) {
      if (++pick[a] < state.boxes[active[a]].size()) break;
      pick[a] = 0;
      ++a;
    }
    if (a == active.size()) break;
  }

  return memo.emplace(std::move(key), std::move(dist)).first->second;
}

}  // namespace

std::vector<Edge> canonical_edge_multiset(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

OutcomeDistribution exact_distribution(const DegreeSequence& pi, const BoxAllocation& boxes,
                                       std::int64_t sigma_cap) {
  if (pi.sigma() > sigma_cap) {
    std::ostringstream msg;
    msg << "sigma = " << pi.sigma() << " exceeds the enumeration cap " << sigma_cap;
    throw TooLarge(msg.str());
  }
  if (boxes.box_count() < 4)
    throw std::invalid_argument("allocation needs at least 4 boxes (k >= 3)");
  const Uniformity k(static_cast<int>(boxes.box_count()) - 1);
  if (!is_valid_allocation(boxes, pi, k))
    throw std::invalid_argument("allocation does not belong to the sampler's family");

  Memo memo;
  return evaluate(state_of(boxes), memo);
}

Rational exact_simple_probability(const DegreeSequence& pi, const BoxAllocation& boxes,
                                  std::int64_t sigma_cap) {
  const OutcomeDistribution dist = exact_distribution(pi, boxes, sigma_cap);
  const Uniformity k(static_cast<int>(boxes.box_count()) - 1);
  Rational total = 0;
  for (const auto& [edges, p] : dist) {
    Hypergraph h(static_cast<std::int64_t>(pi.size()), k, edges);
    if (simplicity_report(h).is_simple) total += p;
  }
  return total;
}

}  // namespace hyperdeg
