#include "hyperdeg/allocation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperdeg {

BoxAllocation::BoxAllocation(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  for (Box& b : boxes_) {
    std::sort(b.counts.begin(), b.counts.end());
    // merge repeated vertices, drop non-positive counts
    std::vector<std::pair<VertexId, std::int64_t>> merged;
    for (const auto& [v, c] : b.counts) {
      if (c <= 0) continue;
      if (!merged.empty() && merged.back().first == v)
        merged.back().second += c;
      else
        merged.emplace_back(v, c);
    }
    b.counts = std::move(merged);
    b.size = 0;
    for (const auto& [v, c] : b.counts) b.size += c;
  }
}

std::vector<std::int64_t> BoxAllocation::sizes() const {
  std::vector<std::int64_t> s;
  s.reserve(boxes_.size());
  for (const Box& b : boxes_) s.push_back(b.size);
  return s;
}

std::int64_t BoxAllocation::total_balls() const {
  std::int64_t total = 0;
  for (const Box& b : boxes_) total += b.size;
  return total;
}

BoxAllocation greedy_allocation(const std::vector<std::int64_t>& degrees, VertexId first_vertex,
                                int ell) {
  if (ell < 1) throw std::invalid_argument("greedy_allocation needs at least one box");
  std::vector<Box> boxes(static_cast<std::size_t>(ell));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::size_t jmin = 0;
    for (std::size_t j = 1; j < boxes.size(); ++j) {
      if (boxes[j].size < boxes[jmin].size) jmin = j;
    }
    const VertexId v = first_vertex + static_cast<VertexId>(i);
    boxes[jmin].counts.emplace_back(v, degrees[i]);
    boxes[jmin].size += degrees[i];
  }
  return BoxAllocation(std::move(boxes));
}

BoxAllocation greedy_allocation(const DegreeSequence& pi, int ell) {
  return greedy_allocation(pi.degrees(), 1, ell);
}

BoxAllocation sorted_by_size_desc(const BoxAllocation& alloc) {
  std::vector<Box> boxes = alloc.boxes();
  std::stable_sort(boxes.begin(), boxes.end(),
                   [](const Box& a, const Box& b) { return a.size > b.size; });
  return BoxAllocation(std::move(boxes));
}

bool is_valid_allocation(const BoxAllocation& alloc, const DegreeSequence& pi, Uniformity k) {
  if (alloc.box_count() != static_cast<std::size_t>(k.value()) + 1) return false;

  const std::size_t n = pi.size();
  std::vector<std::int64_t> placed(n, 0);
  std::vector<bool> seen(n, false);
  for (const Box& b : alloc.boxes()) {
    for (const auto& [v, c] : b.counts) {
      if (v < 1 || static_cast<std::size_t>(v) > n) return false;
      const std::size_t idx = static_cast<std::size_t>(v) - 1;
      if (seen[idx]) return false;  // vertex split across boxes
      seen[idx] = true;
      placed[idx] = c;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i] != pi.degrees()[i]) return false;
  }

  const auto sizes = alloc.sizes();
  for (std::size_t j = 0; j + 1 < sizes.size(); ++j) {
    if (sizes[j] < sizes[j + 1]) return false;
  }
  return k.value() * sizes.front() <= pi.sigma();
}

std::int64_t box_size_ceiling(const std::vector<std::int64_t>& degrees, int ell) {
  if (ell < 1) throw std::invalid_argument("box_size_ceiling needs ell >= 1");
  if (degrees.empty()) throw std::invalid_argument("box_size_ceiling needs a nonempty sequence");
  std::int64_t sigma = 0;
  for (std::int64_t d : degrees) sigma += d;
  const std::int64_t ceil_part = (sigma + ell - 1) / ell;
  const std::size_t next_index = static_cast<std::size_t>(ell);  // 0-based d_{ell+1}
  const std::int64_t next = next_index < degrees.size() ? degrees[next_index] : 0;
  return std::max(degrees.front(), ceil_part + next);
}

std::int64_t box_size_ceiling(const DegreeSequence& pi, int ell) {
  return box_size_ceiling(pi.degrees(), ell);
}

bool respects_size_ceiling(const BoxAllocation& alloc, const DegreeSequence& pi, int ell) {
  if (ell < 1) throw std::invalid_argument("respects_size_ceiling needs ell >= 1");
  const std::int64_t sigma = pi.sigma();
  const std::int64_t next = pi.degree_or_zero(static_cast<std::size_t>(ell) + 1);
  const std::int64_t rhs = std::max(ell * pi.max_degree(), sigma + ell * next);
  for (const Box& b : alloc.boxes()) {
    if (ell * b.size > rhs) return false;
  }
  return true;
}

}  // namespace hyperdeg
