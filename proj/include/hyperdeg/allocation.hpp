#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperdeg/core.hpp"

namespace hyperdeg {

// One box of balls: copy counts per vertex plus the cached total size.
struct Box {
  std::vector<std::pair<VertexId, std::int64_t>> counts;  // ascending vertex id
  std::int64_t size = 0;

  bool operator==(const Box&) const = default;
};

// Tuple of ball boxes in a fixed index order.
class BoxAllocation {
 public:
  BoxAllocation() = default;
  // Normalizes each box: merges duplicate vertices, drops zero counts,
  // sorts by vertex id, recomputes sizes.
  explicit BoxAllocation(std::vector<Box> boxes);

  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t box_count() const { return boxes_.size(); }
  std::vector<std::int64_t> sizes() const;
  std::int64_t total_balls() const;
  bool operator==(const BoxAllocation&) const = default;

 private:
  std::vector<Box> boxes_;
};

// Largest-first greedy fill: for each vertex in the given order, all of its
// copies go into the lowest-index box of minimal current size. Vertex i
// (1-based) contributes pi.degrees()[i-1] balls.
BoxAllocation greedy_allocation(const DegreeSequence& pi, int ell);

// Same fill over a raw degree segment; vertex ids start at first_vertex.
// Degrees need not pass admissibility here (the split sampler feeds slices).
BoxAllocation greedy_allocation(const std::vector<std::int64_t>& degrees,
                                VertexId first_vertex, int ell);

// Stable size-descending reorder of the boxes (ties keep index order).
BoxAllocation sorted_by_size_desc(const BoxAllocation& alloc);

// Membership test for the sampler's allocation family: exactly k+1 boxes,
// every vertex of pi in exactly one box with exactly its degree in copies,
// sizes non-increasing, and k * |B_1| <= sigma.
bool is_valid_allocation(const BoxAllocation& alloc, const DegreeSequence& pi, Uniformity k);

// max(d_1, ceil(sigma/ell) + d_{ell+1}), the greedy box-size ceiling. The raw
// overload only needs a non-increasing positive list (no k-admissibility).
std::int64_t box_size_ceiling(const std::vector<std::int64_t>& degrees, int ell);
std::int64_t box_size_ceiling(const DegreeSequence& pi, int ell);

// Exact integer form of the same ceiling applied to every box:
// ell * |B_i| <= max(ell * d_1, sigma + ell * d_{ell+1}).
bool respects_size_ceiling(const BoxAllocation& alloc, const DegreeSequence& pi, int ell);

}  // namespace hyperdeg
