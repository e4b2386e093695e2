#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperdeg {

using VertexId = std::int32_t;

// First admissibility check that failed, in the order validate_sequence runs them.
enum class ValidationFailure {
  NotSorted,
  NonPositiveEntry,
  MaxDegreeTooLarge,
  SigmaNotDivisible,
};

const char* to_string(ValidationFailure f);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationFailure failure, const std::string& message)
      : std::runtime_error(message), failure_(failure) {}
  ValidationFailure failure() const { return failure_; }

 private:
  ValidationFailure failure_;
};

// Edge cardinality. The samplers need k >= 3; k is fixed per run.
class Uniformity {
 public:
  explicit Uniformity(int k) : k_(k) {
    if (k < 3) throw std::invalid_argument("uniformity k must be at least 3");
  }
  int value() const { return k_; }

 private:
  int k_;
};

// Non-increasing positive degree sequence that passed admissibility for some k.
// Construction goes through validate_sequence only.
class DegreeSequence {
 public:
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  std::int64_t sigma() const { return sigma_; }
  std::int64_t max_degree() const { return degrees_.front(); }
  // 1-based, with d_i = 0 for i > n (the convention every bound uses).
  std::int64_t degree_or_zero(std::size_t i) const {
    return (i >= 1 && i <= degrees_.size()) ? degrees_[i - 1] : 0;
  }

  friend DegreeSequence validate_sequence(std::vector<std::int64_t> degrees, Uniformity k);

 private:
  DegreeSequence(std::vector<std::int64_t> degrees, std::int64_t sigma)
      : degrees_(std::move(degrees)), sigma_(sigma) {}

  std::vector<std::int64_t> degrees_;
  std::int64_t sigma_;
};

// Checks, in order: non-increasing, all entries positive, k*d_1 <= sigma,
// k divides sigma. Throws ValidationError naming the first failed check.
DegreeSequence validate_sequence(std::vector<std::int64_t> degrees, Uniformity k);

// A k-multiset of vertices kept in canonical (ascending) order.
class Edge {
 public:
  explicit Edge(std::vector<VertexId> vertices);
  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t cardinality() const { return vertices_.size(); }
  // true when some vertex appears at least twice
  bool has_repeated_vertex() const;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

// Vertex set [1..n] plus a multiset of k-edges in creation order.
class Hypergraph {
 public:
  Hypergraph(std::int64_t n, Uniformity k, std::vector<Edge> edges);
  std::int64_t vertex_count() const { return n_; }
  int uniformity() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::int64_t n_;
  int k_;
  std::vector<Edge> edges_;
};

struct SimplicityReport {
  std::int64_t loop_count = 0;           // edges with a repeated vertex
  std::int64_t parallel_pair_count = 0;  // unordered pairs of equal edges
  bool is_simple = false;
  bool operator==(const SimplicityReport&) const = default;
};

// Positional degrees: entry i-1 is the number of edge slots holding vertex i,
// counted with multiplicity.
std::vector<std::int64_t> degree_sequence_of(const Hypergraph& h);

SimplicityReport simplicity_report(const Hypergraph& h);

// --- text formats ---

// One line of whitespace-separated integers.
std::vector<std::int64_t> parse_degree_line(const std::string& text);
std::string format_degree_line(const std::vector<std::int64_t>& degrees);
std::vector<std::int64_t> read_degree_file(const std::string& path);

// One edge per line: k space-separated 1-based vertex ids in canonical order,
// lines in creation order.
void write_edge_list(std::ostream& out, const Hypergraph& h);
void write_edge_list_file(const std::string& path, const Hypergraph& h);
Hypergraph read_edge_list(std::istream& in, std::int64_t n, Uniformity k);

}  // namespace hyperdeg
