#include "hyperdeg/core.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace hyperdeg {

const char* to_string(ValidationFailure f) {
  switch (f) {
    case ValidationFailure::NotSorted: return "NotSorted";
    case ValidationFailure::NonPositiveEntry: return "NonPositiveEntry";
    case ValidationFailure::MaxDegreeTooLarge: return "MaxDegreeTooLarge";
    case ValidationFailure::SigmaNotDivisible: return "SigmaNotDivisible";
  }
  return "Unknown";
}

DegreeSequence validate_sequence(std::vector<std::int64_t> degrees, Uniformity k) {
  if (degrees.empty()) throw std::invalid_argument("degree sequence is empty");

  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
    if (degrees[i] < degrees[i + 1]) {
      std::ostringstream msg;
      msg << "NotSorted: d[" << i + 1 << "] = " << degrees[i] << " < d[" << i + 2
          << "] = " << degrees[i + 1];
      throw ValidationError(ValidationFailure::NotSorted, msg.str());
    }
  }
  // sorted, so the minimum sits at the back
  if (degrees.back() <= 0) {
    std::ostringstream msg;
    msg << "NonPositiveEntry: d[" << degrees.size() << "] = " << degrees.back();
    throw ValidationError(ValidationFailure::NonPositiveEntry, msg.str());
  }

  std::int64_t sigma = 0;
  for (std::int64_t d : degrees) sigma += d;

  const std::int64_t kk = k.value();
  if (kk * degrees.front() > sigma) {
    std::ostringstream msg;
    msg << "MaxDegreeTooLarge: k * d_1 = " << kk * degrees.front() << " > sigma = " << sigma;
    throw ValidationError(ValidationFailure::MaxDegreeTooLarge, msg.str());
  }
  if (sigma % kk != 0) {
    std::ostringstream msg;
    msg << "SigmaNotDivisible: sigma = " << sigma << " is not a multiple of k = " << kk;
    throw ValidationError(ValidationFailure::SigmaNotDivisible, msg.str());
  }
  return DegreeSequence(std::move(degrees), sigma);
}

Edge::Edge(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("edge needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
}

bool Edge::has_repeated_vertex() const {
  return std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end();
}

Hypergraph::Hypergraph(std::int64_t n, Uniformity k, std::vector<Edge> edges)
    : n_(n), k_(k.value()), edges_(std::move(edges)) {
  if (n < 0 || n > std::numeric_limits<VertexId>::max())
    throw std::invalid_argument("vertex count out of range");
  for (const Edge& e : edges_) {
    if (static_cast<int>(e.cardinality()) != k_)
      throw std::invalid_argument("edge cardinality does not match uniformity");
    for (VertexId v : e.vertices()) {
      if (v < 1 || v > n) throw std::invalid_argument("edge vertex id out of range");
    }
  }
}

std::vector<std::int64_t> degree_sequence_of(const Hypergraph& h) {
  std::vector<std::int64_t> deg(static_cast<std::size_t>(h.vertex_count()), 0);
  for (const Edge& e : h.edges()) {
    for (VertexId v : e.vertices()) ++deg[static_cast<std::size_t>(v) - 1];
  }
  return deg;
}

SimplicityReport simplicity_report(const Hypergraph& h) {
  SimplicityReport report;
  for (const Edge& e : h.edges()) {
    if (e.has_repeated_vertex()) ++report.loop_count;
  }
  std::vector<Edge> sorted = h.edges();
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const std::int64_t run = static_cast<std::int64_t>(j - i);
    report.parallel_pair_count += run * (run - 1) / 2;
    i = j;
  }
  report.is_simple = report.loop_count == 0 && report.parallel_pair_count == 0;
  return report;
}

std::vector<std::int64_t> parse_degree_line(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::int64_t> degrees;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    degrees.push_back(value);
  }
  return degrees;
}

std::string format_degree_line(const std::vector<std::int64_t>& degrees) {
  std::ostringstream out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out << ' ';
    out << degrees[i];
  }
  out << '\n';
  return out.str();
}

std::vector<std::int64_t> read_degree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open degree file: " + path);
  std::ostringstream all;
  all << in.rdbuf();
  return parse_degree_line(all.str());
}

void write_edge_list(std::ostream& out, const Hypergraph& h) {
  for (const Edge& e : h.edges()) {
    const auto& vs = e.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out << ' ';
      out << vs[i];
    }
    out << '\n';
  }
}

void write_edge_list_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_edge_list(out, h);
}

Hypergraph read_edge_list(std::istream& in, std::int64_t n, Uniformity k) {
  std::vector<Edge> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<VertexId> vs;
    std::int64_t v = 0;
    while (ls >> v) vs.push_back(static_cast<VertexId>(v));
    if (static_cast<int>(vs.size()) != k.value())
      throw std::invalid_argument("edge line does not have k vertices: " + line);
    edges.emplace_back(std::move(vs));
  }
  return Hypergraph(n, k, std::move(edges));
}

}  // namespace hyperdeg
