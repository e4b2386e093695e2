#include "hyperdeg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperdeg/sampler.hpp"

namespace hyperdeg {

namespace {

double clamp01(double x) { return std::max(0.0, std::min(1.0, x)); }

bool all_ok(const std::map<std::string, bool>& preconditions) {
  for (const auto& [name, ok] : preconditions) {
    if (!ok) return false;
  }
  return true;
}

std::int64_t pair_count(std::int64_t size) { return size * (size - 1) / 2; }

// largest degree among the box's support, 0 for an empty box
std::int64_t box_max_degree(const Box& b, const DegreeSequence& pi) {
  std::int64_t best = 0;
  for (const auto& [v, c] : b.counts) {
    best = std::max(best, pi.degree_or_zero(static_cast<std::size_t>(v)));
  }
  return best;
}

}  // namespace

BoundValue bound_simple_probability(const DegreeSequence& pi, Uniformity k) {
  const double kk = k.value();
  const double d1 = static_cast<double>(pi.max_degree());
  const double sigma = static_cast<double>(pi.sigma());

  // log-space keeps large k / large sigma away from overflow
  const double log_deficit = std::log((kk + 1) / 2) + (kk - 2) * std::log(1.5 * kk) +
                             kk * std::log(d1) - (kk - 2) * std::log(sigma);
  const double deficit = std::exp(log_deficit);

  BoundValue out;
  out.value = 1.0 - deficit;
  out.clamped = clamp01(out.value);
  const std::int64_t k_i = k.value();
  out.preconditions["k(k+1) * d_{k+2} <= sigma"] =
      k_i * (k_i + 1) * pi.degree_or_zero(static_cast<std::size_t>(k_i) + 2) <= pi.sigma();
  out.precondition_ok = all_ok(out.preconditions);
  out.components["deficit"] = deficit;
  out.components["d1"] = d1;
  out.components["sigma"] = sigma;
  return out;
}

Rational bound_simple_probability_exact(const DegreeSequence& pi, Uniformity k) {
  const unsigned kk = static_cast<unsigned>(k.value());
  const BigInt d1 = pi.max_degree();
  const BigInt sigma = pi.sigma();
  // ((k+1)/2) * (3k/2)^(k-2) = (k+1) * (3k)^(k-2) / 2^(k-1)
  const BigInt num = BigInt(kk + 1) * pow(BigInt(3 * kk), kk - 2) * pow(d1, kk);
  const BigInt den = pow(BigInt(2), kk - 1) * pow(sigma, kk - 2);
  return Rational(1) - Rational(num, den);
}

BoundValue bound_simple_probability_split(const DegreeSequence& pi, Uniformity k, std::int64_t m) {
  if (k.value() < 4) throw std::invalid_argument("split bound needs k >= 4");
  const std::int64_t n = static_cast<std::int64_t>(pi.size());
  if (m < 1 || m > n) throw InvalidM("split bound: m outside [1, n]");

  const std::int64_t k_i = k.value();
  const std::int64_t dm = pi.degrees()[static_cast<std::size_t>(m) - 1];
  const double sigma = static_cast<double>(pi.sigma());
  const double deficit =
      0.75 * k_i * (k_i + 1) * static_cast<double>(dm) * dm * dm / sigma;

  BoundValue out;
  out.value = 1.0 - deficit;
  out.clamped = clamp01(out.value);
  out.preconditions["k(k+1) * d_{k-2} <= sigma"] =
      k_i * (k_i + 1) * pi.degree_or_zero(static_cast<std::size_t>(k_i) - 2) <= pi.sigma();
  out.preconditions["5k(k+1) * d_m <= 4 * sigma"] =
      5 * k_i * (k_i + 1) * dm <= 4 * pi.sigma();
  out.preconditions["m == largest feasible m"] = m == compute_m(pi, k);
  out.precondition_ok = all_ok(out.preconditions);
  out.components["deficit"] = deficit;
  out.components["d_m"] = static_cast<double>(dm);
  out.components["m"] = static_cast<double>(m);
  out.components["sigma"] = sigma;
  return out;
}

Rational bound_simple_probability_allocation_exact(const BoxAllocation& boxes,
                                                   const DegreeSequence& pi) {
  if (boxes.box_count() < 4)
    throw std::invalid_argument("allocation bound needs at least 4 boxes");
  const auto sizes = boxes.sizes();
  const std::size_t bc = boxes.box_count();

  std::vector<std::int64_t> maxdeg(bc);
  for (std::size_t i = 0; i < bc; ++i) maxdeg[i] = box_max_degree(boxes.boxes()[i], pi);

  Rational total = 0;
  for (std::size_t l = 0; l < bc; ++l) {
    std::int64_t min_pairs = -1;
    for (std::size_t j = 0; j < bc; ++j) {
      if (j == l) continue;
      const std::int64_t p = pair_count(sizes[j]);
      if (min_pairs < 0 || p < min_pairs) min_pairs = p;
    }
    if (min_pairs <= 0) continue;  // some other box has at most one ball
    Rational term = min_pairs;
    for (std::size_t i = 0; i < bc; ++i) {
      if (i == l) continue;
      term *= Rational(maxdeg[i], sizes[i]);
    }
    total += term;
  }
  return Rational(1) - total;
}

BoundValue bound_simple_probability_allocation(const BoxAllocation& boxes,
                                               const DegreeSequence& pi) {
  const Rational exact = bound_simple_probability_allocation_exact(boxes, pi);
  BoundValue out;
  out.value = static_cast<double>(exact);
  out.clamped = clamp01(out.value);
  const Uniformity k(static_cast<int>(boxes.box_count()) - 1);
  out.preconditions["allocation in sampler family"] = is_valid_allocation(boxes, pi, k);
  out.precondition_ok = all_ok(out.preconditions);
  out.components["deficit"] = static_cast<double>(Rational(1) - exact);
  return out;
}

double config_model_loop_lower_bound(const DegreeSequence& pi, Uniformity k) {
  std::int64_t vertex_pairs = 0;
  for (std::int64_t d : pi.degrees()) vertex_pairs += d * (d - 1) / 2;
  const std::int64_t k_i = k.value();
  const double denom =
      static_cast<double>(k_i * (k_i - 1) / 2) * static_cast<double>(pi.sigma() - 1);
  return static_cast<double>(vertex_pairs) / denom;
}

AsymptoticDiagnostics asymptotic_diagnostics(const DegreeSequence& pi, Uniformity k, double C,
                                         double alpha) {
  AsymptoticDiagnostics out;
  out.c = C;
  out.alpha = alpha;
  const double kk = k.value();
  const double n = static_cast<double>(pi.size());
  const double d1 = static_cast<double>(pi.max_degree());
  const double dn = static_cast<double>(pi.degrees().back());
  const double sigma = static_cast<double>(pi.sigma());

  out.alpha_in_range = alpha < 1.0 - 2.0 / kk;
  out.d1_within_cap = d1 <= C * std::pow(n, alpha);
  out.applicable = out.alpha_in_range && out.d1_within_cap;
  out.rho = d1 / dn;
  out.rho_term = d1 * d1 * std::pow(out.rho / n, kk - 2);
  out.deficit_ratio = std::exp(kk * std::log(d1) - (kk - 2) * std::log(sigma));
  out.deficit_vanishing = out.deficit_ratio < 1.0;
  return out;
}

}  // namespace hyperdeg
