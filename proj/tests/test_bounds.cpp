#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "helpers.hpp"
#include "hyperdeg/bounds.hpp"
#include "hyperdeg/experiments.hpp"
#include "hyperdeg/rng.hpp"
#include "hyperdeg/sampler.hpp"

using namespace hyperdeg;
using doctest::Approx;
using testutil::alloc;
using testutil::box;
using testutil::seq;

TEST_CASE("main sampler bound on a 3-regular instance") {
  auto pi = seq(std::vector<std::int64_t>(300, 3), 3);
  auto b = bound_simple_probability(pi, Uniformity(3));
  CHECK(b.value == Approx(0.73).epsilon(1e-12));
  CHECK(b.clamped == Approx(0.73).epsilon(1e-12));
  CHECK(b.precondition_ok);
  CHECK(bound_simple_probability_exact(pi, Uniformity(3)) == Rational(73, 100));
}

TEST_CASE("main sampler bound can be vacuous") {
  auto pi = seq({1, 1, 1}, 3);
  auto b = bound_simple_probability(pi, Uniformity(3));
  CHECK(b.value == Approx(-2.0).epsilon(1e-12));
  CHECK(b.clamped == 0.0);
  CHECK(b.precondition_ok);  // d_5 = 0
  CHECK(bound_simple_probability_exact(pi, Uniformity(3)) == Rational(-2));
}

TEST_CASE("main sampler bound deficit scales linearly in 1/sigma for k=3") {
  auto small = seq(std::vector<std::int64_t>(4, 3), 3);    // sigma 12
  auto large = seq(std::vector<std::int64_t>(40, 3), 3);   // sigma 120
  const Rational d_small = Rational(1) - bound_simple_probability_exact(small, Uniformity(3));
  const Rational d_large = Rational(1) - bound_simple_probability_exact(large, Uniformity(3));
  CHECK(d_small == d_large * 10);
}

TEST_CASE("main sampler bound precondition is reported") {
  auto pi = seq({2, 2, 2, 2, 2, 2}, 3);  // k(k+1) d_5 = 24 > 12
  auto b = bound_simple_probability(pi, Uniformity(3));
  CHECK_FALSE(b.precondition_ok);
  CHECK(b.value < 0);
}

TEST_CASE("split sampler bound") {
  SUBCASE("unit tail degree") {
    auto pi = seq(std::vector<std::int64_t>(60, 1), 4);  // sigma 60
    const std::int64_t m = compute_m(pi, Uniformity(4));
    auto b = bound_simple_probability_split(pi, Uniformity(4), m);
    CHECK(b.value == Approx(0.75).epsilon(1e-12));
    CHECK(b.precondition_ok);

    // same value but m is not the largest feasible index
    auto off = bound_simple_probability_split(pi, Uniformity(4), 1);
    CHECK(off.value == Approx(0.75).epsilon(1e-12));
    CHECK_FALSE(off.precondition_ok);
  }

  SUBCASE("deficit at least one clamps to zero") {
    auto pi = seq(std::vector<std::int64_t>(16, 4), 4);  // sigma 64 = d_m^3
    const std::int64_t m = compute_m(pi, Uniformity(4));
    REQUIRE(pi.degrees()[static_cast<std::size_t>(m) - 1] == 4);
    auto b = bound_simple_probability_split(pi, Uniformity(4), m);
    CHECK(b.value == Approx(-14.0).epsilon(1e-12));
    CHECK(b.clamped == 0.0);
  }

  SUBCASE("argument checks") {
    auto pi = seq({1, 1, 1, 1}, 4);
    CHECK_THROWS_AS(bound_simple_probability_split(pi, Uniformity(4), 0), InvalidM);
    CHECK_THROWS_AS(bound_simple_probability_split(pi, Uniformity(4), 5), InvalidM);
    auto pi3 = seq({1, 1, 1}, 3);
    CHECK_THROWS_AS(bound_simple_probability_split(pi3, Uniformity(3), 1),
                    std::invalid_argument);
  }
}

TEST_CASE("allocation bound") {
  SUBCASE("single-ball boxes make every term vanish") {
    auto pi = seq({1, 1, 1}, 3);
    auto boxes = alloc({box({{1, 1}}), box({{2, 1}}), box({{3, 1}}), box({})});
    CHECK(bound_simple_probability_allocation_exact(boxes, pi) == Rational(1));
    auto b = bound_simple_probability_allocation(boxes, pi);
    CHECK(b.value == 1.0);
    CHECK(b.precondition_ok);
  }

  SUBCASE("paired 2-regular instance") {
    auto pi = seq({2, 2, 2, 2, 2, 2}, 3);
    auto boxes = alloc({box({{1, 2}, {2, 2}}), box({{3, 2}, {4, 2}}), box({{5, 2}, {6, 2}}),
                        box({})});
    // only the term excluding the empty box survives: 6 * (2/4)^3 = 3/4
    CHECK(bound_simple_probability_allocation_exact(boxes, pi) == Rational(1, 4));
    auto b = bound_simple_probability_allocation(boxes, pi);
    CHECK(b.value == Approx(0.25).epsilon(1e-12));
    CHECK(b.precondition_ok);
  }

  SUBCASE("an empty box zeroes the terms that can see it") {
    auto pi = seq({2, 2, 2}, 3);
    auto boxes = sorted_by_size_desc(greedy_allocation(pi, 4));
    CHECK(boxes.sizes() == std::vector<std::int64_t>{2, 2, 2, 0});
    CHECK(bound_simple_probability_allocation_exact(boxes, pi) == Rational(0));
  }

  SUBCASE("flags allocations outside the family") {
    auto pi = seq({2, 2, 2, 2, 2, 2}, 3);
    auto lump = alloc({box({{1, 2}, {2, 2}, {3, 2}}), box({{4, 2}, {5, 2}}), box({{6, 2}}),
                       box({})});
    auto b = bound_simple_probability_allocation(lump, pi);
    CHECK_FALSE(b.precondition_ok);
  }
}

TEST_CASE("allocation bound dominates the closed-form bound under its precondition") {
  Rng rng(31);
  int checked = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const int k = 3 + static_cast<int>(rng.below(5));
    DegreeSequence pi = generate_random_valid(50, 5, Uniformity(k), rng);
    const std::int64_t guard =
        static_cast<std::int64_t>(k) * (k + 1) * pi.degree_or_zero(static_cast<std::size_t>(k) + 2);
    if (guard > pi.sigma()) continue;
    auto boxes = prepared_allocation(pi, Uniformity(k));
    REQUIRE(is_valid_allocation(boxes, pi, Uniformity(k)));
    const double general = bound_simple_probability_allocation(boxes, pi).value;
    const double closed = bound_simple_probability(pi, Uniformity(k)).value;
    CHECK(general >= closed - 1e-9 * std::max(1.0, std::abs(closed)));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("bounds are monotone non-decreasing in sigma with the lead degrees fixed") {
  // k=3: same d_1 = 3, sigma 12 vs 120
  auto a = bound_simple_probability(seq(std::vector<std::int64_t>(4, 3), 3), Uniformity(3));
  auto b = bound_simple_probability(seq(std::vector<std::int64_t>(40, 3), 3), Uniformity(3));
  CHECK(b.value > a.value);

  // k=4: same d_m = 1, sigma 60 vs 120
  auto pis = seq(std::vector<std::int64_t>(60, 1), 4);
  auto pil = seq(std::vector<std::int64_t>(120, 1), 4);
  auto bs = bound_simple_probability_split(pis, Uniformity(4), compute_m(pis, Uniformity(4)));
  auto bl = bound_simple_probability_split(pil, Uniformity(4), compute_m(pil, Uniformity(4)));
  CHECK(bl.value > bs.value);
}

TEST_CASE("expected-loop lower bound for the block model") {
  CHECK(config_model_loop_lower_bound(seq(std::vector<std::int64_t>(9, 1), 3), Uniformity(3)) ==
        0.0);
  CHECK(config_model_loop_lower_bound(seq({3, 3, 3, 3}, 3), Uniformity(3)) ==
        Approx(4.0 / 11.0).epsilon(1e-12));

  // the formula only sees the degree multiset
  std::vector<std::int64_t> degrees{4, 3, 3, 2, 2, 1, 1, 2};
  std::sort(degrees.rbegin(), degrees.rend());
  auto pi = seq(degrees, 3);
  std::vector<std::int64_t> shuffled{2, 4, 1, 3, 2, 3, 2, 1};
  double pairs = 0;
  for (std::int64_t d : shuffled) pairs += static_cast<double>(d * (d - 1) / 2);
  const double direct = pairs / (3.0 * static_cast<double>(pi.sigma() - 1));
  CHECK(config_model_loop_lower_bound(pi, Uniformity(3)) == Approx(direct).epsilon(1e-12));
}

TEST_CASE("asymptotic-regime diagnostics") {
  auto pi = seq(std::vector<std::int64_t>(300, 3), 3);
  auto d = asymptotic_diagnostics(pi, Uniformity(3), 10.0, 0.3);
  CHECK(d.rho == 1.0);
  CHECK(d.deficit_ratio == Approx(0.03).epsilon(1e-12));
  CHECK(d.deficit_vanishing);
  CHECK(d.alpha_in_range);  // 0.3 < 1/3
  CHECK(d.d1_within_cap);
  CHECK(d.applicable);

  auto wide = asymptotic_diagnostics(pi, Uniformity(3), 1.0, 0.9);
  CHECK_FALSE(wide.alpha_in_range);
  CHECK_FALSE(wide.applicable);
}
