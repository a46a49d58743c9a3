// Unit and property tests for the analytic per-circle count formulas and
// their integer conversions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pugs/bounds.hpp"
#include "pugs/separation.hpp"

using namespace pugs;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("count_from_strict_bound is the smallest integer strictly above") {
    CHECK(count_from_strict_bound(2.5) == 3);
    CHECK(count_from_strict_bound(3.0) == 4);
    CHECK(count_from_strict_bound(3.1) == 4);
    CHECK(count_from_strict_bound(0.2) == 1);
    CHECK(count_from_strict_bound(0.0) == 1);
    // Values a hair below an integer are snapped up to it first: the strict
    // bound still excludes the integer itself.
    CHECK(count_from_strict_bound(2.9999999999999996) == 4);
    CHECK(count_from_strict_bound(3.0000000000000004) == 4);
    CHECK(count_from_strict_bound(2.9999) == 3);
    CHECK_THROWS_AS(count_from_strict_bound(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(count_from_strict_bound(1.0 / 0.0), std::invalid_argument);
}

TEST_CASE("worst-rotation thresholds at frozen reference values") {
    CHECK(upper_bound_count(0) == 1.0);
    // pi / acos(1/2) is exactly 3 in real arithmetic but lands one ulp low.
    CHECK(upper_bound_count(1) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(upper_bound_count(1) < 3.0);
    CHECK(upper_bound_count(4) ==
          doctest::Approx(12.533499639744415).epsilon(1e-14));
    CHECK(count_from_strict_bound(upper_bound_count(1)) == 4);
    CHECK(count_from_strict_bound(upper_bound_count(4)) == 13);
}

TEST_CASE("best-rotation thresholds at frozen reference values") {
    CHECK(lower_bound_count(0) == 1.0);
    CHECK(lower_bound_count(1) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(lower_bound_for_outer(1) ==
          doctest::Approx(4.3468158082925674).epsilon(1e-14));
    CHECK(lower_bound_count(2) == lower_bound_for_outer(1));
    CHECK(lower_bound_for_outer(3) ==
          doctest::Approx(6.216537678860817).epsilon(1e-13));
}

TEST_CASE("lower threshold never exceeds the upper threshold") {
    for (int t = 0; t <= 200; ++t) {
        CHECK(lower_bound_count(t) <= upper_bound_count(t) + 1e-12);
        if (t >= 2) CHECK(lower_bound_count(t) < upper_bound_count(t));
    }
}

TEST_CASE("thresholds grow monotonically") {
    for (int t = 1; t < 200; ++t) {
        CHECK(upper_bound_count(t + 1) > upper_bound_count(t));
        CHECK(lower_bound_for_outer(t) > lower_bound_for_outer(t - 1));
    }
}

TEST_CASE("first-order counts are ceil(t*pi)") {
    CHECK(first_order_count(0) == 1);
    CHECK(first_order_count(1) == 4);
    CHECK(first_order_count(2) == 7);
    CHECK(first_order_count(3) == 10);
    CHECK(first_order_count(4) == 13);
    CHECK(first_order_count(7) == 22);
    for (int t = 1; t <= 200; ++t)
        CHECK(first_order_count(t) == static_cast<int>(std::ceil(t * kPi)));
}

TEST_CASE("theory sequence for fourteen circles") {
    const std::vector<int> expected = {1,  4,  7,  10, 13, 16, 19,
                                       22, 26, 29, 32, 35, 38, 41};
    CHECK(theory_sequence(14) == expected);
    long long total = 0;
    for (int v : expected) total += v;
    CHECK(total == 293);
    CHECK(theory_sequence(1) == std::vector<int>{1});
}

TEST_CASE("second-order counts: frozen small values, then equal to first order") {
    CHECK(second_order_count(0) == 1);
    CHECK(second_order_count(1) == 3);
    CHECK(second_order_count(2) == 7);
    CHECK(second_order_count(3) == 10);
    CHECK(second_order_count(4) == 13);
    CHECK(second_order_count(5) == 16);
    for (int t = 4; t <= 200; ++t)
        CHECK(second_order_count(t) == first_order_count(t));
}

TEST_CASE("equal-count requirement and totals") {
    CHECK(equal_count_requirement(1) == 4);
    CHECK(equal_count_requirement(2) == 5);
    CHECK(equal_count_requirement(5) == 7);
    CHECK(equal_count_exact(1) == 4);
    CHECK(equal_count_exact(2) == 10);
    CHECK(equal_count_exact(5) == 35);
    for (int N = 1; N < 100; ++N) {
        CHECK(equal_count_exact(N) ==
              static_cast<long long>(N) * equal_count_requirement(N));
        CHECK(equal_count_requirement(N + 1) >= equal_count_requirement(N));
    }
}

TEST_CASE("per-pair best-rotation count is feasible and minimal") {
    // For the pair (t, t+1) with the same count on both rings, the integer
    // conversion of the best-rotation threshold is achievable at zero offset,
    // while one prototype fewer fails at every rotation on a fine grid.
    for (int t = 1; t <= 6; ++t) {
        const int n = count_from_strict_bound(lower_bound_for_outer(t));
        CHECK(separable_reduced(t, n, n, 0.0, true).separable);
        CHECK_FALSE(find_feasible_rotation(t, n - 1, n - 1, 8 * n * n, true).has_value());
    }
}

TEST_CASE("bounds rows assemble the individual formulas") {
    const BoundsRow zero = bounds_row(0);
    CHECK(zero.t == 0);
    CHECK(zero.upper == 1.0);
    CHECK(zero.lower == 1.0);
    CHECK(zero.equal_exact == 1.0);
    CHECK(zero.first_order == 1);
    CHECK(zero.second_order == 1);

    const BoundsRow two = bounds_row(2);
    CHECK(two.upper == upper_bound_count(2));
    CHECK(two.lower == lower_bound_count(2));
    CHECK(two.equal_exact == lower_bound_count(2));
    CHECK(two.first_order == 7);
    CHECK(two.second_order == 7);

    const std::vector<BoundsRow> table = bounds_table(5);
    REQUIRE(table.size() == 5);
    for (int t = 0; t < 5; ++t) CHECK(table[static_cast<size_t>(t)].t == t);
}

TEST_CASE("closed-form total approximates the theory total") {
    CHECK(approx_total_closed_form(14) ==
          doctest::Approx(293.38493145223).epsilon(1e-10));
    CHECK(approx_total_closed_form(1) == 1.0);
    CHECK(approx_total_closed_form(4) ==
          doctest::Approx(1.0 + (3.0 + 12.0 * kPi) / 2.0).epsilon(1e-14));
    // Stays within a couple of percent of the exact integer total.
    for (int T : {5, 10, 14, 20}) {
        long long exact = 0;
        for (int v : theory_sequence(T)) exact += v;
        CHECK(std::abs(approx_total_closed_form(T) - static_cast<double>(exact)) /
                  static_cast<double>(exact) <
              0.02);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(upper_bound_count(-1), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_count(-3), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_for_outer(-1), std::invalid_argument);
    CHECK_THROWS_AS(first_order_count(-1), std::invalid_argument);
    CHECK_THROWS_AS(second_order_count(-2), std::invalid_argument);
    CHECK_THROWS_AS(equal_count_requirement(0), std::invalid_argument);
    CHECK_THROWS_AS(theory_sequence(0), std::invalid_argument);
    CHECK_THROWS_AS(bounds_table(0), std::invalid_argument);
    CHECK_THROWS_AS(bounds_row(-1), std::invalid_argument);
    CHECK_THROWS_AS(approx_total_closed_form(0), std::invalid_argument);
}
