// Tests for the greedy per-circle count search: frozen reference sequences,
// serial/parallel equality, radius-step invariance, and exact minimality of
// the accepted counts and rotations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pugs/findpugs.hpp"
#include "pugs/separation.hpp"

using namespace pugs;

namespace {
constexpr double kPi = std::numbers::pi;

double grid_theta(long long i, int m, int n) {
    return static_cast<double>(i) * kPi / (16.0 * m * n);
}
}  // namespace

TEST_CASE("fourteen circles, relaxed inequalities: frozen sequence") {
    const PrototypeSolution sol = find_pugs(14, 1.0, false, ExecMode::kParallel);
    const std::vector<int> expected = {1,  3,  6,  12, 13, 16, 19,
                                       22, 26, 29, 32, 35, 38, 41};
    CHECK(sol.counts == expected);
    CHECK(sol.total_prototypes() == 293);
    CHECK_FALSE(sol.strict);
    CHECK(sol.c == 1.0);
    REQUIRE(sol.rotations.size() == 14);
    CHECK(sol.rotations[0] == 0.0);
    CHECK(sol.rotations[1] == 0.0);
    CHECK(sol.rotations[2] == 0.0);
    CHECK(sol.rotations[3] == doctest::Approx(0.11181015520596384).epsilon(1e-12));
}

TEST_CASE("fourteen circles, strict inequalities: frozen sequence") {
    const PrototypeSolution sol = find_pugs(14, 1.0, true, ExecMode::kParallel);
    const std::vector<int> expected = {1,  4,  6,  12, 13, 16, 19,
                                       22, 26, 29, 32, 35, 38, 41};
    CHECK(sol.counts == expected);
    CHECK(sol.total_prototypes() == 294);
    CHECK(sol.strict);
    // Under strict inequalities circle 2 needs a rotation: the first
    // feasible grid point is pi/16.
    CHECK(sol.rotations[2] == doctest::Approx(kPi / 16.0).epsilon(1e-15));
    CHECK(sol.rotations[1] == 0.0);
}

TEST_CASE("strict and relaxed runs differ only in circle 1") {
    const PrototypeSolution strict = find_pugs(8, 1.0, true, ExecMode::kParallel);
    const PrototypeSolution relaxed = find_pugs(8, 1.0, false, ExecMode::kParallel);
    CHECK(strict.counts[1] == 4);
    CHECK(relaxed.counts[1] == 3);
    for (int t = 2; t < 8; ++t)
        CHECK(strict.counts[static_cast<size_t>(t)] ==
              relaxed.counts[static_cast<size_t>(t)]);
}

TEST_CASE("serial and parallel searches return identical solutions") {
    for (bool strict : {true, false}) {
        const PrototypeSolution serial = find_pugs(8, 1.0, strict, ExecMode::kSerial);
        const PrototypeSolution parallel =
            find_pugs(8, 1.0, strict, ExecMode::kParallel);
        CHECK(serial.counts == parallel.counts);
        REQUIRE(serial.rotations.size() == parallel.rotations.size());
        for (size_t k = 0; k < serial.rotations.size(); ++k)
            CHECK(serial.rotations[k] == parallel.rotations[k]);
    }
}

TEST_CASE("radius step does not change the counts or rotations") {
    const PrototypeSolution base = find_pugs(10, 1.0, true, ExecMode::kParallel);
    for (double c : {0.25, 3.0}) {
        const PrototypeSolution scaled = find_pugs(10, c, true, ExecMode::kParallel);
        CHECK(scaled.counts == base.counts);
        CHECK(scaled.c == c);
        for (size_t k = 0; k < base.rotations.size(); ++k)
            CHECK(scaled.rotations[k] == base.rotations[k]);
    }
}

TEST_CASE("accepted counts and rotations are grid-minimal") {
    const PrototypeSolution sol = find_pugs(6, 1.0, true, ExecMode::kParallel);
    for (int outer = 1; outer < 6; ++outer) {
        const int t = outer - 1;
        const int m = sol.counts[static_cast<size_t>(outer - 1)];
        const int chosen = sol.counts[static_cast<size_t>(outer)];

        // Every smaller candidate count fails at every grid rotation.
        for (int n = m + 1; n < chosen; ++n) {
            bool any = false;
            for (long long i = 0; i <= 4LL * m * n && !any; ++i)
                any = pair_feasible(t, 1.0, m, n, grid_theta(i, m, n), true);
            CHECK_FALSE(any);
        }

        // The accepted rotation is the first feasible grid point.
        long long first = -1;
        for (long long i = 0; i <= 4LL * m * chosen; ++i) {
            if (pair_feasible(t, 1.0, m, chosen, grid_theta(i, m, chosen), true)) {
                first = i;
                break;
            }
        }
        REQUIRE(first >= 0);
        CHECK(sol.rotations[static_cast<size_t>(outer)] ==
              grid_theta(first, m, chosen));
    }
}

TEST_CASE("distance test agrees with the reduced inequalities") {
    for (int t = 0; t <= 4; ++t)
        for (int m = 1; m <= 10; ++m)
            for (int n = m + 1; n <= 12; ++n)
                for (int k = 0; k < 13; ++k) {
                    const double theta = 2.0 * kPi * k / (13.0 * n);
                    for (bool strict : {true, false})
                        CHECK(pair_feasible(t, 1.0, m, n, theta, strict) ==
                              separable_reduced(t, m, n, theta, strict).separable);
                }
}

TEST_CASE("cross distances at hand-checkable configurations") {
    // Circle 1 (radius 1, one prototype at angle 0) against circle 2's single
    // arc midpoint at the antipode (-2, 0): distance 3.  The mirrored pairing
    // gives the same value.
    CHECK(d1(1, 1.0, 1, 1, 0.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(d2(1, 1.0, 1, 1, 0.0) == doctest::Approx(3.0).epsilon(1e-15));

    // Equal counts at zero offset: the two pairings see the same angle set.
    CHECK(d1(2, 1.0, 5, 5, 0.0) == doctest::Approx(d2(2, 1.0, 5, 5, 0.0)).epsilon(1e-14));

    // Doubling the radius step doubles the distances exactly.
    CHECK(d1(2, 2.0, 5, 7, 0.3) == 2.0 * d1(2, 1.0, 5, 7, 0.3));
    CHECK(d2(2, 2.0, 5, 7, 0.3) == 2.0 * d2(2, 1.0, 5, 7, 0.3));
}

TEST_CASE("single circle needs exactly one prototype") {
    const PrototypeSolution sol = find_pugs(1, 1.0, true, ExecMode::kSerial);
    CHECK(sol.counts == std::vector<int>{1});
    CHECK(sol.rotations == std::vector<double>{0.0});
    CHECK(sol.total_prototypes() == 1);
    CHECK(sol.circles() == 1);
}

TEST_CASE("absolute rotations are prefix sums of the relative ones") {
    const PrototypeSolution sol = find_pugs(6, 1.0, true, ExecMode::kParallel);
    const std::vector<double> abs = sol.absolute_rotations();
    REQUIRE(abs.size() == sol.rotations.size());
    double sum = 0.0;
    for (size_t k = 0; k < abs.size(); ++k) {
        sum += sol.rotations[k];
        CHECK(abs[k] == sum);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(find_pugs(0, 1.0, true), std::invalid_argument);
    CHECK_THROWS_AS(find_pugs(5, 0.0, true), std::invalid_argument);
    CHECK_THROWS_AS(find_pugs(5, -1.0, true), std::invalid_argument);
    CHECK_THROWS_AS(pair_feasible(-1, 1.0, 3, 4, 0.0, true), std::invalid_argument);
    CHECK_THROWS_AS(pair_feasible(1, 1.0, 0, 4, 0.0, true), std::invalid_argument);
    CHECK_THROWS_AS(d1(1, 1.0, 3, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(d2(1, -1.0, 3, 4, 0.0), std::invalid_argument);
}
