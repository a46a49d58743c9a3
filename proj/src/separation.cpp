// separation.cpp - reduced and euclidean separability tests for adjacent rings.
#include "pugs/separation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pugs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_pair_args(int inner_t, int m, int n, double theta) {
    if (inner_t < 0)
        throw std::invalid_argument(
            "separation: inner circle index must be >= 0, got " +
            std::to_string(inner_t));
    if (m < 1 || n < 1)
        throw std::invalid_argument(
            "separation: prototype counts must be >= 1, got m=" +
            std::to_string(m) + " n=" + std::to_string(n));
    if (!std::isfinite(theta))
        throw std::invalid_argument("separation: rotation must be finite");
}

bool slack_passes(double slack, bool strict) {
    return strict ? slack > kSlackTolerance : slack >= -kSlackTolerance;
}

// Scans all m x n angle differences and returns the largest cosine.  With
// midpoint_on_inner == false the inner angle is a prototype (2*pi*i/m) and
// the outer one an arc midpoint ((2j+1)*pi/n); with true the roles flip.
// `stop` is consulted each time the running maximum improves; returning true
// aborts the scan.  Both callers apply the same final comparison, and
// floating-point multiply/subtract are monotone, so an early abort can never
// disagree with the completed scan.
template <typename Stop>
double scan_max_cos(int m, int n, double theta, bool midpoint_on_inner,
                    Stop stop) {
    double best = -2.0;
    for (int i = 0; i < m; ++i) {
        const double lhs = midpoint_on_inner
                               ? (2 * i + 1) * kPi / m - theta
                               : kTwoPi * i / m - theta;
        for (int j = 0; j < n; ++j) {
            const double rhs = midpoint_on_inner ? kTwoPi * j / n
                                                 : (2 * j + 1) * kPi / n;
            const double c = std::cos(lhs - rhs);
            if (c > best) {
                best = c;
                if (stop(best)) return best;
            }
        }
    }
    return best;
}

double outer_condition_floor(double t, int n) {
    return -(2.0 * t + 1.0) / (2.0 * (t + 1.0)) + (t + 1.0) * std::cos(kPi / n);
}

double inner_condition_floor(double t, int m) {
    return (2.0 * t + 1.0) / (2.0 * t) + t * std::cos(kPi / m);
}

}  // namespace

SeparationVerdict separable_reduced(int inner_t, int m, int n, double theta,
                                    bool strict) {
    check_pair_args(inner_t, m, n, theta);
    const double t = inner_t;
    const auto never = [](double) { return false; };

    SeparationVerdict v;
    v.strict = strict;
    const double max1 = scan_max_cos(m, n, theta, false, never);
    v.slack1 = outer_condition_floor(t, n) - t * max1;
    if (inner_t == 0) {
        // Circle 0 is a single point at the origin; its own ring gap is zero
        // and the inner condition holds vacuously.
        v.slack2 = std::numeric_limits<double>::infinity();
    } else {
        const double max2 = scan_max_cos(m, n, theta, true, never);
        v.slack2 = inner_condition_floor(t, m) - (t + 1.0) * max2;
    }
    v.separable = slack_passes(v.slack1, strict) && slack_passes(v.slack2, strict);
    return v;
}

bool separable_quick(int inner_t, int m, int n, double theta, bool strict) {
    check_pair_args(inner_t, m, n, theta);
    const double t = inner_t;

    bool failed = false;
    const double a1 = outer_condition_floor(t, n);
    scan_max_cos(m, n, theta, false, [&](double best) {
        if (!slack_passes(a1 - t * best, strict)) {
            failed = true;
            return true;
        }
        return false;
    });
    if (failed) return false;

    if (inner_t == 0) return true;
    const double a2 = inner_condition_floor(t, m);
    scan_max_cos(m, n, theta, true, [&](double best) {
        if (!slack_passes(a2 - (t + 1.0) * best, strict)) {
            failed = true;
            return true;
        }
        return false;
    });
    return !failed;
}

SeparationVerdict separable_euclidean(const RingLayout& inner,
                                      const RingLayout& outer, bool strict) {
    const double d1 = min_cross_distance(inner, outer, CrossMode::kProtoToMidpoint);
    const double d2 = min_cross_distance(inner, outer, CrossMode::kMidpointToProto);
    SeparationVerdict v;
    v.strict = strict;
    v.slack1 = d1 - intra_ring_gap(outer);
    v.slack2 = d2 - intra_ring_gap(inner);
    v.separable = slack_passes(v.slack1, strict) && slack_passes(v.slack2, strict);
    return v;
}

std::optional<double> find_feasible_rotation(int inner_t, int m, int n,
                                             int grid_steps, bool strict) {
    check_pair_args(inner_t, m, n, 0.0);
    if (grid_steps < 1)
        throw std::invalid_argument("separation: grid_steps must be >= 1, got " +
                                    std::to_string(grid_steps));
    const double period = kTwoPi / n;
    for (int i = 0; i < grid_steps; ++i) {
        const double theta = period * i / grid_steps;
        if (separable_quick(inner_t, m, n, theta, strict)) return theta;
    }
    return std::nullopt;
}

}  // namespace pugs
