// bounds.cpp - analytic per-circle count formulas.
#include "pugs/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pugs {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kIntegerSnap = 1e-9;

void require_nonnegative(int t, const char* what) {
    if (t < 0)
        throw std::invalid_argument(std::string(what) +
                                    ": circle index must be >= 0, got " +
                                    std::to_string(t));
}

void require_circles(int N, const char* what) {
    if (N < 1)
        throw std::invalid_argument(std::string(what) +
                                    ": need at least one circle, got " +
                                    std::to_string(N));
}
}  // namespace

int count_from_strict_bound(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument(
            "count_from_strict_bound: threshold must be finite and >= 0");
    const double snapped = std::round(x);
    if (std::abs(x - snapped) < kIntegerSnap) x = snapped;
    return static_cast<int>(std::floor(x)) + 1;
}

double upper_bound_count(int t) {
    require_nonnegative(t, "upper_bound_count");
    if (t == 0) return 1.0;
    const double tt = static_cast<double>(t) * t;
    return kPi / std::acos((2.0 * tt - 1.0) / (2.0 * tt));
}

double lower_bound_for_outer(int inner_t) {
    require_nonnegative(inner_t, "lower_bound_for_outer");
    const double t = inner_t;
    return kPi / std::acos((2.0 * t + 1.0) / (2.0 * (t + 1.0)));
}

double lower_bound_count(int t) {
    require_nonnegative(t, "lower_bound_count");
    if (t == 0) return 1.0;
    return lower_bound_for_outer(t - 1);
}

int equal_count_requirement(int N) {
    require_circles(N, "equal_count_requirement");
    return count_from_strict_bound(lower_bound_for_outer(N - 1));
}

long long equal_count_exact(int N) {
    return static_cast<long long>(N) * equal_count_requirement(N);
}

int first_order_count(int t) {
    require_nonnegative(t, "first_order_count");
    if (t == 0) return 1;
    return static_cast<int>(std::ceil(t * kPi));
}

std::vector<int> theory_sequence(int N) {
    require_circles(N, "theory_sequence");
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(N));
    for (int t = 0; t < N; ++t) seq.push_back(first_order_count(t));
    return seq;
}

int second_order_count(int t) {
    require_nonnegative(t, "second_order_count");
    if (t == 0) return 1;
    const double s = t - 1.0;
    const double td = t;
    // Positive while the count is still too small, negative once the
    // series-approximated inequality holds.
    const auto excess = [s, td](double n) {
        const double q = kTwoPi / (n * (n - 1.0));
        const double cos_half_q = 1.0 - q * q / 8.0 + q * q * q * q / 384.0;
        const double x = kPi / n;
        const double cos_pi_n = 1.0 - x * x / 2.0 + x * x * x * x / 24.0;
        return s * cos_half_q - td * cos_pi_n + (2.0 * s + 1.0) / (2.0 * td);
    };
    double low = 2.2;
    double high = 8.0 * t + 8.0;
    while (excess(high) >= 0.0) high *= 2.0;
    while (high - low > 1e-10) {
        const double mid = 0.5 * (low + high);
        if (excess(mid) > 0.0)
            low = mid;
        else
            high = mid;
    }
    return count_from_strict_bound(high);
}

BoundsRow bounds_row(int t) {
    require_nonnegative(t, "bounds_row");
    BoundsRow row;
    row.t = t;
    row.upper = upper_bound_count(t);
    row.lower = lower_bound_count(t);
    row.equal_exact = t == 0 ? 1.0 : lower_bound_for_outer(t - 1);
    row.first_order = first_order_count(t);
    row.second_order = second_order_count(t);
    return row;
}

std::vector<BoundsRow> bounds_table(int T) {
    require_circles(T, "bounds_table");
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<size_t>(T));
    for (int t = 0; t < T; ++t) rows.push_back(bounds_row(t));
    return rows;
}

double approx_total_closed_form(int T) {
    require_circles(T, "approx_total_closed_form");
    const double n = T - 1.0;
    return 1.0 + (n + n * (n + 1.0) * kPi) / 2.0;
}

}  // namespace pugs
