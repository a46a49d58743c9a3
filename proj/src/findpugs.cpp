// findpugs.cpp - greedy count search with a deterministic rotation grid.
#include "pugs/findpugs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "pugs/separation.hpp"

namespace pugs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_pair(int t, double c, int m, int n) {
    if (t < 0)
        throw std::invalid_argument("findpugs: circle index must be >= 0, got " +
                                    std::to_string(t));
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("findpugs: radius step must be positive and finite");
    if (m < 1 || n < 1)
        throw std::invalid_argument("findpugs: prototype counts must be >= 1, got m=" +
                                    std::to_string(m) + " n=" + std::to_string(n));
}

// Minimum of sqrt(r1^2 + r2^2 - 2*r1*r2*cos(2*pi*i/m + phase - theta - 2*pi*j/n))
// over all pairs.  `stop` sees every improvement of the running minimum and
// may abort the scan; min and the follow-up comparisons are monotone, so an
// abort decides the same verdict the full scan would.
template <typename Stop>
double scan_min_dist(int t, double c, int m, int n, double theta, double phase,
                     Stop stop) {
    const double r1 = t * c;
    const double r2 = (t + 1.0) * c;
    const double sq = r1 * r1 + r2 * r2;
    const double cross = 2.0 * r1 * r2;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        const double lhs = kTwoPi * i / m + phase - theta;
        for (int j = 0; j < n; ++j) {
            const double d = std::sqrt(sq - cross * std::cos(lhs - kTwoPi * j / n));
            if (d < best) {
                best = d;
                if (stop(best)) return best;
            }
        }
    }
    return best;
}

bool gap_passes(double dist, double gap, bool strict) {
    const double slack = dist - gap;
    return strict ? slack > kSlackTolerance : slack >= -kSlackTolerance;
}

double grid_theta(long long i, int m, int n) {
    return static_cast<double>(i) * kPi / (16.0 * m * n);
}

// First grid index whose rotation passes the distance test, or empty.  The
// parallel path evaluates fixed-size blocks with a min-index reduction, so
// it returns exactly the serial answer.
std::optional<long long> first_feasible_index(int t, double c, int m, int n,
                                              long long grid_max, bool strict,
                                              ExecMode mode) {
    constexpr long long kNone = std::numeric_limits<long long>::max();
    if (mode == ExecMode::kSerial) {
        for (long long i = 0; i <= grid_max; ++i)
            if (pair_feasible(t, c, m, n, grid_theta(i, m, n), strict)) return i;
        return std::nullopt;
    }
    constexpr long long kBlock = 1024;
    for (long long lo = 0; lo <= grid_max; lo += kBlock) {
        const long long hi = std::min(grid_max + 1, lo + kBlock);
        long long found = kNone;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : found) schedule(dynamic, 16)
#endif
        for (long long i = lo; i < hi; ++i) {
            if (i < found && pair_feasible(t, c, m, n, grid_theta(i, m, n), strict))
                found = i;
        }
        if (found != kNone) return found;
    }
    return std::nullopt;
}

}  // namespace

long long PrototypeSolution::total_prototypes() const {
    long long sum = 0;
    for (int v : counts) sum += v;
    return sum;
}

std::vector<double> PrototypeSolution::absolute_rotations() const {
    std::vector<double> abs;
    abs.reserve(rotations.size());
    double sum = 0.0;
    for (double r : rotations) {
        sum += r;
        abs.push_back(sum);
    }
    return abs;
}

double d1(int t, double c, int m, int n, double theta) {
    check_pair(t, c, m, n);
    return scan_min_dist(t, c, m, n, theta, -kPi / n, [](double) { return false; });
}

double d2(int t, double c, int m, int n, double theta) {
    check_pair(t, c, m, n);
    return scan_min_dist(t, c, m, n, theta, kPi / m, [](double) { return false; });
}

bool pair_feasible(int t, double c, int m, int n, double theta, bool strict) {
    check_pair(t, c, m, n);
    const double td = t;
    const double da =
        std::sqrt(2.0 * td * td * c * c - 2.0 * td * td * c * c * std::cos(kPi / m));
    const double od = t + 1.0;
    const double db =
        std::sqrt(2.0 * od * od * c * c - 2.0 * od * od * c * c * std::cos(kPi / n));

    bool failed = false;
    scan_min_dist(t, c, m, n, theta, -kPi / n, [&](double best) {
        if (!gap_passes(best, db, strict)) {
            failed = true;
            return true;
        }
        return false;
    });
    if (failed) return false;
    scan_min_dist(t, c, m, n, theta, kPi / m, [&](double best) {
        if (!gap_passes(best, da, strict)) {
            failed = true;
            return true;
        }
        return false;
    });
    return !failed;
}

PrototypeSolution find_pugs(int T, double c, bool strict, ExecMode mode) {
    if (T < 1)
        throw std::invalid_argument("find_pugs: need at least one circle, got " +
                                    std::to_string(T));
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("find_pugs: radius step must be positive and finite");

    PrototypeSolution sol;
    sol.c = c;
    sol.strict = strict;
    sol.counts = {1};
    sol.rotations = {0.0};

    for (int outer = 1; outer < T; ++outer) {
        const int t = outer - 1;  // inner circle of the pair under test
        const int m = sol.counts.back();
        bool placed = false;
        for (int n = m + 1; n <= m + 64 && !placed; ++n) {
            const long long grid_max = 4LL * m * n;
            const std::optional<long long> hit =
                first_feasible_index(t, c, m, n, grid_max, strict, mode);
            if (hit) {
                sol.counts.push_back(n);
                sol.rotations.push_back(grid_theta(*hit, m, n));
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error(
                "find_pugs: no separable count within 64 above the previous "
                "circle's (circle " +
                std::to_string(outer) + ") - this contradicts the analytic upper bound");
    }
    return sol;
}

}  // namespace pugs
