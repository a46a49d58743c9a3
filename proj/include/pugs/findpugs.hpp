// findpugs.hpp - greedy per-circle search for near-minimal prototype counts
// (PUGS: Prototypes Using Greedy Search).  Starting from a single prototype
// at the origin, each subsequent circle's count grows from one above the
// previous circle's until some rotation on a fixed grid keeps both rings
// separable; that count and the first feasible rotation are recorded.
#pragma once

#include <vector>

namespace pugs {

// Execution strategy for the data-parallel kernels (rotation grids, sample
// and pixel classification).  Both modes produce bit-identical results; the
// serial path is the reference the parallel one is tested against.
enum class ExecMode {
    kSerial,
    kParallel,
};

struct PrototypeSolution {
    std::vector<int> counts;        // prototypes per circle, index 0 = innermost
    std::vector<double> rotations;  // circle k's offset relative to circle k-1; entry 0 = 0
    double c = 1.0;                 // radius step between circles
    bool strict = true;             // whether separation used strict inequalities

    int circles() const { return static_cast<int>(counts.size()); }
    long long total_prototypes() const;
    // Rotation of each circle in the fixed global frame (prefix sums of the
    // relative offsets).
    std::vector<double> absolute_rotations() const;
};

// Exhaustive minima over all index pairs of the two cross-ring distances for
// the pair (circle t: m prototypes, circle t+1: n prototypes) at relative
// rotation theta and radius step c:
//   d1 - inner prototypes vs. outer arc midpoints (angle offset -pi/n),
//   d2 - inner arc midpoints vs. outer prototypes (angle offset +pi/m).
double d1(int t, double c, int m, int n, double theta);
double d2(int t, double c, int m, int n, double theta);

// The distance test the search runs at each grid point: d1 must beat the
// outer ring's own gap and d2 the inner ring's (strictly, or >= when
// strict == false, under the same noise floor as the separation module).
// Agrees with separable_reduced for every input.
bool pair_feasible(int t, double c, int m, int n, double theta, bool strict);

// Greedy search over T circles.  Circle 0 always gets one prototype.  For
// each next circle, counts n = m+1, m+2, ... are tried in order; for each n
// the rotations theta_i = i*pi/(16*m*n), i = 0..4*m*n (covering [0, pi/4])
// are scanned and the first feasible grid index is accepted.  If no count up
// to m+64 works the search throws std::runtime_error - the analytic upper
// bounds guarantee this cannot happen, so firing is a genuine defect.
// Serial and parallel modes return identical solutions.
PrototypeSolution find_pugs(int T, double c, bool strict,
                            ExecMode mode = ExecMode::kParallel);

}  // namespace pugs
