// bounds.hpp - closed-form and series-approximation prototype counts per
// circle: worst-rotation and best-rotation requirements, the equal-count
// solution, and the first/second-order approximations they converge to.
#pragma once

#include <vector>

namespace pugs {

// Smallest integer strictly greater than the real threshold x.  Values
// within 1e-9 of an integer are snapped to it first: thresholds such as
// pi/acos(1/2) are exactly 3 in real arithmetic but evaluate one ulp below
// 3.0 in doubles, and the strict inequality still has to push them up to 4.
int count_from_strict_bound(double x);

// Worst-rotation requirement for circle t: pi / acos((2t^2 - 1)/(2t^2)).
// A count above this works no matter how the inner ring is rotated.
// Grows like t*pi.  t = 0 returns 1 (single prototype at the origin).
double upper_bound_count(int t);

// Best-rotation requirement for circle t as the outer ring of the pair
// (t-1, t): pi / acos((2t - 1)/(2t)).  Grows like sqrt(t)*pi.  t = 0 -> 1.
double lower_bound_count(int t);

// The same threshold in the inner-index frame: requirement for the ring
// just outside circle inner_t, pi / acos((2*inner_t + 1)/(2*(inner_t + 1))).
double lower_bound_for_outer(int inner_t);

// Per-circle count when every circle must carry the same number of
// prototypes; the threshold formula is evaluated at index N-1 and
// converted with count_from_strict_bound.
int equal_count_requirement(int N);

// Total for the equal-count configuration: N * equal_count_requirement(N).
// Grows like N^(3/2)*pi.
long long equal_count_exact(int N);

// ceil(t*pi), with the t = 0 convention of 1.
int first_order_count(int t);

// Entry 0 = 1, entry t = first_order_count(t): the per-circle counts the
// greedy search converges to.
std::vector<int> theory_sequence(int N);

// Smallest integer count passing the outer-ring inequality when both
// cosines are replaced by their fourth-order series: the worst-phase
// term uses half the lattice period q = 2*pi/(n*(n-1)) (consecutive-count
// approximation of 2*pi*gcd(m,n)/(m*n)), i.e. cos(q/2) ~ 1 - q^2/8 + q^4/384,
// and cos(pi/n) ~ 1 - (pi/n)^2/2 + (pi/n)^4/24.  The real-valued root is
// located by bisection to 1e-10 and converted like the other strict bounds.
// Matches first_order_count for every t >= 4; returns 3 at t = 1.
int second_order_count(int t);

struct BoundsRow {
    int t = 0;
    double upper = 0.0;       // worst-rotation threshold
    double lower = 0.0;       // best-rotation threshold
    double equal_exact = 0.0; // equal-count threshold (numerically = lower)
    int first_order = 0;
    int second_order = 0;
};

BoundsRow bounds_row(int t);
std::vector<BoundsRow> bounds_table(int T);  // rows for t = 0..T-1

// Closed-form estimate of the total count for T circles (indices 0..T-1):
// 1 + ((T-1) + (T-1)*T*pi)/2.
double approx_total_closed_form(int T);

}  // namespace pugs
