// separation.hpp - decides whether two adjacent prototype rings separate
// their circles under 1-nearest-neighbor classification.
//
// Two equivalent routes are provided: a reduced radius-free inequality pair
// and a direct Euclidean comparison of ring distances.  Property tests hold
// them to identical verdicts.
#pragma once

#include <optional>

#include "pugs/geometry.hpp"

namespace pugs {

// Comparison noise floor.  The knife-edge configurations of interest (e.g.
// three prototypes on circle 1) make the slacks exactly zero in real
// arithmetic, but evaluating them in doubles lands within ~1 ulp of zero on
// an implementation-defined side.  Strict mode therefore demands
// slack > +kSlackTolerance and relaxed mode slack >= -kSlackTolerance, which
// keeps both modes deterministic; genuine margins are orders of magnitude
// larger than 1e-12 at desk-scale radii.
inline constexpr double kSlackTolerance = 1e-12;

struct SeparationVerdict {
    bool separable = false;
    double slack1 = 0.0;  // outer-circle condition (cross distance vs. outer gap)
    double slack2 = 0.0;  // inner-circle condition (cross distance vs. inner gap)
    bool strict = true;
};

// Radius-free test for the pair (circle inner_t with m prototypes, circle
// inner_t + 1 with n prototypes at relative rotation theta):
//   slack1 = -(2t+1)/(2(t+1)) - [ t*max cos(2*pi*i/m - (2j+1)*pi/n - theta)
//                                 - (t+1)*cos(pi/n) ]
//   slack2 =  (2t+1)/(2t)     - [ (t+1)*max cos((2i+1)*pi/m - 2*pi*j/n - theta)
//                                 - t*cos(pi/m) ]
// with the maxima taken exhaustively over all (i, j) pairs.  For inner_t == 0
// the inner ring is a single origin point, slack2 is vacuous (+infinity) and
// slack1 degenerates to cos(pi/n) - 1/2.
SeparationVerdict separable_reduced(int inner_t, int m, int n, double theta,
                                    bool strict);

// Same verdict via ring distances: separable iff
//   min_cross(proto -> midpoint) > intra_ring_gap(outer)   and
//   min_cross(midpoint -> proto) > intra_ring_gap(inner)
// (>= in relaxed mode).  Slacks are the raw distance differences.
SeparationVerdict separable_euclidean(const RingLayout& inner,
                                      const RingLayout& outer, bool strict);

// Verdict-only variant of separable_reduced that abandons the pair scan as
// soon as infeasibility is certain.  It applies the final comparison to the
// running maximum, and floating-point subtraction is monotone, so it agrees
// with separable_reduced on every input.  Used by the search loop.
bool separable_quick(int inner_t, int m, int n, double theta, bool strict);

// Scans a uniform grid of `grid_steps` rotations over [0, 2*pi/n) - one full
// period of the verdict - and returns the first feasible one, if any.
std::optional<double> find_feasible_rotation(int inner_t, int m, int n,
                                             int grid_steps, bool strict);

}  // namespace pugs
