// geometry.hpp - prototype rings on concentric circles: positions, arc
// midpoints, and the ring-gap / cross-ring distances everything else is
// built from.
#pragma once

#include <vector>

namespace pugs {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

// One circle of class points: circle `t` has radius t*c and carries `count`
// prototypes evenly spaced starting at `rotation` radians.  Circle 0 is the
// degenerate single point at the origin (any count collapses there, but the
// canonical configuration uses count == 1).
class RingLayout {
  public:
    RingLayout(int circle_index, double radius_step, int prototype_count,
               double rotation = 0.0);

    int circle_index() const { return t_; }
    double radius_step() const { return c_; }
    int prototype_count() const { return count_; }
    double rotation() const { return rotation_; }  // normalized to [0, 2*pi)
    double radius() const { return t_ * c_; }

  private:
    int t_;
    double c_;
    int count_;
    double rotation_;
};

// Which direction a cross-ring minimum runs in.
enum class CrossMode {
    kProtoToMidpoint,  // inner prototypes vs. outer arc midpoints
    kMidpointToProto,  // inner arc midpoints vs. outer prototypes
};

double distance(Point2D a, Point2D b);

// Maps an angle to [0, 2*pi).
double normalize_angle(double radians);

// Point at angle pi*num/den + rotation on a circle of the given radius.
// When rotation is exactly 0 and the angle lands on a quarter-turn, the
// coordinates are exact (e.g. (0, radius) rather than (6e-17, radius)); the
// raster symmetry guarantees depend on this.
Point2D polar_lattice_point(double radius, long long num, long long den,
                            double rotation);

// Prototype k sits at angle 2*pi*k/count + rotation.
std::vector<Point2D> prototype_positions(const RingLayout& ring);

// Arc midpoint k sits halfway between prototypes k and k+1, i.e. at angle
// (2k+1)*pi/count + rotation.  For count == 1 this is the antipode.
std::vector<Point2D> arc_midpoint_positions(const RingLayout& ring);

// Distance from a prototype to its own arc midpoint:
// sqrt(2*(t*c)^2 * (1 - cos(pi/count))).  Zero for circle 0.
double intra_ring_gap(const RingLayout& ring);

// Exhaustive minimum over all count_inner x count_outer pairs.  Requires
// outer.circle_index() == inner.circle_index() + 1 and an identical radius
// step; anything else is a contract violation.
double min_cross_distance(const RingLayout& inner, const RingLayout& outer,
                          CrossMode mode);

}  // namespace pugs
