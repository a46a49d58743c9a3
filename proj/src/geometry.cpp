// geometry.cpp - ring positions and distances.
#include "pugs/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pugs {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

RingLayout::RingLayout(int circle_index, double radius_step,
                       int prototype_count, double rotation)
    : t_(circle_index),
      c_(radius_step),
      count_(prototype_count),
      rotation_(normalize_angle(rotation)) {
    if (circle_index < 0)
        throw std::invalid_argument("RingLayout: circle index must be >= 0, got " +
                                    std::to_string(circle_index));
    if (!(radius_step > 0.0) || !std::isfinite(radius_step))
        throw std::invalid_argument("RingLayout: radius step must be positive and finite");
    if (prototype_count < 1)
        throw std::invalid_argument("RingLayout: prototype count must be >= 1, got " +
                                    std::to_string(prototype_count));
}

double distance(Point2D a, Point2D b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

double normalize_angle(double radians) {
    double a = std::fmod(radians, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

Point2D polar_lattice_point(double radius, long long num, long long den,
                            double rotation) {
    if (rotation == 0.0) {
        // angle / (pi/2) = 2*num/den; exact quarter turns get exact coordinates
        const long long twice = 2 * num;
        if (twice % den == 0) {
            switch (((twice / den) % 4 + 4) % 4) {
                case 0: return {radius, 0.0};
                case 1: return {0.0, radius};
                case 2: return {-radius, 0.0};
                default: return {0.0, -radius};
            }
        }
    }
    const double angle =
        kPi * static_cast<double>(num) / static_cast<double>(den) + rotation;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::vector<Point2D> prototype_positions(const RingLayout& ring) {
    std::vector<Point2D> pts;
    pts.reserve(static_cast<size_t>(ring.prototype_count()));
    for (int k = 0; k < ring.prototype_count(); ++k)
        pts.push_back(polar_lattice_point(ring.radius(), 2LL * k,
                                          ring.prototype_count(), ring.rotation()));
    return pts;
}

std::vector<Point2D> arc_midpoint_positions(const RingLayout& ring) {
    std::vector<Point2D> pts;
    pts.reserve(static_cast<size_t>(ring.prototype_count()));
    for (int k = 0; k < ring.prototype_count(); ++k)
        pts.push_back(polar_lattice_point(ring.radius(), 2LL * k + 1,
                                          ring.prototype_count(), ring.rotation()));
    return pts;
}

double intra_ring_gap(const RingLayout& ring) {
    const double r = ring.radius();
    return r * std::sqrt(2.0 - 2.0 * std::cos(kPi / ring.prototype_count()));
}

double min_cross_distance(const RingLayout& inner, const RingLayout& outer,
                          CrossMode mode) {
    if (outer.circle_index() != inner.circle_index() + 1)
        throw std::invalid_argument(
            "min_cross_distance: rings must be adjacent (outer index = inner index + 1)");
    if (outer.radius_step() != inner.radius_step())
        throw std::invalid_argument(
            "min_cross_distance: rings must share the same radius step");

    const std::vector<Point2D> a = mode == CrossMode::kProtoToMidpoint
                                       ? prototype_positions(inner)
                                       : arc_midpoint_positions(inner);
    const std::vector<Point2D> b = mode == CrossMode::kProtoToMidpoint
                                       ? arc_midpoint_positions(outer)
                                       : prototype_positions(outer);
    double best = std::numeric_limits<double>::infinity();
    for (const Point2D& p : a)
        for (const Point2D& q : b) best = std::min(best, distance(p, q));
    return best;
}

}  // namespace pugs
