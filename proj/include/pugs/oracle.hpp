// oracle.hpp - independent brute-force verification of a prototype
// configuration: sample every class circle (always including the adversarial
// arc-midpoint angles), classify each sample against the full prototype set
// with a fixed tie-break, and report misclassifications and the worst
// margin.  Also rasterizes the nearest-prototype decision regions for
// figure output.  Parallel and serial execution are bit-identical.
#pragma once

#include <cstdint>
#include <vector>

#include "pugs/findpugs.hpp"
#include "pugs/geometry.hpp"

namespace pugs {

struct LabeledPoint {
    Point2D p;
    int label = 0;  // circle index the point belongs to
};

struct ClassificationReport {
    long long per_circle_samples = 0;      // uniform samples requested per circle
    std::vector<long long> misclassified;  // entry t = wrong samples on circle t
    double worst_margin = 0.0;  // min over samples of (nearest other-class
                                // distance - nearest own-class distance);
                                // +infinity when there is only one class
    long long total_samples = 0;

    bool perfect() const;  // every count zero and worst_margin > 0
};

struct RasterGrid {
    int width = 0;
    int height = 0;
    double extent = 0.0;  // half-width of the viewed square, length units
    std::vector<std::uint16_t> labels;  // row-major, row 0 = top scanline
};

// All prototypes of a solution as labeled points, ordered by circle then by
// prototype index; circle k uses the cumulative (absolute) rotation.
std::vector<LabeledPoint> solution_prototypes(const PrototypeSolution& solution);

// Label of the nearest prototype; ties go to the lowest label.  `prototypes`
// must be ordered by label (as solution_prototypes returns them).
int classify(Point2D p, const std::vector<LabeledPoint>& prototypes);

// Samples samples_per_circle uniform angles on every circle of the solution
// plus each circle's own arc-midpoint angles, classifies all of them, and
// assembles the report.  samples_per_circle must be >= 8.
ClassificationReport verify_separation(const PrototypeSolution& solution,
                                       long long samples_per_circle,
                                       ExecMode mode = ExecMode::kParallel);

// Pair-restricted variant: samples only the two adjacent rings and
// classifies against their prototypes alone.  misclassified[0] counts the
// inner ring's samples, misclassified[1] the outer's.
ClassificationReport verify_rings(const RingLayout& inner,
                                  const RingLayout& outer,
                                  long long samples_per_circle,
                                  ExecMode mode = ExecMode::kParallel);

// Half-width that frames every circle with half a radius step of padding:
// (circles - 1)*c + c/2.
double default_extent(const PrototypeSolution& solution);

// Nearest-prototype label for each pixel center of a width x height grid
// over [-extent, extent]^2 (row 0 at the top, x increasing rightward).
RasterGrid rasterize_regions(const PrototypeSolution& solution, int width,
                             int height, double extent,
                             ExecMode mode = ExecMode::kParallel);

}  // namespace pugs
