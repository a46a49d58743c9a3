// oracle.cpp - brute-force classification of circle samples and pixels.
#include "pugs/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pugs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_solution(const PrototypeSolution& sol) {
    if (sol.counts.empty())
        throw std::invalid_argument("oracle: solution has no circles");
    if (sol.counts.size() != sol.rotations.size())
        throw std::invalid_argument(
            "oracle: counts and rotations must have the same length");
    if (!(sol.c > 0.0) || !std::isfinite(sol.c))
        throw std::invalid_argument("oracle: radius step must be positive and finite");
    for (int v : sol.counts)
        if (v < 1)
            throw std::invalid_argument("oracle: every circle needs at least one prototype");
    for (double r : sol.rotations)
        if (!std::isfinite(r))
            throw std::invalid_argument("oracle: rotations must be finite");
}

std::vector<RingLayout> solution_rings(const PrototypeSolution& sol) {
    const std::vector<double> abs = sol.absolute_rotations();
    std::vector<RingLayout> rings;
    rings.reserve(sol.counts.size());
    for (size_t t = 0; t < sol.counts.size(); ++t)
        rings.emplace_back(static_cast<int>(t), sol.c, sol.counts[t], abs[t]);
    return rings;
}

double squared_dist(Point2D a, Point2D b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Verification over an arbitrary ordered list of rings; report slot k is the
// ring at position k.  Each ring contributes samples_per_circle uniform
// angles plus its own arc midpoints; every sample is classified against the
// union of all rings' prototypes.
ClassificationReport run_verification(const std::vector<RingLayout>& rings,
                                      long long samples_per_circle,
                                      ExecMode mode) {
    if (samples_per_circle < 8)
        throw std::invalid_argument("oracle: need at least 8 samples per circle, got " +
                                    std::to_string(samples_per_circle));

    std::vector<LabeledPoint> protos;
    for (size_t k = 0; k < rings.size(); ++k)
        for (const Point2D& p : prototype_positions(rings[k]))
            protos.push_back({p, static_cast<int>(k)});

    ClassificationReport report;
    report.per_circle_samples = samples_per_circle;
    report.misclassified.assign(rings.size(), 0);
    report.worst_margin = kInf;
    report.total_samples = 0;

    for (size_t k = 0; k < rings.size(); ++k) {
        const RingLayout& ring = rings[k];
        std::vector<Point2D> samples;
        samples.reserve(static_cast<size_t>(samples_per_circle) +
                        static_cast<size_t>(ring.prototype_count()));
        for (long long s = 0; s < samples_per_circle; ++s)
            samples.push_back(polar_lattice_point(ring.radius(), 2 * s,
                                                  samples_per_circle, 0.0));
        for (const Point2D& mid : arc_midpoint_positions(ring))
            samples.push_back(mid);

        const int own = static_cast<int>(k);
        const long long count = static_cast<long long>(samples.size());
        long long wrong = 0;
        double margin = kInf;

        const auto judge = [&](long long s, long long& wrong_acc, double& margin_acc) {
            const Point2D p = samples[static_cast<size_t>(s)];
            double best_sq = kInf;
            int best_label = -1;
            double own_sq = kInf;
            double other_sq = kInf;
            for (const LabeledPoint& proto : protos) {
                const double d = squared_dist(p, proto.p);
                if (d < best_sq) {
                    best_sq = d;
                    best_label = proto.label;
                }
                if (proto.label == own) {
                    if (d < own_sq) own_sq = d;
                } else {
                    if (d < other_sq) other_sq = d;
                }
            }
            if (best_label != own) ++wrong_acc;
            const double m = std::sqrt(other_sq) - std::sqrt(own_sq);
            if (m < margin_acc) margin_acc = m;
        };

        if (mode == ExecMode::kSerial) {
            for (long long s = 0; s < count; ++s) judge(s, wrong, margin);
        } else {
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : wrong) reduction(min : margin) \
    schedule(static)
#endif
            for (long long s = 0; s < count; ++s) judge(s, wrong, margin);
            // The min-reduction identity is the largest finite double; an
            // all-infinite margin (single class) must stay +inf as in the
            // serial path.
            if (margin >= std::numeric_limits<double>::max()) margin = kInf;
        }

        report.misclassified[k] = wrong;
        report.total_samples += count;
        if (margin < report.worst_margin) report.worst_margin = margin;
    }
    return report;
}

}  // namespace

bool ClassificationReport::perfect() const {
    for (long long v : misclassified)
        if (v != 0) return false;
    return worst_margin > 0.0;
}

std::vector<LabeledPoint> solution_prototypes(const PrototypeSolution& solution) {
    validate_solution(solution);
    std::vector<LabeledPoint> protos;
    for (const RingLayout& ring : solution_rings(solution)) {
        const int label = ring.circle_index();
        for (const Point2D& p : prototype_positions(ring))
            protos.push_back({p, label});
    }
    return protos;
}

int classify(Point2D p, const std::vector<LabeledPoint>& prototypes) {
    if (prototypes.empty())
        throw std::invalid_argument("classify: no prototypes");
    double best_sq = kInf;
    int best_label = -1;
    for (const LabeledPoint& proto : prototypes) {
        const double d = squared_dist(p, proto.p);
        if (d < best_sq) {
            best_sq = d;
            best_label = proto.label;
        }
    }
    return best_label;
}

ClassificationReport verify_separation(const PrototypeSolution& solution,
                                       long long samples_per_circle,
                                       ExecMode mode) {
    validate_solution(solution);
    return run_verification(solution_rings(solution), samples_per_circle, mode);
}

ClassificationReport verify_rings(const RingLayout& inner,
                                  const RingLayout& outer,
                                  long long samples_per_circle, ExecMode mode) {
    if (outer.circle_index() != inner.circle_index() + 1)
        throw std::invalid_argument(
            "verify_rings: rings must be adjacent (outer index = inner index + 1)");
    if (outer.radius_step() != inner.radius_step())
        throw std::invalid_argument("verify_rings: rings must share the same radius step");
    return run_verification({inner, outer}, samples_per_circle, mode);
}

double default_extent(const PrototypeSolution& solution) {
    validate_solution(solution);
    return (solution.circles() - 1) * solution.c + 0.5 * solution.c;
}

RasterGrid rasterize_regions(const PrototypeSolution& solution, int width,
                             int height, double extent, ExecMode mode) {
    validate_solution(solution);
    if (width < 1 || height < 1)
        throw std::invalid_argument("rasterize_regions: dimensions must be positive");
    if (!(extent > 0.0) || !std::isfinite(extent))
        throw std::invalid_argument("rasterize_regions: extent must be positive and finite");
    if (solution.circles() > 65535)
        throw std::invalid_argument("rasterize_regions: too many circles for 16-bit labels");

    const std::vector<LabeledPoint> protos = solution_prototypes(solution);
    RasterGrid grid;
    grid.width = width;
    grid.height = height;
    grid.extent = extent;
    grid.labels.assign(static_cast<size_t>(width) * height, 0);

    const double step_x = 2.0 * extent / width;
    const double step_y = 2.0 * extent / height;
    const auto fill_row = [&](int i) {
        const double y = extent - (i + 0.5) * step_y;
        std::uint16_t* row = grid.labels.data() + static_cast<size_t>(i) * width;
        for (int j = 0; j < width; ++j) {
            const double x = -extent + (j + 0.5) * step_x;
            row[j] = static_cast<std::uint16_t>(classify({x, y}, protos));
        }
    };

    if (mode == ExecMode::kSerial) {
        for (int i = 0; i < height; ++i) fill_row(i);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int i = 0; i < height; ++i) fill_row(i);
    }
    return grid;
}

}  // namespace pugs
