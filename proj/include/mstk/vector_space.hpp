#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "mstk/errors.hpp"
#include "mstk/rng.hpp"

namespace mstk {

/// Dense coordinate vector in R^n, n >= 1, finite entries only.
class Point {
public:
    Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw InputError("Point: empty coordinate list");
        for (double c : coords_) {
            if (!std::isfinite(c)) throw InputError("Point: coordinates must be finite");
        }
    }

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

namespace detail {

inline void require_same_dim(const Point& x, const Point& y, const char* what) {
    if (x.dim() != y.dim()) {
        throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(x.dim()) + " and " +
                                std::to_string(y.dim()) + " differ");
    }
}

}  // namespace detail

inline Point operator+(const Point& x, const Point& y) {
    detail::require_same_dim(x, y, "Point addition");
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + y[i];
    return Point(std::move(out));
}

inline Point operator-(const Point& x, const Point& y) {
    detail::require_same_dim(x, y, "Point subtraction");
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - y[i];
    return Point(std::move(out));
}

inline Point operator*(double t, const Point& x) {
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = t * x[i];
    return Point(std::move(out));
}

inline Point operator-(const Point& x) { return -1.0 * x; }

inline double dot(const Point& x, const Point& y) {
    detail::require_same_dim(x, y, "dot product");
    double sum = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) sum += x[i] * y[i];
    return sum;
}

enum class NormKind { l1, l2, linf };

inline const char* norm_kind_name(NormKind kind) {
    switch (kind) {
        case NormKind::l1: return "l1";
        case NormKind::l2: return "l2";
        default: return "linf";
    }
}

/// ||x||_1, ||x||_2 or ||x||_inf. The l2 branch scales by the largest
/// magnitude before squaring, so extreme coordinates neither overflow nor
/// underflow.
inline double norm(NormKind kind, const Point& x) {
    switch (kind) {
        case NormKind::l1: {
            double sum = 0.0;
            for (std::size_t i = 0; i < x.dim(); ++i) sum += std::abs(x[i]);
            return sum;
        }
        case NormKind::l2: {
            double scale = 0.0;
            for (std::size_t i = 0; i < x.dim(); ++i) scale = std::max(scale, std::abs(x[i]));
            if (scale == 0.0) return 0.0;
            double sum = 0.0;
            for (std::size_t i = 0; i < x.dim(); ++i) {
                const double s = x[i] / scale;
                sum += s * s;
            }
            return scale * std::sqrt(sum);
        }
        default: {
            double best = 0.0;
            for (std::size_t i = 0; i < x.dim(); ++i) best = std::max(best, std::abs(x[i]));
            return best;
        }
    }
}

/// Norm-induced metric d(x, y) = ||x - y||.
inline double distance(NormKind kind, const Point& x, const Point& y) {
    detail::require_same_dim(x, y, "distance");
    return norm(kind, x - y);
}

/// | ||t x|| - |t| ||x|| |, the one norm axiom worth measuring numerically.
inline double homogeneity_defect(NormKind kind, double t, const Point& x) {
    return std::abs(norm(kind, t * x) - std::abs(t) * norm(kind, x));
}

/// Boundary polygon of a 2-D metric ball, vertices counterclockwise.
struct BallPolygon {
    NormKind metric_kind;
    Point center;
    double radius;
    std::vector<Point> vertices;
};

/// The l1 ball boundary is the diamond through the four axis points, the
/// linf boundary the square through the four corners, and the l2 boundary a
/// regular polygon with at least 64 segments.
inline BallPolygon unit_ball_polygon(NormKind kind, const Point& center, double radius,
                                     std::size_t circle_segments = 64) {
    if (center.dim() != 2) throw ParameterError("unit_ball_polygon: center must be 2-dimensional");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw ParameterError("unit_ball_polygon: radius must be positive");
    const double cx = center[0];
    const double cy = center[1];
    std::vector<Point> vertices;
    switch (kind) {
        case NormKind::l1:
            vertices = {Point{cx + radius, cy}, Point{cx, cy + radius}, Point{cx - radius, cy},
                        Point{cx, cy - radius}};
            break;
        case NormKind::linf:
            vertices = {Point{cx + radius, cy + radius}, Point{cx - radius, cy + radius},
                        Point{cx - radius, cy - radius}, Point{cx + radius, cy - radius}};
            break;
        default: {
            if (circle_segments < 64) throw ParameterError("unit_ball_polygon: l2 needs at least 64 segments");
            vertices.reserve(circle_segments);
            for (std::size_t k = 0; k < circle_segments; ++k) {
                const double angle = 2.0 * 3.141592653589793 * static_cast<double>(k) /
                                     static_cast<double>(circle_segments);
                vertices.push_back(Point{cx + radius * std::cos(angle), cy + radius * std::sin(angle)});
            }
            break;
        }
    }
    return BallPolygon{kind, center, radius, std::move(vertices)};
}

struct ConvexityViolation {
    Point x;
    Point y;
    double t;           // mixing weight; unused for the symmetry case
    double norm_value;  // offending norm
    bool symmetry_case; // true when ||-x|| failed rather than a segment point
};

struct ConvexityReport {
    std::size_t trials = 0;
    std::vector<ConvexityViolation> violations;
    bool passed() const { return violations.empty(); }
};

/// Samples pairs from the closed unit ball (cube draws, rejection-filtered
/// by norm) and checks segment membership ||t x + (1-t) y|| <= 1 and origin
/// symmetry ||-x|| <= 1, both with 1e-12 slack.
inline ConvexityReport check_convex_symmetric(NormKind kind, std::size_t trials, std::uint64_t seed,
                                              std::size_t dim = 2) {
    if (trials < 1) throw ParameterError("check_convex_symmetric: trials must be >= 1");
    if (dim < 1) throw ParameterError("check_convex_symmetric: dim must be >= 1");
    constexpr double kSlack = 1e-12;
    Rng rng(seed);
    const auto draw_ball_point = [&] {
        for (;;) {
            std::vector<double> coords(dim);
            for (double& c : coords) c = rng.uniform(-1.0, 1.0);
            Point p(std::move(coords));
            if (norm(kind, p) <= 1.0) return p;
        }
    };
    ConvexityReport report;
    report.trials = trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Point x = draw_ball_point();
        const Point y = draw_ball_point();
        const double t = rng.uniform01();
        const double segment_norm = norm(kind, t * x + (1.0 - t) * y);
        if (segment_norm > 1.0 + kSlack) {
            report.violations.push_back({x, y, t, segment_norm, false});
        }
        const double mirror_norm = norm(kind, -x);
        if (mirror_norm > 1.0 + kSlack) {
            report.violations.push_back({x, y, 0.0, mirror_norm, true});
        }
    }
    return report;
}

}  // namespace mstk
