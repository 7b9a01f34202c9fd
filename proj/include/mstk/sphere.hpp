#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "mstk/errors.hpp"
#include "mstk/vector_space.hpp"

namespace mstk {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Below this threshold on ||x + y|| two unit vectors count as antipodal:
/// the through-plane is numerically non-unique and the geodesic distance is
/// pi regardless of which plane is used.
inline constexpr double kAntipodalTolerance = 1e-12;

/// Point of S^{n} embedded in R^{n+1}; renormalized at construction so the
/// Euclidean norm is 1 within 1e-12.
class UnitVector {
public:
    explicit UnitVector(Point coords) : coords_(normalize(std::move(coords))) {}

    const Point& coords() const { return coords_; }
    std::size_t ambient_dim() const { return coords_.dim(); }
    double operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const UnitVector&, const UnitVector&) = default;

private:
    static Point normalize(Point p) {
        const double length = norm(NormKind::l2, p);
        if (length == 0.0) throw InputError("UnitVector: cannot normalize the zero vector");
        if (length == 1.0) return p;
        return (1.0 / length) * p;
    }

    Point coords_;
};

/// ||x - y||, the ambient Euclidean distance between two sphere points.
inline double chord_distance(const UnitVector& x, const UnitVector& y) {
    return distance(NormKind::l2, x.coords(), y.coords());
}

/// Length of the shorter great-circle arc between x and y, recovered from
/// the chord through sin(d/2) = ||x - y|| / 2. Equal points give exactly 0
/// and antipodal points exactly pi; the arcsine argument is clamped to [0,1]
/// because rounding can push the half-chord a hair past 1.
inline double geodesic_distance(const UnitVector& x, const UnitVector& y) {
    detail::require_same_dim(x.coords(), y.coords(), "geodesic_distance");
    if (x.coords() == y.coords()) return 0.0;
    if (norm(NormKind::l2, x.coords() + y.coords()) <= kAntipodalTolerance) return kPi;
    const double half_chord = std::clamp(chord_distance(x, y) / 2.0, 0.0, 1.0);
    return 2.0 * std::asin(half_chord);
}

/// The two points where the slice {w : d_S(y, w) = r} meets the great circle
/// through x and y, ordered so u is nearer to x, together with the slice's
/// center and geodesic radius.
struct SliceExtremals {
    UnitVector u;
    UnitVector v;
    Point slice_center;   // sigma = cos(r) y, on the segment from y to -y
    double slice_radius;  // the geodesic radius r defining the slice
};

/// Parametrizes the great circle C(x, y) by the orthonormal frame (y, t)
/// where t is x with its y-component removed: w(theta) = cos(theta) y +
/// sin(theta) t has d_S(y, w(theta)) = |theta|, so the slice is met exactly
/// at theta = +-r. Requires x != +-y (otherwise the plane through x, y, 0 is
/// not unique) and 0 < r < pi.
inline SliceExtremals slice_extremal_points(const UnitVector& x, const UnitVector& y, double r) {
    detail::require_same_dim(x.coords(), y.coords(), "slice_extremal_points");
    if (!(r > 0.0) || !(r < kPi)) throw ParameterError("slice_extremal_points: radius must lie in (0, pi)");
    if (norm(NormKind::l2, x.coords() - y.coords()) <= kAntipodalTolerance ||
        norm(NormKind::l2, x.coords() + y.coords()) <= kAntipodalTolerance) {
        throw DegenerateConfiguration("slice_extremal_points: x = +-y leaves no unique great circle");
    }
    const Point tangent_raw = x.coords() - dot(x.coords(), y.coords()) * y.coords();
    const double tangent_len = norm(NormKind::l2, tangent_raw);
    if (tangent_len == 0.0) {
        throw DegenerateConfiguration("slice_extremal_points: x and y are collinear");
    }
    const Point tangent = (1.0 / tangent_len) * tangent_raw;

    const double c = std::cos(r);
    const double s = std::sin(r);
    UnitVector near(c * y.coords() + s * tangent);
    UnitVector far(c * y.coords() + (-s) * tangent);
    if (geodesic_distance(x, near) > geodesic_distance(x, far)) std::swap(near, far);
    return SliceExtremals{std::move(near), std::move(far), c * y.coords(), r};
}

/// Checks the sandwich ||x-u|| <= ||x-w|| <= ||x-v|| and its geodesic
/// counterpart for a point w on the slice the extremals were built from.
/// Requires d_S(y, w) to match the slice radius within the tolerance.
inline bool sandwich_check(const UnitVector& x, const UnitVector& y, const UnitVector& w,
                           const SliceExtremals& extremals, double tolerance) {
    if (!(tolerance >= 0.0)) throw ParameterError("sandwich_check: tolerance must be >= 0");
    const double on_slice_defect = std::abs(geodesic_distance(y, w) - extremals.slice_radius);
    if (on_slice_defect > tolerance) {
        throw InputError("sandwich_check: w is not on the slice (geodesic radius off by " +
                         std::to_string(on_slice_defect) + ")");
    }
    const double chord_u = chord_distance(x, extremals.u);
    const double chord_w = chord_distance(x, w);
    const double chord_v = chord_distance(x, extremals.v);
    const double geo_u = geodesic_distance(x, extremals.u);
    const double geo_w = geodesic_distance(x, w);
    const double geo_v = geodesic_distance(x, extremals.v);
    return chord_u <= chord_w + tolerance && chord_w <= chord_v + tolerance && geo_u <= geo_w + tolerance &&
           geo_w <= geo_v + tolerance;
}

}  // namespace mstk
