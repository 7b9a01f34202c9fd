#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mstk/errors.hpp"

namespace mstk {

// Violations record sample indices, not the points themselves, so one report
// type serves every carrier. Values are the distances actually computed.

template <class V>
struct NonnegativityViolation {
    std::size_t x, y;
    V distance;
};

template <class V>
struct IdentityViolation {
    std::size_t x, y;
    V distance;
    // true: d(x, y) vanished on genuinely different points.
    // false: d(x, x) failed to vanish on the diagonal.
    bool points_distinct;
};

template <class V>
struct SymmetryViolation {
    std::size_t x, y;
    V forward;   // d(x, y)
    V backward;  // d(y, x)
};

template <class V>
struct TriangleViolation {
    std::size_t x, y, z;
    V d_xz, d_xy, d_yz;  // d(x, z) > d(x, y) + d(y, z) + tolerance
};

/// Outcome of one axiom-verification run. passed() holds exactly when every
/// violation list is empty, and a recorded violation always exceeds the
/// tolerance. V is double for floating carriers and Rational for exact ones.
template <class V>
struct AxiomReport {
    std::size_t samples_tested = 0;
    V tolerance{};
    std::vector<NonnegativityViolation<V>> nonneg_violations;
    std::vector<IdentityViolation<V>> identity_violations;
    std::vector<SymmetryViolation<V>> symmetry_violations;
    std::vector<TriangleViolation<V>> triangle_violations;

    bool passed() const {
        return nonneg_violations.empty() && identity_violations.empty() && symmetry_violations.empty() &&
               triangle_violations.empty();
    }
    std::size_t violation_count() const {
        return nonneg_violations.size() + identity_violations.size() + symmetry_violations.size() +
               triangle_violations.size();
    }
};

/// Checks the metric axioms on a finite sample: nonnegativity, identity of
/// indiscernibles and symmetry over all pairs, and the triangle inequality
/// over all ordered triples. Distances are evaluated once into an n x n
/// matrix, so the cubic triple pass costs lookups only.
///
/// `distinct(a, b)` decides whether two sample points count as genuinely
/// different for the identity axiom. Exact carriers pass operator!=;
/// floating carriers should treat near-duplicates (all coordinates within
/// tolerance) as equal, or random samples produce spurious violations.
template <class V, class P, class Dist, class Distinct>
AxiomReport<V> verify_metric_axioms(Dist&& metric, std::span<const P> sample, V tolerance, Distinct&& distinct) {
    if (sample.empty()) throw InputError("verify_metric_axioms: sample is empty");
    if (tolerance < V{}) throw ParameterError("verify_metric_axioms: tolerance must be >= 0");

    const std::size_t n = sample.size();
    std::vector<V> d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d[i * n + j] = metric(sample[i], sample[j]);
        }
    }
    const auto at = [&](std::size_t i, std::size_t j) -> const V& { return d[i * n + j]; };

    AxiomReport<V> report;
    report.samples_tested = n;
    report.tolerance = tolerance;

    const V zero{};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (at(i, j) < zero - tolerance) {
                report.nonneg_violations.push_back({i, j, at(i, j)});
            }
        }
        if (at(i, i) > tolerance) {
            report.identity_violations.push_back({i, i, at(i, i), false});
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (at(i, j) <= tolerance && distinct(sample[i], sample[j])) {
                report.identity_violations.push_back({i, j, at(i, j), true});
            }
            V gap = at(i, j) - at(j, i);
            if (gap < zero) gap = zero - gap;
            if (gap > tolerance) {
                report.symmetry_violations.push_back({i, j, at(i, j), at(j, i)});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (at(i, k) - at(i, j) - at(j, k) > tolerance) {
                    report.triangle_violations.push_back({i, j, k, at(i, k), at(i, j), at(j, k)});
                }
            }
        }
    }
    return report;
}

/// Overload for exact carriers where operator!= is the right distinctness test.
template <class V, class P, class Dist>
AxiomReport<V> verify_metric_axioms(Dist&& metric, std::span<const P> sample, V tolerance) {
    return verify_metric_axioms<V, P>(std::forward<Dist>(metric), sample, std::move(tolerance),
                                      std::not_equal_to<>{});
}

/// The discrete metric: 1 between distinct tokens, 0 otherwise.
template <class T>
double discrete_distance(const T& x, const T& y) {
    return x == y ? 0.0 : 1.0;
}

/// base^alpha for 0 < alpha <= 1. alpha = 1 returns base itself, bit for
/// bit; everything else goes through std::pow, whose correct rounding keeps
/// clean identities like 25^0.5 = 5 exact.
inline double snowflake_distance(double base, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw ParameterError("snowflake_distance: alpha must be in (0, 1]");
    if (!(base >= 0.0)) throw InputError("snowflake_distance: base distance must be >= 0");
    if (alpha == 1.0) return base;
    if (base == 0.0) return 0.0;
    return std::pow(base, alpha);
}

/// Quantities behind the subadditivity bound (a+b)^a <= a^a + b^a and the
/// chained route a+b <= (a^a+b^a) max(a,b)^{1-a} <= (a^a+b^a)^{1/a}.
struct SnowflakeInequalityReport {
    bool holds;          // lhs <= rhs + tolerance
    double defect;       // lhs - rhs, signed
    double lhs;          // (a + b)^alpha
    double rhs;          // a^alpha + b^alpha
    double chain_lower;  // a + b
    double chain_mid;    // (a^alpha + b^alpha) * max(a, b)^{1 - alpha}
    double chain_upper;  // (a^alpha + b^alpha)^{1 / alpha}
    bool chain_holds;    // chain_lower <= chain_mid + tol and chain_mid <= chain_upper + tol
};

inline SnowflakeInequalityReport snowflake_inequality_holds(double a, double b, double alpha, double tolerance) {
    if (!(a >= 0.0) || !(b >= 0.0)) throw InputError("snowflake_inequality_holds: a and b must be >= 0");
    if (!(alpha > 0.0) || alpha > 1.0) throw ParameterError("snowflake_inequality_holds: alpha must be in (0, 1]");
    if (!(tolerance >= 0.0)) throw ParameterError("snowflake_inequality_holds: tolerance must be >= 0");
    SnowflakeInequalityReport report;
    report.lhs = snowflake_distance(a + b, alpha);
    report.rhs = snowflake_distance(a, alpha) + snowflake_distance(b, alpha);
    report.defect = report.lhs - report.rhs;
    report.holds = report.lhs <= report.rhs + tolerance;
    report.chain_lower = a + b;
    report.chain_mid = report.rhs * std::pow(std::max(a, b), 1.0 - alpha);
    report.chain_upper = std::pow(report.rhs, 1.0 / alpha);
    report.chain_holds = report.chain_lower <= report.chain_mid + tolerance &&
                         report.chain_mid <= report.chain_upper + tolerance;
    return report;
}

/// Open-ball membership filter: keeps the candidates with d(center, y)
/// strictly below the radius, in input order. Strictness matters; a point at
/// distance exactly r is outside B(x, r).
template <class V, class P, class Dist>
std::vector<P> open_ball(Dist&& metric, const P& center, const V& radius, std::span<const P> candidates) {
    if (!(radius > V{})) throw ParameterError("open_ball: radius must be positive");
    std::vector<P> inside;
    for (const P& candidate : candidates) {
        if (metric(center, candidate) < radius) inside.push_back(candidate);
    }
    return inside;
}

}  // namespace mstk
