#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "mstk/errors.hpp"
#include "mstk/padic.hpp"
#include "mstk/rational.hpp"

namespace mstk {

/// The ordinary absolute-value metric on Q.
struct StandardMetric {};

/// Metric selector for series computations. Either way the distance between
/// two rationals is itself an exact rational, so nothing here ever rounds.
using SeriesMetric = std::variant<StandardMetric, PAdicContext>;

inline Rational series_distance(const Rational& a, const Rational& b, const SeriesMetric& metric) {
    if (const auto* ctx = std::get_if<PAdicContext>(&metric)) {
        return p_adic_distance(a, b, *ctx);
    }
    return rational_abs(a - b);
}

inline std::string series_metric_name(const SeriesMetric& metric) {
    if (const auto* ctx = std::get_if<PAdicContext>(&metric)) {
        return "padic(p=" + std::to_string(ctx->prime()) + ")";
    }
    return "standard";
}

/// S_n = sum of x^j for j = 0..n, accumulated term by term (x^0 = 1 always,
/// even for x = 0). Kept independent of the closed form so the telescoping
/// identity below is a genuine check, not a tautology.
inline Rational geometric_partial_sum(const Rational& x, std::size_t n) {
    Rational sum(1);
    Rational power(1);
    for (std::size_t j = 1; j <= n; ++j) {
        power *= x;
        sum += power;
    }
    return sum;
}

/// (1 - x) S_n - (1 - x^{n+1}), computed exactly. Always the zero rational.
inline Rational geometric_identity_residual(const Rational& x, std::size_t n) {
    const Rational lhs = (Rational(1) - x) * geometric_partial_sum(x, n);
    const Rational rhs = Rational(1) - rational_pow(x, static_cast<long long>(n) + 1);
    return lhs - rhs;
}

namespace detail {

// Convergence precondition: |x| < 1 in the chosen metric. Rejecting this is
// what keeps 1/(1 - x) an honest limit; it also rules out x = 1.
inline void require_summable(const Rational& x, const SeriesMetric& metric) {
    if (const auto* ctx = std::get_if<PAdicContext>(&metric)) {
        if (p_adic_abs(x, *ctx) >= 1) {
            throw DivergenceError("series: |x|_p >= 1 for x = " + format_rational(x) + ", p = " +
                                  std::to_string(ctx->prime()) + "; the geometric series diverges p-adically");
        }
    } else if (rational_abs(x) >= 1) {
        throw DivergenceError("series: |x| >= 1 for x = " + format_rational(x) +
                              "; the geometric series diverges in the standard metric");
    }
}

}  // namespace detail

/// d(S_n, 1/(1-x)) in the chosen metric, exactly.
inline Rational limit_error(const Rational& x, std::size_t n, const SeriesMetric& metric) {
    detail::require_summable(x, metric);
    const Rational limit = Rational(1) / (Rational(1) - x);
    return series_distance(geometric_partial_sum(x, n), limit, metric);
}

/// Exact partial sums S_0..S_n together with their distance to the limit
/// 1/(1 - x). Consecutive sums differ by exactly x^k.
struct PartialSumTrace {
    Rational x;
    std::size_t terms = 0;  // n
    std::vector<Rational> partial_sums;
    SeriesMetric metric = StandardMetric{};
    std::vector<Rational> distance_to_limit;
};

/// Builds the trace. Requires x != 1 so the limit expression exists; the
/// convergence precondition is limit_error's business, not the trace's.
inline PartialSumTrace make_partial_sum_trace(const Rational& x, std::size_t n, const SeriesMetric& metric) {
    if (x == 1) throw DivergenceError("series trace: x = 1 has no limit expression 1/(1-x)");
    PartialSumTrace trace;
    trace.x = x;
    trace.terms = n;
    trace.metric = metric;
    const Rational limit = Rational(1) / (Rational(1) - x);
    Rational sum(1);
    Rational power(1);
    trace.partial_sums.reserve(n + 1);
    trace.distance_to_limit.reserve(n + 1);
    trace.partial_sums.push_back(sum);
    trace.distance_to_limit.push_back(series_distance(sum, limit, metric));
    for (std::size_t k = 1; k <= n; ++k) {
        power *= x;
        sum += power;
        trace.partial_sums.push_back(sum);
        trace.distance_to_limit.push_back(series_distance(sum, limit, metric));
    }
    return trace;
}

/// Finite-window stand-in for the Cauchy criterion. A finite prefix cannot
/// decide convergence; this checks the strongest finite statement available:
/// every pair of partial sums in the back half of the window is within
/// epsilon. first_violation is the lexicographically first offending pair of
/// partial-sum indices.
struct CauchyWindowReport {
    bool cauchy = true;
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
    Rational violation_distance;  // d for that pair; 0 when none
    std::size_t window_start = 0; // ceil(len / 2), the first index checked
};

inline CauchyWindowReport cauchy_window_check(std::span<const Rational> terms, const SeriesMetric& metric,
                                              const Rational& epsilon) {
    if (terms.empty()) throw InputError("cauchy_window_check: no terms given");
    if (!(epsilon > 0)) throw ParameterError("cauchy_window_check: epsilon must be positive");
    std::vector<Rational> sums;
    sums.reserve(terms.size());
    Rational acc(0);
    for (const Rational& t : terms) {
        acc += t;
        sums.push_back(acc);
    }
    CauchyWindowReport report;
    report.window_start = (terms.size() + 1) / 2;
    for (std::size_t i = report.window_start; i < sums.size(); ++i) {
        for (std::size_t j = i + 1; j < sums.size(); ++j) {
            const Rational d = series_distance(sums[i], sums[j], metric);
            if (!(d < epsilon)) {
                report.cauchy = false;
                report.first_violation = {i, j};
                report.violation_distance = d;
                return report;
            }
        }
    }
    return report;
}

}  // namespace mstk
