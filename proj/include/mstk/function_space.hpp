#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mstk/errors.hpp"

namespace mstk {

/// Continuous piecewise-linear function on [0, 1]: the interpolant through
/// (breakpoints[i], values[i]). Breakpoints run strictly increasing from
/// exactly 0 to exactly 1, so the function is continuous by construction.
/// These are the computable stand-ins for C([0, 1]): both metrics below are
/// evaluated in closed form on them.
class PLFunction {
public:
    PLFunction(std::vector<double> breakpoints, std::vector<double> values)
        : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
        if (breakpoints_.size() < 2) throw InputError("PLFunction: need at least the two endpoints");
        if (breakpoints_.size() != values_.size()) {
            throw InputError("PLFunction: breakpoints and values differ in length");
        }
        if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
            throw InputError("PLFunction: breakpoints must start at 0 and end at 1");
        }
        for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
            if (!(breakpoints_[i] < breakpoints_[i + 1])) {
                throw InputError("PLFunction: breakpoints must be strictly increasing");
            }
        }
        for (double v : values_) {
            if (!std::isfinite(v)) throw InputError("PLFunction: values must be finite");
        }
    }

    static PLFunction constant(double c) { return PLFunction({0.0, 1.0}, {c, c}); }

    /// Linear interpolation, exact (bitwise) at the breakpoints.
    double operator()(double x) const {
        if (!(x >= 0.0) || !(x <= 1.0)) throw DomainError("PLFunction: argument outside [0, 1]");
        const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
        std::size_t segment = static_cast<std::size_t>(it - breakpoints_.begin());
        segment = segment == 0 ? 0 : segment - 1;
        if (segment + 1 >= breakpoints_.size()) segment = breakpoints_.size() - 2;
        const double a = breakpoints_[segment];
        const double b = breakpoints_[segment + 1];
        if (x == a) return values_[segment];
        if (x == b) return values_[segment + 1];
        const double t = (x - a) / (b - a);
        return values_[segment] + t * (values_[segment + 1] - values_[segment]);
    }

    std::span<const double> breakpoints() const { return breakpoints_; }
    std::span<const double> values() const { return values_; }

    PLFunction scaled(double c) const {
        std::vector<double> scaled_values(values_);
        for (double& v : scaled_values) v *= c;
        return PLFunction(breakpoints_, std::move(scaled_values));
    }

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

namespace detail {

// Sorted union of both breakpoint grids; f - g is piecewise linear exactly
// on this grid.
inline std::vector<double> merged_grid(const PLFunction& f, const PLFunction& g) {
    std::vector<double> grid;
    grid.reserve(f.breakpoints().size() + g.breakpoints().size());
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace detail

/// d1(f, g) = integral of |f - g| over [0, 1], in closed form: on each
/// merged segment the difference is affine, so each segment contributes a
/// trapezoid, split at the zero crossing when the difference changes sign.
inline double d1_distance(const PLFunction& f, const PLFunction& g) {
    const std::vector<double> grid = detail::merged_grid(f, g);
    double integral = 0.0;
    double left = grid.front();
    double diff_left = f(left) - g(left);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double right = grid[i];
        const double diff_right = f(right) - g(right);
        const double width = right - left;
        if ((diff_left > 0.0 && diff_right < 0.0) || (diff_left < 0.0 && diff_right > 0.0)) {
            const double crossing = width * diff_left / (diff_left - diff_right);
            integral += 0.5 * std::abs(diff_left) * crossing;
            integral += 0.5 * std::abs(diff_right) * (width - crossing);
        } else {
            integral += 0.5 * (std::abs(diff_left) + std::abs(diff_right)) * width;
        }
        left = right;
        diff_left = diff_right;
    }
    return integral;
}

/// dinf(f, g) = max of |f - g| over [0, 1]. A piecewise-linear difference
/// attains its extrema at merged breakpoints, so the maximum over that grid
/// is the exact maximum.
inline double dinf_distance(const PLFunction& f, const PLFunction& g) {
    double best = 0.0;
    for (double x : detail::merged_grid(f, g)) {
        best = std::max(best, std::abs(f(x) - g(x)));
    }
    return best;
}

}  // namespace mstk
