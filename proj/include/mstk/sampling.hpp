#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mstk/function_space.hpp"
#include "mstk/graph.hpp"
#include "mstk/rational.hpp"
#include "mstk/rng.hpp"
#include "mstk/sphere.hpp"
#include "mstk/vector_space.hpp"

namespace mstk {

inline Point sample_point(Rng& rng, std::size_t dim, double half_range = 10.0) {
    std::vector<double> coords(dim);
    for (double& c : coords) c = rng.uniform(-half_range, half_range);
    return Point(std::move(coords));
}

inline std::vector<Point> sample_points(Rng& rng, std::size_t count, std::size_t dim, double half_range = 10.0) {
    std::vector<Point> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) points.push_back(sample_point(rng, dim, half_range));
    return points;
}

/// Rotation-invariant sphere sampling: normalized standard Gaussians.
inline UnitVector sample_unit_vector(Rng& rng, std::size_t ambient_dim) {
    for (;;) {
        std::vector<double> coords(ambient_dim);
        double scale = 0.0;
        for (double& c : coords) {
            c = rng.gaussian();
            scale = std::max(scale, std::abs(c));
        }
        if (scale < 1e-8) continue;  // essentially-zero draw, resample
        return UnitVector(Point(std::move(coords)));
    }
}

/// Numerator uniform in [-10^6, 10^6], denominator uniform in [1, 10^6];
/// reduction happens in the Rational constructor. Exercises mixed positive
/// and negative valuations for every small prime.
inline Rational sample_rational(Rng& rng) {
    const auto num = static_cast<long long>(rng.below(2000001)) - 1000000;
    const auto den = static_cast<long long>(rng.below(1000000)) + 1;
    return Rational(num, den);
}

inline std::vector<Rational> sample_rationals(Rng& rng, std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_rational(rng));
    return out;
}

/// Tokens for the discrete metric: integers from a universe about half the
/// sample size, so samples contain genuine duplicates.
inline std::vector<std::int64_t> sample_tokens(Rng& rng, std::size_t count) {
    const std::uint64_t universe = std::max<std::uint64_t>(2, count / 2);
    std::vector<std::int64_t> tokens(count);
    for (auto& t : tokens) t = static_cast<std::int64_t>(rng.below(universe));
    return tokens;
}

/// Random piecewise-linear function: up to max_interior interior breakpoints
/// separated by at least min_gap, values uniform in [-value_range, value_range].
inline PLFunction sample_pl_function(Rng& rng, std::size_t max_interior = 8, double value_range = 5.0,
                                     double min_gap = 1e-3) {
    const std::size_t interior = rng.below(max_interior + 1);
    std::vector<double> breakpoints;
    breakpoints.reserve(interior + 2);
    breakpoints.push_back(0.0);
    std::vector<double> raw(interior);
    for (double& b : raw) b = rng.uniform01();
    std::sort(raw.begin(), raw.end());
    for (double b : raw) {
        if (b - breakpoints.back() >= min_gap && 1.0 - b >= min_gap) breakpoints.push_back(b);
    }
    breakpoints.push_back(1.0);
    std::vector<double> values(breakpoints.size());
    for (double& v : values) v = rng.uniform(-value_range, value_range);
    return PLFunction(std::move(breakpoints), std::move(values));
}

/// Variant with |slope| <= max_slope everywhere, for comparisons against
/// dense-grid oracles whose resolution bounds the slope they can see.
inline PLFunction sample_pl_function_bounded_slope(Rng& rng, double max_slope, std::size_t max_interior = 8,
                                                   double min_gap = 1e-2) {
    const std::size_t interior = rng.below(max_interior + 1);
    std::vector<double> breakpoints;
    breakpoints.reserve(interior + 2);
    breakpoints.push_back(0.0);
    std::vector<double> raw(interior);
    for (double& b : raw) b = rng.uniform01();
    std::sort(raw.begin(), raw.end());
    for (double b : raw) {
        if (b - breakpoints.back() >= min_gap && 1.0 - b >= min_gap) breakpoints.push_back(b);
    }
    breakpoints.push_back(1.0);
    std::vector<double> values;
    values.reserve(breakpoints.size());
    values.push_back(rng.uniform(-1.0, 1.0));
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        const double slope = rng.uniform(-max_slope, max_slope);
        values.push_back(values.back() + slope * (breakpoints[i] - breakpoints[i - 1]));
    }
    return PLFunction(std::move(breakpoints), std::move(values));
}

/// Connected by construction: a random spanning tree (each vertex attaches
/// to an earlier one) plus independent extra edges.
inline Graph sample_connected_graph(Rng& rng, std::size_t vertex_count, double extra_edge_prob = 0.3) {
    if (vertex_count == 0) throw ParameterError("sample_connected_graph: need at least one vertex");
    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> present;
    for (std::size_t v = 1; v < vertex_count; ++v) {
        const std::size_t u = rng.below(v);
        edges.push_back({u, v});
        present.insert({u, v});
    }
    for (std::size_t u = 0; u < vertex_count; ++u) {
        for (std::size_t v = u + 1; v < vertex_count; ++v) {
            if (present.count({u, v})) continue;
            if (rng.uniform01() < extra_edge_prob) {
                edges.push_back({u, v});
                present.insert({u, v});
            }
        }
    }
    return Graph(vertex_count, edges);
}

/// Same construction with weights uniform in [weight_lo, weight_hi].
inline Graph sample_connected_weighted_graph(Rng& rng, std::size_t vertex_count, double extra_edge_prob = 0.3,
                                             double weight_lo = 0.1, double weight_hi = 10.0) {
    const Graph skeleton = sample_connected_graph(rng, vertex_count, extra_edge_prob);
    std::vector<WeightedEdge> edges;
    edges.reserve(skeleton.edge_count());
    for (std::size_t u = 0; u < skeleton.vertex_count(); ++u) {
        for (const Graph::Arc& arc : skeleton.neighbors(u)) {
            if (arc.to > u) edges.push_back({u, arc.to, rng.uniform(weight_lo, weight_hi)});
        }
    }
    return Graph(vertex_count, edges);
}

}  // namespace mstk
