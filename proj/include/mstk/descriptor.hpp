#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mstk/errors.hpp"
#include "mstk/function_space.hpp"
#include "mstk/graph.hpp"
#include "mstk/metric_core.hpp"
#include "mstk/padic.hpp"
#include "mstk/rational.hpp"
#include "mstk/sampling.hpp"
#include "mstk/sphere.hpp"
#include "mstk/vector_space.hpp"

namespace mstk {

enum class MetricKind {
    vector_l1,
    vector_l2,
    vector_linf,
    discrete,
    padic,
    sphere_geodesic,
    graph,
    function_d1,
    function_dinf,
    snowflake
};

/// Names one of the shipped metrics together with everything needed to
/// evaluate it and to sample its carrier. Snowflake descriptors wrap an
/// inner descriptor with an exponent in (0, 1]; the p-adic carrier is exact
/// rationals and cannot be snowflaked (p^{-alpha j} is irrational).
class MetricDescriptor {
public:
    static MetricDescriptor vector(NormKind kind, std::size_t dim) {
        if (dim < 1) throw ParameterError("MetricDescriptor: vector metric needs dim >= 1");
        MetricKind mk = kind == NormKind::l1   ? MetricKind::vector_l1
                        : kind == NormKind::l2 ? MetricKind::vector_l2
                                               : MetricKind::vector_linf;
        MetricDescriptor d(mk);
        d.dim_ = dim;
        d.name_ = std::string(norm_kind_name(kind)) + "[dim=" + std::to_string(dim) + "]";
        return d;
    }

    static MetricDescriptor discrete() {
        MetricDescriptor d(MetricKind::discrete);
        d.name_ = "discrete";
        return d;
    }

    static MetricDescriptor padic(std::uint64_t prime) {
        MetricDescriptor d(MetricKind::padic);
        d.prime_ = PAdicContext(prime).prime();  // validates primality
        d.name_ = "padic[p=" + std::to_string(prime) + "]";
        return d;
    }

    /// S^sphere_dim, embedded in R^{sphere_dim + 1}.
    static MetricDescriptor sphere(std::size_t sphere_dim) {
        if (sphere_dim < 1) throw ParameterError("MetricDescriptor: sphere dimension must be >= 1");
        MetricDescriptor d(MetricKind::sphere_geodesic);
        d.dim_ = sphere_dim;
        d.name_ = "sphere[S^" + std::to_string(sphere_dim) + "]";
        return d;
    }

    static MetricDescriptor graph_metric(std::shared_ptr<const Graph> g) {
        if (!g) throw ParameterError("MetricDescriptor: null graph");
        if (!is_connected(*g)) {
            throw ParameterError("MetricDescriptor: the path-length metric needs a connected graph");
        }
        MetricDescriptor d(MetricKind::graph);
        d.graph_ = std::move(g);
        d.name_ = std::string(d.graph_->weighted() ? "graph-weighted" : "graph") + "[n=" +
                  std::to_string(d.graph_->vertex_count()) + "]";
        return d;
    }

    static MetricDescriptor function_d1() {
        MetricDescriptor d(MetricKind::function_d1);
        d.name_ = "fn-d1";
        return d;
    }

    static MetricDescriptor function_dinf() {
        MetricDescriptor d(MetricKind::function_dinf);
        d.name_ = "fn-dinf";
        return d;
    }

    static MetricDescriptor snowflake_of(MetricDescriptor inner, double alpha) {
        if (!(alpha > 0.0) || alpha > 1.0) throw ParameterError("snowflake_of: alpha must be in (0, 1]");
        if (inner.base_kind() == MetricKind::padic) {
            throw ParameterError("snowflake_of: the p-adic metric is exact-rational and cannot be snowflaked");
        }
        MetricDescriptor d(MetricKind::snowflake);
        d.alpha_ = alpha;
        d.name_ = "snowflake(" + inner.name_ + ",alpha=" + std::to_string(alpha) + ")";
        d.inner_ = std::make_shared<const MetricDescriptor>(std::move(inner));
        return d;
    }

    MetricKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    std::uint64_t prime() const { return prime_; }
    double alpha() const { return alpha_; }
    const std::shared_ptr<const Graph>& graph_handle() const { return graph_; }
    const MetricDescriptor& inner() const {
        if (!inner_) throw Error("MetricDescriptor: no inner metric");
        return *inner_;
    }

    /// Kind at the bottom of any snowflake nesting.
    MetricKind base_kind() const {
        const MetricDescriptor* d = this;
        while (d->kind_ == MetricKind::snowflake) d = d->inner_.get();
        return d->kind_;
    }

    /// Innermost descriptor (self when not a snowflake).
    const MetricDescriptor& base() const {
        const MetricDescriptor* d = this;
        while (d->kind_ == MetricKind::snowflake) d = d->inner_.get();
        return *d;
    }

    /// Product of the alphas along the snowflake nesting (1 when none);
    /// d^a^b = d^(ab), so one exponent captures the whole chain.
    double total_alpha() const {
        double a = 1.0;
        const MetricDescriptor* d = this;
        while (d->kind_ == MetricKind::snowflake) {
            a *= d->alpha_;
            d = d->inner_.get();
        }
        return a;
    }

    /// Exact carriers are verified with tolerance 0; their distances are
    /// rationals or small exact integers. Weighted graphs do not qualify:
    /// Dijkstra accumulates float weights in path order, so equal paths can
    /// disagree by an ulp.
    bool exact() const {
        const MetricDescriptor& b = base();
        if (b.kind_ == MetricKind::padic || b.kind_ == MetricKind::discrete) return true;
        return b.kind_ == MetricKind::graph && !b.graph_->weighted();
    }

private:
    explicit MetricDescriptor(MetricKind kind) : kind_(kind) {}

    MetricKind kind_;
    std::string name_;
    std::size_t dim_ = 2;
    std::uint64_t prime_ = 2;
    double alpha_ = 1.0;
    std::shared_ptr<const Graph> graph_;
    std::shared_ptr<const MetricDescriptor> inner_;
};

/// Reports come in two value types: double for floating carriers, Rational
/// for the exact p-adic carrier.
using CampaignReport = std::variant<AxiomReport<double>, AxiomReport<Rational>>;

inline bool campaign_passed(const CampaignReport& report) {
    return std::visit([](const auto& r) { return r.passed(); }, report);
}

inline std::size_t campaign_violation_count(const CampaignReport& report) {
    return std::visit([](const auto& r) { return r.violation_count(); }, report);
}

inline std::size_t campaign_samples_tested(const CampaignReport& report) {
    return std::visit([](const auto& r) { return r.samples_tested; }, report);
}

inline double default_tolerance(const MetricDescriptor& metric) { return metric.exact() ? 0.0 : 1e-9; }

namespace detail {

// Identity-axiom distinctness for floating carriers: differ in some
// coordinate by more than the tolerance. Anything closer counts as a
// near-duplicate draw, not a violation.
inline bool coords_distinct(const Point& a, const Point& b, double tolerance) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a[i] - b[i]) > tolerance) return true;
    }
    return false;
}

template <class Dist>
auto snowflaked(Dist&& base, double alpha) {
    return [base = std::forward<Dist>(base), alpha](const auto& a, const auto& b) {
        return snowflake_distance(base(a, b), alpha);
    };
}

}  // namespace detail

/// Draws a seeded sample from the metric's carrier and runs the axiom
/// verifier over it. Samples are capped at 100: the triangle pass visits
/// every ordered triple, and exhaustiveness at desk scale is the point.
/// Tolerance defaults to 0 for exact carriers and 1e-9 for floating ones;
/// exact carriers only accept an override of 0.
inline CampaignReport run_axiom_campaign(const MetricDescriptor& metric, std::size_t samples, std::uint64_t seed,
                                         std::optional<double> tolerance_override = {}) {
    if (samples == 0) throw ParameterError("run_axiom_campaign: need at least one sample");
    if (samples > 100) throw ParameterError("run_axiom_campaign: samples capped at 100 (triangle pass is cubic)");
    const double tolerance = tolerance_override.value_or(default_tolerance(metric));
    if (!(tolerance >= 0.0)) throw ParameterError("run_axiom_campaign: tolerance must be >= 0");
    if (metric.exact() && tolerance != 0.0) {
        throw ParameterError("run_axiom_campaign: exact carriers are verified with tolerance 0");
    }

    Rng rng(seed);
    const double alpha = metric.total_alpha();
    const MetricDescriptor& base = metric.base();

    const auto coords_distinct = [tolerance](const auto& a, const auto& b) {
        return detail::coords_distinct(a, b, tolerance);
    };

    switch (base.kind()) {
        case MetricKind::vector_l1:
        case MetricKind::vector_l2:
        case MetricKind::vector_linf: {
            const NormKind norm_kind = base.kind() == MetricKind::vector_l1   ? NormKind::l1
                                       : base.kind() == MetricKind::vector_l2 ? NormKind::l2
                                                                              : NormKind::linf;
            const std::vector<Point> sample = sample_points(rng, samples, base.dim());
            auto dist = detail::snowflaked(
                [norm_kind](const Point& a, const Point& b) { return distance(norm_kind, a, b); }, alpha);
            return verify_metric_axioms<double, Point>(dist, std::span<const Point>(sample), tolerance,
                                                       coords_distinct);
        }
        case MetricKind::discrete: {
            const std::vector<std::int64_t> sample = sample_tokens(rng, samples);
            auto dist = detail::snowflaked(
                [](std::int64_t a, std::int64_t b) { return discrete_distance(a, b); }, alpha);
            return verify_metric_axioms<double, std::int64_t>(dist, std::span<const std::int64_t>(sample),
                                                              tolerance);
        }
        case MetricKind::padic: {
            const PAdicContext ctx(base.prime());
            const std::vector<Rational> sample = sample_rationals(rng, samples);
            auto dist = [&ctx](const Rational& a, const Rational& b) { return p_adic_distance(a, b, ctx); };
            return verify_metric_axioms<Rational, Rational>(dist, std::span<const Rational>(sample), Rational(0));
        }
        case MetricKind::sphere_geodesic: {
            std::vector<UnitVector> sample;
            sample.reserve(samples);
            for (std::size_t i = 0; i < samples; ++i) sample.push_back(sample_unit_vector(rng, base.dim() + 1));
            auto dist = detail::snowflaked(
                [](const UnitVector& a, const UnitVector& b) { return geodesic_distance(a, b); }, alpha);
            auto distinct = [&](const UnitVector& a, const UnitVector& b) {
                return detail::coords_distinct(a.coords(), b.coords(), tolerance);
            };
            return verify_metric_axioms<double, UnitVector>(dist, std::span<const UnitVector>(sample), tolerance,
                                                            distinct);
        }
        case MetricKind::graph: {
            const Graph& g = *base.graph_handle();
            std::vector<std::size_t> sample(samples);
            for (auto& v : sample) v = rng.below(g.vertex_count());
            auto dist = detail::snowflaked(
                [&g](std::size_t a, std::size_t b) {
                    return g.weighted() ? weighted_graph_distance(g, a, b)
                                        : static_cast<double>(graph_distance(g, a, b));
                },
                alpha);
            return verify_metric_axioms<double, std::size_t>(dist, std::span<const std::size_t>(sample),
                                                             tolerance);
        }
        case MetricKind::function_d1:
        case MetricKind::function_dinf: {
            const bool use_d1 = base.kind() == MetricKind::function_d1;
            std::vector<PLFunction> sample;
            sample.reserve(samples);
            for (std::size_t i = 0; i < samples; ++i) sample.push_back(sample_pl_function(rng));
            auto dist = detail::snowflaked(
                [use_d1](const PLFunction& f, const PLFunction& g) {
                    return use_d1 ? d1_distance(f, g) : dinf_distance(f, g);
                },
                alpha);
            auto distinct = [tolerance](const PLFunction& f, const PLFunction& g) {
                return dinf_distance(f, g) > tolerance;
            };
            return verify_metric_axioms<double, PLFunction>(dist, std::span<const PLFunction>(sample), tolerance,
                                                            distinct);
        }
        default:
            throw Error("run_axiom_campaign: unhandled metric kind");
    }
}

}  // namespace mstk
