#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mstk/mstk.hpp"

namespace mstk::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

/// Shortest decimal form that round-trips: 7 prints as "7", pi as
/// "3.141592653589793".
std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

template <class V>
std::string value_text(const V& v) {
    if constexpr (std::is_same_v<V, Rational>) {
        return format_rational(v);
    } else {
        return format_double(v);
    }
}

template <class V>
ordered_json value_json(const V& v) {
    if constexpr (std::is_same_v<V, Rational>) {
        return format_rational(v);
    } else {
        return v;
    }
}

// ---------------------------------------------------------------------------
// Input parsing

/// Splits inline point syntax on whitespace, keeping bracketed groups whole:
/// "[1,2] [4,6]" -> {"[1,2]", "[4,6]"}, "0 2" -> {"0", "2"}.
std::vector<std::string> split_groups(const std::string& text) {
    std::vector<std::string> groups;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
            if (!current.empty()) {
                groups.push_back(std::move(current));
                current.clear();
            }
            continue;
        }
        if (c == '[') ++depth;
        if (c == ']') --depth;
        current += c;
    }
    if (!current.empty()) groups.push_back(std::move(current));
    return groups;
}

ordered_json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw InputError(what + ": " + e.what());
    }
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const ordered_json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Point to_point(const ordered_json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw InputError(what + ": expected a nonempty array of numbers");
    std::vector<double> coords;
    coords.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_number()) throw InputError(what + ": coordinates must be numbers");
        coords.push_back(c.get<double>());
    }
    return Point(std::move(coords));
}

Point parse_inline_point(const std::string& group, const std::string& what) {
    return to_point(parse_json_text(group, what), what);
}

std::string point_text(const Point& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) s += ",";
        s += format_double(p[i]);
    }
    s += "]";
    return s;
}

ordered_json point_json(const Point& p) {
    ordered_json j = ordered_json::array();
    for (std::size_t i = 0; i < p.dim(); ++i) j.push_back(p[i]);
    return j;
}

Rational rational_from_json(const ordered_json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError(what + ": rationals must be strings like \"3/4\" or integers");
}

/// {"n": int, "edges": [[u,v],...], "weights": {"u-v": w}} per the
/// documented schema; "weights", when present, must cover every edge.
Graph load_graph(const ordered_json& j, const std::string& what) {
    if (!j.is_object()) throw InputError(what + ": expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_unsigned()) {
        throw InputError(what + ": missing or invalid \"n\"");
    }
    const auto n = j["n"].get<std::size_t>();
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw InputError(what + ": missing or invalid \"edges\"");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw InputError(what + ": each edge must be a pair of vertex indices");
        }
        pairs.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    if (!j.contains("weights")) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (const auto& [u, v] : pairs) edges.push_back({u, v});
        return Graph(n, std::span<const Edge>(edges));
    }
    const auto& weights = j["weights"];
    if (!weights.is_object()) throw InputError(what + ": \"weights\" must be an object keyed \"u-v\"");
    std::vector<WeightedEdge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        const std::string key = std::to_string(u) + "-" + std::to_string(v);
        const std::string rev = std::to_string(v) + "-" + std::to_string(u);
        const auto it = weights.contains(key) ? weights.find(key) : weights.find(rev);
        if (it == weights.end()) throw InputError(what + ": no weight for edge " + key);
        if (!it->is_number()) throw InputError(what + ": weight for edge " + key + " must be a number");
        edges.push_back({u, v, it->get<double>()});
    }
    return Graph(n, std::span<const WeightedEdge>(edges));
}

PLFunction load_pl_function(const std::string& path) {
    const ordered_json j = load_json_file(path);
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values")) {
        throw InputError(path + ": expected {\"breakpoints\": [...], \"values\": [...]}");
    }
    const auto nums = [&](const char* key) {
        const auto& arr = j[key];
        if (!arr.is_array()) throw InputError(path + ": \"" + key + "\" must be an array of numbers");
        std::vector<double> out;
        out.reserve(arr.size());
        for (const auto& x : arr) {
            if (!x.is_number()) throw InputError(path + ": \"" + key + "\" must be an array of numbers");
            out.push_back(x.get<double>());
        }
        return out;
    };
    return PLFunction(nums("breakpoints"), nums("values"));
}

// ---------------------------------------------------------------------------
// Axiom report rendering

template <class V>
void print_report_text(std::ostream& out, const std::string& name, std::uint64_t seed, const AxiomReport<V>& r) {
    out << "metric: " << name << "\n";
    out << "samples: " << r.samples_tested << "\n";
    out << "seed: " << seed << "\n";
    out << "tolerance: " << value_text(r.tolerance) << "\n";
    out << "nonnegativity violations: " << r.nonneg_violations.size() << "\n";
    out << "identity violations: " << r.identity_violations.size() << "\n";
    out << "symmetry violations: " << r.symmetry_violations.size() << "\n";
    out << "triangle violations: " << r.triangle_violations.size() << "\n";
    if (!r.nonneg_violations.empty()) {
        const auto& v = r.nonneg_violations.front();
        out << "first nonnegativity violation: samples (" << v.x << ", " << v.y
            << "): d = " << value_text(v.distance) << "\n";
    }
    if (!r.identity_violations.empty()) {
        const auto& v = r.identity_violations.front();
        if (v.points_distinct) {
            out << "first identity violation: samples (" << v.x << ", " << v.y
                << ") are distinct but d = " << value_text(v.distance) << "\n";
        } else {
            out << "first identity violation: sample " << v.x << " has d(x, x) = " << value_text(v.distance)
                << "\n";
        }
    }
    if (!r.symmetry_violations.empty()) {
        const auto& v = r.symmetry_violations.front();
        out << "first symmetry violation: samples (" << v.x << ", " << v.y
            << "): d(x, y) = " << value_text(v.forward) << ", d(y, x) = " << value_text(v.backward) << "\n";
    }
    if (!r.triangle_violations.empty()) {
        const auto& v = r.triangle_violations.front();
        out << "first triangle violation: samples (" << v.x << ", " << v.y << ", " << v.z
            << "): d(x, z) = " << value_text(v.d_xz) << " exceeds d(x, y) + d(y, z) = " << value_text(v.d_xy)
            << " + " << value_text(v.d_yz) << "\n";
    }
    out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

template <class V>
ordered_json report_json(const std::string& name, std::uint64_t seed, const AxiomReport<V>& r) {
    ordered_json j;
    j["metric"] = name;
    j["samples"] = r.samples_tested;
    j["seed"] = seed;
    j["tolerance"] = value_json(r.tolerance);
    j["violations"] = {{"nonnegativity", r.nonneg_violations.size()},
                       {"identity", r.identity_violations.size()},
                       {"symmetry", r.symmetry_violations.size()},
                       {"triangle", r.triangle_violations.size()}};
    ordered_json firsts = ordered_json::array();
    if (!r.nonneg_violations.empty()) {
        const auto& v = r.nonneg_violations.front();
        firsts.push_back({{"axiom", "nonnegativity"}, {"x", v.x}, {"y", v.y}, {"distance", value_json(v.distance)}});
    }
    if (!r.identity_violations.empty()) {
        const auto& v = r.identity_violations.front();
        firsts.push_back({{"axiom", "identity"},
                          {"x", v.x},
                          {"y", v.y},
                          {"distance", value_json(v.distance)},
                          {"points_distinct", v.points_distinct}});
    }
    if (!r.symmetry_violations.empty()) {
        const auto& v = r.symmetry_violations.front();
        firsts.push_back({{"axiom", "symmetry"},
                          {"x", v.x},
                          {"y", v.y},
                          {"forward", value_json(v.forward)},
                          {"backward", value_json(v.backward)}});
    }
    if (!r.triangle_violations.empty()) {
        const auto& v = r.triangle_violations.front();
        firsts.push_back({{"axiom", "triangle"},
                          {"x", v.x},
                          {"y", v.y},
                          {"z", v.z},
                          {"d_xz", value_json(v.d_xz)},
                          {"d_xy", value_json(v.d_xy)},
                          {"d_yz", value_json(v.d_yz)}});
    }
    if (!firsts.empty()) j["first_violations"] = firsts;
    j["passed"] = r.passed();
    return j;
}

// ---------------------------------------------------------------------------
// Subcommand options

struct DistOpts {
    std::string metric;
    std::string points;
    std::string file;
    std::uint64_t p = 2;
    double alpha = 1.0;
    std::string format = "text";
};

struct VerifyOpts {
    std::string metric;
    std::size_t samples = 50;
    std::uint64_t seed = 1;
    std::optional<double> tolerance;
    std::size_t dim = 2;
    std::uint64_t p = 2;
    double alpha = 1.0;
    std::string graph_file;
    std::string format = "text";
};

struct BallOpts {
    std::string metric;
    std::string center = "[0,0]";
    double radius = 1.0;
    std::size_t segments = 64;
    std::string out_file;
    std::string format = "text";
};

struct SeriesOpts {
    std::string x;
    std::size_t n = 0;
    std::string metric = "standard";
    std::uint64_t p = 2;
    std::string format = "text";
};

struct GraphDistOpts {
    std::string graph_file;
    std::size_t from = 0;
    std::size_t to = 0;
    std::string format = "text";
};

struct FnDistOpts {
    std::string metric;
    std::string f_file;
    std::string g_file;
    std::string format = "text";
};

struct ExtremalsOpts {
    std::string x;
    std::string y;
    double r = 0.0;
    std::string w;
    double tolerance = 1e-9;
    std::string format = "text";
};

// ---------------------------------------------------------------------------
// Handlers

int run_dist(const DistOpts& o, std::ostream& out) {
    const bool json_mode = o.format == "json";
    std::vector<std::string> groups;
    std::vector<ordered_json> entries;
    if (!o.points.empty()) {
        groups = split_groups(o.points);
        if (groups.size() != 2) throw InputError("dist: --points needs exactly two points");
    } else if (!o.file.empty()) {
        const ordered_json j = load_json_file(o.file);
        if (!j.is_object() || !j.contains("points") || !j["points"].is_array() || j["points"].size() != 2) {
            throw InputError(o.file + ": expected {\"points\": [<a>, <b>]} with exactly two entries");
        }
        entries.assign(j["points"].begin(), j["points"].end());
    } else {
        throw InputError("dist: provide --points or --file");
    }
    const auto entry = [&](std::size_t i) -> ordered_json {
        if (!entries.empty()) return entries[i];
        return parse_json_text(groups[i], "dist: point " + std::to_string(i + 1));
    };
    const auto token = [&](std::size_t i) -> std::string {
        if (!entries.empty()) {
            return entries[i].is_string() ? entries[i].get<std::string>() : entries[i].dump();
        }
        return groups[i];
    };

    ordered_json j;
    j["metric"] = o.metric;
    if (o.metric == "padic") {
        if (o.alpha != 1.0) {
            throw ParameterError("dist: the p-adic metric is exact-rational and cannot be snowflaked");
        }
        const PAdicContext ctx(o.p);
        Rational a, b;
        if (!entries.empty()) {
            a = rational_from_json(entries[0], "dist");
            b = rational_from_json(entries[1], "dist");
        } else {
            a = parse_rational(groups[0]);
            b = parse_rational(groups[1]);
        }
        const Rational d = p_adic_distance(a, b, ctx);
        j["p"] = o.p;
        j["distance"] = format_rational(d);
        if (json_mode) {
            out << j.dump(2) << "\n";
        } else {
            out << format_rational(d) << "\n";
        }
        return 0;
    }

    double d = 0.0;
    if (o.metric == "discrete") {
        d = discrete_distance(token(0), token(1));
    } else if (o.metric == "sphere") {
        const UnitVector a(to_point(entry(0), "dist: point 1"));
        const UnitVector b(to_point(entry(1), "dist: point 2"));
        d = geodesic_distance(a, b);
    } else {
        const NormKind kind = o.metric == "l1" ? NormKind::l1 : o.metric == "l2" ? NormKind::l2 : NormKind::linf;
        d = distance(kind, to_point(entry(0), "dist: point 1"), to_point(entry(1), "dist: point 2"));
    }
    if (o.alpha != 1.0) {
        d = snowflake_distance(d, o.alpha);
        j["alpha"] = o.alpha;
    }
    j["distance"] = d;
    if (json_mode) {
        out << j.dump(2) << "\n";
    } else {
        out << format_double(d) << "\n";
    }
    return 0;
}

int run_verify(const VerifyOpts& o, std::ostream& out) {
    const bool json_mode = o.format == "json";

    if (o.metric == "squared-euclid-fixture") {
        // (x - y)^2 on R: fails the triangle inequality for any three
        // distinct reals with one between the others, so campaigns flag it.
        if (o.alpha != 1.0) throw ParameterError("verify: --alpha does not apply to the fixture");
        if (o.samples == 0) throw ParameterError("verify: need at least one sample");
        if (o.samples > 100) throw ParameterError("verify: samples capped at 100 (triangle pass is cubic)");
        const double tolerance = o.tolerance.value_or(1e-9);
        Rng rng(o.seed);
        std::vector<double> xs;
        xs.reserve(o.samples);
        for (std::size_t i = 0; i < o.samples; ++i) xs.push_back(rng.uniform(-10.0, 10.0));
        const auto report = verify_metric_axioms<double, double>(
            [](double a, double b) { return (a - b) * (a - b); }, std::span<const double>(xs), tolerance,
            [tolerance](double a, double b) { return std::abs(a - b) > tolerance; });
        if (json_mode) {
            out << report_json("squared-euclid-fixture", o.seed, report).dump(2) << "\n";
        } else {
            print_report_text(out, "squared-euclid-fixture", o.seed, report);
        }
        return report.passed() ? 0 : 1;
    }

    std::optional<MetricDescriptor> desc;
    if (o.metric == "l1" || o.metric == "l2" || o.metric == "linf") {
        const NormKind kind = o.metric == "l1" ? NormKind::l1 : o.metric == "l2" ? NormKind::l2 : NormKind::linf;
        desc = MetricDescriptor::vector(kind, o.dim);
    } else if (o.metric == "discrete") {
        desc = MetricDescriptor::discrete();
    } else if (o.metric == "padic") {
        desc = MetricDescriptor::padic(o.p);
    } else if (o.metric == "sphere") {
        desc = MetricDescriptor::sphere(o.dim);
    } else if (o.metric == "fn-d1") {
        desc = MetricDescriptor::function_d1();
    } else if (o.metric == "fn-dinf") {
        desc = MetricDescriptor::function_dinf();
    } else if (o.metric == "graph") {
        if (o.graph_file.empty()) throw InputError("verify: --metric graph needs --graph FILE");
        auto g = std::make_shared<const Graph>(load_graph(load_json_file(o.graph_file), o.graph_file));
        desc = MetricDescriptor::graph_metric(std::move(g));
    } else {
        throw InputError("verify: unknown metric " + o.metric);
    }
    if (o.alpha != 1.0) desc = MetricDescriptor::snowflake_of(std::move(*desc), o.alpha);

    const CampaignReport report = run_axiom_campaign(*desc, o.samples, o.seed, o.tolerance);
    const int code = campaign_passed(report) ? 0 : 1;
    std::visit(
        [&](const auto& r) {
            if (json_mode) {
                out << report_json(desc->name(), o.seed, r).dump(2) << "\n";
            } else {
                print_report_text(out, desc->name(), o.seed, r);
            }
        },
        report);
    return code;
}

int run_ball(const BallOpts& o, std::ostream& out) {
    const NormKind kind = o.metric == "l1" ? NormKind::l1 : o.metric == "l2" ? NormKind::l2 : NormKind::linf;
    const Point center = parse_inline_point(o.center, "ball: --center");
    const BallPolygon ball = unit_ball_polygon(kind, center, o.radius, o.segments);
    const std::string svg = ball_svg(ball);
    if (!o.out_file.empty()) {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file) throw InputError("cannot open " + o.out_file + " for writing");
        file << svg;
        if (!file) throw InputError("failed writing " + o.out_file);
    }
    if (o.format == "json") {
        ordered_json j;
        j["metric"] = o.metric;
        j["center"] = point_json(ball.center);
        j["radius"] = ball.radius;
        ordered_json verts = ordered_json::array();
        for (const Point& v : ball.vertices) verts.push_back(point_json(v));
        j["vertices"] = verts;
        out << j.dump(2) << "\n";
    } else if (o.out_file.empty()) {
        out << svg;
    }
    return 0;
}

int run_series(const SeriesOpts& o, std::ostream& out) {
    const Rational x = parse_rational(o.x);
    const SeriesMetric metric =
        o.metric == "padic" ? SeriesMetric(PAdicContext(o.p)) : SeriesMetric(StandardMetric{});
    // The final-row error doubles as the convergence gate: limit_error
    // rejects |x| >= 1 in the chosen metric before any table is printed.
    limit_error(x, 0, metric);
    const PartialSumTrace trace = make_partial_sum_trace(x, o.n, metric);
    const Rational limit = Rational(1) / (Rational(1) - x);

    if (o.format == "json") {
        ordered_json j;
        j["x"] = format_rational(x);
        j["n"] = o.n;
        j["metric"] = series_metric_name(metric);
        j["limit"] = format_rational(limit);
        ordered_json rows = ordered_json::array();
        for (std::size_t k = 0; k <= o.n; ++k) {
            rows.push_back({{"k", k},
                            {"S_k", format_rational(trace.partial_sums[k])},
                            {"distance", format_rational(trace.distance_to_limit[k])}});
        }
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    } else {
        out << "1/(1-x) = " << format_rational(limit) << "\n";
        out << "k\tS_k\td(S_k, 1/(1-x))\n";
        for (std::size_t k = 0; k <= o.n; ++k) {
            out << k << "\t" << format_rational(trace.partial_sums[k]) << "\t"
                << format_rational(trace.distance_to_limit[k]) << "\n";
        }
    }
    return 0;
}

int run_graph_dist(const GraphDistOpts& o, std::ostream& out) {
    const Graph g = load_graph(load_json_file(o.graph_file), o.graph_file);
    if (o.from >= g.vertex_count() || o.to >= g.vertex_count()) {
        throw InputError("graph-dist: vertex index out of range (n = " + std::to_string(g.vertex_count()) + ")");
    }
    ordered_json j;
    j["from"] = o.from;
    j["to"] = o.to;
    j["weighted"] = g.weighted();
    std::string text;
    if (g.weighted()) {
        const double d = weighted_graph_distance(g, o.from, o.to);
        j["distance"] = d;
        text = format_double(d);
    } else {
        const std::size_t d = graph_distance(g, o.from, o.to);
        j["distance"] = d;
        text = std::to_string(d);
    }
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << text << "\n";
    }
    return 0;
}

int run_fn_dist(const FnDistOpts& o, std::ostream& out) {
    const PLFunction f = load_pl_function(o.f_file);
    const PLFunction g = load_pl_function(o.g_file);
    const double d = o.metric == "d1" ? d1_distance(f, g) : dinf_distance(f, g);
    if (o.format == "json") {
        ordered_json j;
        j["metric"] = o.metric;
        j["distance"] = d;
        out << j.dump(2) << "\n";
    } else {
        out << format_double(d) << "\n";
    }
    return 0;
}

int run_extremals(const ExtremalsOpts& o, std::ostream& out) {
    const UnitVector x(parse_inline_point(o.x, "extremals: --x"));
    const UnitVector y(parse_inline_point(o.y, "extremals: --y"));
    const SliceExtremals ext = slice_extremal_points(x, y, o.r);
    const double d_xu = geodesic_distance(x, ext.u);
    const double d_xv = geodesic_distance(x, ext.v);

    std::optional<bool> sandwich;
    if (!o.w.empty()) {
        const UnitVector w(parse_inline_point(o.w, "extremals: --w"));
        sandwich = sandwich_check(x, y, w, ext, o.tolerance);
    }

    if (o.format == "json") {
        ordered_json j;
        j["u"] = point_json(ext.u.coords());
        j["v"] = point_json(ext.v.coords());
        j["d_xu"] = d_xu;
        j["d_xv"] = d_xv;
        if (sandwich) j["sandwich"] = *sandwich;
        out << j.dump(2) << "\n";
    } else {
        out << "u = " << point_text(ext.u.coords()) << "\n";
        out << "v = " << point_text(ext.v.coords()) << "\n";
        out << "d(x,u) = " << format_double(d_xu) << "\n";
        out << "d(x,v) = " << format_double(d_xv) << "\n";
        if (sandwich) out << "sandwich: " << (*sandwich ? "PASS" : "FAIL") << "\n";
    }
    return sandwich && !*sandwich ? 1 : 0;
}

void add_format_flag(CLI::App* sub, std::string& target) {
    sub->add_option("--format", target, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metric space toolkit: distances, axiom checks, balls, series"};
    app.name("mstk");
    app.set_version_flag("--version", "mstk 0.1.0");
    app.require_subcommand(1);

    DistOpts dist_o;
    auto* dist_cmd = app.add_subcommand("dist", "Distance between two points in a chosen metric");
    dist_cmd->add_option("--metric", dist_o.metric, "Metric name")
        ->required()
        ->check(CLI::IsMember({"l1", "l2", "linf", "sphere", "discrete", "padic"}));
    dist_cmd->add_option("--points", dist_o.points,
                         "Two inline points: \"[1,2] [4,6]\" for vectors, \"0 2\" for rationals or tokens");
    dist_cmd->add_option("--file", dist_o.file, "JSON file {\"points\": [<a>, <b>]}")
        ->excludes("--points");
    dist_cmd->add_option("--p", dist_o.p, "Prime for the p-adic metric")->capture_default_str();
    dist_cmd->add_option("--alpha", dist_o.alpha, "Snowflake exponent in (0, 1]")->capture_default_str();
    add_format_flag(dist_cmd, dist_o.format);

    VerifyOpts verify_o;
    auto* verify_cmd = app.add_subcommand("verify", "Run a seeded metric-axiom campaign");
    verify_cmd->add_option("--metric", verify_o.metric, "Metric name")
        ->required()
        ->check(CLI::IsMember({"l1", "l2", "linf", "sphere", "discrete", "padic", "fn-d1", "fn-dinf", "graph",
                               "squared-euclid-fixture"}));
    verify_cmd->add_option("--samples", verify_o.samples, "Sample size (max 100)")->capture_default_str();
    verify_cmd->add_option("--seed", verify_o.seed, "RNG seed")->capture_default_str();
    verify_cmd->add_option("--tolerance", verify_o.tolerance,
                           "Comparison tolerance (default 1e-9 floating, 0 exact)");
    verify_cmd->add_option("--dim", verify_o.dim, "Dimension for l1/l2/linf, n for sphere S^n")
        ->capture_default_str();
    verify_cmd->add_option("--p", verify_o.p, "Prime for the p-adic metric")->capture_default_str();
    verify_cmd->add_option("--alpha", verify_o.alpha, "Snowflake exponent in (0, 1]")->capture_default_str();
    verify_cmd->add_option("--graph", verify_o.graph_file, "Graph JSON file for --metric graph");
    add_format_flag(verify_cmd, verify_o.format);

    BallOpts ball_o;
    auto* ball_cmd = app.add_subcommand("ball", "Emit an SVG of a metric ball in the plane");
    ball_cmd->add_option("--metric", ball_o.metric, "Norm to draw")
        ->required()
        ->check(CLI::IsMember({"l1", "l2", "linf"}));
    ball_cmd->add_option("--center", ball_o.center, "Ball center \"[x,y]\"")->capture_default_str();
    ball_cmd->add_option("--radius", ball_o.radius, "Ball radius")->capture_default_str();
    ball_cmd->add_option("--segments", ball_o.segments, "Polygon segments for the round ball (min 64)")
        ->capture_default_str();
    ball_cmd->add_option("--out", ball_o.out_file, "Write the SVG here instead of stdout");
    add_format_flag(ball_cmd, ball_o.format);

    SeriesOpts series_o;
    auto* series_cmd = app.add_subcommand("series", "Geometric series table: exact sums and exact errors");
    series_cmd->add_option("--x", series_o.x, "Ratio as a rational, e.g. 1/2 or -3/7")->required();
    series_cmd->add_option("--n", series_o.n, "Last partial-sum index")->required();
    series_cmd->add_option("--metric", series_o.metric, "Metric for the error column")
        ->check(CLI::IsMember({"standard", "padic"}))
        ->capture_default_str();
    series_cmd->add_option("--p", series_o.p, "Prime for the p-adic metric")->capture_default_str();
    add_format_flag(series_cmd, series_o.format);

    GraphDistOpts graph_o;
    auto* graph_cmd = app.add_subcommand("graph-dist", "Shortest-path distance in a graph");
    graph_cmd->add_option("--graph", graph_o.graph_file, "Graph JSON file")->required();
    graph_cmd->add_option("--from", graph_o.from, "Start vertex")->required();
    graph_cmd->add_option("--to", graph_o.to, "End vertex")->required();
    add_format_flag(graph_cmd, graph_o.format);

    FnDistOpts fn_o;
    auto* fn_cmd = app.add_subcommand("fn-dist", "Distance between two piecewise-linear functions on [0,1]");
    fn_cmd->add_option("--metric", fn_o.metric, "d1 (integral) or dinf (sup)")
        ->required()
        ->check(CLI::IsMember({"d1", "dinf"}));
    fn_cmd->add_option("--f", fn_o.f_file, "First function JSON file")->required();
    fn_cmd->add_option("--g", fn_o.g_file, "Second function JSON file")->required();
    add_format_flag(fn_cmd, fn_o.format);

    ExtremalsOpts ext_o;
    auto* ext_cmd = app.add_subcommand("extremals", "Nearest and farthest points of a spherical slice");
    ext_cmd->add_option("--x", ext_o.x, "Observer point \"[x1,...,xn]\" on the sphere")->required();
    ext_cmd->add_option("--y", ext_o.y, "Slice center on the sphere")->required();
    ext_cmd->add_option("--r", ext_o.r, "Slice geodesic radius in (0, pi)")->required();
    ext_cmd->add_option("--w", ext_o.w, "Optional probe point on the slice; checks the sandwich bound");
    ext_cmd->add_option("--tolerance", ext_o.tolerance, "Sandwich comparison tolerance")->capture_default_str();
    add_format_flag(ext_cmd, ext_o.format);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (dist_cmd->parsed()) return run_dist(dist_o, out);
        if (verify_cmd->parsed()) return run_verify(verify_o, out);
        if (ball_cmd->parsed()) return run_ball(ball_o, out);
        if (series_cmd->parsed()) return run_series(series_o, out);
        if (graph_cmd->parsed()) return run_graph_dist(graph_o, out);
        if (fn_cmd->parsed()) return run_fn_dist(fn_o, out);
        if (ext_cmd->parsed()) return run_extremals(ext_o, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mstk::cli
