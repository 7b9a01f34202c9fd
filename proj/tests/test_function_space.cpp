#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mstk/function_space.hpp"
#include "mstk/rng.hpp"
#include "mstk/sampling.hpp"

using namespace mstk;

namespace {

const PLFunction kIdentity({0.0, 1.0}, {0.0, 1.0});
const PLFunction kTent({0.0, 0.5, 1.0}, {0.0, 1.0, 0.0});

double grid_d1(const PLFunction& f, const PLFunction& g, std::size_t cells) {
    double acc = 0.0;
    const double h = 1.0 / static_cast<double>(cells);
    double prev = std::abs(f(0.0) - g(0.0));
    for (std::size_t i = 1; i <= cells; ++i) {
        const double t = static_cast<double>(i) * h;
        const double cur = std::abs(f(t) - g(t));
        acc += 0.5 * (prev + cur) * h;
        prev = cur;
    }
    return acc;
}

double grid_dinf(const PLFunction& f, const PLFunction& g, std::size_t cells) {
    double best = 0.0;
    for (std::size_t i = 0; i <= cells; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(cells);
        best = std::max(best, std::abs(f(t) - g(t)));
    }
    return best;
}

}  // namespace

TEST_CASE("piecewise-linear functions validate their data", "[function-space]") {
    CHECK_THROWS_AS(PLFunction({0.0}, {1.0}), InputError);
    CHECK_THROWS_AS(PLFunction({0.0, 0.5, 1.0}, {0.0, 1.0}), InputError);
    CHECK_THROWS_AS(PLFunction({0.1, 1.0}, {0.0, 1.0}), InputError);
    CHECK_THROWS_AS(PLFunction({0.0, 0.9}, {0.0, 1.0}), InputError);
    CHECK_THROWS_AS(PLFunction({0.0, 0.5, 0.5, 1.0}, {0.0, 1.0, 1.0, 0.0}), InputError);
    CHECK_THROWS_AS(PLFunction({0.0, 0.7, 0.3, 1.0}, {0.0, 1.0, 1.0, 0.0}), InputError);
    CHECK_THROWS_AS(PLFunction({0.0, 1.0}, {0.0, std::numeric_limits<double>::quiet_NaN()}), InputError);
}

TEST_CASE("evaluation interpolates and hits breakpoints exactly", "[function-space]") {
    CHECK(kIdentity(0.25) == 0.25);
    CHECK(kIdentity(0.0) == 0.0);
    CHECK(kIdentity(1.0) == 1.0);
    CHECK(kTent(0.5) == 1.0);
    CHECK(kTent(0.75) == 0.5);
    const PLFunction three = PLFunction::constant(3.0);
    CHECK(three(0.0) == 3.0);
    CHECK(three(0.37) == 3.0);
    CHECK(three(1.0) == 3.0);
    CHECK_THROWS_AS(kIdentity(-0.1), DomainError);
    CHECK_THROWS_AS(kIdentity(1.1), DomainError);
}

TEST_CASE("worked distance examples", "[function-space]") {
    const PLFunction zero = PLFunction::constant(0.0);
    const PLFunction one_minus({0.0, 1.0}, {1.0, 0.0});
    CHECK(d1_distance(kIdentity, zero) == 0.5);
    CHECK(d1_distance(kIdentity, one_minus) == Catch::Approx(0.5).margin(1e-15));
    CHECK(dinf_distance(kIdentity, zero) == 1.0);
    CHECK(dinf_distance(kIdentity, one_minus) == 1.0);
}

TEST_CASE("self distance is exactly zero", "[function-space]") {
    Rng rng(113);
    for (int i = 0; i < 50; ++i) {
        const PLFunction f = sample_pl_function(rng);
        CHECK(d1_distance(f, f) == 0.0);
        CHECK(dinf_distance(f, f) == 0.0);
    }
}

TEST_CASE("metrics merge unequal breakpoint grids", "[function-space]") {
    // Tent vs identity: |f - g| crosses zero inside a shared segment, so the
    // integrator has to split there rather than trapezoid across it.
    const double d1 = d1_distance(kTent, kIdentity);
    CHECK(d1 == Catch::Approx(grid_d1(kTent, kIdentity, 200000)).margin(1e-6));
    CHECK(dinf_distance(kTent, kIdentity) == 1.0);
}

TEST_CASE("exact metrics agree with dense grid oracles", "[function-space]") {
    Rng rng(127);
    for (int i = 0; i < 15; ++i) {
        const PLFunction f = sample_pl_function_bounded_slope(rng, 1.5);
        const PLFunction g = sample_pl_function_bounded_slope(rng, 1.5);
        CHECK(d1_distance(f, g) == Catch::Approx(grid_d1(f, g, 100000)).margin(1e-5));
        CHECK(dinf_distance(f, g) == Catch::Approx(grid_dinf(f, g, 100000)).margin(1e-4));
        CHECK(dinf_distance(f, g) >= grid_dinf(f, g, 100000) - 1e-12);
    }
}

TEST_CASE("d1 never exceeds dinf", "[function-space]") {
    Rng rng(131);
    for (int i = 0; i < 300; ++i) {
        const PLFunction f = sample_pl_function(rng);
        const PLFunction g = sample_pl_function(rng);
        CHECK(d1_distance(f, g) <= dinf_distance(f, g) + 1e-12);
    }
}

TEST_CASE("scaling a function scales both distances by |c|", "[function-space]") {
    Rng rng(137);
    for (int i = 0; i < 100; ++i) {
        const PLFunction f = sample_pl_function(rng);
        const PLFunction g = sample_pl_function(rng);
        const double c = rng.uniform(-4.0, 4.0);
        const PLFunction cf = f.scaled(c);
        const PLFunction cg = g.scaled(c);
        CHECK(d1_distance(cf, cg) == Catch::Approx(std::abs(c) * d1_distance(f, g)).margin(1e-9));
        CHECK(dinf_distance(cf, cg) == Catch::Approx(std::abs(c) * dinf_distance(f, g)).margin(1e-9));
    }
}

TEST_CASE("scaling by a non-finite factor is rejected", "[function-space]") {
    CHECK_THROWS_AS(kIdentity.scaled(std::numeric_limits<double>::infinity()), InputError);
    CHECK_THROWS_AS(kIdentity.scaled(std::numeric_limits<double>::quiet_NaN()), InputError);
}

TEST_CASE("triangle inequality for both metrics at random", "[function-space]") {
    Rng rng(139);
    for (int i = 0; i < 150; ++i) {
        const PLFunction f = sample_pl_function(rng);
        const PLFunction g = sample_pl_function(rng);
        const PLFunction h = sample_pl_function(rng);
        CHECK(d1_distance(f, h) <= d1_distance(f, g) + d1_distance(g, h) + 1e-12);
        CHECK(dinf_distance(f, h) <= dinf_distance(f, g) + dinf_distance(g, h) + 1e-12);
    }
}
