#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "mstk/rng.hpp"
#include "mstk/sampling.hpp"
#include "mstk/sphere.hpp"

using namespace mstk;

namespace {

UnitVector on_slice(double r, double theta) {
    // Slice of geodesic radius r about e3 in S^2, parametrized by angle.
    return UnitVector(Point({std::sin(r) * std::cos(theta), std::sin(r) * std::sin(theta), std::cos(r)}));
}

}  // namespace

TEST_CASE("unit vectors normalize and reject zero", "[sphere]") {
    const UnitVector x(Point({2, 0, 0}));
    CHECK(x.coords() == Point({1, 0, 0}));
    CHECK_THROWS_AS(UnitVector(Point({0, 0, 0})), InputError);
}

TEST_CASE("geodesic distance worked examples", "[sphere]") {
    const UnitVector e1({1, 0, 0});
    const UnitVector e2({0, 1, 0});
    const UnitVector me1({-1, 0, 0});

    CHECK(geodesic_distance(e1, me1) == kPi);
    CHECK(chord_distance(e1, me1) == 2.0);
    CHECK(geodesic_distance(e1, e1) == 0.0);
    CHECK(geodesic_distance(e1, e2) == Catch::Approx(kPi / 2).margin(1e-15));
    CHECK(chord_distance(e1, e2) == Catch::Approx(std::sqrt(2.0)).margin(1e-15));
}

TEST_CASE("nearly antipodal points snap to pi", "[sphere]") {
    const UnitVector x({1, 0, 0});
    const UnitVector y(Point({-1.0, 1e-13, 0.0}));
    CHECK(geodesic_distance(x, y) == kPi);
}

TEST_CASE("dimension mismatch is rejected", "[sphere]") {
    const UnitVector a({1, 0, 0});
    const UnitVector b({1, 0, 0, 0, 0});
    CHECK_THROWS_AS(geodesic_distance(a, b), DimensionMismatch);
    CHECK_THROWS_AS(chord_distance(a, b), DimensionMismatch);
}

TEST_CASE("chord and geodesic satisfy the sine relation", "[sphere]") {
    Rng rng(73);
    for (const std::size_t ambient : {3u, 5u}) {
        for (int i = 0; i < 500; ++i) {
            const UnitVector x = sample_unit_vector(rng, ambient);
            const UnitVector y = sample_unit_vector(rng, ambient);
            const double d = geodesic_distance(x, y);
            const double chord = chord_distance(x, y);
            CHECK(std::abs(2.0 * std::sin(d / 2.0) - chord) <= 1e-9);
            CHECK(chord <= d + 1e-12);
            CHECK(d <= (kPi / 2.0) * chord + 1e-12);
        }
    }
}

TEST_CASE("geodesic triangle inequality at random", "[sphere]") {
    Rng rng(79);
    for (int i = 0; i < 400; ++i) {
        const UnitVector x = sample_unit_vector(rng, 3);
        const UnitVector y = sample_unit_vector(rng, 3);
        const UnitVector z = sample_unit_vector(rng, 3);
        CHECK(geodesic_distance(x, z) <= geodesic_distance(x, y) + geodesic_distance(y, z) + 1e-9);
    }
}

TEST_CASE("slice extremals: quarter turn example", "[sphere]") {
    const UnitVector e1({1, 0, 0});
    const UnitVector e3({0, 0, 1});
    const auto ext = slice_extremal_points(e1, e3, kPi / 2);
    CHECK(std::abs(ext.u.coords()[0] - 1.0) <= 1e-12);
    CHECK(std::abs(ext.u.coords()[1]) <= 1e-12);
    CHECK(std::abs(ext.v.coords()[0] + 1.0) <= 1e-12);
    CHECK(ext.slice_radius == kPi / 2);
}

TEST_CASE("slice extremals: eighth turn example", "[sphere]") {
    const UnitVector e1({1, 0, 0});
    const UnitVector e3({0, 0, 1});
    const double r = kPi / 4;
    const auto ext = slice_extremal_points(e1, e3, r);
    const double s = std::sin(r);
    const double c = std::cos(r);
    CHECK(std::abs(ext.u.coords()[0] - s) <= 1e-12);
    CHECK(std::abs(ext.u.coords()[2] - c) <= 1e-12);
    CHECK(std::abs(ext.v.coords()[0] + s) <= 1e-12);
    CHECK(std::abs(ext.v.coords()[2] - c) <= 1e-12);
}

TEST_CASE("extremal ordering and membership on random configurations", "[sphere]") {
    Rng rng(83);
    for (int i = 0; i < 300; ++i) {
        const UnitVector x = sample_unit_vector(rng, 4);
        const UnitVector y = sample_unit_vector(rng, 4);
        if (chord_distance(x, y) < 1e-6 || chord_distance(x, y) > 2.0 - 1e-6) continue;
        const double r = rng.uniform(0.05, kPi - 0.05);
        const auto ext = slice_extremal_points(x, y, r);
        CHECK(geodesic_distance(x, ext.u) <= geodesic_distance(x, ext.v) + 1e-12);
        CHECK(std::abs(geodesic_distance(y, ext.u) - r) <= 1e-9);
        CHECK(std::abs(geodesic_distance(y, ext.v) - r) <= 1e-9);
    }
}

TEST_CASE("slice extremal parameter validation", "[sphere]") {
    const UnitVector e1({1, 0, 0});
    const UnitVector e3({0, 0, 1});
    CHECK_THROWS_AS(slice_extremal_points(e1, e3, 0.0), ParameterError);
    CHECK_THROWS_AS(slice_extremal_points(e1, e3, kPi), ParameterError);
    CHECK_THROWS_AS(slice_extremal_points(e1, e1, 1.0), DegenerateConfiguration);
    CHECK_THROWS_AS(slice_extremal_points(e1, UnitVector({-1, 0, 0}), 1.0), DegenerateConfiguration);
}

TEST_CASE("sandwich bound: equator example and boundary equality", "[sphere]") {
    const UnitVector e1({1, 0, 0});
    const UnitVector e2({0, 1, 0});
    const UnitVector e3({0, 0, 1});
    const auto ext = slice_extremal_points(e1, e3, kPi / 2);
    CHECK(sandwich_check(e1, e3, e2, ext, 1e-9));
    CHECK(sandwich_check(e1, e3, ext.u, ext, 1e-9));
    CHECK(sandwich_check(e1, e3, ext.v, ext, 1e-9));
}

TEST_CASE("sandwich bound holds across random slices", "[sphere]") {
    Rng rng(89);
    for (int i = 0; i < 300; ++i) {
        const UnitVector x = sample_unit_vector(rng, 3);
        const UnitVector y({0, 0, 1});
        if (std::abs(x.coords()[2]) > 1.0 - 1e-6) continue;
        const double r = rng.uniform(0.05, kPi - 0.05);
        const auto ext = slice_extremal_points(x, y, r);
        const UnitVector w = on_slice(r, rng.uniform(0.0, 2.0 * kPi));
        CHECK(sandwich_check(x, y, w, ext, 1e-9));
    }
}

TEST_CASE("sandwich bound rejects probes off the slice", "[sphere]") {
    const UnitVector e1({1, 0, 0});
    const UnitVector e3({0, 0, 1});
    const auto ext = slice_extremal_points(e1, e3, kPi / 2);
    CHECK_THROWS_AS(sandwich_check(e1, e3, e3, ext, 1e-9), InputError);
    CHECK_THROWS_AS(sandwich_check(e1, e3, UnitVector({0, 1, 0}), ext, -1.0), ParameterError);
}

TEST_CASE("foot of the slice plane gives an exact right angle", "[sphere]") {
    // Dropping x onto the plane {z : <z, y> = cos r} splits x-to-w into two
    // orthogonal legs, which is the engine behind the sandwich bound.
    Rng rng(97);
    for (int i = 0; i < 200; ++i) {
        const UnitVector x = sample_unit_vector(rng, 3);
        const Point y({0, 0, 1});
        const double r = rng.uniform(0.05, kPi - 0.05);
        const UnitVector w = on_slice(r, rng.uniform(0.0, 2.0 * kPi));
        const Point foot = x.coords() + (-(dot(x.coords(), y) - std::cos(r))) * y;
        const double lhs = dot(x.coords() + (-1.0) * w.coords(), x.coords() + (-1.0) * w.coords());
        const double leg1 = dot(x.coords() + (-1.0) * foot, x.coords() + (-1.0) * foot);
        const double leg2 = dot(foot + (-1.0) * w.coords(), foot + (-1.0) * w.coords());
        CHECK(lhs == Catch::Approx(leg1 + leg2).margin(1e-12));
    }
}
