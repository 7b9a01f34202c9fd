#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <span>
#include <vector>

#include "mstk/padic.hpp"
#include "mstk/metric_core.hpp"
#include "mstk/rng.hpp"
#include "mstk/sampling.hpp"

using namespace mstk;

TEST_CASE("contexts accept primes and nothing else", "[padic]") {
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 97ull}) {
        CHECK(PAdicContext(p).prime() == p);
    }
    for (const std::uint64_t p : {0ull, 1ull, 4ull, 6ull, 9ull, 10ull, 91ull}) {
        CHECK_THROWS_AS(PAdicContext(p), ParameterError);
    }
}

TEST_CASE("valuation examples", "[padic]") {
    const PAdicContext p2(2);
    CHECK(p_adic_valuation(Rational(12), p2).value() == 2);
    CHECK(p_adic_valuation(Rational(1, 6), p2).value() == -1);
    CHECK(p_adic_valuation(Rational(8), p2).value() == 3);
    CHECK(p_adic_valuation(Rational(5), p2).value() == 0);

    const Valuation zero = p_adic_valuation(Rational(0), p2);
    CHECK(zero.is_infinity());
    CHECK_THROWS_AS(zero.value(), Error);
}

TEST_CASE("absolute value examples", "[padic]") {
    const PAdicContext p2(2);
    CHECK(p_adic_abs(Rational(12), p2) == Rational(1, 4));
    CHECK(p_adic_abs(Rational(0), p2) == Rational(0));
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        const PAdicContext ctx(p);
        CHECK(p_adic_abs(Rational(p), ctx) == Rational(1, p));
        CHECK(p_adic_abs(Rational(1), ctx) == Rational(1));
    }
}

TEST_CASE("integers never exceed p-adic absolute value 1", "[padic]") {
    Rng rng(41);
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        const PAdicContext ctx(p);
        for (int i = 0; i < 200; ++i) {
            const auto n = static_cast<std::int64_t>(rng.below(2000001)) - 1000000;
            CHECK(p_adic_abs(Rational(n), ctx) <= Rational(1));
        }
    }
}

TEST_CASE("distance examples", "[padic]") {
    const PAdicContext p2(2);
    CHECK(p_adic_distance(Rational(0), Rational(2), p2) == Rational(1, 2));
    CHECK(p_adic_distance(Rational(1), Rational(2), p2) == Rational(1));
    CHECK(p_adic_distance(Rational(5), Rational(5), p2) == Rational(0));
}

TEST_CASE("ultrametric examples", "[padic]") {
    const PAdicContext p2(2);
    const auto a = ultrametric_defect(Rational(0), Rational(1), Rational(2), p2);
    CHECK(a.holds);
    CHECK(a.lhs == Rational(1, 2));
    CHECK(a.strong_rhs == Rational(1));

    const auto b = ultrametric_defect(Rational(0), Rational(4), Rational(8), p2);
    CHECK(b.holds);
    CHECK(b.lhs == Rational(1, 8));
    CHECK(b.strong_rhs == Rational(1, 4));
}

TEST_CASE("ultrametric inequality holds exactly on random triples", "[padic]") {
    Rng rng(43);
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        const PAdicContext ctx(p);
        for (int i = 0; i < 300; ++i) {
            const Rational x = sample_rational(rng);
            const Rational y = sample_rational(rng);
            const Rational z = sample_rational(rng);
            CHECK(ultrametric_defect(x, y, z, ctx).holds);
        }
    }
}

TEST_CASE("isosceles property: unequal absolute values force the max", "[padic]") {
    Rng rng(47);
    for (const std::uint64_t p : {2ull, 3ull, 5ull}) {
        const PAdicContext ctx(p);
        int checked = 0;
        while (checked < 200) {
            const Rational x = sample_rational(rng);
            const Rational y = sample_rational(rng);
            const Rational ax = p_adic_abs(x, ctx);
            const Rational ay = p_adic_abs(y, ctx);
            if (ax == ay) continue;
            const Rational expected = ax < ay ? ay : ax;
            CHECK(p_adic_abs(x + y, ctx) == expected);
            ++checked;
        }
    }
}

TEST_CASE("absolute value is multiplicative", "[padic]") {
    const PAdicContext p2(2);
    CHECK(abs_multiplicativity_check(Rational(12), Rational(1, 6), p2));
    CHECK(abs_multiplicativity_check(Rational(3), Rational(5), p2));

    Rng rng(53);
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        const PAdicContext ctx(p);
        for (int i = 0; i < 200; ++i) {
            CHECK(abs_multiplicativity_check(sample_rational(rng), sample_rational(rng), ctx));
        }
    }
}

TEST_CASE("p-adic metric passes the axiom verifier with zero tolerance", "[padic]") {
    Rng rng(59);
    const PAdicContext ctx(3);
    const std::vector<Rational> sample = sample_rationals(rng, 40);
    const auto report = verify_metric_axioms<Rational, Rational>(
        [&ctx](const Rational& a, const Rational& b) { return p_adic_distance(a, b, ctx); },
        std::span<const Rational>(sample), Rational(0));
    CHECK(report.passed());
}
