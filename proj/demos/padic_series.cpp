// Prints 2-adic absolute values for small integers, then watches the
// geometric series 1 + 2 + 4 + ... converge 2-adically to -1 while its
// real partial sums blow up.

#include <cstdio>

#include "mstk/mstk.hpp"

using namespace mstk;

int main() {
    const PAdicContext two(2);

    std::printf("|n|_2 for n = 1..12:\n");
    for (long long n = 1; n <= 12; ++n) {
        std::printf("  |%2lld|_2 = %s\n", n, format_rational(p_adic_abs(Rational(n), two)).c_str());
    }

    std::printf("\npartial sums of 1 + 2 + 4 + ... and their 2-adic distance to -1:\n");
    const Rational limit = Rational(1) / (Rational(1) - Rational(2));
    for (std::size_t n = 0; n <= 10; ++n) {
        const Rational s = geometric_partial_sum(Rational(2), n);
        const Rational err = p_adic_distance(s, limit, two);
        std::printf("  S_%-2zu = %-6s d_2(S_n, -1) = %s\n", n, format_rational(s).c_str(),
                    format_rational(err).c_str());
    }

    std::printf("\nthe exact limit errors match %s:\n", "1/2^{n+1}");
    for (std::size_t n = 0; n <= 6; ++n) {
        std::printf("  limit_error(2, %zu) = %s\n", n,
                    format_rational(limit_error(Rational(2), n, SeriesMetric{two})).c_str());
    }

    std::printf("\nisosceles triangles: when |x|_2 != |y|_2, |x + y|_2 = max(|x|_2, |y|_2):\n");
    const Rational pairs[][2] = {{Rational(4), Rational(1)}, {Rational(8), Rational(6)}, {Rational(2), Rational(5)}};
    for (const auto& pair : pairs) {
        const Rational ax = p_adic_abs(pair[0], two);
        const Rational ay = p_adic_abs(pair[1], two);
        const Rational sum = p_adic_abs(pair[0] + pair[1], two);
        std::printf("  |%s|_2 = %-4s |%s|_2 = %-4s |sum|_2 = %s\n", format_rational(pair[0]).c_str(),
                    format_rational(ax).c_str(), format_rational(pair[1]).c_str(), format_rational(ay).c_str(),
                    format_rational(sum).c_str());
    }
    return 0;
}
