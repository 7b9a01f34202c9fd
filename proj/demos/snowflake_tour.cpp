// Walks one configuration of points through every floating-point metric in
// the library, then shows what snowflaking does to a triangle that is tight
// in the Euclidean metric.

#include <cstdio>

#include "mstk/mstk.hpp"

using namespace mstk;

int main() {
    const Point a({0.0, 0.0});
    const Point b({3.0, 4.0});
    std::printf("distances from (0,0) to (3,4):\n");
    std::printf("  l1   %.17g\n", distance(NormKind::l1, a, b));
    std::printf("  l2   %.17g\n", distance(NormKind::l2, a, b));
    std::printf("  linf %.17g\n", distance(NormKind::linf, a, b));

    // x, y, z collinear: the triangle inequality is an equality for l2,
    // and snowflaking turns it strict. The slack below is the concavity gap
    // (u + v)^alpha < u^alpha + v^alpha.
    const Point x({0.0, 0.0});
    const Point y({1.0, 0.0});
    const Point z({3.0, 0.0});
    std::printf("\ncollinear triple x=(0,0), y=(1,0), z=(3,0):\n");
    for (const double alpha : {1.0, 0.75, 0.5, 0.25}) {
        const double d_xz = snowflake_distance(distance(NormKind::l2, x, z), alpha);
        const double d_xy = snowflake_distance(distance(NormKind::l2, x, y), alpha);
        const double d_yz = snowflake_distance(distance(NormKind::l2, y, z), alpha);
        std::printf("  alpha %.2f: d(x,z) = %.6f, d(x,y) + d(y,z) = %.6f, slack %.6f\n", alpha, d_xz,
                    d_xy + d_yz, d_xy + d_yz - d_xz);
    }

    std::printf("\naxiom campaigns, 60 samples, seed 7:\n");
    const MetricDescriptor metrics[] = {
        MetricDescriptor::vector(NormKind::l2, 3),
        MetricDescriptor::sphere(2),
        MetricDescriptor::function_d1(),
        MetricDescriptor::snowflake_of(MetricDescriptor::vector(NormKind::l2, 3), 0.5),
    };
    for (const MetricDescriptor& metric : metrics) {
        const CampaignReport report = run_axiom_campaign(metric, 60, 7);
        std::printf("  %-36s %s\n", metric.name().c_str(), campaign_passed(report) ? "PASS" : "FAIL");
    }
    return 0;
}
