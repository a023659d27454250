#include <gtest/gtest.h>

#include <cmath>

#include "viewhedge/normal.hpp"

using viewhedge::norm_cdf;
using viewhedge::norm_pdf;

namespace {

struct CdfPoint {
    double x;
    double expected;
};

// Φ(x) to 25 significant digits (mpmath, 40-digit working precision).
constexpr CdfPoint kReference[] = {
    {-37.0, 5.725571222524576822683193e-300},
    {-20.0, 2.753624118606233695075623e-89},
    {-10.0, 7.619853024160526065973343e-24},
    {-8.0, 6.220960574271784123515995e-16},
    {-5.0, 2.866515718791939116737523e-07},
    {-3.0, 0.001349898031630094526651815},
    {-2.0, 0.02275013194817920720028264},
    {-1.5, 0.06680720126885806600449404},
    {-1.0, 0.1586552539314570514147675},
    {-0.5, 0.3085375387259868963622954},
    {-0.1, 0.4601721627229710185345954},
    {0.0, 0.5},
    {0.1, 0.5398278372770289814654046},
    {0.5, 0.6914624612740131036377046},
    {1.0, 0.8413447460685429485852325},
    {2.0, 0.9772498680518207927997174},
    {3.0, 0.9986501019683699054733482},
    {5.0, 0.9999997133484281208060883},
    {8.0, 0.9999999999999993779039426},
    {10.0, 0.9999999999999999999999924},
};

}  // namespace

TEST(NormalCdf, MatchesHighPrecisionTableToAbsolute1e15) {
    for (const auto& p : kReference) {
        EXPECT_LE(std::abs(norm_cdf(p.x) - p.expected), 1e-15) << "x = " << p.x;
    }
}

TEST(NormalCdf, LowerTailKeepsRelativeAccuracy) {
    for (const auto& p : kReference) {
        if (p.x < 0.0) {
            EXPECT_NEAR(norm_cdf(p.x) / p.expected, 1.0, 1e-13) << "x = " << p.x;
        }
    }
}

TEST(NormalCdf, SymmetryAndPdfNormalisation) {
    for (double x = -6.0; x <= 6.0; x += 0.25) {
        EXPECT_NEAR(norm_cdf(x) + norm_cdf(-x), 1.0, 2e-16);
    }
    EXPECT_DOUBLE_EQ(norm_pdf(0.0), 0.3989422804014327);
    EXPECT_DOUBLE_EQ(norm_pdf(1.3), norm_pdf(-1.3));
}
