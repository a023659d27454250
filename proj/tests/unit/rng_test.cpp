#include <gtest/gtest.h>

#include <cmath>

#include "viewhedge/rng.hpp"

using namespace viewhedge;

// Known-answer vectors published with the Random123 reference implementation.
TEST(Philox, KnownAnswers) {
    using A4 = std::array<std::uint32_t, 4>;
    EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}), (A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(PathNormals, PureFunctionOfCoordinates) {
    const PathNormals a(123);
    const PathNormals b(123);
    const PathNormals c(124);
    EXPECT_EQ(a.normal(5, Substream::Vol, 3), b.normal(5, Substream::Vol, 3));
    EXPECT_NE(a.normal(5, Substream::Vol, 3), c.normal(5, Substream::Vol, 3));
    EXPECT_NE(a.normal(5, Substream::Vol, 0), a.normal(5, Substream::Underlying, 0));
    EXPECT_NE(a.normal(5, Substream::Vol, 0), a.normal(6, Substream::Vol, 0));
    EXPECT_NE(a.normal(1ull << 32, Substream::Vol, 0), a.normal(0, Substream::Vol, 0));
}

TEST(PathNormals, UniformsInUnitInterval) {
    const PathNormals g(1);
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const double u = g.uniform(i, Substream::Underlying, i % 5);
        ASSERT_GT(u, 0.0);
        ASSERT_LE(u, 1.0);
    }
}

TEST(PathNormals, MomentsAndIndependence) {
    const PathNormals g(20140101);
    const int n = 1000000;
    double m1 = 0, m2 = 0, m3 = 0, m4 = 0, c12 = 0, c01 = 0;
    for (int i = 0; i < n; ++i) {
        const PathDraw d = draw_path(g, i);
        const double z = d.z1;
        m1 += z;
        m2 += z * z;
        m3 += z * z * z;
        m4 += z * z * z * z;
        c12 += d.z1 * d.z2;
        c01 += g.normal(i, Substream::Vol, 0) * g.normal(i, Substream::Vol, 1);
    }
    const double sn = std::sqrt(static_cast<double>(n));
    EXPECT_NEAR(m1 / n, 0.0, 5.0 / sn);
    EXPECT_NEAR(m2 / n, 1.0, 5.0 * std::sqrt(2.0) / sn);
    EXPECT_NEAR(m3 / n, 0.0, 5.0 * std::sqrt(15.0) / sn);
    EXPECT_NEAR(m4 / n, 3.0, 5.0 * std::sqrt(96.0) / sn);
    EXPECT_NEAR(c12 / n, 0.0, 5.0 / sn);
    EXPECT_NEAR(c01 / n, 0.0, 5.0 / sn);
}

TEST(PathNormals, TailFrequency) {
    const PathNormals g(3);
    const int n = 1000000;
    int beyond = 0;
    for (int i = 0; i < n; ++i) beyond += std::abs(g.normal(i, Substream::Underlying, 0)) > 2.0;
    // P(|Z| > 2) = 0.0455002638963584
    const double p = 0.0455002638963584;
    EXPECT_NEAR(static_cast<double>(beyond) / n, p, 5.0 * std::sqrt(p * (1 - p) / n));
}
