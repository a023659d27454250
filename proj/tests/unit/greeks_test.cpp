#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "viewhedge/errors.hpp"
#include "viewhedge/greeks.hpp"

using namespace viewhedge;
using viewhedge::testing::rel_diff;
using viewhedge::testing::SpecSampler;

namespace {

const OptionSpec kAtm{100.0, 100.0, 0.05, 0.2, 0.1};

}  // namespace

TEST(DTerms, ReferenceValues) {
    // ln(1) = 0, so d1 = (r + σ²/2)√T/σ = 0.07·√0.1/0.2.
    const auto d = d_terms(kAtm);
    EXPECT_NEAR(d.d1, 0.1106797181058933, 1e-15);
    EXPECT_NEAR(d.d2, 0.04743416490252569, 1e-15);
}

TEST(DTerms, AtTheMoneyZeroRateIsSymmetric) {
    for (double sig : {0.1, 0.35, 0.8}) {
        for (double t : {0.05, 1.0, 3.0}) {
            const auto d = d_terms({100.0, 100.0, 0.0, sig, t});
            EXPECT_NEAR(d.d1, 0.5 * sig * std::sqrt(t), 1e-15);
            EXPECT_NEAR(d.d2, -d.d1, 1e-15);
        }
    }
}

TEST(DTerms, DeepInTheMoney) {
    EXPECT_GT(d_terms({200.0, 100.0, 0.05, 0.2, 0.01}).d1, 30.0);
}

TEST(DTerms, RejectsInvalidFieldsByName) {
    auto field_of = [](OptionSpec s) -> std::string {
        try {
            d_terms(s);
        } catch (const DomainError& e) {
            return e.field();
        }
        return "";
    };
    EXPECT_EQ(field_of({0.0, 100, 0.05, 0.2, 0.1}), "spot");
    EXPECT_EQ(field_of({100, -1, 0.05, 0.2, 0.1}), "strike");
    EXPECT_EQ(field_of({100, 100, NAN, 0.2, 0.1}), "rate");
    EXPECT_EQ(field_of({100, 100, 0.05, 0.0, 0.1}), "vol_hat");
    EXPECT_EQ(field_of({100, 100, 0.05, 0.2, 0.0}), "maturity");
    EXPECT_NO_THROW(d_terms({100, 100, -0.02, 0.2, 0.1}));
}

TEST(Price, MatchesRiskNeutralQuadrature) {
    // e^{-rT}∫(S e^{(r-σ²/2)T+σ√T z} − K)⁺φ(z)dz evaluated with mpmath at 40 digits.
    EXPECT_NEAR(price(kAtm), 2.7736541464188795, 1e-12);
}

TEST(Price, NoArbitrageBoundsAndVanishingStrike) {
    const double v = price(kAtm);
    EXPECT_GT(v, 100.0 - 100.0 * std::exp(-0.005));
    EXPECT_NEAR(100.0 - 100.0 * std::exp(-0.005), 0.4987520807317687, 1e-13);
    EXPECT_LT(v, 100.0);
    EXPECT_NEAR(price({100.0, 1e-9, 0.05, 0.2, 0.1}), 100.0, 1e-8);
}

TEST(Price, HomogeneousOfDegreeOne) {
    SpecSampler sample(7);
    for (int i = 0; i < 1000; ++i) {
        const OptionSpec s = sample();
        const double c = sample.u(0.5, 2.0);
        const double scaled = price({c * s.spot, c * s.strike, s.rate, s.vol_hat, s.maturity});
        const double base = price(s);
        if (base < 1e-250) continue;  // both sides underflow to (sub)normal zero
        EXPECT_LE(rel_diff(scaled, c * base), 1e-12) << "S=" << s.spot << " K=" << s.strike << " c=" << c;
    }
}

TEST(Greeks, ReferenceValuesAtTheMoney) {
    // Derivatives of the closed-form price taken numerically by mpmath at
    // 40-digit precision.
    const GreeksBundle g = greeks(kAtm);
    EXPECT_NEAR(g.price, 2.7736541464188795, 1e-12);
    EXPECT_LE(rel_diff(g.v_s, 0.54406483512123026), 1e-12);
    EXPECT_LE(rel_diff(g.v_ss, 0.062693139182210427), 1e-12);
    EXPECT_LE(rel_diff(g.v_sss, -0.0017240613275107867), 1e-12);
    EXPECT_LE(rel_diff(g.v_sig, 12.538627836442085), 1e-12);
    EXPECT_LE(rel_diff(g.v_sigsig, 0.32913898070660474), 1e-12);
    EXPECT_LE(rel_diff(g.v_sig3, -6.1823075959997313), 1e-12);
    EXPECT_LE(rel_diff(g.v_ssig, -0.094039708773315641), 1e-12);
    EXPECT_LE(rel_diff(g.v_sssig, -0.31182000100751911), 1e-12);
    EXPECT_LE(rel_diff(g.v_ssigsig, 1.5648599371999611), 1e-12);
    EXPECT_LE(rel_diff(g.v_st, -0.2194259871377365), 1e-12);
    EXPECT_LE(rel_diff(g.v_sigt, -61.92514822722835), 1e-12);
}

TEST(Greeks, SpeedSatisfiesPdeIdentity) {
    SpecSampler sample(11);
    for (int i = 0; i < 1000; ++i) {
        const OptionSpec s = sample();
        const GreeksBundle g = greeks(s);
        if (g.v_ss == 0.0) continue;  // φ(d1) underflow: both sides are 0
        EXPECT_LE(rel_diff(g.v_sss, speed_from_pde(s, g)), 1e-9) << "spec " << i;
    }
}

TEST(Greeks, SignInvariantsOnRandomSpecs) {
    SpecSampler sample(13);
    for (int i = 0; i < 1000; ++i) {
        const OptionSpec s = sample();
        const double d1 = d_terms(s).d1;
        if (std::abs(d1) > 37.0) continue;  // φ(d1) below the double range
        const GreeksBundle g = greeks(s);
        EXPECT_GT(g.price, 0.0);
        EXPECT_GT(g.v_ss, 0.0);
        EXPECT_GT(g.v_sig, 0.0);
        EXPECT_GT(g.v_s, 0.0);
        EXPECT_LE(g.v_s, 1.0);
    }
}

TEST(Greeks, DeltaSaturatesDeepInTheMoney) {
    const GreeksBundle g = greeks({300.0, 100.0, 0.05, 0.2, 0.01});
    EXPECT_GT(g.v_s, 0.999);
    EXPECT_LE(g.v_s, 1.0);
}

TEST(FdValidate, ReferenceSpecMeetsTolerances) {
    const FdReport r = fd_validate(kAtm, 1e-5);
    EXPECT_LT(r.max_rel_error_order12, 1e-6);
    EXPECT_LT(r.max_rel_error_order3, 1e-4);
    for (const auto& e : r.entries) {
        const double tol = greek_order(e.greek) <= 2 ? 1e-6 : 1e-4;
        EXPECT_LT(e.rel_error, tol) << greek_name(e.greek);
    }
}

TEST(FdValidate, IsDeterministic) {
    const FdReport a = fd_validate(kAtm, 1e-5);
    const FdReport b = fd_validate(kAtm, 1e-5);
    for (int i = 0; i < kGreekCount; ++i) {
        EXPECT_EQ(a.entries[i].finite_difference, b.entries[i].finite_difference);
        EXPECT_EQ(a.entries[i].rel_error, b.entries[i].rel_error);
    }
}

TEST(FdValidate, RejectsStepOutsideRange) {
    EXPECT_THROW(fd_validate(kAtm, 1e-9), DomainError);
    EXPECT_THROW(fd_validate(kAtm, 0.02), DomainError);
    EXPECT_NO_THROW(fd_validate(kAtm, 1e-8));
    EXPECT_NO_THROW(fd_validate(kAtm, 1e-2));
}

TEST(FdValidate, RandomSpecsAgreeWithClosedForms) {
    SpecSampler sample(17);
    for (int i = 0; i < 200; ++i) {
        const OptionSpec s = sample();
        if (std::abs(d_terms(s).d1) > 37.0) continue;
        const FdReport r = fd_validate(s, 1e-5);
        EXPECT_LT(r.max_rel_error_order12, 1e-6) << "spec " << i;
        EXPECT_LT(r.max_rel_error_order3, 1e-4) << "spec " << i;
    }
}
