#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "test_support.hpp"
#include "viewhedge/errors.hpp"
#include "viewhedge/hedge_policy.hpp"

using namespace viewhedge;
using viewhedge::testing::rel_diff;
using viewhedge::testing::SpecSampler;

namespace {

const OptionSpec kAtm{100.0, 100.0, 0.05, 0.2, 0.1};

MarketView view_of(double mu, double dt, VolProcessSpec vol) { return MarketView{mu, dt, vol}; }

// Random view with a nonzero vol drift, drawn alongside a random spec.
MarketView random_view(SpecSampler& s, const OptionSpec& spec) {
    const double dt = s.u(0.001, 0.5) * std::min(spec.maturity, 0.2);
    const double mu = s.u(-0.5, 0.5);
    const double pick = s.u(0.0, 3.0);
    const double sigma0 = spec.vol_hat;
    if (pick < 1.0) return view_of(mu, dt, VolProcessSpec::linear_drift(sigma0, s.u(-0.5, 0.5)));
    const double kappa = s.u(0.5, 4.0);
    const double theta_bar = s.u(0.05, 0.6);
    if (pick < 2.0) return view_of(mu, dt, VolProcessSpec::ornstein_uhlenbeck(sigma0, kappa, theta_bar, s.u(0.0, 0.6)));
    const double alpha = std::sqrt(2.0 * kappa * theta_bar) * s.u(0.0, 0.99);
    return view_of(mu, dt, VolProcessSpec::cir(sigma0, kappa, theta_bar, alpha));
}

}  // namespace

TEST(NBsm, IsDelta) {
    const GreeksBundle g = greeks(kAtm);
    const HedgeRatio h = n_bsm(g);
    EXPECT_NEAR(h.n_shares, 0.54406483512123026, 1e-13);
    EXPECT_EQ(h.n_shares, h.sum_of_terms());
    EXPECT_EQ(h.drift_term + h.vol_drift_term + h.vol_convexity_term + h.charm_term, 0.0);
    EXPECT_NEAR(n_bsm(greeks({300.0, 100.0, 0.05, 0.2, 0.01})).n_shares, 1.0, 1e-12);
}

TEST(NMastinsek, Examples) {
    const GreeksBundle g = greeks(kAtm);
    const auto flat = VolProcessSpec::linear_drift(0.2, 0.0);
    EXPECT_EQ(n_mastinsek(g, view_of(0.05, 0.02, flat), 100.0, 0.05).n_shares, g.v_s);
    EXPECT_EQ(n_mastinsek(g, view_of(0.10, 0.0, flat), 100.0, 0.05).n_shares, g.v_s);
    // V_S + 0.06269·0.05·100·0.02 with mpmath-validated Greeks.
    const HedgeRatio h = n_mastinsek(g, view_of(0.10, 0.02, flat), 100.0, 0.05);
    EXPECT_NEAR(h.n_shares, 0.55033414903945130, 1e-13);
    EXPECT_NEAR(h.drift_term, 0.062693139182210427 * 0.05 * 100.0 * 0.02, 1e-15);
}

TEST(NGeneric, Examples) {
    const GreeksBundle g = greeks(kAtm);
    const auto linear = VolProcessSpec::linear_drift(0.2, 0.1);
    const MarketView v = view_of(0.05, 0.02, linear);
    EXPECT_EQ(n_generic(g, v, 0.0, 0.0).n_shares, g.v_s);
    EXPECT_NEAR(n_generic(g, v, 1.0, 0.0).n_shares, g.v_s + g.v_st * 0.02, 1e-15);
    // V_S − 0.09404·0.1·0.02
    EXPECT_NEAR(n_generic(g, v, 0.0, 1.0).n_shares, 0.54387675570368362, 1e-13);
}

TEST(Lambda2Star, Examples) {
    const GreeksBundle g = greeks(kAtm);
    // g₀ = 0, μ = r, λ₁ = 0: numerator equals denominator.
    EXPECT_DOUBLE_EQ(lambda2_star(g, view_of(0.05, 0.02, VolProcessSpec::linear_drift(0.2, 0.1)), 100.0, 0.05, 0.0),
                     1.0);
    EXPECT_THROW(lambda2_star(g, view_of(0.05, 0.02, VolProcessSpec::linear_drift(0.2, 0.0)), 100.0, 0.05, 0.0),
                 DegenerateError);
    // OU at its long-run mean has f₀ = 0.
    EXPECT_THROW(
        lambda2_star(g, view_of(0.1, 0.02, VolProcessSpec::ornstein_uhlenbeck(0.2, 2.0, 0.2, 0.3)), 100.0, 0.05, 1.0),
        DegenerateError);
}

TEST(Lambda2Star, HedgeAlongOptimalLineIsIndependentOfLambda1) {
    SpecSampler sample(23);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const OptionSpec spec = sample();
        const MarketView view = random_view(sample, spec);
        const GreeksBundle g = greeks(spec);
        if (g.v_ss == 0.0 || drift0(view.vol_process) == 0.0) continue;
        double lo = INFINITY;
        double hi = -INFINITY;
        for (double l1 : {-2.0, 0.0, 1.0, 3.0}) {
            const double n = n_generic(g, view, l1, lambda2_star(g, view, spec.spot, spec.rate, l1)).n_shares;
            lo = std::min(lo, n);
            hi = std::max(hi, n);
        }
        EXPECT_LE((hi - lo) / std::abs(hi), 1e-12) << "case " << i;
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

TEST(LambdaStar, Examples) {
    const GreeksBundle g = greeks(kAtm);
    EXPECT_EQ(lambda_star(g, view_of(0.05, 0.02, VolProcessSpec::linear_drift(0.2, 0.0)), 100.0, 0.05), 0.0);

    const MarketView linear = view_of(0.05, 0.02, VolProcessSpec::linear_drift(0.2, 0.1));
    const double expected = g.v_ssig * 0.1 / (g.v_ssig * 0.1 + g.v_st);
    EXPECT_NEAR(lambda_star(g, linear, 100.0, 0.05), expected, 1e-15);
    // (−0.009404)/(−0.009404 − 0.2194), mpmath.
    EXPECT_NEAR(lambda_star(g, linear, 100.0, 0.05), 0.041095890410958904, 1e-13);
}

TEST(LambdaStar, DegenerateDenominator) {
    // Choose μ_σ so that V_Sσ·μ_σ = −V_St exactly cancels.
    const GreeksBundle g = greeks(kAtm);
    GreeksBundle tweaked = g;
    tweaked.v_st = -tweaked.v_ssig * 0.1;
    EXPECT_THROW(lambda_star(tweaked, view_of(0.05, 0.02, VolProcessSpec::linear_drift(0.2, 0.1)), 100.0, 0.05),
                 DegenerateError);
}

TEST(NStar, Examples) {
    const GreeksBundle g = greeks(kAtm);
    EXPECT_EQ(n_star(g, view_of(0.05, 0.02, VolProcessSpec::linear_drift(0.2, 0.0)), 100.0, 0.05).n_shares, g.v_s);

    // g₀ = 0: N* = N_M + V_Sσ μ_σ Δt.
    const MarketView linear = view_of(0.12, 0.02, VolProcessSpec::linear_drift(0.2, 0.3));
    EXPECT_NEAR(n_star(g, linear, 100.0, 0.05).n_shares,
                n_mastinsek(g, linear, 100.0, 0.05).n_shares + g.v_ssig * 0.3 * 0.02, 1e-15);

    // OU(κ=2, θ̄=0.3, α=0.3): f₀ = 0.2, g₀² = 0.09.
    const MarketView ou = view_of(0.05, 0.02, VolProcessSpec::ornstein_uhlenbeck(0.2, 2.0, 0.3, 0.3));
    const HedgeRatio h = n_star(g, ou, 100.0, 0.05);
    EXPECT_NEAR(h.n_shares, g.v_s + g.v_ssig * 0.2 * 0.02 + 0.5 * g.v_ssigsig * 0.09 * 0.02, 1e-15);
    // Same value from mpmath-validated Greeks.
    EXPECT_NEAR(h.n_shares,
                0.54406483512123026 - 0.094039708773315641 * 0.004 + 0.5 * 1.5648599371999611 * 0.0018, 1e-13);
    EXPECT_EQ(h.drift_term, 0.0);
    EXPECT_LE(rel_diff(h.n_shares, h.sum_of_terms()), 1e-12);
}

TEST(NStar, ConsistentWithOptimalMultipliers) {
    SpecSampler sample(29);
    for (int i = 0; i < 300; ++i) {
        const OptionSpec spec = sample();
        const MarketView view = random_view(sample, spec);
        const GreeksBundle g = greeks(spec);
        if (g.v_ss == 0.0) continue;
        const double star = n_star(g, view, spec.spot, spec.rate).n_shares;
        try {
            const double ls = lambda_star(g, view, spec.spot, spec.rate);
            EXPECT_LE(rel_diff(n_generic(g, view, ls, ls).n_shares, star), 1e-12) << "case " << i;
        } catch (const DegenerateError&) {
        }
        try {
            for (double l1 : {-2.0, 0.0, 1.0, 3.0}) {
                const double l2 = lambda2_star(g, view, spec.spot, spec.rate, l1);
                EXPECT_LE(rel_diff(n_generic(g, view, l1, l2).n_shares, star), 1e-12) << "case " << i;
            }
        } catch (const DegenerateError&) {
        }
    }
}

TEST(NStar, ReducesToDeltaLinearlyInDt) {
    const GreeksBundle g = greeks(kAtm);
    const auto vol = VolProcessSpec::ornstein_uhlenbeck(0.2, 2.0, 0.3, 0.3);
    const double slope = (n_star(g, view_of(0.2, 1e-3, vol), 100.0, 0.05).n_shares - g.v_s) / 1e-3;
    for (double dt : {1e-4, 1e-6, 1e-8}) {
        const double gap = n_star(g, view_of(0.2, dt, vol), 100.0, 0.05).n_shares - g.v_s;
        EXPECT_NEAR(gap / dt, slope, 1e-6 * std::abs(slope) + 1e-8 / dt * 1e-8);
    }
    EXPECT_EQ(n_star(g, view_of(0.2, 0.0, vol), 100.0, 0.05).n_shares, g.v_s);
}

TEST(NStar, IncreasingInDriftView) {
    const GreeksBundle g = greeks(kAtm);
    const auto vol = VolProcessSpec::linear_drift(0.2, 0.1);
    double prev = -INFINITY;
    for (double mu = -0.5; mu <= 0.5; mu += 0.05) {
        const double n = n_star(g, view_of(mu, 0.02, vol), 100.0, 0.05).n_shares;
        EXPECT_GT(n, prev);
        prev = n;
    }
    const double dn = n_star(g, view_of(0.3, 0.02, vol), 100.0, 0.05).n_shares -
                      n_star(g, view_of(0.2, 0.02, vol), 100.0, 0.05).n_shares;
    EXPECT_NEAR(dn / 0.1, g.v_ss * 100.0 * 0.02, 1e-12);
}

TEST(NStar, CirConvexityTermScalesBySigma0) {
    const GreeksBundle g = greeks(kAtm);
    const MarketView ou = view_of(0.1, 0.02, VolProcessSpec::ornstein_uhlenbeck(0.2, 2.0, 0.3, 0.3));
    const MarketView cir = view_of(0.1, 0.02, VolProcessSpec::cir(0.2, 2.0, 0.3, 0.3));
    const HedgeRatio a = n_star(g, ou, 100.0, 0.05);
    const HedgeRatio b = n_star(g, cir, 100.0, 0.05);
    EXPECT_EQ(a.base, b.base);
    EXPECT_EQ(a.drift_term, b.drift_term);
    EXPECT_EQ(a.vol_drift_term, b.vol_drift_term);
    EXPECT_NEAR(b.vol_convexity_term, a.vol_convexity_term * 0.2, 1e-16);
}

TEST(MarketView, Validation) {
    EXPECT_THROW(view_of(0.0, -0.01, VolProcessSpec::linear_drift(0.2, 0.0)).validate(), DomainError);
    EXPECT_THROW(view_of(0.0, 0.2, VolProcessSpec::linear_drift(0.2, 0.0)).validate(0.1), DomainError);
    EXPECT_THROW(view_of(0.0, 0.01, VolProcessSpec::cir(0.2, 1.0, 0.04, 0.3)).validate(), DomainError);
    EXPECT_NO_THROW(view_of(0.0, 0.01, VolProcessSpec::linear_drift(0.2, 0.0)).validate(0.1));
}
