#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "viewhedge/errors.hpp"
#include "viewhedge/greeks.hpp"

#if defined(VIEWHEDGE_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace viewhedge {

namespace {

#if defined(VIEWHEDGE_HAVE_QUADMATH)
using Real = __float128;
Real r_log(Real x) { return logq(x); }
Real r_exp(Real x) { return expq(x); }
Real r_sqrt(Real x) { return sqrtq(x); }
Real r_erfc(Real x) { return erfcq(x); }
#else
using Real = long double;
Real r_log(Real x) { return std::log(x); }
Real r_exp(Real x) { return std::exp(x); }
Real r_sqrt(Real x) { return std::sqrt(x); }
Real r_erfc(Real x) { return std::erfc(x); }
#endif

Real r_cdf(Real x) {
    const Real inv_sqrt2 = Real(1) / r_sqrt(Real(2));
    return r_erfc(-x * inv_sqrt2) / Real(2);
}

// Out-of-the-money leg of the call: the call itself when `use_put` is false,
// otherwise the put with the same strike (call = put + S - K e^{-rT}).
Real otm_price(Real s, Real k, Real r, Real sig, Real tau, bool use_put) {
    const Real vol_sqrt_t = sig * r_sqrt(tau);
    const Real d1 = (r_log(s / k) + (r + sig * sig / Real(2)) * tau) / vol_sqrt_t;
    const Real d2 = d1 - vol_sqrt_t;
    const Real df_strike = k * r_exp(-r * tau);
    if (use_put) {
        return df_strike * r_cdf(-d2) - s * r_cdf(-d1);
    }
    return s * r_cdf(d1) - df_strike * r_cdf(d2);
}

constexpr int kHalfWidth = 4;
using Stencil = std::array<Real, 2 * kHalfWidth + 1>;

// Central-difference weights on offsets -4..4 (eighth order for the first and
// second derivative, sixth order for the third).
Stencil stencil(int order) {
    switch (order) {
        case 0:
            return {0, 0, 0, 0, 1, 0, 0, 0, 0};
        case 1:
            return {Real(1) / 280, Real(-4) / 105, Real(1) / 5, Real(-4) / 5, 0,
                    Real(4) / 5,   Real(-1) / 5,   Real(4) / 105, Real(-1) / 280};
        case 2:
            return {Real(-1) / 560, Real(8) / 315, Real(-1) / 5, Real(8) / 5, Real(-205) / 72,
                    Real(8) / 5,    Real(-1) / 5,  Real(8) / 315, Real(-1) / 560};
        case 3:
            return {Real(-7) / 240, Real(3) / 10,    Real(-169) / 120, Real(61) / 30, 0,
                    Real(-61) / 30, Real(169) / 120, Real(-3) / 10,    Real(7) / 240};
        default:
            throw std::logic_error("unsupported stencil order");
    }
}

Real power(Real h, int n) {
    Real out = 1;
    for (int i = 0; i < n; ++i) out *= h;
    return out;
}

struct Orders {
    int spot;
    int vol;
    int maturity;
};

Orders orders_of(Greek g) {
    switch (g) {
        case Greek::Delta: return {1, 0, 0};
        case Greek::Gamma: return {2, 0, 0};
        case Greek::Speed: return {3, 0, 0};
        case Greek::Vega: return {0, 1, 0};
        case Greek::Volga: return {0, 2, 0};
        case Greek::Ultima: return {0, 3, 0};
        case Greek::Charm: return {1, 0, 1};
        case Greek::VegaDecay: return {0, 1, 1};
        case Greek::Vanna: return {1, 1, 0};
        case Greek::Zomma: return {2, 1, 0};
        case Greek::VannaVol: return {1, 2, 0};
    }
    return {0, 0, 0};
}

double analytic_value(const GreeksBundle& b, Greek g) {
    switch (g) {
        case Greek::Delta: return b.v_s;
        case Greek::Gamma: return b.v_ss;
        case Greek::Speed: return b.v_sss;
        case Greek::Vega: return b.v_sig;
        case Greek::Volga: return b.v_sigsig;
        case Greek::Ultima: return b.v_sig3;
        case Greek::Charm: return b.v_st;
        case Greek::VegaDecay: return b.v_sigt;
        case Greek::Vanna: return b.v_ssig;
        case Greek::Zomma: return b.v_sssig;
        case Greek::VannaVol: return b.v_ssigsig;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double relative_error(double analytic, double reference) {
    if (reference == 0.0) {
        return analytic == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const double err = std::abs(analytic - reference) / std::abs(reference);
    return std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
}

}  // namespace

std::string_view greek_name(Greek g) {
    switch (g) {
        case Greek::Delta: return "V_S";
        case Greek::Gamma: return "V_SS";
        case Greek::Speed: return "V_SSS";
        case Greek::Vega: return "V_sigma";
        case Greek::Volga: return "V_sigma_sigma";
        case Greek::Ultima: return "V_sigma_sigma_sigma";
        case Greek::Charm: return "V_St";
        case Greek::VegaDecay: return "V_sigma_t";
        case Greek::Vanna: return "V_S_sigma";
        case Greek::Zomma: return "V_SS_sigma";
        case Greek::VannaVol: return "V_S_sigma_sigma";
    }
    return "?";
}

int greek_order(Greek g) {
    const Orders o = orders_of(g);
    return o.spot + o.vol + o.maturity;
}

FdReport fd_validate(const OptionSpec& spec, double rel_step) {
    spec.validate();
    if (!(rel_step >= 1e-8 && rel_step <= 1e-2)) {
        throw DomainError("rel_step", "must lie in [1e-8, 1e-2]");
    }
    const GreeksBundle analytic = greeks(spec);
    const bool use_put = d_terms(spec).d1 > 0.0;

    const Real s0 = spec.spot;
    const Real k = spec.strike;
    const Real r = spec.rate;
    const Real sig0 = spec.vol_hat;
    const Real tau0 = spec.maturity;
    const Real step = rel_step;
    const Real hs = step * s0;
    const Real hv = step * sig0;
    const Real ht = step * tau0;

    FdReport report{};
    report.max_rel_error_order12 = 0.0;
    report.max_rel_error_order3 = 0.0;

    for (int idx = 0; idx < kGreekCount; ++idx) {
        const auto greek = static_cast<Greek>(idx);
        const Orders o = orders_of(greek);
        const Stencil ws = stencil(o.spot);
        const Stencil wv = stencil(o.vol);
        const Stencil wt = stencil(o.maturity);

        Real acc = 0;
        for (int i = -kHalfWidth; i <= kHalfWidth; ++i) {
            const Real cs = ws[i + kHalfWidth];
            if (cs == 0) continue;
            for (int j = -kHalfWidth; j <= kHalfWidth; ++j) {
                const Real cv = wv[j + kHalfWidth];
                if (cv == 0) continue;
                for (int l = -kHalfWidth; l <= kHalfWidth; ++l) {
                    const Real ct = wt[l + kHalfWidth];
                    if (ct == 0) continue;
                    acc += cs * cv * ct * otm_price(s0 + i * hs, k, r, sig0 + j * hv, tau0 + l * ht, use_put);
                }
            }
        }
        Real fd = acc / (power(hs, o.spot) * power(hv, o.vol) * power(ht, o.maturity));
        if (o.maturity == 1) fd = -fd;  // calendar time runs opposite to T
        if (use_put && greek == Greek::Delta) fd += 1;

        const double fd_value = static_cast<double>(fd);
        const double a = analytic_value(analytic, greek);
        const double err = relative_error(a, fd_value);
        report.entries[idx] = FdEntry{greek, a, fd_value, err};
        if (greek_order(greek) <= 2) {
            report.max_rel_error_order12 = std::max(report.max_rel_error_order12, err);
        } else {
            report.max_rel_error_order3 = std::max(report.max_rel_error_order3, err);
        }
    }
    return report;
}

}  // namespace viewhedge
