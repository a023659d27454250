#include "viewhedge/greeks.hpp"

#include <cmath>

#include "viewhedge/errors.hpp"
#include "viewhedge/normal.hpp"

namespace viewhedge {

void OptionSpec::validate() const {
    auto positive = [](double v, const char* name) {
        if (!std::isfinite(v) || !(v > 0.0)) {
            throw DomainError(name, "must be finite and > 0");
        }
    };
    positive(spot, "spot");
    positive(strike, "strike");
    if (!std::isfinite(rate)) {
        throw DomainError("rate", "must be finite");
    }
    positive(vol_hat, "vol_hat");
    positive(maturity, "maturity");
}

DTerms d_terms(const OptionSpec& spec) {
    spec.validate();
    const double vol_sqrt_t = spec.vol_hat * std::sqrt(spec.maturity);
    const double d1 =
        (std::log(spec.spot / spec.strike) + (spec.rate + 0.5 * spec.vol_hat * spec.vol_hat) * spec.maturity) /
        vol_sqrt_t;
    return {d1, d1 - vol_sqrt_t};
}

namespace {

// S·Φ(d1) − K·e^{−rT}·Φ(d2) loses most of its digits to cancellation out of
// the money, so the price alone is evaluated in extended precision.
double price_extended(const OptionSpec& spec) {
    using ld = long double;
    const ld s = spec.spot;
    const ld k = spec.strike;
    const ld sig = spec.vol_hat;
    const ld tau = spec.maturity;
    const ld vol_sqrt_t = sig * std::sqrt(tau);
    const ld d1 = (std::log(s / k) + (ld(spec.rate) + 0.5L * sig * sig) * tau) / vol_sqrt_t;
    const ld d2 = d1 - vol_sqrt_t;
    constexpr ld inv_sqrt2 = 0.707106781186547524400844362104849039L;
    const ld cdf1 = 0.5L * std::erfc(-d1 * inv_sqrt2);
    const ld cdf2 = 0.5L * std::erfc(-d2 * inv_sqrt2);
    return static_cast<double>(s * cdf1 - k * std::exp(-ld(spec.rate) * tau) * cdf2);
}

}  // namespace

double price(const OptionSpec& spec) {
    spec.validate();
    return price_extended(spec);
}

GreeksBundle greeks(const OptionSpec& spec) {
    const auto [d1, d2] = d_terms(spec);
    const double s = spec.spot;
    const double sig = spec.vol_hat;
    const double tau = spec.maturity;
    const double sqrt_tau = std::sqrt(tau);
    const double vol_sqrt_t = sig * sqrt_tau;
    const double pdf = norm_pdf(d1);

    // ∂d1/∂T
    const double dd1_dtau =
        ((spec.rate + 0.5 * sig * sig) * tau - std::log(s / spec.strike)) / (2.0 * sig * tau * sqrt_tau);

    GreeksBundle g{};
    g.price = price_extended(spec);
    g.v_s = norm_cdf(d1);
    g.v_ss = pdf / (s * vol_sqrt_t);
    g.v_sss = -g.v_ss / s * (1.0 + d1 / vol_sqrt_t);

    g.v_sig = s * pdf * sqrt_tau;
    g.v_sigsig = g.v_sig * d1 * d2 / sig;
    g.v_sig3 = -g.v_sig / (sig * sig) * (d1 * d2 * (1.0 - d1 * d2) + d1 * d1 + d2 * d2);

    g.v_st = -pdf * dd1_dtau;
    g.v_sigt = s * pdf * (d1 * sqrt_tau * dd1_dtau - 0.5 / sqrt_tau);

    g.v_ssig = -pdf * d2 / sig;
    g.v_sssig = g.v_ss * (d1 * d2 - 1.0) / sig;
    g.v_ssigsig = pdf / (sig * sig) * (d1 + d2 - d1 * d2 * d2);
    return g;
}

double speed_from_pde(const OptionSpec& spec, const GreeksBundle& g) {
    const double s = spec.spot;
    const double sig2 = spec.vol_hat * spec.vol_hat;
    return -2.0 / (sig2 * s * s) * ((sig2 * s + spec.rate * s) * g.v_ss + g.v_st);
}

}  // namespace viewhedge
