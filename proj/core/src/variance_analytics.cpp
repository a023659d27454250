#include "viewhedge/variance_analytics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "viewhedge/errors.hpp"

namespace viewhedge {

ErrorCoefficients coefficients(const GreeksBundle& g, const MarketView& view, double spot, double rate,
                               double vol_hat, OmegaForm omega_form) {
    const double dt = view.dt;
    const double sqrt_dt = std::sqrt(dt);
    const double dt32 = dt * sqrt_dt;
    const double f0 = drift0(view.vol_process);
    const double g0 = diffusion0(view.vol_process);
    const double sig = vol_hat;
    const double s = spot;

    ErrorCoefficients c;
    c.gamma = 0.5 * g.v_ss * sig * sig * s * s * dt;
    c.beta = 2.0 * (view.mu - 0.5 * sig * sig) / sig * sqrt_dt;
    c.delta = (sig * sig - 2.0 * rate) / (3.0 * sig) * sqrt_dt;
    c.phi = g.v_st * sig * s * dt32;
    c.eta = g.v_ssig * sig * s * f0 * dt32;
    c.epsilon = g.v_sig3 * g0 * g0 * g0 * dt32 / 6.0;
    c.xi = 0.5 * g.v_ssigsig * g0 * g0 * s * sig * dt32;

    const double omega_tail =
        omega_form == OmegaForm::Literal ? g0 * dt32 : 0.5 * g.v_sigt * g0 * dt32;
    c.omega = g.v_sig * g0 * sqrt_dt + g.v_sigsig * f0 * g0 * dt32 +
              g.v_ssig * s * g0 * (view.mu - 0.5 * sig * sig) * dt32 + omega_tail;

    c.tau = g.v_ssig * g0 * s * sig * dt;
    c.iota = 0.5 * g.v_sigsig * g0 * g0 * dt;
    c.chi = 0.5 * g.v_sssig * s * s * sig * sig * g0 * dt32 + 0.5 * g.v_ssig * s * sig * sig * g0 * dt32;
    c.mean_term = g.v_sig * f0 * dt;
    c.literal_omega = omega_form == OmegaForm::Literal;
    return c;
}

ErrorCoefficients coefficients(const OptionSpec& option, const MarketView& view, OmegaForm omega_form) {
    view.validate(option.maturity);
    return coefficients(greeks(option), view, option.spot, option.rate, option.vol_hat, omega_form);
}

ThetaPsi theta_psi(const ErrorCoefficients& c, double lambda1, double lambda2) {
    return {c.gamma * c.beta + (1.0 - lambda1) * c.phi + (1.0 - lambda2) * c.eta,
            c.gamma * c.delta - c.phi / 3.0};
}

double gaussian_even_moment(int n) {
    if (n < 1) {
        throw DomainError("n", "must be >= 1");
    }
    double product = 1.0;
    for (int i = 1; i <= n; ++i) {
        product *= 2.0 * i - 1.0;
        if (!std::isfinite(product)) {
            throw std::overflow_error("E[Z^" + std::to_string(2 * n) + "] overflows double");
        }
    }
    return product;
}

double gaussian_odd_moment(int n) {
    if (n < 1) {
        throw DomainError("n", "must be >= 1");
    }
    return 0.0;
}

namespace {

// Every summand of Var(ΔH) that does not involve θ.
double theta_free_part(const ErrorCoefficients& c, double psi) {
    const double g = c.gamma;
    const double x = c.xi;
    const double w = c.omega;
    const double h = c.chi;
    const double e = c.epsilon;
    return 15.0 * psi * psi + 2.0 * g * g + 2.0 * c.iota * c.iota + 3.0 * x * x + 6.0 * x * psi +
           3.0 * h * h + 2.0 * h * w + w * w + c.tau * c.tau + 15.0 * e * e + 6.0 * e * h + 6.0 * e * w;
}

}  // namespace

double var_delta_h(const ErrorCoefficients& c, double lambda1, double lambda2) {
    const auto [theta, psi] = theta_psi(c, lambda1, lambda2);
    return theta * theta + 6.0 * theta * psi + 2.0 * c.xi * theta + theta_free_part(c, psi);
}

double f_expanded(const ErrorCoefficients& c, double a, double b) {
    const double phi = c.phi;
    const double eta = c.eta;
    const double gb = c.gamma * c.beta;
    const double psi = c.gamma * c.delta - phi / 3.0;
    const double x = c.xi;
    const double g = c.gamma;
    const double w = c.omega;
    const double h = c.chi;
    const double e = c.epsilon;
    return phi * phi * a * a + eta * eta * b * b + 2.0 * eta * phi * a * b +
           (2.0 * gb * phi + 2.0 * x * phi + 6.0 * psi * phi) * a +
           (2.0 * gb * eta + 2.0 * x * eta + 6.0 * psi * eta) * b + gb * gb + 2.0 * x * gb + 6.0 * psi * gb +
           15.0 * psi * psi + 2.0 * g * g + 2.0 * c.iota * c.iota + 3.0 * x * x + 6.0 * x * psi + 3.0 * h * h +
           2.0 * h * w + w * w + c.tau * c.tau + 15.0 * e * e + 6.0 * e * h + 6.0 * e * w;
}

double mshe(const ErrorCoefficients& c, double lambda1, double lambda2) {
    const double mean = c.iota + c.mean_term;
    return var_delta_h(c, lambda1, lambda2) + mean * mean;
}

MinimizerLine minimize_f(const ErrorCoefficients& c) {
    if (c.eta == 0.0 || !std::isfinite(c.eta)) {
        throw DegenerateError("minimize_f: eta = 0, the lambda2 direction is absent");
    }
    const double psi = c.gamma * c.delta - c.phi / 3.0;
    MinimizerLine line{};
    line.intercept = (-c.gamma * c.beta - 3.0 * psi - c.xi) / c.eta;
    line.slope = -c.phi / c.eta;
    // On the line θ = −3ψ − ξ, which leaves 6ψ² + 2ξ² plus the θ-free terms
    // other than 15ψ² + 3ξ² + 6ξψ.
    line.min_value = 6.0 * psi * psi + 2.0 * c.xi * c.xi + 2.0 * c.gamma * c.gamma + 2.0 * c.iota * c.iota +
                     3.0 * c.chi * c.chi + 2.0 * c.chi * c.omega + c.omega * c.omega + c.tau * c.tau +
                     15.0 * c.epsilon * c.epsilon + 6.0 * c.epsilon * c.chi + 6.0 * c.epsilon * c.omega;
    return line;
}

}  // namespace viewhedge
