#pragma once

#include "viewhedge/greeks.hpp"
#include "viewhedge/hedge_policy.hpp"

namespace viewhedge {

/// Coefficients of the hedging error over one static interval, collected in
/// the independent standard normals Z₁ (underlying) and Z₂ (implied vol):
///
///   ΔH = γ(Z₁² − 1) + θZ₁ + ψZ₁³ + ωZ₂ + τZ₁Z₂ + ιZ₂² + χZ₁²Z₂
///        + ξZ₁Z₂² + εZ₂³ + V_σf₀Δt
///
/// with θ = γβ + (1−λ₁)φ + (1−λ₂)η and ψ = γδ − φ/3. Terms of order Δt² and
/// beyond are dropped. All Greeks are frozen at t₀ and S = S(t₀).
///
/// E[ΔH] = ι + V_σf₀Δt (every other summand has zero mean), which is what
/// `mshe` adds back to the variance.
struct ErrorCoefficients {
    double gamma = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double phi = 0.0;
    double eta = 0.0;
    double epsilon = 0.0;
    double xi = 0.0;
    double omega = 0.0;
    double tau = 0.0;
    double iota = 0.0;
    double chi = 0.0;
    double mean_term = 0.0;  ///< V_σf₀Δt
    bool literal_omega = false;
};

enum class OmegaForm {
    /// Fourth ω summand ½V_σt·g₀Δt^{3/2}, matching the V_σt·ΔσΔt term of ΔV.
    Reconstructed,
    /// Fourth ω summand taken verbatim as a bare g₀Δt^{3/2}.
    Literal,
};

ErrorCoefficients coefficients(const GreeksBundle& g, const MarketView& view, double spot, double rate,
                               double vol_hat, OmegaForm omega_form = OmegaForm::Reconstructed);

/// Convenience overload deriving Greeks from `option` (σ-derivatives at σ̂).
ErrorCoefficients coefficients(const OptionSpec& option, const MarketView& view,
                               OmegaForm omega_form = OmegaForm::Reconstructed);

struct ThetaPsi {
    double theta;
    double psi;
};

ThetaPsi theta_psi(const ErrorCoefficients& c, double lambda1, double lambda2);

/// E[Z^{2n}] = (2n−1)!! for n ≥ 1. Throws std::overflow_error when the
/// double factorial exceeds the double range.
double gaussian_even_moment(int n);

/// E[Z^{2n−1}] = 0.
double gaussian_odd_moment(int n);

/// Var(ΔH) at (λ₁, λ₂):
///   θ² + 15ψ² + 6θψ + 2γ² + 2ξθ + 2ι² + 3ξ² + 6ξψ + 3χ² + 2χω + ω² + τ²
///   + 15ε² + 6εχ + 6εω
double var_delta_h(const ErrorCoefficients& c, double lambda1, double lambda2);

/// The same variance written as a quadratic in a = 1−λ₁, b = 1−λ₂
/// (independent route used to cross-check `var_delta_h`).
double f_expanded(const ErrorCoefficients& c, double a, double b);

/// Mean squared hedging error Var(ΔH) + (ι + V_σf₀Δt)².
double mshe(const ErrorCoefficients& c, double lambda1, double lambda2);

/// Minimiser of Var(ΔH): a line b*(a) = (−γβ − φa − 3ψ̃ − ξ)/η with
/// ψ̃ = γδ − φ/3, i.e. λ₂*(λ₁) = 1 − b*(1 − λ₁). The variance is constant
/// along it.
struct MinimizerLine {
    double intercept;  ///< b* at a = 0
    double slope;      ///< db*/da = −φ/η
    double min_value;

    double b_of_a(double a) const { return intercept + slope * a; }
    double lambda2_of_lambda1(double lambda1) const { return 1.0 - b_of_a(1.0 - lambda1); }
};

/// Throws DegenerateError when η = 0.
MinimizerLine minimize_f(const ErrorCoefficients& c);

}  // namespace viewhedge
