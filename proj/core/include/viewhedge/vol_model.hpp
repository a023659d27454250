#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace viewhedge {

/// Implied-volatility dynamics dσ = f(σ)dt + g(σ)dW₂.
///
///   LinearDrift        f = μ_σ,          g = 0
///   OrnsteinUhlenbeck  f = κ(θ̄ − σ),     g = α
///   CIR                f = κ(θ̄ − σ),     g = α√σ
enum class VolModelKind { LinearDrift, OrnsteinUhlenbeck, CIR };

std::string_view to_string(VolModelKind kind);

struct VolProcessSpec {
    VolModelKind kind = VolModelKind::LinearDrift;
    double sigma0 = 0.2;
    double mu_sigma = 0.0;   ///< LinearDrift only
    double kappa = 0.0;      ///< OU/CIR reversion rate
    double theta_bar = 0.0;  ///< OU/CIR long-run mean
    double alpha = 0.0;      ///< OU/CIR process volatility

    static VolProcessSpec linear_drift(double sigma0, double mu_sigma);
    static VolProcessSpec ornstein_uhlenbeck(double sigma0, double kappa, double theta_bar, double alpha);
    static VolProcessSpec cir(double sigma0, double kappa, double theta_bar, double alpha);
};

/// A failed invariant: which parameter, the inequality that must hold, and
/// the values that broke it.
struct VolViolation {
    std::string field;
    std::string requirement;
    std::string detail;

    std::string message() const;
};

/// Checks the parameter invariants, including the Feller condition
/// 2κθ̄ > α² for CIR. Returns the first violation found.
std::optional<VolViolation> validate(const VolProcessSpec& proc);

/// Throws DomainError built from the first violation, if any.
void require_valid(const VolProcessSpec& proc);

double drift_at(const VolProcessSpec& proc, double sigma);
double diffusion_at(const VolProcessSpec& proc, double sigma);

/// f₀ = f(σ₀) and g₀ = g(σ₀), the values frozen at the hedge date.
double drift0(const VolProcessSpec& proc);
double diffusion0(const VolProcessSpec& proc);

enum class ExpectationMode {
    FirstOrder,  ///< f₀Δt, consistent with the hedge derivation
    Exact,       ///< closed-form mean for OU/CIR; equals FirstOrder for LinearDrift
};

double expected_delta_sigma(const VolProcessSpec& proc, double dt,
                            ExpectationMode mode = ExpectationMode::FirstOrder);

inline constexpr double kVolFloor = 1e-8;

/// One Euler–Maruyama step σ + f(σ)Δt + g(σ)√Δt·z, floored at kVolFloor.
double step(const VolProcessSpec& proc, double sigma, double dt, double z);

}  // namespace viewhedge
