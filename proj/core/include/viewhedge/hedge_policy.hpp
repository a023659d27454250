#pragma once

#include "viewhedge/greeks.hpp"
#include "viewhedge/vol_model.hpp"

namespace viewhedge {

/// What the hedger believes about the holding interval [t₀, t₀ + Δt].
struct MarketView {
    double mu = 0.0;  ///< growth-rate view for the underlying
    double dt = 0.0;  ///< holding interval, years
    VolProcessSpec vol_process{};

    /// Checks Δt ≥ 0, finite μ and the vol process. When `maturity` is
    /// given, also Δt < maturity.
    void validate() const;
    void validate(double maturity) const;
};

/// A share count together with the named terms it is the sum of.
struct HedgeRatio {
    double n_shares = 0.0;
    double base = 0.0;            ///< V_S
    double drift_term = 0.0;      ///< V_SS(μ−r)SΔt
    double vol_drift_term = 0.0;  ///< V_Sσ·f₀Δt (scaled by λ₂ for the generic family)
    double vol_convexity_term = 0.0;  ///< ½V_Sσσ·g₀²Δt
    double charm_term = 0.0;      ///< λ₁V_StΔt, generic family only

    double sum_of_terms() const {
        return base + drift_term + vol_drift_term + vol_convexity_term + charm_term;
    }
};

/// Plain Black-Scholes delta.
HedgeRatio n_bsm(const GreeksBundle& g);

/// Drift-adjusted delta N_M = V_S + (μ−r)S·V_SS·Δt.
HedgeRatio n_mastinsek(const GreeksBundle& g, const MarketView& view, double spot, double rate);

/// N(λ₁, λ₂) = V_S + λ₁V_StΔt + λ₂V_Sσ·E[Δσ], with E[Δσ] = f₀Δt.
HedgeRatio n_generic(const GreeksBundle& g, const MarketView& view, double lambda1, double lambda2);

/// Optimal λ₂ for a given λ₁:
///   λ₂* = (V_Sσf₀ + ½V_Sσσg₀² + V_SS(μ−r)S − λ₁V_St) / (V_Sσf₀).
/// Throws DegenerateError when V_Sσf₀ vanishes (no vol-drift view).
double lambda2_star(const GreeksBundle& g, const MarketView& view, double spot, double rate, double lambda1);

/// Common optimal multiplier for λ₁ = λ₂:
///   λ* = (V_Sσf₀ + ½V_Sσσg₀² + V_SS(μ−r)S) / (V_Sσf₀ + V_St).
/// Throws DegenerateError when the denominator vanishes.
double lambda_star(const GreeksBundle& g, const MarketView& view, double spot, double rate);

/// View-adjusted hedge
///   N* = V_S + V_SS(μ−r)SΔt + V_Sσf₀Δt + ½V_Sσσg₀²Δt.
HedgeRatio n_star(const GreeksBundle& g, const MarketView& view, double spot, double rate);

}  // namespace viewhedge
