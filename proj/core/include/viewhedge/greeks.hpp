#pragma once

#include <array>
#include <string_view>

namespace viewhedge {

/// A European call plus the market state it is evaluated in.
struct OptionSpec {
    double spot;      ///< S
    double strike;    ///< K
    double rate;      ///< r, continuously compounded, may be negative
    double vol_hat;   ///< σ̂, used both as the underlying's vol and the pricing vol
    double maturity;  ///< T, years remaining at the evaluation instant

    /// Throws DomainError naming the first offending field.
    void validate() const;
};

struct DTerms {
    double d1;
    double d2;
};

/// Price and the partial derivatives of V(S, σ, t) used by the hedge and
/// hedging-error formulas. Time derivatives are with respect to calendar
/// time t (i.e. -∂/∂T); σ-derivatives are taken at σ = σ̂.
struct GreeksBundle {
    double price;
    double v_s;       ///< delta
    double v_ss;      ///< gamma
    double v_sss;     ///< speed
    double v_sig;     ///< vega
    double v_sigsig;  ///< volga
    double v_sig3;    ///< ultima
    double v_st;      ///< charm (calendar time)
    double v_sigt;    ///< vega decay (calendar time)
    double v_ssig;    ///< vanna
    double v_sssig;   ///< zomma
    double v_ssigsig; ///< d vanna / dσ
};

DTerms d_terms(const OptionSpec& spec);

/// Black-Scholes-Merton call price.
double price(const OptionSpec& spec);

/// Closed-form price and Greeks, third order included.
GreeksBundle greeks(const OptionSpec& spec);

/// V_SSS implied by the BSM PDE from gamma and charm:
///   V_SSS = -2/(σ̂²S²) [ (σ̂²S + rS) V_SS + V_St ].
double speed_from_pde(const OptionSpec& spec, const GreeksBundle& g);

// ---------------------------------------------------------------------------
// Finite-difference self check

enum class Greek : int {
    Delta, Gamma, Speed, Vega, Volga, Ultima, Charm, VegaDecay, Vanna, Zomma, VannaVol,
};
inline constexpr int kGreekCount = 11;

std::string_view greek_name(Greek g);
/// 1, 2 or 3.
int greek_order(Greek g);

struct FdEntry {
    Greek greek;
    double analytic;
    double finite_difference;
    double rel_error;
};

struct FdReport {
    std::array<FdEntry, kGreekCount> entries;
    double max_rel_error_order12;
    double max_rel_error_order3;
};

/// Compares every Greek against central finite differences of the call price
/// with steps h_x = rel_step·x for x ∈ {S, σ̂, T}. Requires
/// 1e-8 ≤ rel_step ≤ 1e-2.
///
/// The differenced price is evaluated in extended precision (binary128 where
/// available) with eighth-order stencils, so the report measures the closed
/// forms rather than round-off of the difference quotients. For calls with
/// d1 > 0 the out-of-the-money put is differenced and put-call parity added
/// back, which keeps the time value resolvable deep in the money.
FdReport fd_validate(const OptionSpec& spec, double rel_step);

}  // namespace viewhedge
