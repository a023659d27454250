#include "viewhedge/hedge_policy.hpp"

#include <algorithm>
#include <cmath>

#include "viewhedge/errors.hpp"

namespace viewhedge {

void MarketView::validate() const {
    if (!std::isfinite(mu)) throw DomainError("mu", "must be finite");
    if (!std::isfinite(dt) || !(dt >= 0.0)) throw DomainError("dt", "must be finite and >= 0");
    require_valid(vol_process);
}

void MarketView::validate(double maturity) const {
    validate();
    if (!(dt < maturity)) throw DomainError("dt", "must be < option maturity");
}

namespace {

HedgeRatio finish(HedgeRatio h) {
    h.n_shares = h.sum_of_terms();
    return h;
}

// |den| below 1e-14 of the largest magnitude entering the quotient counts as 0.
void require_nondegenerate(double den, double scale, const char* what) {
    if (!(std::abs(den) > 1e-14 * scale) || !std::isfinite(den)) {
        throw DegenerateError(std::string(what) + ": denominator vanishes (no identifiable vol-drift direction)");
    }
}

}  // namespace

HedgeRatio n_bsm(const GreeksBundle& g) {
    HedgeRatio h;
    h.base = g.v_s;
    return finish(h);
}

HedgeRatio n_mastinsek(const GreeksBundle& g, const MarketView& view, double spot, double rate) {
    HedgeRatio h;
    h.base = g.v_s;
    h.drift_term = g.v_ss * (view.mu - rate) * spot * view.dt;
    return finish(h);
}

HedgeRatio n_generic(const GreeksBundle& g, const MarketView& view, double lambda1, double lambda2) {
    HedgeRatio h;
    h.base = g.v_s;
    h.charm_term = lambda1 * g.v_st * view.dt;
    h.vol_drift_term = lambda2 * g.v_ssig * expected_delta_sigma(view.vol_process, view.dt);
    return finish(h);
}

double lambda2_star(const GreeksBundle& g, const MarketView& view, double spot, double rate, double lambda1) {
    const double f0 = drift0(view.vol_process);
    const double g0 = diffusion0(view.vol_process);
    const double vanna_drift = g.v_ssig * f0;
    const double convexity = 0.5 * g.v_ssigsig * g0 * g0;
    const double drift = g.v_ss * (view.mu - rate) * spot;
    const double charm = lambda1 * g.v_st;
    const double scale = std::max({std::abs(vanna_drift), std::abs(convexity), std::abs(drift), std::abs(charm),
                                   std::abs(g.v_ssig), std::abs(g.v_st)});
    require_nondegenerate(vanna_drift, scale, "lambda2_star");
    return (vanna_drift + convexity + drift - charm) / vanna_drift;
}

double lambda_star(const GreeksBundle& g, const MarketView& view, double spot, double rate) {
    const double f0 = drift0(view.vol_process);
    const double g0 = diffusion0(view.vol_process);
    const double vanna_drift = g.v_ssig * f0;
    const double convexity = 0.5 * g.v_ssigsig * g0 * g0;
    const double drift = g.v_ss * (view.mu - rate) * spot;
    const double den = vanna_drift + g.v_st;
    const double scale = std::max({std::abs(vanna_drift), std::abs(convexity), std::abs(drift), std::abs(g.v_st)});
    require_nondegenerate(den, scale, "lambda_star");
    return (vanna_drift + convexity + drift) / den;
}

HedgeRatio n_star(const GreeksBundle& g, const MarketView& view, double spot, double rate) {
    const double f0 = drift0(view.vol_process);
    const double g0 = diffusion0(view.vol_process);
    HedgeRatio h;
    h.base = g.v_s;
    h.drift_term = g.v_ss * (view.mu - rate) * spot * view.dt;
    h.vol_drift_term = g.v_ssig * f0 * view.dt;
    h.vol_convexity_term = 0.5 * g.v_ssigsig * g0 * g0 * view.dt;
    return finish(h);
}

}  // namespace viewhedge
