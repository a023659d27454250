#include "viewhedge/vol_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "viewhedge/errors.hpp"

namespace viewhedge {

std::string_view to_string(VolModelKind kind) {
    switch (kind) {
        case VolModelKind::LinearDrift: return "linear_drift";
        case VolModelKind::OrnsteinUhlenbeck: return "ou";
        case VolModelKind::CIR: return "cir";
    }
    return "?";
}

VolProcessSpec VolProcessSpec::linear_drift(double sigma0, double mu_sigma) {
    VolProcessSpec p;
    p.kind = VolModelKind::LinearDrift;
    p.sigma0 = sigma0;
    p.mu_sigma = mu_sigma;
    return p;
}

VolProcessSpec VolProcessSpec::ornstein_uhlenbeck(double sigma0, double kappa, double theta_bar, double alpha) {
    VolProcessSpec p;
    p.kind = VolModelKind::OrnsteinUhlenbeck;
    p.sigma0 = sigma0;
    p.kappa = kappa;
    p.theta_bar = theta_bar;
    p.alpha = alpha;
    return p;
}

VolProcessSpec VolProcessSpec::cir(double sigma0, double kappa, double theta_bar, double alpha) {
    VolProcessSpec p = ornstein_uhlenbeck(sigma0, kappa, theta_bar, alpha);
    p.kind = VolModelKind::CIR;
    return p;
}

std::string VolViolation::message() const {
    std::string out = field + ": requires " + requirement;
    if (!detail.empty()) out += " (" + detail + ")";
    return out;
}

namespace {

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

std::optional<VolViolation> validate(const VolProcessSpec& proc) {
    if (!std::isfinite(proc.sigma0) || !(proc.sigma0 > 0.0)) {
        return VolViolation{"sigma0", "sigma0 > 0", "got " + fmt_num(proc.sigma0)};
    }
    if (proc.kind == VolModelKind::LinearDrift) {
        if (!std::isfinite(proc.mu_sigma)) {
            return VolViolation{"mu_sigma", "finite mu_sigma", "got " + fmt_num(proc.mu_sigma)};
        }
        return std::nullopt;
    }
    if (!std::isfinite(proc.kappa) || !(proc.kappa > 0.0)) {
        return VolViolation{"kappa", "kappa > 0", "got " + fmt_num(proc.kappa)};
    }
    if (!std::isfinite(proc.theta_bar) || !(proc.theta_bar > 0.0)) {
        return VolViolation{"theta_bar", "theta_bar > 0", "got " + fmt_num(proc.theta_bar)};
    }
    if (!std::isfinite(proc.alpha) || !(proc.alpha >= 0.0)) {
        return VolViolation{"alpha", "alpha >= 0", "got " + fmt_num(proc.alpha)};
    }
    if (proc.kind == VolModelKind::CIR) {
        const double lhs = 2.0 * proc.kappa * proc.theta_bar;
        const double rhs = proc.alpha * proc.alpha;
        if (!(lhs > rhs)) {
            return VolViolation{"alpha", "Feller condition 2*kappa*theta_bar > alpha^2",
                                fmt_num(lhs) + " <= " + fmt_num(rhs)};
        }
    }
    return std::nullopt;
}

void require_valid(const VolProcessSpec& proc) {
    if (auto v = validate(proc)) {
        throw DomainError(v->field, "requires " + v->requirement + (v->detail.empty() ? "" : " (" + v->detail + ")"));
    }
}

namespace {

void require_positive_sigma(double sigma) {
    if (!std::isfinite(sigma) || !(sigma > 0.0)) {
        throw DomainError("sigma", "must be finite and > 0");
    }
}

}  // namespace

double drift_at(const VolProcessSpec& proc, double sigma) {
    require_positive_sigma(sigma);
    switch (proc.kind) {
        case VolModelKind::LinearDrift: return proc.mu_sigma;
        case VolModelKind::OrnsteinUhlenbeck:
        case VolModelKind::CIR: return proc.kappa * (proc.theta_bar - sigma);
    }
    return 0.0;
}

double diffusion_at(const VolProcessSpec& proc, double sigma) {
    require_positive_sigma(sigma);
    switch (proc.kind) {
        case VolModelKind::LinearDrift: return 0.0;
        case VolModelKind::OrnsteinUhlenbeck: return proc.alpha;
        case VolModelKind::CIR: return proc.alpha * std::sqrt(sigma);
    }
    return 0.0;
}

double drift0(const VolProcessSpec& proc) { return drift_at(proc, proc.sigma0); }

double diffusion0(const VolProcessSpec& proc) { return diffusion_at(proc, proc.sigma0); }

double expected_delta_sigma(const VolProcessSpec& proc, double dt, ExpectationMode mode) {
    if (!(dt >= 0.0)) {
        throw DomainError("dt", "must be >= 0");
    }
    if (mode == ExpectationMode::Exact && proc.kind != VolModelKind::LinearDrift) {
        // Both OU and CIR have the linear mean ODE dm = κ(θ̄ − m)dt.
        return (proc.theta_bar - proc.sigma0) * -std::expm1(-proc.kappa * dt);
    }
    return drift0(proc) * dt;
}

double step(const VolProcessSpec& proc, double sigma, double dt, double z) {
    require_positive_sigma(sigma);
    if (!(dt > 0.0)) {
        throw DomainError("dt", "must be > 0");
    }
    const double next = sigma + drift_at(proc, sigma) * dt + diffusion_at(proc, sigma) * std::sqrt(dt) * z;
    return std::max(next, kVolFloor);
}

}  // namespace viewhedge
