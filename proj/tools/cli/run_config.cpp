#include "run_config.hpp"

#include <cstdlib>
#include <map>

#include "viewhedge/errors.hpp"

namespace viewhedge::cli {

namespace {

constexpr const char* kPaperDefaults = R"(# Fixed parameters of the reference Monte Carlo experiment.
[option]
spot = 100.0
strike = 100.0
rate = 0.05
vol_hat = 0.2
maturity = 0.1

[view]
mu = 0.05
dt = 0.02

[vol_model]
kind = "linear_drift"
sigma0 = 0.2
mu_sigma = 0.2

[simulation]
n_paths = 100000
seed = 20140101
sigma_mode = "deterministic"
n_substeps = 8
strategies = ["bsm", "star"]
workers = 0

[sweep]
mu_min = -0.5
mu_max = 0.5
mu_count = 51
mu_sigma_min = -0.5
mu_sigma_max = 0.5
mu_sigma_count = 51
)";

// Module-level field names → config key paths.
std::string key_for_field(const std::string& field) {
    static const std::map<std::string, std::string> table = {
        {"spot", "option.spot"},         {"strike", "option.strike"},
        {"rate", "option.rate"},         {"vol_hat", "option.vol_hat"},
        {"maturity", "option.maturity"}, {"mu", "view.mu"},
        {"dt", "view.dt"},               {"sigma0", "vol_model.sigma0"},
        {"mu_sigma", "vol_model.mu_sigma"}, {"kappa", "vol_model.kappa"},
        {"theta_bar", "vol_model.theta_bar"}, {"alpha", "vol_model.alpha"},
        {"n_paths", "simulation.n_paths"}, {"n_substeps", "simulation.n_substeps"},
        {"strategies", "simulation.strategies"},
    };
    const auto it = table.find(field);
    return it != table.end() ? it->second : field;
}

std::vector<double> read_grid(ConfigDoc& doc, const std::string& name) {
    const std::string list_key = "sweep." + name;
    const bool has_range = doc.has(list_key + "_min") || doc.has(list_key + "_max") || doc.has(list_key + "_count");
    if (doc.has(list_key)) {
        if (has_range) throw ConfigError(list_key, "give either an explicit list or _min/_max/_count, not both");
        auto grid = doc.get_double_list(list_key, {});
        if (grid.empty()) throw ConfigError(list_key, "must not be empty");
        return grid;
    }
    const double lo = doc.get_double(list_key + "_min", -0.5);
    const double hi = doc.get_double(list_key + "_max", 0.5);
    const std::uint64_t count = doc.get_uint(list_key + "_count", 51);
    if (count < 1) throw ConfigError(list_key + "_count", "must be >= 1");
    if (count > 10000) throw ConfigError(list_key + "_count", "must be <= 10000");
    if (!(lo <= hi)) throw ConfigError(list_key + "_max", "must be >= " + list_key + "_min");
    return uniform_grid(lo, hi, static_cast<std::size_t>(count));
}

void read_lambda_axis(ConfigDoc& doc, const std::string& name, double& lo, double& hi, std::size_t& count) {
    const std::string base = "variance." + name;
    lo = doc.get_double(base + "_min", lo);
    hi = doc.get_double(base + "_max", hi);
    const std::uint64_t n = doc.get_uint(base + "_count", count);
    if (n < 1 || n > 100000) throw ConfigError(base + "_count", "must be in [1, 100000]");
    if (!(lo <= hi)) throw ConfigError(base + "_max", "must be >= " + base + "_min");
    count = static_cast<std::size_t>(n);
}

VolProcessSpec read_vol_model(ConfigDoc& doc, double vol_hat) {
    const std::string kind = doc.get_string("vol_model.kind", "linear_drift");
    const double sigma0 = doc.get_double("vol_model.sigma0", vol_hat);
    // Parameters of other kinds are accepted (so a kind override on top of a
    // full file works) but only the ones relevant to `kind` are used.
    const double mu_sigma = doc.get_double("vol_model.mu_sigma", 0.0);
    const double kappa = doc.get_double("vol_model.kappa", 0.0);
    const double theta_bar = doc.get_double("vol_model.theta_bar", 0.0);
    const double alpha = doc.get_double("vol_model.alpha", 0.0);
    if (kind == "linear_drift") return VolProcessSpec::linear_drift(sigma0, mu_sigma);
    if (kind == "ou") return VolProcessSpec::ornstein_uhlenbeck(sigma0, kappa, theta_bar, alpha);
    if (kind == "cir") return VolProcessSpec::cir(sigma0, kappa, theta_bar, alpha);
    throw ConfigError("vol_model.kind", "unknown kind '" + kind + "' (expected linear_drift, ou or cir)");
}

// DomainError messages are "field: reason"; keep only the reason.
std::string reason_of(const DomainError& e) {
    const std::string what = e.what();
    const std::string prefix = e.field() + ": ";
    return what.starts_with(prefix) ? what.substr(prefix.size()) : what;
}

void validate_modules(const RunConfig& rc) {
    try {
        rc.sim.validate();
        if (auto violation = validate(rc.sim.view.vol_process)) {
            std::string reason = "requires " + violation->requirement;
            if (!violation->detail.empty()) reason += " (" + violation->detail + ")";
            throw ConfigError(key_for_field(violation->field), reason);
        }
    } catch (const DomainError& e) {
        throw ConfigError(key_for_field(e.field()), reason_of(e));
    } catch (const MaturityExhausted& e) {
        throw ConfigError("view.dt", e.what());
    }
    const double dt = rc.sim.view.dt;
    const double sigma0 = rc.sim.view.vol_process.sigma0;
    if (rc.sim.sigma_mode == SigmaMode::Deterministic && !(sigma0 + drift0(rc.sim.view.vol_process) * dt > 0.0)) {
        throw ConfigError("vol_model", "deterministic sigma(t1) = sigma0 + f0*dt must stay > 0");
    }
    for (double ms : rc.sweep.mu_sigma_grid) {
        if (!(sigma0 + ms * dt > 0.0)) {
            throw ConfigError("sweep.mu_sigma", "sigma0 + mu_sigma*dt must stay > 0 for every grid value");
        }
    }
}

}  // namespace

ConfigDoc paper_defaults_doc() { return ConfigDoc::parse(kPaperDefaults, "<paper-defaults>"); }

RunConfig build_run_config(ConfigDoc& doc) {
    RunConfig rc;
    SimConfig& sim = rc.sim;

    sim.option.spot = doc.get_double("option.spot", 100.0);
    sim.option.strike = doc.get_double("option.strike", 100.0);
    sim.option.rate = doc.get_double("option.rate", 0.05);
    sim.option.vol_hat = doc.get_double("option.vol_hat", 0.2);
    sim.option.maturity = doc.get_double("option.maturity", 0.1);

    sim.view.mu = doc.get_double("view.mu", 0.05);
    sim.view.dt = doc.get_double("view.dt", 0.02);
    sim.view.vol_process = read_vol_model(doc, sim.option.vol_hat);

    sim.n_paths = doc.get_uint("simulation.n_paths", 100000);
    sim.seed = doc.get_uint("simulation.seed", 20140101);
    const std::string mode = doc.get_string("simulation.sigma_mode", "deterministic");
    if (mode == "deterministic") {
        sim.sigma_mode = SigmaMode::Deterministic;
    } else if (mode == "stochastic") {
        sim.sigma_mode = SigmaMode::Stochastic;
    } else {
        throw ConfigError("simulation.sigma_mode", "expected deterministic or stochastic, got '" + mode + "'");
    }
    const std::uint64_t substeps = doc.get_uint("simulation.n_substeps", 8);
    if (substeps < 1 || substeps > 1000000) throw ConfigError("simulation.n_substeps", "must be in [1, 1000000]");
    sim.n_substeps = static_cast<int>(substeps);
    const std::uint64_t workers = doc.get_uint("simulation.workers", 0);
    if (workers > 4096) throw ConfigError("simulation.workers", "must be <= 4096");
    sim.workers = static_cast<unsigned>(workers);
    sim.strategies.clear();
    for (const auto& label : doc.get_string_list("simulation.strategies", {"bsm", "star"})) {
        try {
            sim.strategies.push_back(parse_strategy(label));
        } catch (const DomainError& e) {
            throw ConfigError("simulation.strategies", reason_of(e));
        }
    }

    rc.sweep.mu_grid = read_grid(doc, "mu");
    rc.sweep.mu_sigma_grid = read_grid(doc, "mu_sigma");

    VarianceSettings& var = rc.variance;
    read_lambda_axis(doc, "lambda1", var.lambda1_min, var.lambda1_max, var.lambda1_count);
    read_lambda_axis(doc, "lambda2", var.lambda2_min, var.lambda2_max, var.lambda2_count);
    const std::string omega = doc.get_string("variance.omega", "reconstructed");
    if (omega == "reconstructed") {
        var.omega = OmegaForm::Reconstructed;
    } else if (omega == "literal") {
        var.omega = OmegaForm::Literal;
    } else {
        throw ConfigError("variance.omega", "expected reconstructed or literal, got '" + omega + "'");
    }

    const char* env_dir = std::getenv(kOutputDirEnv);
    rc.output.directory = doc.get_string("output.directory", env_dir && *env_dir ? env_dir : ".");
    if (rc.output.directory.empty()) throw ConfigError("output.directory", "must not be empty");
    const auto formats = doc.get_string_list("output.formats", {"csv"});
    rc.output.csv = false;
    rc.output.svg = false;
    for (const auto& f : formats) {
        if (f == "csv") {
            rc.output.csv = true;
        } else if (f == "svg") {
            rc.output.svg = true;
        } else {
            throw ConfigError("output.formats", "unknown format '" + f + "' (expected csv or svg)");
        }
    }
    rc.output.timestamp = doc.get_bool("output.timestamp", true);

    doc.reject_unused();
    validate_modules(rc);
    return rc;
}

}  // namespace viewhedge::cli
