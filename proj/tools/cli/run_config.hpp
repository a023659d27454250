#pragma once

#include <string>
#include <vector>

#include "config_doc.hpp"
#include "viewhedge/mc_harness.hpp"
#include "viewhedge/variance_analytics.hpp"

namespace viewhedge::cli {

/// Name of the environment variable that sets the default output directory.
inline constexpr const char* kOutputDirEnv = "VIEWHEDGE_OUTPUT_DIR";

struct SweepSettings {
    std::vector<double> mu_grid;
    std::vector<double> mu_sigma_grid;
};

struct VarianceSettings {
    double lambda1_min = -5.0;
    double lambda1_max = 5.0;
    std::size_t lambda1_count = 101;
    double lambda2_min = -5.0;
    double lambda2_max = 5.0;
    std::size_t lambda2_count = 101;
    OmegaForm omega = OmegaForm::Reconstructed;
};

struct OutputSettings {
    std::string directory = ".";
    bool csv = true;
    bool svg = false;
    bool timestamp = true;
};

/// Everything a command needs, validated against the module invariants.
struct RunConfig {
    SimConfig sim;  ///< carries the option, the view and the simulation knobs
    SweepSettings sweep;
    VarianceSettings variance;
    OutputSettings output;

    const OptionSpec& option() const { return sim.option; }
    const MarketView& view() const { return sim.view; }
};

/// The fixed parameters of the reference experiment: S₀ = K = 100, T = 0.1,
/// r = 0.05, σ̂ = σ₀ = 0.2, Δt = 0.02, μ = r, LinearDrift μ_σ = 0.2,
/// 10⁵ paths, {BSM, Star}, deterministic σ(t₁), 51×51 sweep on [−0.5, 0.5]².
ConfigDoc paper_defaults_doc();

/// Reads every known key (falling back to the reference defaults), validates,
/// and rejects unknown keys. Errors are ConfigError with the key path.
RunConfig build_run_config(ConfigDoc& doc);

}  // namespace viewhedge::cli
