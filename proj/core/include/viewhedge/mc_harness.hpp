#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "viewhedge/greeks.hpp"
#include "viewhedge/hedge_policy.hpp"
#include "viewhedge/rng.hpp"

namespace viewhedge {

enum class StrategyKind { BSM, Mastinsek, Generic, Star };

struct Strategy {
    StrategyKind kind = StrategyKind::BSM;
    double lambda1 = 0.0;  ///< Generic only
    double lambda2 = 0.0;  ///< Generic only

    static Strategy bsm() { return {StrategyKind::BSM, 0.0, 0.0}; }
    static Strategy mastinsek() { return {StrategyKind::Mastinsek, 0.0, 0.0}; }
    static Strategy star() { return {StrategyKind::Star, 0.0, 0.0}; }
    static Strategy generic(double l1, double l2) { return {StrategyKind::Generic, l1, l2}; }

    /// "bsm", "mastinsek", "star" or "generic(l1,l2)".
    std::string label() const;

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Parses the labels produced by Strategy::label (case-insensitive,
/// whitespace tolerant). Throws DomainError("strategies", ...) otherwise.
Strategy parse_strategy(const std::string& text);

/// Share count of `s` for an option/view pair.
HedgeRatio hedge_ratio(const Strategy& s, const GreeksBundle& g, const MarketView& view, double spot,
                       double rate);

enum class SigmaMode {
    Deterministic,  ///< σ(t₁) = σ₀ + f₀Δt
    Stochastic,     ///< Euler–Maruyama path of the vol process with n_substeps steps
};

struct SimConfig {
    OptionSpec option{100.0, 100.0, 0.05, 0.2, 0.1};
    MarketView view{};
    std::uint64_t n_paths = 100000;
    std::uint64_t seed = 20140101;
    std::vector<Strategy> strategies{Strategy::bsm(), Strategy::star()};
    SigmaMode sigma_mode = SigmaMode::Deterministic;
    int n_substeps = 8;
    unsigned workers = 0;  ///< 0: one per hardware thread

    /// n_paths ≥ 1, Δt < T, strategies nonempty, n_substeps ≥ 1, and the
    /// implied-vol process starts at the pricing vol (σ₀ = σ̂).
    void validate() const;
};

/// S₀·exp((μ − σ̂²/2)Δt + σ̂√Δt·z₁), the exact lognormal step.
double gbm_terminal(double s0, double mu, double vol_hat, double dt, double z1);

/// ΔH = Π₁ − Π₀ − Π₀·r·Δt for the static portfolio Π = V − n·S, with
/// Π₀ priced at (S₀, σ̂, T) and Π₁ at (S1, σ1, T − Δt). `rate` is the
/// financing rate. Throws MaturityExhausted when T − Δt ≤ 0.
double hedging_error(const OptionSpec& option, double rate, double dt, double n_shares, double s1, double sigma1);

/// Per-path hedging errors for every strategy, laid out path-major.
struct PathErrors {
    std::uint64_t n_paths = 0;
    std::size_t n_strategies = 0;
    std::vector<double> n_shares;  ///< per strategy
    std::vector<double> dh;        ///< dh[path * n_strategies + strategy]
    std::vector<double> s1;        ///< terminal spot per path
    std::vector<double> sigma1;    ///< terminal implied vol per path

    double at(std::uint64_t path, std::size_t strategy) const { return dh[path * n_strategies + strategy]; }
};

struct StrategyStats {
    Strategy strategy;
    double n_shares = 0.0;
    double mahe = 0.0;
    double mahe_stderr = 0.0;
    double mshe = 0.0;
    double mshe_stderr = 0.0;
    double mean_dh = 0.0;
    bool stderr_defined = false;  ///< false when n_paths == 1 (stderr reported as NaN)
};

struct SimResult {
    SimConfig config;
    std::vector<StrategyStats> per_strategy;
    double wall_seconds = 0.0;
};

struct MeanWithError {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Mean and standard error of a sample, accumulated in index order.
MeanWithError mean_with_error(std::span<const double> values);

/// Simulates every path under common random numbers: path i uses draws
/// keyed by (seed, i) for all strategies. Bit-identical for any worker count.
PathErrors simulate_paths(const SimConfig& config);

SimResult summarize(const SimConfig& config, const PathErrors& paths);

/// simulate_paths + summarize.
SimResult estimate_errors(const SimConfig& config);

/// MAHE(a) − MAHE(b) from the paired per-path differences |ΔH_a| − |ΔH_b|.
MeanWithError paired_mahe_difference(const PathErrors& paths, std::size_t a, std::size_t b);

struct SweepCell {
    double mu = 0.0;
    double mu_sigma = 0.0;
    double mahe_bsm = 0.0;
    double mahe_mastinsek = 0.0;
    double mahe_star = 0.0;
    MeanWithError bsm_minus_star;
    MeanWithError mastinsek_minus_star;
};

struct SweepResult {
    std::vector<double> mu_grid;
    std::vector<double> mu_sigma_grid;
    std::vector<SweepCell> cells;  ///< row-major: cells[i * mu_sigma_grid.size() + j]

    const SweepCell& at(std::size_t mu_index, std::size_t mu_sigma_index) const {
        return cells[mu_index * mu_sigma_grid.size() + mu_sigma_index];
    }
};

/// Runs {BSM, Mastinsek, Star} on every (μ, μ_σ) cell with the base seed, so
/// all cells and strategies share the same draws. The vol view of each cell
/// is LinearDrift(μ_σ) starting at the base σ₀; the base strategy list and
/// vol model are ignored.
SweepResult sweep(const SimConfig& base, std::span<const double> mu_grid, std::span<const double> mu_sigma_grid);

/// `count` evenly spaced points on [lo, hi] (both ends included).
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

}  // namespace viewhedge
