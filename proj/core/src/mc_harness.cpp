#include "viewhedge/mc_harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "viewhedge/errors.hpp"
#include "viewhedge/vol_model.hpp"

namespace viewhedge {

// ---------------------------------------------------------------------------
// Strategies

std::string Strategy::label() const {
    switch (kind) {
        case StrategyKind::BSM: return "bsm";
        case StrategyKind::Mastinsek: return "mastinsek";
        case StrategyKind::Star: return "star";
        case StrategyKind::Generic: {
            std::ostringstream os;
            os.precision(17);
            os << "generic(" << lambda1 << ',' << lambda2 << ')';
            return os.str();
        }
    }
    return "?";
}

Strategy parse_strategy(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    if (s == "bsm") return Strategy::bsm();
    if (s == "mastinsek") return Strategy::mastinsek();
    if (s == "star") return Strategy::star();
    constexpr std::string_view prefix = "generic(";
    if (s.starts_with(prefix) && s.ends_with(')')) {
        const std::string inner = s.substr(prefix.size(), s.size() - prefix.size() - 1);
        const auto comma = inner.find(',');
        if (comma != std::string::npos) {
            try {
                std::size_t used1 = 0;
                std::size_t used2 = 0;
                const std::string a = inner.substr(0, comma);
                const std::string b = inner.substr(comma + 1);
                const double l1 = std::stod(a, &used1);
                const double l2 = std::stod(b, &used2);
                if (used1 == a.size() && used2 == b.size()) {
                    return Strategy::generic(l1, l2);
                }
            } catch (const std::exception&) {
            }
        }
    }
    throw DomainError("strategies", "unknown strategy '" + text +
                                        "' (expected bsm, mastinsek, star or generic(l1,l2))");
}

HedgeRatio hedge_ratio(const Strategy& s, const GreeksBundle& g, const MarketView& view, double spot,
                       double rate) {
    switch (s.kind) {
        case StrategyKind::BSM: return n_bsm(g);
        case StrategyKind::Mastinsek: return n_mastinsek(g, view, spot, rate);
        case StrategyKind::Generic: return n_generic(g, view, s.lambda1, s.lambda2);
        case StrategyKind::Star: return n_star(g, view, spot, rate);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Single-path building blocks

void SimConfig::validate() const {
    option.validate();
    view.validate();
    if (!(view.dt < option.maturity)) {
        throw MaturityExhausted("holding interval reaches expiry (T - dt <= 0)");
    }
    if (n_paths < 1) throw DomainError("n_paths", "must be >= 1");
    if (strategies.empty()) throw DomainError("strategies", "must not be empty");
    if (n_substeps < 1) throw DomainError("n_substeps", "must be >= 1");
    if (view.vol_process.sigma0 != option.vol_hat) {
        throw DomainError("sigma0", "implied-vol process must start at the pricing vol (sigma0 == vol_hat)");
    }
}

double gbm_terminal(double s0, double mu, double vol_hat, double dt, double z1) {
    if (!(s0 > 0.0)) throw DomainError("s0", "must be > 0");
    if (!(vol_hat >= 0.0)) throw DomainError("vol_hat", "must be >= 0");
    if (!(dt >= 0.0)) throw DomainError("dt", "must be >= 0");
    return s0 * std::exp((mu - 0.5 * vol_hat * vol_hat) * dt + vol_hat * std::sqrt(dt) * z1);
}

namespace {

OptionSpec at_horizon(const OptionSpec& option, double dt, double s1, double sigma1) {
    const double remaining = option.maturity - dt;
    if (!(remaining > 0.0)) {
        throw MaturityExhausted("holding interval reaches expiry (T - dt <= 0)");
    }
    if (!(sigma1 > 0.0)) throw DomainError("sigma1", "must be > 0");
    return OptionSpec{s1, option.strike, option.rate, sigma1, remaining};
}

}  // namespace

double hedging_error(const OptionSpec& option, double rate, double dt, double n_shares, double s1, double sigma1) {
    const OptionSpec later = at_horizon(option, dt, s1, sigma1);
    const double pi0 = price(option) - n_shares * option.spot;
    const double pi1 = price(later) - n_shares * s1;
    return pi1 - pi0 - pi0 * rate * dt;
}

// ---------------------------------------------------------------------------
// Statistics

namespace {

// Neumaier-compensated running sum; order-dependent, so callers feed values
// in path order.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <class Fn>
MeanWithError mean_with_error_of(std::size_t n, Fn&& value_at) {
    MeanWithError out;
    if (n == 0) {
        out.mean = std::numeric_limits<double>::quiet_NaN();
        out.std_error = out.mean;
        return out;
    }
    CompensatedSum sum;
    for (std::size_t i = 0; i < n; ++i) sum.add(value_at(i));
    out.mean = sum.value() / static_cast<double>(n);
    if (n < 2) {
        out.std_error = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    CompensatedSum sq;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = value_at(i) - out.mean;
        sq.add(d * d);
    }
    const double variance = sq.value() / static_cast<double>(n - 1);
    out.std_error = std::sqrt(variance / static_cast<double>(n));
    return out;
}

unsigned resolve_workers(unsigned requested, std::uint64_t n_paths) {
    unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(w, n_paths));
}

}  // namespace

MeanWithError mean_with_error(std::span<const double> values) {
    return mean_with_error_of(values.size(), [&](std::size_t i) { return values[i]; });
}

// ---------------------------------------------------------------------------
// Engine

PathErrors simulate_paths(const SimConfig& config) {
    config.validate();

    const OptionSpec& option = config.option;
    const MarketView& view = config.view;
    const double dt = view.dt;
    const double remaining = option.maturity - dt;
    if (!(remaining > 0.0)) throw MaturityExhausted("holding interval reaches expiry (T - dt <= 0)");

    const GreeksBundle g = greeks(option);
    const std::size_t n_strat = config.strategies.size();

    PathErrors out;
    out.n_paths = config.n_paths;
    out.n_strategies = n_strat;
    out.n_shares.reserve(n_strat);
    for (const auto& s : config.strategies) {
        out.n_shares.push_back(hedge_ratio(s, g, view, option.spot, option.rate).n_shares);
    }
    out.dh.resize(config.n_paths * n_strat);
    out.s1.resize(config.n_paths);
    out.sigma1.resize(config.n_paths);

    const double v0 = g.price;
    const double deterministic_sigma1 = view.vol_process.sigma0 + drift0(view.vol_process) * dt;
    if (config.sigma_mode == SigmaMode::Deterministic && !(deterministic_sigma1 > 0.0)) {
        throw DomainError("mu_sigma", "deterministic sigma(t1) = sigma0 + f0*dt must stay > 0");
    }
    const double sub_dt = dt / config.n_substeps;
    const PathNormals normals(config.seed);

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t path = begin; path < end; ++path) {
            const PathDraw draw = draw_path(normals, path);
            const double s1 = gbm_terminal(option.spot, view.mu, option.vol_hat, dt, draw.z1);
            double sigma1 = deterministic_sigma1;
            if (config.sigma_mode == SigmaMode::Stochastic && dt > 0.0) {
                sigma1 = view.vol_process.sigma0;
                for (int k = 0; k < config.n_substeps; ++k) {
                    const double z = k == 0 ? draw.z2 : normals.normal(path, Substream::Vol, static_cast<std::uint32_t>(k));
                    sigma1 = step(view.vol_process, sigma1, sub_dt, z);
                }
            }
            const double v1 = price(OptionSpec{s1, option.strike, option.rate, sigma1, remaining});
            out.s1[path] = s1;
            out.sigma1[path] = sigma1;
            double* row = out.dh.data() + path * n_strat;
            for (std::size_t k = 0; k < n_strat; ++k) {
                const double n = out.n_shares[k];
                const double pi0 = v0 - n * option.spot;
                const double pi1 = v1 - n * s1;
                row[k] = pi1 - pi0 - pi0 * option.rate * dt;
            }
        }
    };

    const unsigned workers = resolve_workers(config.workers, config.n_paths);
    if (workers <= 1) {
        run_range(0, config.n_paths);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = (config.n_paths + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(config.n_paths, w * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(config.n_paths, begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
    }
    return out;
}

SimResult summarize(const SimConfig& config, const PathErrors& paths) {
    SimResult result;
    result.config = config;
    const auto n = static_cast<std::size_t>(paths.n_paths);
    for (std::size_t k = 0; k < paths.n_strategies; ++k) {
        StrategyStats st;
        st.strategy = config.strategies[k];
        st.n_shares = paths.n_shares[k];
        const auto abs_err = mean_with_error_of(n, [&](std::size_t i) { return std::abs(paths.at(i, k)); });
        const auto sq_err = mean_with_error_of(n, [&](std::size_t i) {
            const double v = paths.at(i, k);
            return v * v;
        });
        const auto raw = mean_with_error_of(n, [&](std::size_t i) { return paths.at(i, k); });
        st.mahe = abs_err.mean;
        st.mahe_stderr = abs_err.std_error;
        st.mshe = sq_err.mean;
        st.mshe_stderr = sq_err.std_error;
        st.mean_dh = raw.mean;
        st.stderr_defined = n > 1;
        result.per_strategy.push_back(st);
    }
    return result;
}

SimResult estimate_errors(const SimConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const PathErrors paths = simulate_paths(config);
    SimResult result = summarize(config, paths);
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

MeanWithError paired_mahe_difference(const PathErrors& paths, std::size_t a, std::size_t b) {
    return mean_with_error_of(static_cast<std::size_t>(paths.n_paths), [&](std::size_t i) {
        return std::abs(paths.at(i, a)) - std::abs(paths.at(i, b));
    });
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    if (count == 0) throw DomainError("grid", "needs at least one point");
    if (count == 1) return {lo};
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = hi;
    return out;
}

SweepResult sweep(const SimConfig& base, std::span<const double> mu_grid, std::span<const double> mu_sigma_grid) {
    if (mu_grid.empty()) throw DomainError("mu_grid", "must not be empty");
    if (mu_sigma_grid.empty()) throw DomainError("mu_sigma_grid", "must not be empty");

    SweepResult result;
    result.mu_grid.assign(mu_grid.begin(), mu_grid.end());
    result.mu_sigma_grid.assign(mu_sigma_grid.begin(), mu_sigma_grid.end());
    result.cells.reserve(mu_grid.size() * mu_sigma_grid.size());

    constexpr std::size_t kBsm = 0;
    constexpr std::size_t kMastinsek = 1;
    constexpr std::size_t kStar = 2;

    for (double mu : mu_grid) {
        for (double mu_sigma : mu_sigma_grid) {
            SimConfig cfg = base;
            cfg.strategies = {Strategy::bsm(), Strategy::mastinsek(), Strategy::star()};
            cfg.view.mu = mu;
            cfg.view.vol_process = VolProcessSpec::linear_drift(base.view.vol_process.sigma0, mu_sigma);
            const PathErrors paths = simulate_paths(cfg);
            const SimResult stats = summarize(cfg, paths);

            SweepCell cell;
            cell.mu = mu;
            cell.mu_sigma = mu_sigma;
            cell.mahe_bsm = stats.per_strategy[kBsm].mahe;
            cell.mahe_mastinsek = stats.per_strategy[kMastinsek].mahe;
            cell.mahe_star = stats.per_strategy[kStar].mahe;
            cell.bsm_minus_star = paired_mahe_difference(paths, kBsm, kStar);
            cell.mastinsek_minus_star = paired_mahe_difference(paths, kMastinsek, kStar);
            result.cells.push_back(cell);
        }
    }
    return result;
}

}  // namespace viewhedge
