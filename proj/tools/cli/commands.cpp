#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <string>
#include <vector>

#include "output.hpp"
#include "viewhedge/errors.hpp"

namespace viewhedge::cli {

namespace {

void print_kv(std::ostream& out, const std::string& key, double v) {
    out << std::left << std::setw(22) << key << fmt17(v) << '\n';
}

std::string describe(const SimConfig& sim) {
    const auto& o = sim.option;
    const auto& v = sim.view;
    std::string s = "S=" + fmt17(o.spot) + " K=" + fmt17(o.strike) + " r=" + fmt17(o.rate) +
                    " vol_hat=" + fmt17(o.vol_hat) + " T=" + fmt17(o.maturity) + " mu=" + fmt17(v.mu) +
                    " dt=" + fmt17(v.dt) + " vol_model=" + std::string(to_string(v.vol_process.kind));
    return s;
}

void announce(std::ostream& out, const std::filesystem::path& p) { out << "wrote " << p.string() << '\n'; }

}  // namespace

void run_greeks(const RunConfig& rc, const GreeksOptions& opts, std::ostream& out) {
    const OptionSpec& spec = rc.option();
    const GreeksBundle g = greeks(spec);
    const DTerms d = d_terms(spec);
    out << "# " << describe(rc.sim) << '\n';
    print_kv(out, "d1", d.d1);
    print_kv(out, "d2", d.d2);
    print_kv(out, "price", g.price);
    print_kv(out, "delta", g.v_s);
    print_kv(out, "gamma", g.v_ss);
    print_kv(out, "speed", g.v_sss);
    print_kv(out, "vega", g.v_sig);
    print_kv(out, "volga", g.v_sigsig);
    print_kv(out, "ultima", g.v_sig3);
    print_kv(out, "charm", g.v_st);
    print_kv(out, "vega_decay", g.v_sigt);
    print_kv(out, "vanna", g.v_ssig);
    print_kv(out, "zomma", g.v_sssig);
    print_kv(out, "vanna_vol", g.v_ssigsig);
    print_kv(out, "speed_from_pde", speed_from_pde(spec, g));

    if (opts.fd_check) {
        const FdReport r = fd_validate(spec, opts.fd_step);
        out << "\n# finite-difference check, rel_step=" << fmt17(opts.fd_step) << '\n';
        out << std::left << std::setw(22) << "greek" << std::setw(26) << "analytic" << std::setw(26)
            << "finite_difference" << "rel_error\n";
        for (const auto& e : r.entries) {
            out << std::left << std::setw(22) << greek_name(e.greek) << std::setw(26) << fmt17(e.analytic)
                << std::setw(26) << fmt17(e.finite_difference) << fmt17(e.rel_error) << '\n';
        }
        print_kv(out, "max_rel_error_1_2", r.max_rel_error_order12);
        print_kv(out, "max_rel_error_3", r.max_rel_error_order3);
    }
}

void run_hedge(const RunConfig& rc, std::ostream& out) {
    const OptionSpec& spec = rc.option();
    const MarketView& view = rc.view();
    const GreeksBundle g = greeks(spec);

    std::vector<Strategy> shown{Strategy::bsm(), Strategy::mastinsek(), Strategy::star()};
    for (const auto& s : rc.sim.strategies) {
        if (std::find(shown.begin(), shown.end(), s) == shown.end()) shown.push_back(s);
    }

    out << "# " << describe(rc.sim) << '\n';
    out << std::left << std::setw(24) << "strategy";
    for (const char* h : {"n_shares", "base", "drift", "vol_drift", "vol_convexity", "charm"})
        out << std::setw(26) << h;
    out << '\n';
    for (const auto& s : shown) {
        const HedgeRatio h = hedge_ratio(s, g, view, spec.spot, spec.rate);
        out << std::left << std::setw(24) << s.label();
        for (double v : {h.n_shares, h.base, h.drift_term, h.vol_drift_term, h.vol_convexity_term, h.charm_term})
            out << std::setw(26) << fmt17(v);
        out << '\n';
    }

    out << '\n';
    try {
        print_kv(out, "lambda_star", lambda_star(g, view, spec.spot, spec.rate));
    } catch (const DegenerateError& e) {
        out << std::left << std::setw(22) << "lambda_star" << "undefined (" << e.what() << ")\n";
    }
    try {
        print_kv(out, "lambda2_star(0)", lambda2_star(g, view, spec.spot, spec.rate, 0.0));
    } catch (const DegenerateError& e) {
        out << std::left << std::setw(22) << "lambda2_star(0)" << "undefined (" << e.what() << ")\n";
    }
}

void run_analyze_variance(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const VarianceSettings& vs = rc.variance;
    const ErrorCoefficients c = coefficients(rc.option(), rc.view(), vs.omega);

    out << "# " << describe(rc.sim) << '\n';
    out << "# omega form: " << (vs.omega == OmegaForm::Literal ? "literal" : "reconstructed") << '\n';
    print_kv(out, "gamma", c.gamma);
    print_kv(out, "beta", c.beta);
    print_kv(out, "delta", c.delta);
    print_kv(out, "phi", c.phi);
    print_kv(out, "eta", c.eta);
    print_kv(out, "epsilon", c.epsilon);
    print_kv(out, "xi", c.xi);
    print_kv(out, "omega", c.omega);
    print_kv(out, "tau", c.tau);
    print_kv(out, "iota", c.iota);
    print_kv(out, "chi", c.chi);
    print_kv(out, "mean_term", c.mean_term);
    print_kv(out, "var(bsm: 0,0)", var_delta_h(c, 0.0, 0.0));
    print_kv(out, "var(1,1)", var_delta_h(c, 1.0, 1.0));

    const auto l1 = uniform_grid(vs.lambda1_min, vs.lambda1_max, vs.lambda1_count);
    const auto l2 = uniform_grid(vs.lambda2_min, vs.lambda2_max, vs.lambda2_count);

    std::optional<MinimizerLine> line;
    try {
        line = minimize_f(c);
        print_kv(out, "minimizer_intercept", line->intercept);
        print_kv(out, "minimizer_slope", line->slope);
        print_kv(out, "minimum_variance", line->min_value);
    } catch (const DegenerateError& e) {
        err << "note: no minimizer line (" << e.what() << "); variance_minimizer.csv not written\n";
    }

    if (!rc.output.csv) return;
    CsvWriter surface({"lambda1", "lambda2", "variance", "mshe"});
    for (double a : l1) {
        for (double b : l2) {
            surface.cell(a).cell(b).cell(var_delta_h(c, a, b)).cell(mshe(c, a, b));
            surface.end_row();
        }
    }
    announce(out, write_file(rc.output.directory, "variance_surface.csv", surface.str(rc.output.timestamp)));

    if (line) {
        CsvWriter minimizer({"lambda1", "lambda2_star", "variance", "mshe"});
        for (double a : l1) {
            const double b = line->lambda2_of_lambda1(a);
            minimizer.cell(a).cell(b).cell(var_delta_h(c, a, b)).cell(mshe(c, a, b));
            minimizer.end_row();
        }
        announce(out, write_file(rc.output.directory, "variance_minimizer.csv", minimizer.str(rc.output.timestamp)));
    }
}

void run_simulate(const RunConfig& rc, std::ostream& out) {
    const SimResult r = estimate_errors(rc.sim);
    out << "# " << describe(rc.sim) << " paths=" << rc.sim.n_paths << " seed=" << rc.sim.seed << '\n';
    out << std::left << std::setw(24) << "strategy";
    for (const char* h : {"n_shares", "mahe", "mahe_stderr", "mshe", "mshe_stderr", "mean_dh"})
        out << std::setw(26) << h;
    out << '\n';
    CsvWriter csv({"strategy", "mahe", "mahe_stderr", "mshe", "mshe_stderr", "mean_dh"});
    for (const auto& st : r.per_strategy) {
        out << std::left << std::setw(24) << st.strategy.label();
        for (double v : {st.n_shares, st.mahe, st.mahe_stderr, st.mshe, st.mshe_stderr, st.mean_dh})
            out << std::setw(26) << fmt17(v);
        out << '\n';
        csv.cell(st.strategy.label()).cell(st.mahe).cell(st.mahe_stderr).cell(st.mshe).cell(st.mshe_stderr).cell(st.mean_dh);
        csv.end_row();
    }
    out << "wall_seconds " << std::fixed << std::setprecision(3) << r.wall_seconds << std::defaultfloat << '\n';
    if (rc.output.csv) announce(out, write_file(rc.output.directory, "simulate.csv", csv.str(rc.output.timestamp)));
}

void run_sweep(const RunConfig& rc, std::ostream& out) {
    const SweepResult r = sweep(rc.sim, rc.sweep.mu_grid, rc.sweep.mu_sigma_grid);

    struct Output {
        const char* stem;
        const char* title;
        double SweepCell::*mahe_a;
        MeanWithError SweepCell::*diff;
    };
    const Output outputs[] = {
        {"sweep_bsm_minus_star", "MAHE difference BSM - Star", &SweepCell::mahe_bsm, &SweepCell::bsm_minus_star},
        {"sweep_mastinsek_minus_star", "MAHE difference Mastinsek - Star", &SweepCell::mahe_mastinsek,
         &SweepCell::mastinsek_minus_star},
    };

    out << "# " << describe(rc.sim) << " paths=" << rc.sim.n_paths << " seed=" << rc.sim.seed << " grid="
        << r.mu_grid.size() << "x" << r.mu_sigma_grid.size() << '\n';
    for (const Output& o : outputs) {
        CsvWriter csv({"mu", "mu_sigma", "mahe_a", "mahe_b", "diff", "diff_stderr"});
        Heatmap map{o.title, r.mu_grid, r.mu_sigma_grid, {}};
        double lo = INFINITY, hi = -INFINITY;
        for (const SweepCell& cell : r.cells) {
            const MeanWithError& d = cell.*(o.diff);
            csv.cell(cell.mu).cell(cell.mu_sigma).cell(cell.*(o.mahe_a)).cell(cell.mahe_star).cell(d.mean).cell(d.std_error);
            csv.end_row();
            map.z.push_back(d.mean);
            lo = std::min(lo, d.mean);
            hi = std::max(hi, d.mean);
        }
        out << o.stem << ": min " << fmt17(lo) << " max " << fmt17(hi) << '\n';
        if (rc.output.csv) {
            announce(out, write_file(rc.output.directory, std::string(o.stem) + ".csv", csv.str(rc.output.timestamp)));
        }
        if (rc.output.svg) {
            announce(out, write_file(rc.output.directory, std::string(o.stem) + ".svg", render_heatmap_svg(map)));
        }
    }
}

}  // namespace viewhedge::cli
