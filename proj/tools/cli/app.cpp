#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <iterator>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config_doc.hpp"
#include "run_config.hpp"
#include "viewhedge/errors.hpp"

namespace viewhedge::cli {

namespace {

struct Invocation {
    std::string config_path;
    bool paper_defaults = false;
    bool no_timestamp = false;
    std::string output_dir;
    GreeksOptions greeks;
};

RunConfig load(const Invocation& inv, const std::vector<std::string>& extras) {
    if (inv.config_path.empty() && !inv.paper_defaults) {
        throw ConfigError("config", "give a config file or --paper-defaults");
    }
    ConfigDoc doc = inv.paper_defaults ? paper_defaults_doc() : ConfigDoc::load(inv.config_path);
    for (const auto& arg : extras) {
        if (arg.rfind("--", 0) != 0 || arg.find('=') == std::string::npos || arg.find('.') == std::string::npos) {
            throw ConfigError(arg, "unrecognised argument (overrides look like --section.key=value)");
        }
        doc.set_override(arg.substr(2));
    }
    if (!inv.output_dir.empty()) doc.set_override("output.directory=\"" + inv.output_dir + "\"");
    RunConfig rc = build_run_config(doc);
    if (inv.no_timestamp) rc.output.timestamp = false;
    return rc;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"viewhedge: view-adjusted option hedge ratios, hedging-error analytics and Monte Carlo"};
    app.name("viewhedge");
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.allow_extras();

    Invocation inv;
    app.add_flag("--paper-defaults", inv.paper_defaults, "Use the built-in reference experiment instead of a config file");
    app.add_flag("--no-timestamp", inv.no_timestamp, "Omit the '# generated' line from CSV files");
    app.add_option("--output-dir", inv.output_dir, "Output directory (overrides output.directory and $" +
                                                       std::string(kOutputDirEnv) + ")");

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"greeks", "Print the Greeks of the configured option"},
        {"hedge", "Print hedge ratios and their term decomposition for every strategy"},
        {"analyze-variance", "Write the analytic hedging-error variance surface and its minimizer line"},
        {"simulate", "Monte Carlo MAHE/MSHE for the configured strategies"},
        {"sweep", "MAHE difference matrices over the (mu, mu_sigma) grid"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("config", inv.config_path, "Config file (TOML subset)");
        sub->allow_extras();
        sub->footer("Any key can be overridden with --section.key=value, e.g. --view.mu=0.1");
        subs.push_back(sub);
    }
    subs[0]->add_flag("--fd-check", inv.greeks.fd_check, "Also compare every Greek with finite differences");
    subs[0]->add_option("--fd-step", inv.greeks.fd_step, "Relative bump for --fd-check")->check(CLI::Range(1e-8, 1e-2));

    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--output-dir") {
            ++i;
            continue;
        }
        if (arg.empty() || arg[0] == '-') continue;
        const bool known = std::any_of(std::begin(commands), std::end(commands),
                                       [&](const Command& c) { return arg == c.name; });
        if (!known) {
            err << "error: unknown command '" << arg << "' (expected greeks, hedge, analyze-variance, simulate or sweep)\n";
            return kValidationError;
        }
        break;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    try {
        const RunConfig rc = load(inv, app.remaining(true));
        if (name == "greeks") {
            run_greeks(rc, inv.greeks, out);
        } else if (name == "hedge") {
            run_hedge(rc, out);
        } else if (name == "analyze-variance") {
            run_analyze_variance(rc, out, err);
        } else if (name == "simulate") {
            run_simulate(rc, out);
        } else {
            run_sweep(rc, out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const MaturityExhausted& e) {
        err << "error: view.dt: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::exception& e) {
        err << "runtime error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kOk;
}

}  // namespace viewhedge::cli
