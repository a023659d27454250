#pragma once

#include <ostream>

#include "run_config.hpp"

namespace viewhedge::cli {

struct GreeksOptions {
    bool fd_check = false;
    double fd_step = 1e-5;
};

void run_greeks(const RunConfig& rc, const GreeksOptions& opts, std::ostream& out);
void run_hedge(const RunConfig& rc, std::ostream& out);
void run_analyze_variance(const RunConfig& rc, std::ostream& out, std::ostream& err);
void run_simulate(const RunConfig& rc, std::ostream& out);
void run_sweep(const RunConfig& rc, std::ostream& out);

}  // namespace viewhedge::cli
