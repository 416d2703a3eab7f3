#pragma once

#include <froblim/report.hpp>

#include <string>
#include <vector>

namespace froblim {

// Pipelines behind the CLI subcommands. Commands: spectrum, connection,
// check, limit, manifold, log, all.
Report run_command(const std::string& command, const Weights& w);

// All weight vectors with 1 <= n <= nmax and 1 <= w_i <= wmax, in
// lexicographic order by (n, w).
std::vector<Weights> weight_grid(long nmax, long wmax);

GridReport run_grid(const std::string& command, long nmax, long wmax);

bool is_known_command(const std::string& command);

} // namespace froblim
