#pragma once

#include <iosfwd>
#include <string>

#include "cli_config.hpp"

namespace infodist::cli {

/// Bit-exact column headers of the tabular outputs.
inline constexpr std::string_view kDistancesHeader =
    "measure,delta_alpha,value,weights_pi1,weights_pi2";
inline constexpr std::string_view kCoeffsHeader =
    "measure,c_hat,predicted_c,convergence_order,residual";

/// Executes the computation and renders the full output document,
/// metadata block included.
std::string render(const RunConfig& config);

/// Renders and writes to config.output_path, or to `out` when the path is
/// empty. Throws infodist errors on numerical failures and
/// std::runtime_error on I/O failures.
void run(const RunConfig& config, std::ostream& out);

/// Parse plus run with failures mapped to exit statuses: 0 success,
/// 2 usage error, 3 numerical or I/O error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infodist::cli
