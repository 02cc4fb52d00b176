#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "infodist/cramer_rao.hpp"
#include "infodist/expansion.hpp"

namespace infodist::cli {

enum class Command { distances, coeffs, cramer_rao, entropy };
enum class OutputFormat { csv, json };

std::string_view command_name(Command c);

/// Fully resolved run description; every field is validated at parse time.
struct RunConfig {
    Command command = Command::distances;
    FamilySpec family;
    double alpha = 0.0;
    Grid grid;
    LadderSpec ladder;
    std::vector<double> explicit_offsets;  // nonempty overrides the ladder
    WeightPair weights;
    std::uint64_t samples = 1000;  // cramer-rao draws per trial
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    std::string output_path;  // empty writes to stdout
    OutputFormat format = OutputFormat::csv;
};

/// Parses argv (and any --config file named there) into `config`.
/// Returns an exit status when parsing already finished the run: 0 after
/// printing help to `out`, 2 after reporting a usage error to `err`.
/// Returns nullopt when `config` is ready to execute.
std::optional<int> parse_config(int argc, const char* const* argv, RunConfig& config,
                                std::ostream& out, std::ostream& err);

}  // namespace infodist::cli
