#include "cli_config.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

namespace infodist::cli {
namespace {

struct RawOptions {
    std::string family = "gaussian-location";
    double sigma = 1.0;
    double mu = 0.0;
    double separation = 1.0;
    double weight = 0.5;
    double alpha = 0.0;
    double x_min = -12.0;
    double x_max = 12.0;
    int n_points = 4801;
    LadderSpec ladder;
    std::vector<double> offsets;
    double pi1 = 0.5;
    double pi2 = 0.5;
    std::uint64_t samples = 1000;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    std::string output;
    std::string format;  // empty picks the per-command default
    std::string config_path;
};

FamilySpec build_family(const RawOptions& raw) {
    if (raw.family == "gaussian-location") return gaussian_location(raw.sigma);
    if (raw.family == "gaussian-scale") return gaussian_scale(raw.mu);
    return two_gaussian_mixture(raw.separation, raw.sigma, raw.weight);
}

RunConfig finalize(Command command, const RawOptions& raw) {
    RunConfig config;
    config.command = command;
    config.family =
        command == Command::cramer_rao ? gaussian_location(raw.sigma) : build_family(raw);

    if (!std::isfinite(raw.alpha)) throw std::invalid_argument("alpha must be finite");
    if (!alpha_in_range(config.family, raw.alpha)) {
        throw std::invalid_argument("alpha is out of range for family " +
                                    std::string(family_name(config.family.kind)));
    }
    config.alpha = raw.alpha;
    config.grid = make_grid(raw.x_min, raw.x_max, raw.n_points);

    if (command == Command::distances || command == Command::coeffs) {
        config.weights = make_weights(raw.pi1, raw.pi2);
        config.ladder = make_ladder(raw.ladder.delta_max, raw.ladder.delta_min, raw.ladder.ratio,
                                    raw.ladder.include_negatives);
        for (const double d : raw.offsets) {
            if (!std::isfinite(d)) throw std::invalid_argument("delta-alpha values must be finite");
        }
        config.explicit_offsets = raw.offsets;
    }

    if (command == Command::cramer_rao) {
        if (raw.samples < 1) throw std::invalid_argument("samples must be >= 1");
        if (raw.trials < 100) throw std::invalid_argument("trials must be >= 100");
        config.samples = raw.samples;
        config.trials = raw.trials;
        config.seed = raw.seed;
    }

    if (raw.format.empty()) {
        const bool tabular = command == Command::distances || command == Command::coeffs;
        config.format = tabular ? OutputFormat::csv : OutputFormat::json;
    } else {
        config.format = raw.format == "csv" ? OutputFormat::csv : OutputFormat::json;
    }
    config.output_path = raw.output;
    return config;
}

}  // namespace

std::string_view command_name(Command c) {
    switch (c) {
        case Command::distances: return "distances";
        case Command::coeffs: return "coeffs";
        case Command::cramer_rao: return "cramer-rao";
        case Command::entropy: return "entropy";
    }
    return "";
}

std::optional<int> parse_config(int argc, const char* const* argv, RunConfig& config,
                                std::ostream& out, std::ostream& err) {
    CLI::App app{"Information distances and Hilbert metrics between neighboring quantum states"};
    app.require_subcommand(1);
    RawOptions raw;

    const auto add_family = [&raw](CLI::App* sub) {
        sub->add_option("--family", raw.family, "Wavefunction family")
            ->check(CLI::IsMember({"gaussian-location", "gaussian-scale", "two-gaussian-mixture"}))
            ->capture_default_str();
        sub->add_option("--sigma", raw.sigma, "Gaussian width")->capture_default_str();
        sub->add_option("--mu", raw.mu, "Center of the gaussian-scale family")
            ->capture_default_str();
        sub->add_option("--separation", raw.separation, "Distance between mixture components")
            ->capture_default_str();
        sub->add_option("--weight", raw.weight, "First mixture component weight, in (0,1)")
            ->capture_default_str();
        sub->add_option("--alpha", raw.alpha, "Family parameter value")->capture_default_str();
    };
    const auto add_grid = [&raw](CLI::App* sub) {
        sub->add_option("--x-min", raw.x_min, "Grid lower bound")->capture_default_str();
        sub->add_option("--x-max", raw.x_max, "Grid upper bound")->capture_default_str();
        sub->add_option("--n-points", raw.n_points, "Grid points, odd and >= 3")
            ->capture_default_str();
    };
    const auto add_ladder = [&raw](CLI::App* sub) {
        sub->add_option("--delta-max", raw.ladder.delta_max, "Largest parameter offset")
            ->capture_default_str();
        sub->add_option("--delta-min", raw.ladder.delta_min, "Smallest parameter offset")
            ->capture_default_str();
        sub->add_option("--ratio", raw.ladder.ratio, "Geometric step between offsets")
            ->capture_default_str();
        sub->add_flag("--include-negatives", raw.ladder.include_negatives,
                      "Also sweep the negated offsets");
        sub->add_option("--delta-alpha", raw.offsets,
                        "Explicit offsets overriding the ladder (repeatable)");
    };
    const auto add_weights = [&raw](CLI::App* sub) {
        sub->add_option("--pi1", raw.pi1, "First mixing weight")->capture_default_str();
        sub->add_option("--pi2", raw.pi2, "Second mixing weight")->capture_default_str();
    };
    const auto add_output = [&raw](CLI::App* sub) {
        sub->add_option("--output", raw.output, "Output file path (default stdout)");
        sub->add_option("--format", raw.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--config", raw.config_path, "Key=value file supplying the flags above")
            ->configurable(false);
        sub->allow_config_extras(CLI::config_extras_mode::error);
    };

    CLI::App* distances =
        app.add_subcommand("distances", "Evaluate all measures over a ladder of offsets");
    add_family(distances);
    add_grid(distances);
    add_ladder(distances);
    add_weights(distances);
    add_output(distances);

    CLI::App* coeffs =
        app.add_subcommand("coeffs", "Fit the leading coefficient of each measure");
    add_family(coeffs);
    add_grid(coeffs);
    add_ladder(coeffs);
    add_weights(coeffs);
    add_output(coeffs);

    CLI::App* cramer_rao =
        app.add_subcommand("cramer-rao", "Monte-Carlo estimation against the Cramer-Rao bound");
    cramer_rao->add_option("--sigma", raw.sigma, "Gaussian width")->capture_default_str();
    cramer_rao->add_option("--alpha", raw.alpha, "True parameter value")->capture_default_str();
    cramer_rao->add_option("--samples", raw.samples, "Draws per trial")->capture_default_str();
    cramer_rao->add_option("--trials", raw.trials, "Number of trials")->capture_default_str();
    cramer_rao->add_option("--seed", raw.seed, "Master seed")->capture_default_str();
    add_output(cramer_rao);

    CLI::App* entropy =
        app.add_subcommand("entropy", "Shannon entropy of the family density");
    add_family(entropy);
    add_grid(entropy);
    add_output(entropy);

    try {
        app.parse(argc, argv);
        if (!raw.config_path.empty()) {
            std::ifstream file(raw.config_path);
            if (!file) throw CLI::FileError::Missing(raw.config_path);
            app.get_subcommands().front()->parse_from_stream(file);
        }
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (auto parsed = target->get_subcommands(); !parsed.empty();
             parsed = target->get_subcommands()) {
            target = parsed.front();
        }
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Command command = Command::distances;
    if (app.got_subcommand(coeffs)) command = Command::coeffs;
    if (app.got_subcommand(cramer_rao)) command = Command::cramer_rao;
    if (app.got_subcommand(entropy)) command = Command::entropy;

    try {
        config = finalize(command, raw);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    return std::nullopt;
}

}  // namespace infodist::cli
