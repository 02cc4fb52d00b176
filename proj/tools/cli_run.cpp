#include "cli_run.hpp"

#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "infodist/divergences.hpp"

namespace infodist::cli {
namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

std::string json_escape(std::string_view s) {
    std::string escaped;
    escaped.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '"': escaped += "\\\""; break;
            case '\\': escaped += "\\\\"; break;
            case '\n': escaped += "\\n"; break;
            case '\t': escaped += "\\t"; break;
            default: escaped += c;
        }
    }
    return escaped;
}

std::string json_string(std::string_view s) { return "\"" + json_escape(s) + "\""; }

// One resolved configuration entry; `quoted` marks JSON string values,
// everything else is emitted raw (numbers, booleans).
struct ConfigItem {
    std::string key;
    std::string value;
    bool quoted = false;
};

std::vector<ConfigItem> resolved_items(const RunConfig& c) {
    std::vector<ConfigItem> items;
    items.push_back({"command", std::string(command_name(c.command)), true});

    if (c.command == Command::cramer_rao) {
        items.push_back({"sigma", format_double(c.family.sigma), false});
        items.push_back({"alpha", format_double(c.alpha), false});
        items.push_back({"samples", std::to_string(c.samples), false});
        items.push_back({"trials", std::to_string(c.trials), false});
        items.push_back({"seed", std::to_string(c.seed), false});
        items.push_back({"format", c.format == OutputFormat::csv ? "csv" : "json", true});
        return items;
    }

    items.push_back({"family", std::string(family_name(c.family.kind)), true});
    switch (c.family.kind) {
        case FamilyKind::gaussian_location:
            items.push_back({"sigma", format_double(c.family.sigma), false});
            break;
        case FamilyKind::gaussian_scale:
            items.push_back({"mu", format_double(c.family.mu), false});
            break;
        case FamilyKind::two_gaussian_mixture:
            items.push_back({"sigma", format_double(c.family.sigma), false});
            items.push_back({"separation", format_double(c.family.separation), false});
            items.push_back({"weight", format_double(c.family.weight), false});
            break;
    }
    items.push_back({"alpha", format_double(c.alpha), false});
    items.push_back({"x-min", format_double(c.grid.x_min), false});
    items.push_back({"x-max", format_double(c.grid.x_max), false});
    items.push_back({"n-points", std::to_string(c.grid.n_points), false});

    if (c.command == Command::distances || c.command == Command::coeffs) {
        if (c.explicit_offsets.empty()) {
            items.push_back({"delta-max", format_double(c.ladder.delta_max), false});
            items.push_back({"delta-min", format_double(c.ladder.delta_min), false});
            items.push_back({"ratio", format_double(c.ladder.ratio), false});
            items.push_back(
                {"include-negatives", c.ladder.include_negatives ? "true" : "false", false});
        } else {
            std::string list;
            for (const double d : c.explicit_offsets) {
                if (!list.empty()) list += ' ';
                list += format_double(d);
            }
            items.push_back({"delta-alpha", list, true});
        }
        items.push_back({"pi1", format_double(c.weights.pi1), false});
        items.push_back({"pi2", format_double(c.weights.pi2), false});
    }
    items.push_back({"format", c.format == OutputFormat::csv ? "csv" : "json", true});
    return items;
}

void write_csv_metadata(std::ostream& os, const RunConfig& c) {
    for (const ConfigItem& item : resolved_items(c)) {
        os << "# " << item.key << "=" << item.value << "\n";
    }
}

void write_json_config(std::ostream& os, const RunConfig& c, std::string_view indent) {
    const std::vector<ConfigItem> items = resolved_items(c);
    os << "{\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
        os << indent << "  " << json_string(items[i].key) << ": "
           << (items[i].quoted ? json_string(items[i].value) : items[i].value)
           << (i + 1 < items.size() ? "," : "") << "\n";
    }
    os << indent << "}";
}

std::vector<DistanceRecord> compute_records(const RunConfig& c) {
    if (c.explicit_offsets.empty()) {
        return sweep_distances(c.family, c.alpha, c.ladder, c.weights, c.grid);
    }
    return sweep_distances(c.family, c.alpha, std::span<const double>(c.explicit_offsets),
                           c.weights, c.grid);
}

void render_distances(std::ostream& os, const RunConfig& c) {
    const std::vector<DistanceRecord> records = compute_records(c);
    if (c.format == OutputFormat::csv) {
        write_csv_metadata(os, c);
        os << kDistancesHeader << "\n";
        for (const DistanceRecord& r : records) {
            os << measure_name(r.measure) << "," << format_double(r.delta_alpha) << ","
               << format_double(r.value) << ",";
            if (r.weights) {
                os << format_double(r.weights->pi1) << "," << format_double(r.weights->pi2);
            } else {
                os << ",";
            }
            os << "\n";
        }
        return;
    }
    os << "{\n  \"config\": ";
    write_json_config(os, c, "  ");
    os << ",\n  \"records\": [\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const DistanceRecord& r = records[i];
        os << "    {\"measure\": " << json_string(measure_name(r.measure))
           << ", \"delta_alpha\": " << format_double(r.delta_alpha)
           << ", \"value\": " << format_double(r.value);
        if (r.weights) {
            os << ", \"weights_pi1\": " << format_double(r.weights->pi1)
               << ", \"weights_pi2\": " << format_double(r.weights->pi2);
        }
        os << "}" << (i + 1 < records.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
}

void render_coeffs(std::ostream& os, const RunConfig& c) {
    const std::vector<CoefficientFit> fits =
        coefficient_report(c.family, c.alpha, c.ladder, c.weights, c.grid);
    if (c.format == OutputFormat::csv) {
        write_csv_metadata(os, c);
        os << kCoeffsHeader << "\n";
        for (const CoefficientFit& f : fits) {
            os << measure_name(f.measure) << "," << format_double(f.c_hat) << ","
               << format_double(f.predicted_c) << "," << format_double(f.convergence_order) << ","
               << format_double(f.residual) << "\n";
        }
        return;
    }
    os << "{\n  \"config\": ";
    write_json_config(os, c, "  ");
    os << ",\n  \"fits\": [\n";
    for (std::size_t i = 0; i < fits.size(); ++i) {
        const CoefficientFit& f = fits[i];
        os << "    {\"measure\": " << json_string(measure_name(f.measure))
           << ", \"c_hat\": " << format_double(f.c_hat)
           << ", \"predicted_c\": " << format_double(f.predicted_c)
           << ", \"convergence_order\": " << format_double(f.convergence_order)
           << ", \"residual\": " << format_double(f.residual) << "}"
           << (i + 1 < fits.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
}

void render_cramer_rao(std::ostream& os, const RunConfig& c) {
    EstimationConfig ec;
    ec.family = c.family;
    ec.alpha_true = c.alpha;
    ec.samples_per_trial = c.samples;
    ec.trials = c.trials;
    ec.seed = c.seed;
    const EstimationReport report = simulate_estimation(ec);

    if (c.format == OutputFormat::csv) {
        write_csv_metadata(os, c);
        os << "mean_estimate,mean_square_error,fisher_per_sample,cramer_rao_bound,efficiency\n"
           << format_double(report.mean_estimate) << "," << format_double(report.mean_square_error)
           << "," << format_double(report.fisher_per_sample) << ","
           << format_double(report.cramer_rao_bound) << "," << format_double(report.efficiency)
           << "\n";
        return;
    }
    os << "{\n  \"config\": ";
    write_json_config(os, c, "  ");
    os << ",\n  \"report\": {\n"
       << "    \"mean_estimate\": " << format_double(report.mean_estimate) << ",\n"
       << "    \"mean_square_error\": " << format_double(report.mean_square_error) << ",\n"
       << "    \"fisher_per_sample\": " << format_double(report.fisher_per_sample) << ",\n"
       << "    \"cramer_rao_bound\": " << format_double(report.cramer_rao_bound) << ",\n"
       << "    \"efficiency\": " << format_double(report.efficiency) << "\n"
       << "  }\n}\n";
}

void render_entropy(std::ostream& os, const RunConfig& c) {
    const double entropy = shannon_entropy(evaluate_density(c.family, c.alpha, c.grid));
    if (c.format == OutputFormat::csv) {
        write_csv_metadata(os, c);
        os << "family,alpha,entropy\n"
           << family_name(c.family.kind) << "," << format_double(c.alpha) << ","
           << format_double(entropy) << "\n";
        return;
    }
    os << "{\n  \"config\": ";
    write_json_config(os, c, "  ");
    os << ",\n  \"entropy\": " << format_double(entropy) << "\n}\n";
}

}  // namespace

std::string render(const RunConfig& config) {
    std::ostringstream os;
    switch (config.command) {
        case Command::distances: render_distances(os, config); break;
        case Command::coeffs: render_coeffs(os, config); break;
        case Command::cramer_rao: render_cramer_rao(os, config); break;
        case Command::entropy: render_entropy(os, config); break;
    }
    return os.str();
}

void run(const RunConfig& config, std::ostream& out) {
    const std::string document = render(config);
    if (config.output_path.empty()) {
        out << document;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + config.output_path);
    file << document;
    file.flush();
    if (!file.good()) throw std::runtime_error("failed writing output file " + config.output_path);
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    if (const std::optional<int> status = parse_config(argc, argv, config, out, err)) {
        return *status;
    }
    try {
        run(config, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace infodist::cli
