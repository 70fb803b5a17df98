// Command-line front end: simulate, sweep, feasibility, optimize-grouping.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hapsris/config.hpp"
#include "hapsris/engine.hpp"
#include "hapsris/error.hpp"
#include "hapsris/output.hpp"

namespace {

struct CommonOptions {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<int> drops;
    std::string out = "out";
    int workers = 0;
};

void add_common(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--config", opt.config, "Experiment config file (defaults apply when omitted)");
    cmd.add_option("--seed", opt.seed, "Override campaign.master_seed");
    cmd.add_option("--drops", opt.drops, "Override campaign.num_drops")->check(CLI::PositiveNumber);
    cmd.add_option("--out", opt.out, "Output directory")->capture_default_str();
    cmd.add_option("--workers", opt.workers, "Worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
}

hapsris::CampaignSpec load_spec(const CommonOptions& opt) {
    hapsris::CampaignSpec spec =
        opt.config.empty() ? hapsris::parse_config_text("").spec : hapsris::parse_config(opt.config).spec;
    if (opt.seed) spec.master_seed = *opt.seed;
    if (opt.drops) spec.num_drops = *opt.drops;
    spec.validate();
    return spec;
}

hapsris::Direction parse_direction(const std::string& s) {
    if (s == "downlink") return hapsris::Direction::Downlink;
    if (s == "uplink") return hapsris::Direction::Uplink;
    throw hapsris::ConfigError("direction must be 'downlink' or 'uplink'");
}

void report(const std::vector<std::filesystem::path>& paths) {
    for (const auto& p : paths) std::cout << "wrote " << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HAPS-mounted RIS backhaul Monte Carlo simulator"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string direction = "both";
    std::string objective = "max-sum-rate";
    std::string grouping_direction = "downlink";

    auto* simulate = app.add_subcommand("simulate", "Run one campaign and write records, CDFs and summary");
    add_common(*simulate, opt);

    auto* sweep = app.add_subcommand("sweep", "Median rate and per-dB slope over the tx-power grid");
    add_common(*sweep, opt);
    sweep->add_option("--direction", direction, "downlink, uplink or both")
        ->check(CLI::IsMember({"downlink", "uplink", "both"}))
        ->capture_default_str();

    auto* feasibility = app.add_subcommand("feasibility", "Power and payload report (no Monte Carlo)");
    add_common(*feasibility, opt);

    auto* optimize = app.add_subcommand("optimize-grouping", "Choose the RIS grouping for an objective");
    add_common(*optimize, opt);
    optimize->add_option("--objective", objective, "max-sum-rate, max-ee or min-power")
        ->check(CLI::IsMember({"max-sum-rate", "max-ee", "min-power"}))
        ->capture_default_str();
    optimize->add_option("--direction", grouping_direction, "downlink or uplink")
        ->check(CLI::IsMember({"downlink", "uplink"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const hapsris::CampaignSpec spec = load_spec(opt);
        const std::filesystem::path out_dir = opt.out;

        if (*simulate) {
            const auto result = hapsris::run_campaign(spec, opt.workers);
            report(hapsris::emit_results(result, out_dir));
        } else if (*feasibility) {
            const auto result = hapsris::power_report(spec);
            std::filesystem::create_directories(out_dir);
            const auto path = out_dir / "feasibility.txt";
            const std::string text = hapsris::feasibility_text(result);
            hapsris::write_file(path, text);
            std::cout << text;
            report({path});
        } else if (*sweep) {
            const auto result = hapsris::run_campaign(spec, opt.workers);
            std::filesystem::create_directories(out_dir);
            std::vector<std::filesystem::path> written;
            for (auto d : {hapsris::Direction::Downlink, hapsris::Direction::Uplink}) {
                if (direction != "both" && direction != hapsris::to_string(d)) continue;
                std::string csv;
                for (std::size_t s = 0; s < spec.schemes.size(); ++s) {
                    const auto rows = hapsris::sweep_from_result(result, d, static_cast<int>(s));
                    const std::string label = spec.schemes[s].label();
                    const std::string part = hapsris::sweep_csv(rows, label, d);
                    csv += csv.empty() ? part : part.substr(part.find('\n') + 1);
                    std::cout << hapsris::to_string(d) << " " << label << ": median slope "
                              << hapsris::format_number(hapsris::median_slope(rows) / 1e6) << " Mbit/s per dB\n";
                }
                const auto path = out_dir / ("sweep_" + hapsris::to_string(d) + ".csv");
                hapsris::write_file(path, csv);
                written.push_back(path);
            }
            report(written);
        } else if (*optimize) {
            const auto sel = hapsris::select_grouping(spec, hapsris::parse_objective(objective), spec.schemes,
                                                      parse_direction(grouping_direction), opt.workers);
            std::filesystem::create_directories(out_dir);
            const auto path = out_dir / "grouping.csv";
            hapsris::write_file(path, hapsris::grouping_csv(sel));
            std::cout << "objective " << objective << " (" << grouping_direction << "): " << sel.architecture().label()
                      << "\n";
            report({path});
        }
    } catch (const hapsris::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
