// dtdd: ISR sweeps and analytic-vs-oracle validation for D-TDD hexagonal networks.
//
//   dtdd sweep SCENARIO.ini [--out PATH]
//   dtdd validate SCENARIO.ini [--out PATH]
//   dtdd preset fig2|fig3|fig5|coverage [--out PATH]
//
// Exit codes: 0 success, 1 configuration error, 2 validation failure,
// 3 numeric non-convergence.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dtdd/app/report.hpp"
#include "dtdd/app/scenario.hpp"
#include "dtdd/errors.hpp"

namespace {

enum Exit : int { kOk = 0, kConfig = 1, kValidation = 2, kNonConvergence = 3 };

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<double> oracle_radius;
    std::optional<std::uint64_t> mc_draws;
    std::optional<int> h_max;
    bool a2_as_printed = false;
};

void apply(const Overrides& o, dtdd::app::Scenario& s) {
    if (o.seed || o.oracle_radius || o.mc_draws) {
        if (!s.oracle) s.oracle = dtdd::OracleConfig{};
        if (o.seed) s.oracle->seed = *o.seed;
        if (o.oracle_radius) s.oracle->lattice_radius = *o.oracle_radius;
        if (o.mc_draws) s.oracle->mc_draws = *o.mc_draws;
        try {
            s.oracle->validate();
        } catch (const dtdd::DomainError& e) {
            throw dtdd::app::ConfigError(e.what(), 0, "oracle");
        }
    }
    if (o.h_max) {
        s.series.h_max = *o.h_max;
        try {
            s.series.validate();
        } catch (const dtdd::DomainError& e) {
            throw dtdd::app::ConfigError(e.what(), 0, "series.h_max");
        }
    }
    if (o.a2_as_printed) s.a2_constant = dtdd::A2Constant::AsPrinted;
}

// Writes through `emit` to `path`, or to stdout when empty.
template <class Emit>
void write_output(const std::string& path, Emit&& emit) {
    if (path.empty()) {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dtdd::app::ConfigError("cannot open output file '" + path + "'", 0, "output");
    emit(out);
}

int do_sweep(dtdd::app::Scenario s, const std::string& out_path) {
    const auto rows = dtdd::app::run_sweep(s);
    const std::string path = out_path.empty() ? s.output_path : out_path;
    write_output(path, [&](std::ostream& os) { dtdd::app::write_sweep_csv(os, rows); });
    return kOk;
}

int do_validate(const dtdd::app::Scenario& s, const std::string& out_path) {
    const auto report = dtdd::app::run_validate(s);
    const std::string path = out_path.empty() ? s.output_path : out_path;
    write_output(path, [&](std::ostream& os) { dtdd::app::write_validate_csv(os, report); });
    for (const auto& line : report.summary) std::cerr << line << '\n';
    return report.all_pass ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interference-to-signal ratios for dynamic TDD hexagonal networks"};
    app.require_subcommand(1);

    Overrides overrides;
    std::string out_path;
    std::string format = "csv";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", overrides.seed, "Monte-Carlo seed (unsigned 64-bit)");
        sub->add_option("--oracle-radius", overrides.oracle_radius, "Oracle lattice cutoff in lattice spacings");
        sub->add_option("--mc-draws", overrides.mc_draws, "Monte-Carlo draws");
        sub->add_option("--h-max", overrides.h_max, "Series hard cap");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));
        sub->add_option("--out", out_path, "Output path (default: scenario output, else stdout)");
    };

    std::string scenario_path;
    auto* sweep = app.add_subcommand("sweep", "Evaluate quantities over the scenario grid");
    sweep->add_option("scenario", scenario_path, "Scenario INI file")->required();
    add_common(sweep);

    auto* validate = app.add_subcommand("validate", "Compare closed forms with the oracles");
    validate->add_option("scenario", scenario_path, "Scenario INI file")->required();
    validate->add_flag("--a2-as-printed", overrides.a2_as_printed,
                       "Use omega(b) instead of 6 omega(b) in the DL->UL coefficient");
    add_common(validate);

    std::string preset_name;
    auto* preset = app.add_subcommand("preset", "Run a built-in figure sweep");
    preset->add_option("name", preset_name, "fig2, fig3, fig5 or coverage")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig5", "coverage"}));
    add_common(preset);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (*sweep) {
            auto s = dtdd::app::load_scenario(scenario_path);
            apply(overrides, s);
            return do_sweep(std::move(s), out_path);
        }
        if (*validate) {
            auto s = dtdd::app::load_scenario(scenario_path);
            apply(overrides, s);
            return do_validate(s, out_path);
        }
        auto s = dtdd::app::preset_scenario(preset_name);
        apply(overrides, s);
        return do_sweep(std::move(s), out_path);
    } catch (const dtdd::app::ConfigError& e) {
        std::cerr << "dtdd: config error: " << e.what() << '\n';
        return kConfig;
    } catch (const dtdd::ConvergenceError& e) {
        std::cerr << "dtdd: no convergence: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const dtdd::DomainError& e) {
        std::cerr << "dtdd: domain error: " << e.what() << '\n';
        return kConfig;
    }
}
