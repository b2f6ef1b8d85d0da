#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtdd/cluster.hpp"
#include "dtdd/isr.hpp"
#include "dtdd/oracle.hpp"

namespace dtdd::app {

/// Malformed or inconsistent scenario. line() is 1-based, 0 when unknown.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, int line = 0, std::string field = {});

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

enum class Quantity {
    DlDl,
    UlDl,
    UlUl,
    DlUl,
    DlTotal,
    UlTotal,
    DlUlClustered,
    DlUlClusteredRhoMean,
    SinrUl,
    Coverage,
};

std::string_view quantity_name(Quantity q) noexcept;
std::optional<Quantity> parse_quantity(std::string_view name) noexcept;
bool is_mix_dependent(Quantity q) noexcept;
bool is_cluster_quantity(Quantity q) noexcept;

enum class Check {
    Omega,
    DlDl,
    UlDl,
    UlUl,
    DlUl,
    ClusterDlUl,
    Coverage,
    Truncation,
    FlatAtFullCompensation,
};

std::string_view check_name(Check c) noexcept;
std::optional<Check> parse_check(std::string_view name) noexcept;

/// Macro-layer angle at which the oracles are evaluated; nullopt means the
/// theta-averaged oracle.
using ThetaChoice = std::optional<double>;

struct Scenario {
    std::string id = "scenario";
    NetworkParams network;
    std::vector<double> b_values{1.75};
    std::vector<double> k_values{0.8};
    std::vector<TrafficMix> mixes{TrafficMix{}};
    std::optional<ClusterParams> cluster;
    std::vector<double> rho0_values;     ///< cluster rho0 list, in absolute units
    bool rho0_angle_mean = false;        ///< average the cluster oracle over the direction of s~0
    std::vector<double> x_grid;
    std::vector<double> x_tilde_grid;
    std::vector<double> gamma_grid;
    std::vector<ThetaChoice> thetas{ThetaChoice{0.0}};
    SeriesControl series;
    std::optional<OracleConfig> oracle;
    std::vector<Quantity> quantities;
    bool sweep_oracle = false;
    std::vector<Check> checks;
    std::vector<double> omega_z{1.1, 1.2, 1.75, 2.0, 3.0, 5.0, 10.0};
    double omega_radius = 1e4;
    A2Constant a2_constant = A2Constant::LatticeSum;
    std::string output_path;
};

/// Parses a comma list ("0.1, 0.2"), an inclusive range ("start:stop:step")
/// or a log range ("log:a:b:n", n points from a to b).
std::vector<double> parse_grid(std::string_view text);

Scenario parse_scenario(std::string_view text, const std::string& source = "<string>");
Scenario load_scenario(const std::filesystem::path& path);

/// fig2, fig3, fig5 or coverage.
Scenario preset_scenario(std::string_view name);

/// Default check list for a scenario: every check whose inputs are present.
std::vector<Check> default_checks(const Scenario& s);

/// Cross-field checks shared by sweep and validate. Throws ConfigError.
void validate_for_sweep(const Scenario& s);
void validate_for_checks(const Scenario& s);

}  // namespace dtdd::app
