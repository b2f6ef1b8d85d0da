#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dtdd/app/scenario.hpp"

namespace dtdd::app {

struct ResultRow {
    std::string scenario_id;
    std::string quantity_name;
    double x = 0.0;
    double b = 0.0;
    double k = 0.0;
    std::optional<double> alpha_d;
    std::optional<double> alpha_u;
    std::optional<double> gamma;
    double value_linear = 0.0;
    std::optional<double> oracle_value;
    std::optional<double> oracle_tail_or_stderr;
    std::optional<double> rel_err;
};

/// Rows ordered by quantity, b, k, mix, then grid point. Grid points are
/// evaluated concurrently.
std::vector<ResultRow> run_sweep(const Scenario& s);
void write_sweep_csv(std::ostream& out, const std::vector<ResultRow>& rows);

enum class Metric { Relative, Absolute, Sigma, Exact };

struct CheckRow {
    std::string check;
    std::string quantity;
    std::optional<double> b, k, x, theta, rho0, gamma;
    double analytic = 0.0;
    double oracle = 0.0;
    double oracle_bound = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    Metric metric = Metric::Relative;
    bool pass = false;
    std::string note;  ///< error text when the check could not be evaluated
};

struct ValidationReport {
    std::vector<CheckRow> rows;
    bool all_pass = true;
    std::vector<std::string> summary;  ///< human-readable lines
};

ValidationReport run_validate(const Scenario& s);
void write_validate_csv(std::ostream& out, const ValidationReport& report);

/// Shortest round-trip decimal form; "inf" / "-inf" / "nan" for non-finite values.
std::string format_double(double v);

}  // namespace dtdd::app
