#include "dtdd/app/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "dtdd/errors.hpp"
#include "dtdd/parallel.hpp"

namespace dtdd::app {
namespace {

constexpr double kComponentTolerance = 1e-3;
constexpr double kDlUlTolerance = 1e-6;
constexpr double kOmegaTolerance = 1e-8;
constexpr double kTruncationTolerance = 1e-8;
constexpr double kCoverageTolerance = 0.01;
constexpr double kSigmas = 3.0;

std::string cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

double relative_error(double value, double reference) {
    if (value == reference) return 0.0;
    if (reference == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(value - reference) / std::abs(reference);
}

NetworkParams network_at(const Scenario& s, double b, double k) {
    NetworkParams np = s.network;
    np.b = b;
    np.k = k;
    return np;
}

unsigned sweep_workers(const Scenario& s) {
    return s.oracle ? s.oracle->workers : 0u;
}

OracleResult theta_oracle(bool ul, double x, const ThetaChoice& theta, const NetworkParams& np,
                          const OracleConfig& oc) {
    if (ul) return theta ? oracle_ul_dl(x, *theta, np, oc) : oracle_ul_dl_theta_mean(x, np, oc);
    return theta ? oracle_dl_dl(x, *theta, np, oc) : oracle_dl_dl_theta_mean(x, np, oc);
}

OracleResult cluster_oracle(const Scenario& s, const ClusterParams& cp, const SmallCellQuery& q) {
    return s.rho0_angle_mean ? oracle_cluster_dl_ul_angle_mean(cp, q, *s.oracle)
                             : oracle_cluster_dl_ul(cp, q, *s.oracle);
}

struct MacroPoint {
    double dl_dl = 0.0, ul_dl = 0.0, ul_ul = 0.0, dl_ul = 0.0;
    OracleResult o_dl_dl, o_ul_dl, o_ul_ul, o_dl_ul;
};

struct Needs {
    bool dl_dl = false, ul_dl = false, ul_ul = false, dl_ul = false;
};

Needs macro_needs(const std::vector<Quantity>& quantities) {
    Needs n;
    for (Quantity q : quantities) {
        switch (q) {
            case Quantity::DlDl: n.dl_dl = true; break;
            case Quantity::UlDl: n.ul_dl = true; break;
            case Quantity::UlUl: n.ul_ul = true; break;
            case Quantity::DlUl: n.dl_ul = true; break;
            case Quantity::DlTotal: n.dl_dl = n.ul_dl = true; break;
            case Quantity::UlTotal: n.ul_ul = n.dl_ul = true; break;
            default: break;
        }
    }
    return n;
}

ResultRow base_row(const Scenario& s, Quantity q, double x, double b, double k) {
    ResultRow row;
    row.scenario_id = s.id;
    row.quantity_name = std::string(quantity_name(q));
    row.x = x;
    row.b = b;
    row.k = k;
    return row;
}

void attach_oracle(ResultRow& row, double value, double spread) {
    row.oracle_value = value;
    row.oracle_tail_or_stderr = spread;
    row.rel_err = relative_error(row.value_linear, value);
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::vector<ResultRow> run_sweep(const Scenario& s) {
    validate_for_sweep(s);
    const unsigned workers = sweep_workers(s);
    const bool with_oracle = s.sweep_oracle && s.oracle.has_value();
    const Needs needs = macro_needs(s.quantities);
    const bool any_macro = needs.dl_dl || needs.ul_dl || needs.ul_ul || needs.dl_ul;

    // Macro components per (b, k, x).
    const std::size_t nb = s.b_values.size(), nk = s.k_values.size(), nx = s.x_grid.size();
    std::vector<MacroPoint> macro(any_macro ? nb * nk * nx : 0);
    auto macro_at = [&](std::size_t ib, std::size_t ik, std::size_t ix) -> MacroPoint& {
        return macro[(ib * nk + ik) * nx + ix];
    };
    parallel_for(macro.size(), workers, [&](std::size_t idx) {
        const std::size_t ix = idx % nx;
        const std::size_t ik = (idx / nx) % nk;
        const std::size_t ib = idx / (nx * nk);
        const NetworkParams np = network_at(s, s.b_values[ib], s.k_values[ik]);
        const double x = s.x_grid[ix];
        const MobileQuery q{x, s.thetas.front().value_or(0.0)};
        MacroPoint& p = macro[idx];
        if (needs.dl_dl) p.dl_dl = isr_dl_dl(q, np, s.series);
        if (needs.ul_dl) p.ul_dl = isr_ul_dl(q, np, s.series);
        if (needs.ul_ul) p.ul_ul = isr_ul_ul(q, np, s.series);
        if (needs.dl_ul) p.dl_ul = isr_dl_ul(q, np, s.a2_constant);
        if (!with_oracle) return;
        const OracleConfig& oc = *s.oracle;
        if (needs.dl_dl) p.o_dl_dl = theta_oracle(false, x, s.thetas.front(), np, oc);
        if (needs.ul_dl) p.o_ul_dl = theta_oracle(true, x, s.thetas.front(), np, oc);
        if (needs.ul_ul) p.o_ul_ul = oracle_ul_ul(x, np, oc);
        if (needs.dl_ul) p.o_dl_ul = oracle_dl_ul(x, np, oc);
    });

    std::optional<ClusterParams> cp = s.cluster;
    if (cp) cp->rho0 = s.rho0_values.front();

    std::vector<ResultRow> rows;
    for (Quantity quantity : s.quantities) {
        for (std::size_t ib = 0; ib < nb; ++ib) {
            for (std::size_t ik = 0; ik < nk; ++ik) {
                const double b = s.b_values[ib];
                const double k = s.k_values[ik];
                if (!is_cluster_quantity(quantity)) {
                    const std::vector<TrafficMix> one{TrafficMix{}};
                    const auto& mixes = is_mix_dependent(quantity) ? s.mixes : one;
                    for (const TrafficMix& mix : mixes) {
                        for (std::size_t ix = 0; ix < nx; ++ix) {
                            const MacroPoint& p = macro_at(ib, ik, ix);
                            ResultRow row = base_row(s, quantity, s.x_grid[ix], b, k);
                            OracleResult o;
                            switch (quantity) {
                                case Quantity::DlDl: row.value_linear = p.dl_dl; o = p.o_dl_dl; break;
                                case Quantity::UlDl: row.value_linear = p.ul_dl; o = p.o_ul_dl; break;
                                case Quantity::UlUl: row.value_linear = p.ul_ul; o = p.o_ul_ul; break;
                                case Quantity::DlUl: row.value_linear = p.dl_ul; o = p.o_dl_ul; break;
                                case Quantity::DlTotal:
                                    row.value_linear = mix.alpha_d * p.dl_dl + mix.alpha_u * p.ul_dl;
                                    o.value = mix.alpha_d * p.o_dl_dl.value + mix.alpha_u * p.o_ul_dl.value;
                                    o.tail_bound =
                                        mix.alpha_d * p.o_dl_dl.tail_bound + mix.alpha_u * p.o_ul_dl.tail_bound;
                                    break;
                                case Quantity::UlTotal:
                                    row.value_linear = mix.alpha_u * p.ul_ul + mix.alpha_d * p.dl_ul;
                                    o.value = mix.alpha_u * p.o_ul_ul.value + mix.alpha_d * p.o_dl_ul.value;
                                    o.tail_bound =
                                        mix.alpha_u * p.o_ul_ul.tail_bound + mix.alpha_d * p.o_dl_ul.tail_bound;
                                    break;
                                default: break;
                            }
                            if (is_mix_dependent(quantity)) {
                                row.alpha_d = mix.alpha_d;
                                row.alpha_u = mix.alpha_u;
                            }
                            if (with_oracle) attach_oracle(row, o.value, o.tail_bound);
                            rows.push_back(std::move(row));
                        }
                    }
                    continue;
                }

                const bool is_coverage = quantity == Quantity::Coverage;
                const auto& grid = is_coverage ? s.gamma_grid : s.x_tilde_grid;
                std::vector<ResultRow> block(grid.size());
                parallel_for(grid.size(), workers, [&](std::size_t i) {
                    const double g = grid[i];
                    SmallCellQuery q{is_coverage ? 0.0 : g, b, k};
                    ResultRow row = base_row(s, quantity, q.x_tilde, b, k);
                    switch (quantity) {
                        case Quantity::DlUlClustered:
                            row.value_linear = isr_dl_ul_clustered(q, *cp, s.series);
                            if (with_oracle) {
                                const OracleResult o = cluster_oracle(s, *cp, q);
                                attach_oracle(row, o.value, o.mc_stderr);
                            }
                            break;
                        case Quantity::DlUlClusteredRhoMean:
                            row.value_linear = isr_dl_ul_clustered_rho_mean(q, *cp, s.series);
                            break;
                        case Quantity::SinrUl:
                            row.value_linear = sinr_ul(q, *cp, s.series);
                            break;
                        case Quantity::Coverage:
                            row.gamma = g;
                            row.value_linear = coverage_probability(g, *cp, q, s.series);
                            if (with_oracle) {
                                const OracleResult o = oracle_coverage(g, *cp, q, *s.oracle, s.series);
                                row.oracle_value = o.value;
                                row.oracle_tail_or_stderr = o.mc_stderr;
                                row.rel_err = relative_error(row.value_linear, o.value);
                            }
                            break;
                        default: break;
                    }
                    block[i] = std::move(row);
                });
                for (auto& row : block) rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
    out << "scenario_id,quantity_name,x,b,k,alpha_d,alpha_u,gamma,value_linear,value_db,oracle_value,"
           "oracle_tail_or_stderr,rel_err\n";
    for (const auto& r : rows) {
        std::string db;
        if (r.value_linear > 0.0 && std::isfinite(r.value_linear)) db = format_double(10.0 * std::log10(r.value_linear));
        out << r.scenario_id << ',' << r.quantity_name << ',' << format_double(r.x) << ',' << format_double(r.b)
            << ',' << format_double(r.k) << ',' << cell(r.alpha_d) << ',' << cell(r.alpha_u) << ','
            << cell(r.gamma) << ',' << format_double(r.value_linear) << ',' << db << ','
            << cell(r.oracle_value) << ',' << cell(r.oracle_tail_or_stderr) << ',' << cell(r.rel_err) << '\n';
    }
}

namespace {

std::string_view metric_name(Metric m) {
    switch (m) {
        case Metric::Relative: return "rel";
        case Metric::Absolute: return "abs";
        case Metric::Sigma: return "sigma";
        case Metric::Exact: return "exact";
    }
    return "";
}

void settle(CheckRow& row) {
    row.abs_err = std::abs(row.analytic - row.oracle);
    row.rel_err = relative_error(row.analytic, row.oracle);
    switch (row.metric) {
        case Metric::Relative: row.pass = row.rel_err <= row.tolerance; break;
        case Metric::Absolute:
        case Metric::Sigma: row.pass = row.abs_err <= row.tolerance; break;
        case Metric::Exact: row.pass = row.analytic == row.oracle; break;
    }
}

// Runs `fill`; a thrown error turns the row into a failed check carrying the message.
void guarded(CheckRow& row, const std::function<void(CheckRow&)>& fill) {
    try {
        fill(row);
        settle(row);
    } catch (const std::exception& e) {
        row.pass = false;
        row.note = e.what();
    }
}

class Validator {
public:
    explicit Validator(const Scenario& s) : s_(s), oc_(*s.oracle) {}

    void run(Check c) {
        switch (c) {
            case Check::Omega: omega(); break;
            case Check::DlDl: macro_theta(false); break;
            case Check::UlDl: macro_theta(true); break;
            case Check::UlUl: ul_ul(); break;
            case Check::DlUl: dl_ul(); break;
            case Check::ClusterDlUl: cluster(); break;
            case Check::Coverage: coverage(); break;
            case Check::Truncation: truncation(); break;
            case Check::FlatAtFullCompensation: flat(); break;
        }
    }

    ValidationReport finish() {
        ValidationReport report;
        report.rows = std::move(rows_);
        const CheckRow* worst = nullptr;
        std::size_t failed = 0;
        for (const auto& r : report.rows) {
            if (!r.pass) ++failed;
            if (r.metric == Metric::Relative && r.note.empty() && (!worst || r.rel_err > worst->rel_err)) {
                worst = &r;
            }
        }
        report.all_pass = failed == 0;
        std::ostringstream line;
        line << "checks: " << report.rows.size() << ", passed: " << report.rows.size() - failed
             << ", failed: " << failed;
        report.summary.push_back(line.str());
        if (worst) {
            std::ostringstream w;
            w << "worst relative error: " << format_double(worst->rel_err) << " (" << worst->check << ", "
              << worst->quantity;
            if (worst->b) w << ", b=" << format_double(*worst->b);
            if (worst->k) w << ", k=" << format_double(*worst->k);
            if (worst->x) w << ", x=" << format_double(*worst->x);
            w << ")";
            report.summary.push_back(w.str());
        }
        for (auto& l : notes_) report.summary.push_back(std::move(l));
        return report;
    }

private:
    CheckRow make(std::string_view check, std::string quantity) {
        CheckRow row;
        row.check = std::string(check);
        row.quantity = std::move(quantity);
        return row;
    }

    void omega() {
        std::vector<OracleResult> sums;
        try {
            sums = oracle_epstein(s_.omega_z, s_.omega_radius, oc_.workers);
        } catch (const std::exception& e) {
            CheckRow row = make("omega", "6*omega");
            row.note = e.what();
            rows_.push_back(row);
            return;
        }
        for (std::size_t i = 0; i < s_.omega_z.size(); ++i) {
            CheckRow row = make("omega", "6*omega");
            row.b = s_.omega_z[i];
            row.tolerance = kOmegaTolerance;
            guarded(row, [&](CheckRow& r) {
                r.analytic = 6.0 * dtdd::omega(s_.omega_z[i]);
                r.oracle = sums[i].value;
                r.oracle_bound = sums[i].tail_bound;
            });
            rows_.push_back(row);
        }
    }

    void macro_theta(bool ul) {
        // dl_dl does not depend on k.
        const std::vector<double> k_first{s_.k_values.front()};
        const auto& ks = ul ? s_.k_values : k_first;
        for (double b : s_.b_values) {
            for (double k : ks) {
                const NetworkParams np = network_at(s_, b, k);
                for (const ThetaChoice& theta : s_.thetas) {
                    for (double x : s_.x_grid) {
                        CheckRow row = make(ul ? "ul_dl" : "dl_dl", ul ? "isr_ul_dl" : "isr_dl_dl");
                        row.b = b;
                        if (ul) row.k = k;
                        row.x = x;
                        row.theta = theta;
                        row.tolerance = kComponentTolerance;
                        if (!theta) row.quantity += "@theta_mean";
                        guarded(row, [&](CheckRow& r) {
                            const MobileQuery q{x, theta.value_or(0.0)};
                            r.analytic = ul ? isr_ul_dl(q, np, s_.series) : isr_dl_dl(q, np, s_.series);
                            const OracleResult o = theta_oracle(ul, x, theta, np, oc_);
                            r.oracle = o.value;
                            r.oracle_bound = o.tail_bound;
                        });
                        rows_.push_back(row);
                    }
                }
            }
        }
    }

    void ul_ul() {
        for (double b : s_.b_values) {
            for (double k : s_.k_values) {
                const NetworkParams np = network_at(s_, b, k);
                for (double x : s_.x_grid) {
                    CheckRow row = make("ul_ul", "isr_ul_ul");
                    row.b = b;
                    row.k = k;
                    row.x = x;
                    row.tolerance = kComponentTolerance;
                    guarded(row, [&](CheckRow& r) {
                        r.analytic = isr_ul_ul({x, 0.0}, np, s_.series);
                        const OracleResult o = oracle_ul_ul(x, np, oc_);
                        r.oracle = o.value;
                        r.oracle_bound = o.tail_bound;
                    });
                    rows_.push_back(row);
                }
            }
        }
    }

    void dl_ul() {
        for (double b : s_.b_values) {
            const NetworkParams np0 = network_at(s_, b, 0.0);
            // The lattice sum at x = 1, k = 0 divided by P omega(b) / P*.
            try {
                const double ratio = oracle_dl_ul(1.0, np0, oc_).value / coef_a2(np0, A2Constant::AsPrinted);
                std::ostringstream note;
                note << "A2 constant, b=" << format_double(b) << ": lattice sum / (P omega(b) / P*) = "
                     << format_double(ratio) << "; the oracle supports "
                     << (std::abs(ratio - 6.0) < 1e-6 ? "6 omega(b)" : std::abs(ratio - 1.0) < 1e-6 ? "omega(b)"
                                                                                                   : "neither form")
                     << ", analytic rows use "
                     << (s_.a2_constant == A2Constant::LatticeSum ? "6 omega(b)" : "omega(b)");
                notes_.push_back(note.str());
            } catch (const std::exception& e) {
                notes_.push_back(std::string("A2 constant: adjudication failed: ") + e.what());
            }
            for (double k : s_.k_values) {
                const NetworkParams np = network_at(s_, b, k);
                for (double x : s_.x_grid) {
                    CheckRow row = make("dl_ul", "isr_dl_ul");
                    row.b = b;
                    row.k = k;
                    row.x = x;
                    row.tolerance = kDlUlTolerance;
                    guarded(row, [&](CheckRow& r) {
                        r.analytic = isr_dl_ul({x, 0.0}, np, s_.a2_constant);
                        const OracleResult o = oracle_dl_ul(x, np, oc_);
                        r.oracle = o.value;
                        r.oracle_bound = o.tail_bound;
                    });
                    rows_.push_back(row);
                }
            }
        }
    }

    void cluster() {
        ClusterParams cp = *s_.cluster;
        for (double b : s_.b_values) {
            for (double k : s_.k_values) {
                for (double x : s_.x_tilde_grid) {
                    for (double rho0 : s_.rho0_values) {
                        cp.rho0 = rho0;
                        CheckRow row = make("cluster_dl_ul", s_.rho0_angle_mean ? "isr_dl_ul_clustered@angle_mean"
                                                                                : "isr_dl_ul_clustered");
                        row.b = b;
                        row.k = k;
                        row.x = x;
                        row.rho0 = rho0;
                        row.metric = Metric::Sigma;
                        guarded(row, [&](CheckRow& r) {
                            const SmallCellQuery q{x, b, k};
                            r.analytic = isr_dl_ul_clustered(q, cp, s_.series);
                            const OracleResult o = cluster_oracle(s_, cp, q);
                            r.oracle = o.value;
                            r.oracle_bound = o.mc_stderr;
                            r.tolerance = kSigmas * o.mc_stderr;
                        });
                        rows_.push_back(row);
                    }
                }
            }
        }
    }

    void coverage() {
        ClusterParams cp = *s_.cluster;
        for (double b : s_.b_values) {
            for (double k : s_.k_values) {
                for (double rho0 : s_.rho0_values) {
                    cp.rho0 = rho0;
                    for (double g : s_.gamma_grid) {
                        CheckRow row = make("coverage", "coverage");
                        row.b = b;
                        row.k = k;
                        row.rho0 = rho0;
                        row.gamma = g;
                        row.metric = Metric::Absolute;
                        row.tolerance = kCoverageTolerance;
                        guarded(row, [&](CheckRow& r) {
                            const SmallCellQuery q{0.0, b, k};
                            r.analytic = coverage_probability(g, cp, q, s_.series);
                            const OracleResult o = oracle_coverage(g, cp, q, oc_, s_.series);
                            r.oracle = o.value;
                            r.oracle_bound = o.mc_stderr;
                        });
                        rows_.push_back(row);
                    }
                }
            }
        }
    }

    // Partial sums through h = 20 against h = 40.
    void truncation() {
        SeriesControl short_sc = s_.series;
        short_sc.h_max = 20;
        short_sc.on_cap = CapPolicy::Truncate;
        SeriesControl long_sc = short_sc;
        long_sc.h_max = 40;
        auto add = [&](const std::string& quantity, std::optional<double> b, std::optional<double> k,
                       std::optional<double> x, std::optional<double> rho0,
                       const std::function<double(const SeriesControl&)>& eval) {
            CheckRow row = make("truncation", quantity);
            row.b = b;
            row.k = k;
            row.x = x;
            row.rho0 = rho0;
            row.tolerance = kTruncationTolerance;
            guarded(row, [&](CheckRow& r) {
                r.analytic = eval(short_sc);
                r.oracle = eval(long_sc);
            });
            rows_.push_back(row);
        };
        for (double b : s_.b_values) {
            const NetworkParams np_b = network_at(s_, b, s_.k_values.front());
            for (double x : s_.x_grid) {
                add("isr_dl_dl", b, std::nullopt, x, std::nullopt,
                    [&](const SeriesControl& sc) { return isr_dl_dl_series({x, 0.0}, np_b, sc).value; });
            }
            for (double k : s_.k_values) {
                const NetworkParams np = network_at(s_, b, k);
                for (double x : s_.x_grid) {
                    add("isr_ul_dl", b, k, x, std::nullopt,
                        [&](const SeriesControl& sc) { return isr_ul_dl_series({x, 0.0}, np, sc).value; });
                }
                add("coef_a1", b, k, std::nullopt, std::nullopt,
                    [&](const SeriesControl& sc) { return coef_a1_series(np, sc).value; });
                if (s_.cluster) {
                    ClusterParams cp = *s_.cluster;
                    for (double rho0 : s_.rho0_values) {
                        cp.rho0 = rho0;
                        add("coef_a2_tilde", b, k, std::nullopt, rho0, [&](const SeriesControl& sc) {
                            return coef_a2_tilde_series(cp, SmallCellQuery{0.0, b, k}, sc).value;
                        });
                    }
                }
            }
        }
    }

    // At k = 1 the x-dependence drops out exactly.
    void flat() {
        for (double b : s_.b_values) {
            const NetworkParams np = network_at(s_, b, 1.0);
            auto compare = [&](const std::string& quantity, const std::vector<double>& grid,
                               const std::function<double(double)>& eval) {
                for (double x : grid) {
                    CheckRow row = make("k1_flat", quantity);
                    row.b = b;
                    row.k = 1.0;
                    row.x = x;
                    row.metric = Metric::Exact;
                    guarded(row, [&](CheckRow& r) {
                        r.analytic = eval(x);
                        r.oracle = eval(grid.front());
                    });
                    rows_.push_back(row);
                }
            };
            compare("isr_ul_ul", s_.x_grid, [&](double x) { return isr_ul_ul({x, 0.0}, np, s_.series); });
            compare("isr_dl_ul", s_.x_grid, [&](double x) { return isr_dl_ul({x, 0.0}, np, s_.a2_constant); });
            if (s_.cluster && !s_.x_tilde_grid.empty()) {
                const ClusterParams cp = *s_.cluster;
                compare("isr_dl_ul_clustered", s_.x_tilde_grid,
                        [&](double x) { return isr_dl_ul_clustered({x, b, 1.0}, cp, s_.series); });
            }
        }
    }

    const Scenario& s_;
    const OracleConfig& oc_;
    std::vector<CheckRow> rows_;
    std::vector<std::string> notes_;
};

}  // namespace

ValidationReport run_validate(const Scenario& s) {
    validate_for_checks(s);
    Validator v(s);
    for (Check c : s.checks.empty() ? default_checks(s) : s.checks) v.run(c);
    return v.finish();
}

void write_validate_csv(std::ostream& out, const ValidationReport& report) {
    out << "check,quantity,b,k,x,theta,rho0,gamma,analytic,oracle,oracle_bound,abs_err,rel_err,tolerance,metric,"
           "status,note\n";
    for (const auto& r : report.rows) {
        std::string note = r.note;
        std::replace(note.begin(), note.end(), ',', ';');
        std::replace(note.begin(), note.end(), '\n', ' ');
        out << r.check << ',' << r.quantity << ',' << cell(r.b) << ',' << cell(r.k) << ',' << cell(r.x) << ','
            << cell(r.theta) << ',' << cell(r.rho0) << ',' << cell(r.gamma) << ',' << format_double(r.analytic)
            << ',' << format_double(r.oracle) << ',' << format_double(r.oracle_bound) << ','
            << format_double(r.abs_err) << ',' << format_double(r.rel_err) << ',' << format_double(r.tolerance)
            << ',' << metric_name(r.metric) << ',' << (r.pass ? "pass" : "fail") << ',' << note << '\n';
    }
}

}  // namespace dtdd::app
