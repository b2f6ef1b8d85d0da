#include "dtdd/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "dtdd/errors.hpp"
#include "dtdd/quadrature.hpp"
#include "dtdd/specfun.hpp"
#include "log_factorial.hpp"

namespace dtdd {

void ClusterParams::validate() const {
    if (!(delta_tilde > 0.0) || !std::isfinite(delta_tilde)) throw DomainError("ClusterParams: delta_tilde must be positive");
    if (!(cluster_radius > 0.0)) throw DomainError("ClusterParams: cluster_radius must be positive");
    if (!(smallcell_radius > 0.0 && smallcell_radius < delta_tilde)) {
        throw DomainError("ClusterParams: smallcell_radius must lie in (0, delta_tilde)");
    }
    if (!(intensity >= 0.0) || !std::isfinite(intensity)) throw DomainError("ClusterParams: intensity must be nonnegative");
    if (n_cells < 0) throw DomainError("ClusterParams: n_cells must be nonnegative");
    if (!(p_small_dl > 0.0)) throw DomainError("ClusterParams: p_small_dl must be positive");
    if (!(p_small_target > 0.0)) throw DomainError("ClusterParams: p_small_target must be positive");
    if (!(rho0 >= 0.0 && rho0 <= cluster_radius)) throw DomainError("ClusterParams: rho0 must lie in [0, cluster_radius]");
    if (!std::isfinite(rho0_angle)) throw DomainError("ClusterParams: rho0_angle must be finite");
    if (!(p_noise >= 0.0)) throw DomainError("ClusterParams: p_noise must be nonnegative");
    if (n_cells > 0) {
        const double implied = intensity * std::numbers::pi * cluster_radius * cluster_radius;
        if (std::abs(implied - n_cells) > 1e-9 * n_cells) {
            throw DomainError("ClusterParams: intensity * pi * cluster_radius^2 = " + std::to_string(implied) +
                              " does not match n_cells = " + std::to_string(n_cells));
        }
    }
}

int ClusterParams::derived_cell_count() const {
    return static_cast<int>(std::lround(intensity * std::numbers::pi * cluster_radius * cluster_radius));
}

ClusterParams ClusterParams::from_macro(double delta, double radius_ratio, int cells) {
    ClusterParams cp;
    cp.delta_tilde = delta / std::numbers::sqrt3;
    cp.cluster_radius = radius_ratio * cp.delta_tilde;
    cp.smallcell_radius = cp.delta_tilde / 5.0;
    cp.n_cells = cells;
    cp.intensity = cells / (std::numbers::pi * cp.cluster_radius * cp.cluster_radius);
    return cp;
}

void SmallCellQuery::validate() const {
    if (!(x_tilde >= 0.0 && x_tilde < 1.0)) {
        throw DomainError("SmallCellQuery: x_tilde = " + std::to_string(x_tilde) + " outside [0, 1)");
    }
    if (!(b > 1.0) || !std::isfinite(b)) throw DomainError("SmallCellQuery: b must exceed 1");
    if (!(k >= 0.0 && k <= 1.0)) throw DomainError("SmallCellQuery: k must lie in [0, 1]");
}

NoiseTerm noise_term(const ClusterParams& cp, const SmallCellQuery& q) {
    cp.validate();
    q.validate();
    return {cp.p_noise * std::pow(cp.delta_tilde, 2.0 * q.b * (1.0 - q.k)) / cp.p_small_target};
}

SeriesSum coef_a2_tilde_series(const ClusterParams& cp, const SmallCellQuery& q, const SeriesControl& sc) {
    cp.validate();
    q.validate();
    sc.validate();
    if (!(cp.rho0 + cp.cluster_radius < cp.delta_tilde)) {
        throw DomainError("coef_a2_tilde: rho0 + cluster_radius must be below delta_tilde");
    }
    if (cp.intensity == 0.0) {
        return {0.0, 0, true};
    }

    const double b = q.b;
    const double log_prefactor = std::log(6.0 * std::numbers::pi) + 2.0 * std::log(cp.cluster_radius) +
                                 std::log(cp.p_small_dl) + std::log(cp.intensity) - std::log(cp.p_small_target) -
                                 2.0 * gamma_ln(b) - 2.0 * b * q.k * std::log(cp.delta_tilde);
    const double log_radius = std::log(cp.cluster_radius / cp.delta_tilde);
    const bool centered = cp.rho0 == 0.0;
    const double log_offset = centered ? 0.0 : std::log(cp.rho0 / cp.delta_tilde);

    std::vector<double> inner_logs;
    return sum_nonnegative_series(sc, "coef_a2_tilde", [&](int h) {
        inner_logs.clear();
        double peak = -std::numeric_limits<double>::infinity();
        for (int n = 0; n <= h / 2; ++n) {
            for (int i = 0; i <= h - 2 * n; ++i) {
                const int j = n + i;
                const int offset_power = h - j;  // >= 0 on this range
                if (centered && offset_power > 0) continue;
                const double l = -2.0 * log_factorial(n) - log_factorial(i) - log_factorial(h - 2 * n - i) -
                                 std::log(j + 1.0) + 2.0 * j * log_radius +
                                 (offset_power > 0 ? 2.0 * offset_power * log_offset : 0.0);
                inner_logs.push_back(l);
                peak = std::max(peak, l);
            }
        }
        double inner = 0.0;
        for (double l : inner_logs) inner += std::exp(l - peak);
        const double log_outer = 2.0 * gamma_ln(b + h) + std::log(omega(b + h)) - log_factorial(h);
        return std::exp(log_prefactor + log_outer + peak + std::log(inner));
    });
}

double coef_a2_tilde(const ClusterParams& cp, const SmallCellQuery& q, const SeriesControl& sc) {
    return coef_a2_tilde_series(cp, q, sc).value;
}

double isr_dl_ul_clustered(const SmallCellQuery& q, const ClusterParams& cp, const SeriesControl& sc) {
    return coef_a2_tilde(cp, q, sc) * std::pow(q.x_tilde, 2.0 * q.b * (1.0 - q.k));
}

double isr_dl_ul_clustered_rho_mean(const SmallCellQuery& q, const ClusterParams& cp, const SeriesControl& sc,
                                    int order) {
    cp.validate();
    if (!(2.0 * cp.cluster_radius < cp.delta_tilde)) {
        throw DomainError("isr_dl_ul_clustered_rho_mean: needs 2 * cluster_radius < delta_tilde");
    }
    const QuadratureRule rule = gauss_legendre(order, 0.0, cp.cluster_radius);
    double acc = 0.0;
    ClusterParams at = cp;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        at.rho0 = rule.nodes[j];
        const double density = 2.0 * rule.nodes[j] / (cp.cluster_radius * cp.cluster_radius);
        acc += rule.weights[j] * density * isr_dl_ul_clustered(q, at, sc);
    }
    return acc;
}

double sinr_ul(const SmallCellQuery& q, const ClusterParams& cp, const SeriesControl& sc) {
    const double coefficient = coef_a2_tilde(cp, q, sc) + noise_term(cp, q).y0;
    const double denominator = coefficient * std::pow(q.x_tilde, 2.0 * q.b * (1.0 - q.k));
    if (denominator == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / denominator;
}

double g_inverse(double y, const ClusterParams& cp, const SmallCellQuery& q, const SeriesControl& sc) {
    q.validate();
    if (q.k == 1.0) {
        throw NonInvertibleError("g_inverse: with k = 1 the SINR does not depend on x_tilde");
    }
    if (!(y > 0.0)) {
        throw DomainError("g_inverse: y must be positive");
    }
    const double coefficient = coef_a2_tilde(cp, q, sc) + noise_term(cp, q).y0;
    return std::pow(y / coefficient, 1.0 / (2.0 * q.b * (1.0 - q.k)));
}

double coverage_probability(double gamma, const ClusterParams& cp, const SmallCellQuery& q, const SeriesControl& sc) {
    if (!(gamma > 0.0)) {
        throw DomainError("coverage_probability: gamma must be positive");
    }
    q.validate();
    if (q.k == 1.0) {
        const double coefficient = coef_a2_tilde(cp, q, sc) + noise_term(cp, q).y0;
        return gamma * coefficient < 1.0 ? 1.0 : 0.0;
    }
    const double reach = cp.delta_tilde / cp.smallcell_radius * g_inverse(1.0 / gamma, cp, q, sc);
    return std::min(reach * reach, 1.0);
}

}  // namespace dtdd
