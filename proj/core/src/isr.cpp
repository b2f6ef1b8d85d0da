#include "dtdd/isr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dtdd/errors.hpp"
#include "log_factorial.hpp"

namespace dtdd {
namespace {

const double kLog6 = std::log(6.0);

// x^{2b(1-k)}; k == 1 gives exactly 1 for every x, including x == 0.
double power_control_factor(double x, double b, double k) {
    return std::pow(x, 2.0 * b * (1.0 - k));
}

}  // namespace

void SeriesControl::validate() const {
    if (h_max < 5) {
        throw DomainError("SeriesControl: h_max must be >= 5");
    }
    if (!(rel_stop > 0.0 && rel_stop < 1.0)) {
        throw DomainError("SeriesControl: rel_stop must lie in (0, 1)");
    }
}

void NetworkParams::validate() const {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("NetworkParams: delta must be positive");
    if (!(b > 1.0) || !std::isfinite(b)) throw DomainError("NetworkParams: b must exceed 1");
    if (!(k >= 0.0 && k <= 1.0)) throw DomainError("NetworkParams: k must lie in [0, 1]");
    if (!(p_dl > 0.0)) throw DomainError("NetworkParams: p_dl must be positive");
    if (!(p_target > 0.0)) throw DomainError("NetworkParams: p_target must be positive");
    if (!(cell_radius > 0.0 && cell_radius < delta)) {
        throw DomainError("NetworkParams: cell_radius must lie in (0, delta)");
    }
    if (!(p_noise >= 0.0)) throw DomainError("NetworkParams: p_noise must be nonnegative");
}

void TrafficMix::validate() const {
    if (!(alpha_d >= 0.0 && alpha_d <= 1.0) || !(alpha_u >= 0.0 && alpha_u <= 1.0)) {
        throw DomainError("TrafficMix: alpha_d and alpha_u must lie in [0, 1]");
    }
    if (alpha_d + alpha_u > 1.0 + 1e-12) {
        throw DomainError("TrafficMix: alpha_d + alpha_u must not exceed 1");
    }
}

void MobileQuery::validate() const {
    if (!(x >= 0.0 && x < kMaxMobileX)) {
        throw DomainError("MobileQuery: x = " + std::to_string(x) + " outside [0, 1/sqrt(3))");
    }
    if (!std::isfinite(theta)) throw DomainError("MobileQuery: theta must be finite");
}

SeriesSum isr_dl_dl_series(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc) {
    np.validate();
    sc.validate();
    q.validate();
    if (q.x == 0.0) {
        return {0.0, 0, true};
    }
    const double b = np.b;
    const double log_x = std::log(q.x);
    const double log_prefactor = kLog6 + 2.0 * b * log_x - 2.0 * gamma_ln(b);
    return sum_nonnegative_series(sc, "isr_dl_dl", [&](int h) {
        const double log_term = log_prefactor + 2.0 * gamma_ln(b + h) - 2.0 * log_factorial(h) +
                                std::log(omega(b + h)) + 2.0 * h * log_x;
        return std::exp(log_term);
    });
}

double isr_dl_dl(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc) {
    return isr_dl_dl_series(q, np, sc).value;
}

SeriesSum isr_ul_dl_series(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc) {
    np.validate();
    sc.validate();
    q.validate();
    if (!(q.x + np.cell_radius / np.delta < 1.0)) {
        throw DomainError("isr_ul_dl: x + R/delta must be below 1 (x = " + std::to_string(q.x) + ")");
    }
    if (q.x == 0.0) {
        return {0.0, 0, true};
    }
    const double b = np.b;
    const double bk = np.b * np.k;
    const double log_x = std::log(q.x);
    const double log_ratio = std::log(np.cell_radius / np.delta);
    const double log_prefactor = kLog6 + std::log(np.p_target / np.p_dl) + 2.0 * b * log_x +
                                 2.0 * bk * std::log(np.cell_radius) - 2.0 * gamma_ln(b);

    std::vector<double> inner_logs;
    return sum_nonnegative_series(sc, "isr_ul_dl", [&](int h) {
        // Inner (n, i) block in log domain; it underflows in linear scale near h ~ 170.
        inner_logs.clear();
        double peak = -INFINITY;
        for (int n = 0; n <= h / 2; ++n) {
            for (int i = 0; i <= h - 2 * n; ++i) {
                const int j = n + i;
                const double l = -2.0 * log_factorial(n) - log_factorial(i) - log_factorial(h - 2 * n - i) -
                                 std::log(j + bk + 1.0) + 2.0 * j * log_ratio + 2.0 * (h - j) * log_x;
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

double isr_ul_dl(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc) {
    return isr_ul_dl_series(q, np, sc).value;
}

SeriesSum coef_a1_series(const NetworkParams& np, const SeriesControl& sc) {
    np.validate();
    sc.validate();
    const double b = np.b;
    const double bk = np.b * np.k;
    const double log_ratio = std::log(np.cell_radius / np.delta);
    const double log_prefactor = kLog6 + 2.0 * bk * log_ratio - 2.0 * gamma_ln(b);
    return sum_nonnegative_series(sc, "coef_a1", [&](int h) {
        const double log_term = log_prefactor + 2.0 * gamma_ln(b + h) + std::log(omega(b + h)) +
                                2.0 * h * log_ratio - 2.0 * log_factorial(h) - std::log(bk + h + 1.0);
        return std::exp(log_term);
    });
}

double coef_a1(const NetworkParams& np, const SeriesControl& sc) {
    return coef_a1_series(np, sc).value;
}

double isr_ul_ul(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc) {
    q.validate();
    return coef_a1(np, sc) * power_control_factor(q.x, np.b, np.k);
}

double coef_a2(const NetworkParams& np, A2Constant constant) {
    np.validate();
    const double multiplicity = constant == A2Constant::LatticeSum ? 6.0 : 1.0;
    return multiplicity * np.p_dl * omega(np.b) / (np.p_target * std::pow(np.delta, 2.0 * np.b * np.k));
}

double isr_dl_ul(const MobileQuery& q, const NetworkParams& np, A2Constant constant) {
    q.validate();
    return coef_a2(np, constant) * power_control_factor(q.x, np.b, np.k);
}

double isr_dl_total(const MobileQuery& q, const NetworkParams& np, const TrafficMix& mix,
                    const SeriesControl& sc) {
    mix.validate();
    return mix.alpha_d * isr_dl_dl(q, np, sc) + mix.alpha_u * isr_ul_dl(q, np, sc);
}

double isr_ul_total(const MobileQuery& q, const NetworkParams& np, const TrafficMix& mix,
                    const SeriesControl& sc) {
    mix.validate();
    return mix.alpha_u * isr_ul_ul(q, np, sc) + mix.alpha_d * isr_dl_ul(q, np);
}

IsrBreakdown isr_breakdown(const MobileQuery& q, const NetworkParams& np, const TrafficMix& mix,
                           const SeriesControl& sc) {
    mix.validate();
    IsrBreakdown out;
    out.dl_to_dl = isr_dl_dl(q, np, sc);
    out.ul_to_dl = isr_ul_dl(q, np, sc);
    out.ul_to_ul = isr_ul_ul(q, np, sc);
    out.dl_to_ul = isr_dl_ul(q, np);
    out.total_dl = mix.alpha_d * out.dl_to_dl + mix.alpha_u * out.ul_to_dl;
    out.total_ul = mix.alpha_u * out.ul_to_ul + mix.alpha_d * out.dl_to_ul;
    return out;
}

}  // namespace dtdd
