#include "lattice_sum.hpp"

#include <cmath>
#include <numbers>

#include "dtdd/quadrature.hpp"

namespace dtdd::detail {
namespace {

constexpr int kPanels = 64;
constexpr int kPanelOrder = 16;

const QuadratureRule& panel_rule() {
    static const QuadratureRule rule = gauss_legendre(kPanelOrder);
    return rule;
}

double density(const LatticeSpec& spec) {
    return 2.0 / (std::numbers::sqrt3 * spec.spacing * spec.spacing);
}

}  // namespace

double RadialProfile::operator()(double r) const {
    double out = 0.0;
    const double inv_r2 = 1.0 / (r * r);
    double power = std::pow(r, -2.0 * b);
    for (double c : coeffs) {
        out += c * power;
        power *= inv_r2;
    }
    return out;
}

double window_weight(double r, double r_in, double r_out) {
    const double t = (r - r_in) / (r_out - r_in);
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double c = std::exp(-1.0 / (1.0 - t));
    return a / (a + c);
}

double continuum_part(const LatticeSpec& spec, double r_out, const RadialProfile& profile) {
    const double r_in = 0.5 * r_out;
    const QuadratureRule& rule = panel_rule();
    const double width = (r_out - r_in) / kPanels;
    double ramp = 0.0;
    for (int p = 0; p < kPanels; ++p) {
        const double mid = r_in + (p + 0.5) * width;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double r = mid + 0.5 * width * rule.nodes[j];
            ramp += 0.5 * width * rule.weights[j] * profile(r) * window_weight(r, r_in, r_out) * 2.0 *
                    std::numbers::pi * r;
        }
    }
    double tail = 0.0;
    for (std::size_t j = 0; j < profile.coeffs.size(); ++j) {
        const double e = 2.0 * profile.b + 2.0 * static_cast<double>(j) - 2.0;
        tail += profile.coeffs[j] * 2.0 * std::numbers::pi * std::pow(r_out, -e) / e;
    }
    return density(spec) * (ramp + tail);
}

double outer_bound(const LatticeSpec& spec, double r_out, double b, double scale, double shift) {
    const double r_in = 0.5 * r_out;
    const double stretch = std::pow(r_in / (r_in - shift), 2.0 * b);
    return scale * stretch * epstein_tail_bound(b, spec, r_in);
}

std::vector<double> epstein_windowed(double r_out, std::span<const double> z, unsigned workers) {
    const double r_in = 0.5 * r_out;
    const auto limit = static_cast<std::int64_t>(std::floor(r_out * r_out));
    const double inner_limit = r_in * r_in;
    const std::int64_t umax = static_cast<std::int64_t>(std::floor(r_out));
    const std::size_t nz = z.size();

    // Sector u >= 1, v >= 0 holds one of six rotated copies of the punctured lattice.
    std::vector<double> row_sums(static_cast<std::size_t>(umax) * nz, 0.0);
    parallel_for(static_cast<std::size_t>(umax), workers, [&](std::size_t idx) {
        const std::int64_t u = static_cast<std::int64_t>(idx) + 1;
        const VRange range = lattice_row(u, limit);
        std::vector<CompensatedSum> acc(nz);
        for (std::int64_t v = 0; v <= range.hi; ++v) {
            const auto n = static_cast<double>(quadratic_form(u, v));
            const double keep = n <= inner_limit ? 1.0 : 1.0 - window_weight(std::sqrt(n), r_in, r_out);
            if (keep == 0.0) continue;
            const double log_n = std::log(n);
            for (std::size_t j = 0; j < nz; ++j) acc[j].add(keep * std::exp(-z[j] * log_n));
        }
        for (std::size_t j = 0; j < nz; ++j) row_sums[idx * nz + j] = acc[j].value();
    });

    std::vector<double> out(nz);
    const LatticeSpec unit{1.0};
    for (std::size_t j = 0; j < nz; ++j) {
        CompensatedSum total;
        for (std::int64_t u = 0; u < umax; ++u) total.add(6.0 * row_sums[static_cast<std::size_t>(u) * nz + j]);
        total.add(continuum_part(unit, r_out, RadialProfile{z[j], {1.0}}));
        out[j] = total.value();
    }
    return out;
}

}  // namespace dtdd::detail
