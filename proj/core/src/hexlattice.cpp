#include "dtdd/hexlattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dtdd/errors.hpp"

namespace dtdd {

void LatticeSpec::validate() const {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw DomainError("LatticeSpec: spacing must be positive");
    }
}

LatticeSpec cluster_lattice(double delta) {
    return LatticeSpec{delta / std::numbers::sqrt3};
}

LatticePoint make_point(const LatticeSpec& spec, std::int64_t u, std::int64_t v) {
    const double du = static_cast<double>(u);
    const double dv = static_cast<double>(v);
    LatticePoint p;
    p.u = u;
    p.v = v;
    p.position = spec.spacing * std::complex<double>(du + 0.5 * dv, 0.5 * std::numbers::sqrt3 * dv);
    p.norm = spec.spacing * std::sqrt(static_cast<double>(quadratic_form(u, v)));
    return p;
}

VRange lattice_row(std::int64_t u, std::int64_t limit) noexcept {
    const std::int64_t disc = 4 * limit - 3 * u * u;
    if (disc < 0) {
        return {1, 0};
    }
    const double root = std::sqrt(static_cast<double>(disc));
    auto lo = static_cast<std::int64_t>(std::ceil((-static_cast<double>(u) - root) / 2.0));
    auto hi = static_cast<std::int64_t>(std::floor((-static_cast<double>(u) + root) / 2.0));
    // Settle rounding on the exact integer form.
    while (quadratic_form(u, lo - 1) <= limit) --lo;
    while (lo <= hi && quadratic_form(u, lo) > limit) ++lo;
    while (quadratic_form(u, hi + 1) <= limit) ++hi;
    while (hi >= lo && quadratic_form(u, hi) > limit) --hi;
    return {lo, hi};
}

std::int64_t lattice_u_extent(std::int64_t limit) noexcept {
    auto u = static_cast<std::int64_t>(std::floor(std::sqrt(4.0 * static_cast<double>(limit) / 3.0)));
    while (3 * (u + 1) * (u + 1) <= 4 * limit) ++u;
    while (u > 0 && 3 * u * u > 4 * limit) --u;
    return u;
}

std::vector<LatticePoint> enumerate_lattice(const LatticeSpec& spec, double max_norm) {
    spec.validate();
    if (!(max_norm > 0.0)) {
        throw DomainError("enumerate_lattice: max_norm must be positive");
    }
    const double ratio = max_norm / spec.spacing;
    const auto limit = static_cast<std::int64_t>(std::floor(ratio * ratio));

    struct Keyed {
        std::int64_t n;
        double angle;
        LatticePoint point;
    };
    std::vector<Keyed> keyed;
    const std::int64_t umax = lattice_u_extent(limit);
    for (std::int64_t u = -umax; u <= umax; ++u) {
        const VRange row = lattice_row(u, limit);
        for (std::int64_t v = row.lo; v <= row.hi; ++v) {
            if (u == 0 && v == 0) continue;
            LatticePoint p = make_point(spec, u, v);
            double angle = std::arg(p.position);
            if (angle < 0.0) angle += 2.0 * std::numbers::pi;
            keyed.push_back({quadratic_form(u, v), angle, p});
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.angle < b.angle;
    });

    std::vector<LatticePoint> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(k.point);
    return out;
}

double epstein_tail_bound(double b, const LatticeSpec& spec, double max_norm) {
    spec.validate();
    if (!(b > 1.0)) {
        throw DomainError("epstein_tail_bound: lattice sum diverges for b <= 1 (b = " + std::to_string(b) + ")");
    }
    if (!(max_norm >= 2.0 * spec.spacing)) {
        throw DomainError("epstein_tail_bound: max_norm must be at least two lattice spacings");
    }
    const double density = 2.0 / (std::numbers::sqrt3 * spec.spacing * spec.spacing);
    const double integral = 2.0 * std::numbers::pi * std::pow(max_norm, 2.0 - 2.0 * b) / (2.0 * b - 2.0);
    constexpr double kSafety = 2.0;
    return kSafety * density * integral;
}

}  // namespace dtdd
