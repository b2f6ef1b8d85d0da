#pragma once

// Lattice sums with a smooth radial cutoff.
//
// Sites with |s| <= r_in = r_out / 2 are summed directly; on (r_in, r_out)
// each term is scaled by 1 - w(|s|) and the missing part, including
// everything beyond r_out, is supplied by the continuum integral of the
// ring-averaged summand. w is C-infinity, so the lattice-vs-continuum
// error of the windowed part decays faster than any power of r_out.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "dtdd/hexlattice.hpp"
#include "montecarlo.hpp"

namespace dtdd::detail {

/// Ring-averaged summand sum_j coeffs[j] r^{-2b-2j}.
struct RadialProfile {
    double b = 0.0;
    std::vector<double> coeffs;

    double operator()(double r) const;
};

/// Cutoff weight: 0 for r <= r_in, 1 for r >= r_out, smooth in between.
double window_weight(double r, double r_in, double r_out);

/// density * int_{r_in}^inf profile(r) w(r) 2 pi r dr.
double continuum_part(const LatticeSpec& spec, double r_out, const RadialProfile& profile);

/// Conservative bound on the sites beyond r_in for a summand bounded by
/// `scale` |s - p|^{-2b} with |p| = shift < r_in.
double outer_bound(const LatticeSpec& spec, double r_out, double b, double scale, double shift);

/// sum_{s != 0} f(position, norm) with the cutoff above. Rows of the lattice
/// are distributed over `workers` threads and reduced in row order.
template <class F>
double windowed_lattice_sum(const LatticeSpec& spec, double r_out, const RadialProfile& profile, unsigned workers,
                            F&& f) {
    const double r_in = 0.5 * r_out;
    const double ratio = r_out / spec.spacing;
    const auto limit = static_cast<std::int64_t>(std::floor(ratio * ratio));
    const std::int64_t umax = lattice_u_extent(limit);
    const auto rows = static_cast<std::size_t>(2 * umax + 1);
    std::vector<double> row_sums(rows, 0.0);
    parallel_for(rows, workers, [&](std::size_t idx) {
        const std::int64_t u = static_cast<std::int64_t>(idx) - umax;
        const VRange range = lattice_row(u, limit);
        CompensatedSum acc;
        for (std::int64_t v = range.lo; v <= range.hi; ++v) {
            if (u == 0 && v == 0) continue;
            const LatticePoint p = make_point(spec, u, v);
            const double keep = 1.0 - window_weight(p.norm, r_in, r_out);
            if (keep == 0.0) continue;
            acc.add(keep * f(p.position, p.norm));
        }
        row_sums[idx] = acc.value();
    });
    CompensatedSum total;
    for (double s : row_sums) total.add(s);
    total.add(continuum_part(spec, r_out, profile));
    return total.value();
}

/// Windowed sum of (u^2 + uv + v^2)^{-z} over the unit lattice for several z
/// at once, r_out in spacings. Uses the sixfold rotation symmetry.
std::vector<double> epstein_windowed(double r_out, std::span<const double> z, unsigned workers);

}  // namespace dtdd::detail
