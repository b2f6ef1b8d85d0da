#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace dtdd {

/// Hexagonal lattice {spacing * (u + v e^{i pi/3}) : (u, v) in Z^2}.
struct LatticeSpec {
    double spacing = 1.0;

    void validate() const;
};

/// Macro lattice with inter-site distance delta.
inline LatticeSpec macro_lattice(double delta) { return LatticeSpec{delta}; }
/// Cluster lattice derived from a macro layer: inter-cluster distance delta / sqrt(3).
LatticeSpec cluster_lattice(double delta);

/// u^2 + uv + v^2, the squared norm in units of spacing^2.
constexpr std::int64_t quadratic_form(std::int64_t u, std::int64_t v) noexcept {
    return u * u + u * v + v * v;
}

struct LatticePoint {
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::complex<double> position;
    double norm = 0.0;
};

LatticePoint make_point(const LatticeSpec& spec, std::int64_t u, std::int64_t v);

/// Every non-origin lattice point with norm <= max_norm, ordered by norm and
/// then by angle in [0, 2 pi). Inclusion is decided on the integer form
/// u^2 + uv + v^2 against (max_norm / spacing)^2.
std::vector<LatticePoint> enumerate_lattice(const LatticeSpec& spec, double max_norm);

/// Upper bound on sum_{s in lattice, |s| > max_norm} |s|^{-2b}: twice the
/// continuum estimate (2 / (sqrt(3) spacing^2)) * int_{max_norm}^inf r^{-2b} 2 pi r dr.
/// Requires b > 1 and max_norm >= 2 * spacing.
double epstein_tail_bound(double b, const LatticeSpec& spec, double max_norm);

/// Inclusive range of v with u^2 + uv + v^2 <= limit for a fixed u; empty when lo > hi.
struct VRange {
    std::int64_t lo;
    std::int64_t hi;
};
VRange lattice_row(std::int64_t u, std::int64_t limit) noexcept;

/// Largest |u| that can satisfy u^2 + uv + v^2 <= limit.
std::int64_t lattice_u_extent(std::int64_t limit) noexcept;

}  // namespace dtdd
