#pragma once

// Brute-force references for the closed forms: lattice sums, tensor-product
// quadrature over the interferer disc, and seeded Monte-Carlo.
//
// Lattice sums use a smooth radial cutoff between lattice_radius / 2 and
// lattice_radius (in lattice spacings) with the continuum integral of the
// ring-averaged summand beyond it. Sites within near_field_radius of the
// origin are integrated over the disc by quadrature; the rest use the exact
// disc-average expansion sum_j ((b)_j / j!)^2 E|y|^{2j} |p|^{-2b-2j}.

#include <cstdint>
#include <span>
#include <vector>

#include "dtdd/cluster.hpp"
#include "dtdd/isr.hpp"

namespace dtdd {

struct OracleConfig {
    double lattice_radius = 300.0;      ///< cutoff radius in lattice spacings
    int quad_radial_order = 64;         ///< Gauss-Legendre nodes in rho
    int quad_angular_order = 128;       ///< uniform nodes in phi
    std::uint64_t mc_draws = 1000000;   ///< Monte-Carlo placements
    std::uint64_t seed = 0x5eed;
    double near_field_radius = 4.0;     ///< sites within this many spacings get full quadrature
    double mc_near_radius = 2.0;        ///< clusters within this many spacings are sampled
    unsigned workers = 0;               ///< 0: hardware concurrency

    /// lattice_radius >= 10; quadrature orders >= 1; mc_draws >= 2;
    /// 1 <= near_field_radius, mc_near_radius <= lattice_radius / 4.
    void validate() const;
};

struct OracleResult {
    double value = 0.0;
    double tail_bound = 0.0;  ///< bound on the part beyond lattice_radius / 2; 0 for Monte-Carlo
    double mc_stderr = 0.0;   ///< 0 for deterministic paths
};

/// sum over the unit hexagonal lattice of (u^2 + uv + v^2)^{-z}, cut off at
/// `radius` spacings. One pass serves every z.
std::vector<OracleResult> oracle_epstein(std::span<const double> z, double radius, unsigned workers = 0);
OracleResult oracle_epstein(double z, const OracleConfig& oc);

/// r^{2b} sum_s |s - r e^{i theta}|^{-2b}.
OracleResult oracle_dl_dl(double x, double theta, const NetworkParams& np, const OracleConfig& oc);
/// oracle_dl_dl averaged over theta. The sum is even in theta with period
/// pi/3; a 12-node midpoint rule over one period (6 distinct evaluations)
/// removes the harmonics cos(6 l theta) for l < 12.
OracleResult oracle_dl_dl_theta_mean(double x, const NetworkParams& np, const OracleConfig& oc);

/// (P*/P) r^{2b} sum_s (1 / pi R^2) int_disc rho^{2bk} |s + y - m|^{-2b} dy.
OracleResult oracle_ul_dl(double x, double theta, const NetworkParams& np, const OracleConfig& oc);
OracleResult oracle_ul_dl_theta_mean(double x, const NetworkParams& np, const OracleConfig& oc);

/// r^{2b(1-k)} sum_s (1 / pi R^2) int_disc rho^{2bk} |s + y|^{-2b} dy.
OracleResult oracle_ul_ul(double x, const NetworkParams& np, const OracleConfig& oc);

/// (P/P*) r^{2b(1-k)} sum_s |s|^{-2b}. Zero when p_dl = 0.
OracleResult oracle_dl_ul(double x, const NetworkParams& np, const OracleConfig& oc);

/// (P~/P~*) r~^{2b(1-k)} lambda sum_{c != 0} int_{disc c} |y - s~0|^{-2b} dy with
/// s~0 = rho0 e^{i rho0_angle}. Clusters within mc_near_radius carry exactly
/// N = round(lambda pi R~^2) uniform cells per draw; farther clusters use the
/// disc-average expansion. The sampled sum does not depend on x~ or k and is
/// cached per (geometry, b, seed, draws, workers).
OracleResult oracle_cluster_dl_ul(const ClusterParams& cp, const SmallCellQuery& q, const OracleConfig& oc);

/// oracle_cluster_dl_ul averaged over the direction of s~0: midpoint rule with
/// 4 angles on [0, pi/6] (8 nodes over the period pi/3 after reflection),
/// each angle on its own seed substream.
OracleResult oracle_cluster_dl_ul_angle_mean(const ClusterParams& cp, const SmallCellQuery& q,
                                             const OracleConfig& oc);

/// Fraction of mobiles uniform in the small-cell disc whose SINR, with the
/// closed-form denominator, exceeds gamma. q.x_tilde is ignored.
OracleResult oracle_coverage(double gamma, const ClusterParams& cp, const SmallCellQuery& q, const OracleConfig& oc,
                             const SeriesControl& sc = {});

}  // namespace dtdd
