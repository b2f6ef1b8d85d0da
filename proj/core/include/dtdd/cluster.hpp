#pragma once

// Clustered small-cell layer. Cluster centers form a hexagonal lattice with
// spacing delta_tilde; each cluster holds small cells placed uniformly in a
// disc of radius cluster_radius. Cells in one cluster share a UL/DL
// configuration, so only other clusters contribute DL->UL interference.
// Macro-layer and UL->UL interference are not part of this layer.

#include "dtdd/series.hpp"

namespace dtdd {

struct ClusterParams {
    double delta_tilde = 0.57735026918962576451;       ///< inter-cluster distance (delta / sqrt(3) for delta = 1)
    double cluster_radius = 0.23094010767585030580;    ///< 0.4 * delta_tilde
    double smallcell_radius = 0.11547005383792515290;  ///< delta_tilde / 5
    double intensity = 17.904931097838225;             ///< small cells per unit area, 3 / (pi cluster_radius^2)
    int n_cells = 3;                                   ///< cells per cluster
    double p_small_dl = 1.0;                           ///< small-cell DL power
    double p_small_target = 1.0;                       ///< small-cell UL target power
    double rho0 = 0.0;                                 ///< distance of the studied cell from its cluster center
    double rho0_angle = 0.0;                           ///< its angle; only the oracles see it
    double p_noise = 0.0;

    /// Throws DomainError on a violated invariant, including
    /// |intensity * pi * cluster_radius^2 - n_cells| > 1e-9 * n_cells when n_cells > 0.
    void validate() const;

    /// Cells per cluster implied by the intensity: round(intensity * pi * cluster_radius^2).
    int derived_cell_count() const;

    /// Geometry derived from a macro layer: delta_tilde = delta / sqrt(3),
    /// cluster_radius = radius_ratio * delta_tilde, intensity = cells / (pi cluster_radius^2).
    static ClusterParams from_macro(double delta, double radius_ratio = 0.4, int cells = 3);
};

struct SmallCellQuery {
    double x_tilde = 0.0;  ///< r_tilde / delta_tilde in [0, 1)
    double b = 1.75;
    double k = 0.8;

    void validate() const;
};

/// Noise term y0 = P_N delta_tilde^{2b(1-k)} / P_tilde*.
struct NoiseTerm {
    double y0 = 0.0;
};

NoiseTerm noise_term(const ClusterParams& cp, const SmallCellQuery& q);

/// Clustered DL->UL coefficient A2~ as a triple series over (h, n, i).
///
/// The factor (R/rho0)^{2n+2i} (rho0/delta)^{2h} is evaluated as
/// R^{2n+2i} rho0^{2(h-n-i)} / delta^{2h}; the rho0 exponent is never
/// negative, so rho0 = 0 leaves only the n + i = h terms. Requires
/// rho0 + cluster_radius < delta_tilde for convergence.
double coef_a2_tilde(const ClusterParams& cp, const SmallCellQuery& q, const SeriesControl& sc = {});
SeriesSum coef_a2_tilde_series(const ClusterParams& cp, const SmallCellQuery& q, const SeriesControl& sc);

/// A2~ x~^{2b(1-k)}.
double isr_dl_ul_clustered(const SmallCellQuery& q, const ClusterParams& cp, const SeriesControl& sc = {});

/// Extension: isr_dl_ul_clustered averaged over rho0 uniform in the cluster
/// disc (density 2 rho0 / R^2), Gauss-Legendre of the given order.
double isr_dl_ul_clustered_rho_mean(const SmallCellQuery& q, const ClusterParams& cp, const SeriesControl& sc = {},
                                    int order = 32);

/// UL SINR 1 / ((A2~ + y0) x~^{2b(1-k)}), linear. Returns +infinity when the
/// denominator vanishes (x~ = 0 with k < 1).
double sinr_ul(const SmallCellQuery& q, const ClusterParams& cp, const SeriesControl& sc = {});

/// Inverse of x~ -> 1 / sinr_ul(x~): (y / (A2~ + y0))^{1 / (2b(1-k))}.
/// Throws NonInvertibleError for k = 1.
double g_inverse(double y, const ClusterParams& cp, const SmallCellQuery& q, const SeriesControl& sc = {});

/// Fraction of mobiles uniform in the small-cell disc with SINR above gamma:
/// min(((delta_tilde / R_s) g(1 / gamma))^2, 1). For k = 1 the SINR is the
/// same everywhere and the result is the step 1{gamma < 1 / (A2~ + y0)}.
double coverage_probability(double gamma, const ClusterParams& cp, const SmallCellQuery& q,
                            const SeriesControl& sc = {});

}  // namespace dtdd
