#pragma once

// Macro-layer interference-to-signal ratios for a hexagonal D-TDD network.
//
// Geometry: sites delta (u + v e^{i pi/3}); the studied mobile m = r e^{i theta}
// is served by the origin site; x = r / delta. Path loss is |s - m|^{2b};
// uplink power follows P* (|n - s|^{2b})^k. Powers are linear.
//
// The x-series below keep only the rotation-invariant part of the lattice
// sum. They equal the exact interference averaged over theta; at a fixed
// theta the sixfold harmonic cos(6 theta) adds a correction of relative
// order x^6 that these closed forms do not carry.

#include "dtdd/series.hpp"
#include "dtdd/specfun.hpp"

namespace dtdd {

struct NetworkParams {
    double delta = 1.0;         ///< inter-site distance
    double b = 1.75;            ///< half path-loss exponent, b > 1
    double k = 0.8;             ///< power-control compensation factor in [0, 1]
    double p_dl = 10.0;         ///< common DL transmit power P
    double p_target = 1.0;      ///< UL target power P*
    double cell_radius = 0.45;  ///< R < delta
    double p_noise = 0.0;

    void validate() const;
};

struct TrafficMix {
    double alpha_d = 1.0;
    double alpha_u = 0.0;

    void validate() const;
};

struct MobileQuery {
    double x = 0.0;      ///< r / delta, in [0, 1/sqrt(3))
    double theta = 0.0;  ///< carried for the oracles; the closed forms ignore it

    void validate() const;
};

struct IsrBreakdown {
    double dl_to_dl = 0.0;
    double ul_to_dl = 0.0;
    double ul_to_ul = 0.0;
    double dl_to_ul = 0.0;
    double total_dl = 0.0;
    double total_ul = 0.0;
};

/// Which constant multiplies omega(b) in the DL->UL coefficient.
enum class A2Constant {
    LatticeSum,  ///< 6 omega(b): sum over the lattice of |s/delta|^{-2b}
    AsPrinted,   ///< omega(b): the published coefficient, kept for comparison runs
};

/// Largest admissible x = r / delta.
inline constexpr double kMaxMobileX = 0.57735026918962576451;  // 1/sqrt(3)

/// DL->DL ISR: (6 x^{2b} / Gamma(b)^2) sum_h [Gamma(b+h)^2 / Gamma(h+1)^2] omega(b+h) x^{2h}.
double isr_dl_dl(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc = {});

/// UL->DL ISR from one uniformly placed uplink mobile per interfering cell.
///
/// Triple series over (h, n, i), n <= h/2, i <= h - 2n, with prefactor
/// 6 (P*/P) x^{2b} R^{2bk} / Gamma(b)^2. The outer index follows the stopping
/// rule; the inner sums are finite. Terms decay like (x + R/delta)^{2h}, and
/// for x + R/delta >= 1 an interfering disc reaches the mobile, so that
/// range throws DomainError.
double isr_ul_dl(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc = {});

/// Coefficient of the UL->UL ISR,
/// A1 = (6 (R/delta)^{2bk} / Gamma(b)^2) sum_h Gamma(b+h)^2 omega(b+h) (R/delta)^{2h} / (Gamma(h+1)^2 (bk+h+1)).
double coef_a1(const NetworkParams& np, const SeriesControl& sc = {});

/// UL->UL ISR: A1 x^{2b(1-k)}.
double isr_ul_ul(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc = {});

/// Coefficient of the DL->UL ISR, c P omega(b) / (P* delta^{2bk}) with c = 6 by default.
double coef_a2(const NetworkParams& np, A2Constant constant = A2Constant::LatticeSum);

/// DL->UL ISR: A2 x^{2b(1-k)}. No series in x.
double isr_dl_ul(const MobileQuery& q, const NetworkParams& np, A2Constant constant = A2Constant::LatticeSum);

/// alpha_d * DL->DL + alpha_u * UL->DL.
double isr_dl_total(const MobileQuery& q, const NetworkParams& np, const TrafficMix& mix,
                    const SeriesControl& sc = {});

/// alpha_u * UL->UL + alpha_d * DL->UL.
double isr_ul_total(const MobileQuery& q, const NetworkParams& np, const TrafficMix& mix,
                    const SeriesControl& sc = {});

/// All four components and both totals in one pass.
IsrBreakdown isr_breakdown(const MobileQuery& q, const NetworkParams& np, const TrafficMix& mix,
                           const SeriesControl& sc = {});

/// Partial sums of the three series above with their term counts, for
/// truncation studies. Honors sc.on_cap.
SeriesSum isr_dl_dl_series(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc);
SeriesSum isr_ul_dl_series(const MobileQuery& q, const NetworkParams& np, const SeriesControl& sc);
SeriesSum coef_a1_series(const NetworkParams& np, const SeriesControl& sc);

}  // namespace dtdd
