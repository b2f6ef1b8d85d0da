#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "dtdd/cluster.hpp"
#include "dtdd/errors.hpp"
#include "dtdd/isr.hpp"
#include "dtdd/oracle.hpp"
#include "dtdd/specfun.hpp"

using dtdd::ClusterParams;
using dtdd::NetworkParams;
using dtdd::OracleConfig;
using dtdd::OracleResult;
using dtdd::SmallCellQuery;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

NetworkParams params(double b, double k = 0.8) {
    NetworkParams np;
    np.b = b;
    np.k = k;
    return np;
}

OracleConfig config(double radius = 300.0, unsigned workers = 0) {
    OracleConfig oc;
    oc.lattice_radius = radius;
    oc.workers = workers;
    return oc;
}

void expect_bitwise(const OracleResult& a, const OracleResult& b) {
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.tail_bound, b.tail_bound);
    EXPECT_EQ(a.mc_stderr, b.mc_stderr);
}

void expect_brackets(const OracleResult& coarse, const OracleResult& fine, const char* what) {
    EXPECT_LE(std::abs(coarse.value - fine.value), coarse.tail_bound) << what;
    EXPECT_GT(coarse.tail_bound, 0.0) << what;
}

TEST(OracleConfig, Validation) {
    auto oc = config(5.0);
    EXPECT_THROW(oc.validate(), dtdd::DomainError);
    oc = config();
    oc.mc_draws = 1;
    EXPECT_THROW(oc.validate(), dtdd::DomainError);
    oc = config();
    oc.quad_radial_order = 0;
    EXPECT_THROW(oc.validate(), dtdd::DomainError);
    oc = config(40.0);
    oc.near_field_radius = 11.0;
    EXPECT_THROW(oc.validate(), dtdd::DomainError);
}

TEST(OracleEpstein, AgreesWithDirectSum) {
    const std::vector<double> zs{1.75, 3.0};
    const auto r = dtdd::oracle_epstein(zs, 1000.0);
    EXPECT_LT(rel(r[0].value, brute::epstein(1.75, 3000.0)), 1e-10);
    EXPECT_LT(rel(r[1].value, brute::epstein(3.0, 1000.0)), 1e-12);
}

TEST(OracleDlDl, ZeroAtOrigin) {
    EXPECT_EQ(dtdd::oracle_dl_dl(0.0, 0.7, params(1.75), config()).value, 0.0);
}

TEST(OracleDlDl, AgreesWithDirectSum) {
    const double o = dtdd::oracle_dl_dl(0.3, 0.0, params(1.75), config()).value;
    const double b = brute::shifted_sum(1.75, {0.3, 0.0}, 1200.0) * std::pow(0.3, 3.5);
    EXPECT_LT(rel(o, b), 1e-9);
}

TEST(OracleDlDl, SlowAngularVariation) {
    const auto np = params(1.75);
    std::vector<double> v;
    for (int j = 0; j <= 12; ++j) v.push_back(dtdd::oracle_dl_dl(0.3, j * kPi / 12.0, np, config()).value);
    const double mean = dtdd::oracle_dl_dl_theta_mean(0.3, np, config()).value;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    EXPECT_LT((*hi - *lo) / mean, 2e-2);
    EXPECT_NEAR(v.front(), v.back(), 1e-12 * mean);  // period pi/3 repeats inside [0, pi]
    EXPECT_NEAR(v[1], v[3], 1e-12 * mean);           // even about pi/6
}

TEST(OracleDlDl, ThetaMeanMatchesClosedForm) {
    for (double b : {1.2, 1.75}) {
        for (double x : {0.1, 0.3, 0.5}) {
            const double o = dtdd::oracle_dl_dl_theta_mean(x, params(b), config()).value;
            EXPECT_LT(rel(dtdd::isr_dl_dl({x, 0.0}, params(b)), o), 1e-6) << b << ' ' << x;
        }
    }
}

TEST(OracleUlDl, ZeroAtOrigin) {
    EXPECT_EQ(dtdd::oracle_ul_dl(0.0, 0.0, params(1.75), config()).value, 0.0);
}

TEST(OracleUlDl, QuadratureConverged) {
    const auto np = params(1.75);
    auto oc = config();
    const double a = dtdd::oracle_ul_dl(0.3, 0.0, np, oc).value;
    oc.quad_radial_order *= 2;
    oc.quad_angular_order *= 2;
    EXPECT_LT(rel(dtdd::oracle_ul_dl(0.3, 0.0, np, oc).value, a), 1e-6);
}

TEST(OracleUlDl, ThetaMeanMatchesClosedForm) {
    for (double k : {0.0, 0.8}) {
        auto np = params(1.75, k);
        np.p_dl = 1.0;
        const double o = dtdd::oracle_ul_dl_theta_mean(0.3, np, config()).value;
        EXPECT_LT(rel(dtdd::isr_ul_dl({0.3, 0.0}, np), o), 1e-5) << k;
    }
}

TEST(OracleUlUl, FlatAtFullCompensation) {
    const auto np = params(1.75, 1.0);
    const double a = dtdd::oracle_ul_ul(0.05, np, config()).value;
    for (double x : {0.1, 0.3, 0.5}) EXPECT_EQ(dtdd::oracle_ul_ul(x, np, config()).value, a);
}

TEST(OracleUlUl, MatchesClosedForm) {
    const auto np = params(1.2, 0.4);
    EXPECT_LT(rel(dtdd::oracle_ul_ul(0.3, np, config()).value, dtdd::isr_ul_ul({0.3, 0.0}, np)), 1e-6);
}

TEST(OracleUlUl, VanishesWithCellRadius) {
    auto np = params(1.75, 0.8);
    np.cell_radius = 1e-6;
    EXPECT_LT(dtdd::oracle_ul_ul(0.3, np, config()).value, 1e-15);
}

TEST(OracleDlUl, ZeroPower) {
    auto np = params(1.75, 0.4);
    np.p_dl = 0.0;
    EXPECT_EQ(dtdd::oracle_dl_ul(0.3, np, config()).value, 0.0);
}

TEST(OracleDlUl, AdjudicatesConstant) {
    auto np = params(1.75, 0.0);
    np.p_dl = 1.0;
    np.p_target = 1.0;
    const double s = dtdd::oracle_dl_ul(1.0, np, config()).value;
    EXPECT_LT(rel(s, 6.0 * dtdd::omega(1.75)), 1e-9);
    EXPECT_GT(rel(s, dtdd::omega(1.75)), 0.8);
}

TEST(OracleDlUl, DeltaScaling) {
    auto np = params(1.75, 0.4);
    const double a = dtdd::oracle_dl_ul(0.3, np, config()).value;
    np.delta = 2.0;
    np.cell_radius = 0.9;
    EXPECT_NEAR(dtdd::oracle_dl_ul(0.3, np, config()).value, a * std::pow(2.0, -2.0 * 1.75 * 0.4), 1e-13 * a);
}

TEST(OracleCluster, ZeroIntensity) {
    ClusterParams cp;
    cp.intensity = 0.0;
    cp.n_cells = 0;
    EXPECT_EQ(dtdd::oracle_cluster_dl_ul(cp, {0.3, 1.75, 0.8}, config()).value, 0.0);
}

TEST(OracleCluster, StandardErrorScaling) {
    ClusterParams cp;
    cp.rho0 = 0.2 * cp.delta_tilde;
    const SmallCellQuery q{0.3, 1.75, 0.8};
    auto oc = config();
    oc.mc_draws = 10000;
    const auto small = dtdd::oracle_cluster_dl_ul(cp, q, oc);
    oc.mc_draws = 1000000;
    const auto large = dtdd::oracle_cluster_dl_ul(cp, q, oc);
    EXPECT_NEAR(small.mc_stderr / large.mc_stderr, 10.0, 0.5);
    EXPECT_LE(std::abs(small.value - large.value), 4.0 * small.mc_stderr);
}

TEST(OracleCluster, MatchesClosedFormAtCenteredCell) {
    const ClusterParams cp;
    const SmallCellQuery q{0.3, 1.2, 0.4};
    const auto o = dtdd::oracle_cluster_dl_ul(cp, q, config());
    EXPECT_LE(std::abs(o.value - dtdd::isr_dl_ul_clustered(q, cp)), 3.0 * o.mc_stderr);
    EXPECT_LT(rel(o.value, dtdd::isr_dl_ul_clustered(q, cp)), 1e-2);
}

TEST(OracleCluster, ZeroVarianceDegenerateCase) {
    // One cell per cluster in a vanishing disc: every draw puts the interferer at the center.
    ClusterParams cp;
    cp.cluster_radius = 1e-7 * cp.delta_tilde;
    cp.smallcell_radius = 1e-7 * cp.delta_tilde;
    cp.n_cells = 1;
    cp.intensity = 1.0 / (kPi * cp.cluster_radius * cp.cluster_radius);
    const SmallCellQuery q{0.3, 1.75, 1.0};
    auto oc = config();
    oc.mc_draws = 20000;
    const auto o = dtdd::oracle_cluster_dl_ul(cp, q, oc);
    const double expected = std::pow(cp.delta_tilde, -3.5) * brute::epstein(1.75, 3000.0);
    EXPECT_LT(rel(o.value, expected), 1e-8);
    EXPECT_LT(o.mc_stderr, 1e-8 * o.value);
}

TEST(OracleCoverage, Limits) {
    const ClusterParams cp;
    const SmallCellQuery q{0.3, 1.75, 0.8};
    auto oc = config();
    oc.mc_draws = 20000;
    EXPECT_EQ(dtdd::oracle_coverage(1e-9, cp, q, oc).value, 1.0);
    EXPECT_EQ(dtdd::oracle_coverage(1e9, cp, q, oc).value, 0.0);
}

TEST(OracleCoverage, MatchesClosedForm) {
    const ClusterParams cp;
    const SmallCellQuery q{0.3, 1.75, 0.8};
    for (double gamma : {1e-3, 1e-2, 1.0}) {
        const auto o = dtdd::oracle_coverage(gamma, cp, q, config());
        EXPECT_LE(std::abs(o.value - dtdd::coverage_probability(gamma, cp, q)), 0.01) << gamma;
    }
}

// Properties

TEST(OracleProperty, DeterministicAcrossWorkerCounts) {
    const auto np = params(1.2, 0.4);
    expect_bitwise(dtdd::oracle_dl_dl(0.4, 0.3, np, config(200.0, 1)), dtdd::oracle_dl_dl(0.4, 0.3, np, config(200.0, 3)));
    expect_bitwise(dtdd::oracle_ul_dl(0.4, 0.3, np, config(200.0, 1)), dtdd::oracle_ul_dl(0.4, 0.3, np, config(200.0, 4)));
    expect_bitwise(dtdd::oracle_ul_ul(0.4, np, config(200.0, 1)), dtdd::oracle_ul_ul(0.4, np, config(200.0, 2)));

    ClusterParams cp;
    cp.rho0 = 0.1;
    auto oc1 = config(200.0, 1);
    auto oc3 = config(200.0, 3);
    oc1.mc_draws = oc3.mc_draws = 30000;
    const SmallCellQuery q{0.3, 1.75, 0.8};
    expect_bitwise(dtdd::oracle_cluster_dl_ul(cp, q, oc1), dtdd::oracle_cluster_dl_ul(cp, q, oc3));
    expect_bitwise(dtdd::oracle_coverage(0.01, cp, q, oc1), dtdd::oracle_coverage(0.01, cp, q, oc3));
}

TEST(OracleProperty, SeedChangesSample) {
    ClusterParams cp;
    cp.rho0 = 0.1;
    auto oc = config(200.0);
    oc.mc_draws = 20000;
    const SmallCellQuery q{0.3, 1.75, 0.8};
    const auto a = dtdd::oracle_cluster_dl_ul(cp, q, oc);
    oc.seed += 1;
    const auto b = dtdd::oracle_cluster_dl_ul(cp, q, oc);
    EXPECT_NE(a.value, b.value);
    EXPECT_LE(std::abs(a.value - b.value), 5.0 * std::hypot(a.mc_stderr, b.mc_stderr));
}

TEST(OracleProperty, TailBoundBracketsDoubledRadius) {
    for (double b : {1.2, 1.75}) {
        const auto np = params(b, 0.4);
        expect_brackets(dtdd::oracle_dl_dl(0.4, 0.2, np, config(100.0)), dtdd::oracle_dl_dl(0.4, 0.2, np, config(200.0)),
                        "dl_dl");
        expect_brackets(dtdd::oracle_ul_dl(0.4, 0.2, np, config(100.0)), dtdd::oracle_ul_dl(0.4, 0.2, np, config(200.0)),
                        "ul_dl");
        expect_brackets(dtdd::oracle_ul_ul(0.4, np, config(100.0)), dtdd::oracle_ul_ul(0.4, np, config(200.0)), "ul_ul");
        expect_brackets(dtdd::oracle_dl_ul(0.4, np, config(100.0)), dtdd::oracle_dl_ul(0.4, np, config(200.0)), "dl_ul");
        const double z[1] = {b};
        expect_brackets(dtdd::oracle_epstein(z, 100.0).front(), dtdd::oracle_epstein(z, 200.0).front(), "epstein");
    }
}

}  // namespace
