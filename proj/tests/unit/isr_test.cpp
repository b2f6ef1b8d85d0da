#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "dtdd/errors.hpp"
#include "dtdd/isr.hpp"
#include "dtdd/oracle.hpp"
#include "dtdd/specfun.hpp"
#include "gen.hpp"

using dtdd::DomainError;
using dtdd::MobileQuery;
using dtdd::NetworkParams;
using dtdd::SeriesControl;
using dtdd::TrafficMix;

namespace {

// Pinned closed-form values; each is cross-checked against brute.hpp below.
constexpr double kDlDl03b175 = 0.16130359962495883;
constexpr double kDlDl05b12 = 4.7847006617412466;
constexpr double kUlDl03b175k08 = 0.013691178439556089;
constexpr double kA1b175k08 = 0.56537072857458504;
constexpr double kUlUl03b12k04 = 1.2863567860515965;
constexpr double kDlUl04b175k04 = 12.808858374642446;

NetworkParams params(double b, double k = 0.8, double p_dl = 1.0, double p_target = 1.0) {
    NetworkParams np;
    np.b = b;
    np.k = k;
    np.p_dl = p_dl;
    np.p_target = p_target;
    return np;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(IsrDlDl, ZeroAtOrigin) {
    EXPECT_EQ(dtdd::isr_dl_dl({0.0, 0.0}, params(1.75)), 0.0);
}

TEST(IsrDlDl, PinnedAgainstThetaAveragedLatticeSum) {
    const double v = dtdd::isr_dl_dl({0.3, 0.0}, params(1.75));
    EXPECT_NEAR(v, kDlDl03b175, 1e-15);
    EXPECT_LT(rel(v, brute::dl_dl(1.75, 0.3, 24, 400.0)), 1e-7);
}

TEST(IsrDlDl, PinnedLargeRadiusSmallExponent) {
    const double v = dtdd::isr_dl_dl({0.5, 0.0}, params(1.2));
    EXPECT_NEAR(v, kDlDl05b12, 1e-13);
    EXPECT_LT(rel(v, brute::dl_dl(1.2, 0.5, 48, 400.0)), 2e-6);
}

TEST(IsrDlDl, FixedAngleOracleAtX03) {
    const auto np = params(1.75);
    const auto o = dtdd::oracle_dl_dl(0.3, 0.0, np, {});
    EXPECT_LE(rel(dtdd::isr_dl_dl({0.3, 0.0}, np), o.value), 1e-3);
}

TEST(IsrDlDl, FixedAngleOracleAtX05) {
    const auto np = params(1.2);
    const double v = dtdd::isr_dl_dl({0.5, 0.0}, np);
    EXPECT_LE(rel(v, dtdd::oracle_dl_dl(0.5, 0.0, np, {}).value), 1e-3);
    EXPECT_LE(rel(v, dtdd::oracle_dl_dl(0.5, std::numbers::pi / 6.0, np, {}).value), 1e-2);
}

TEST(IsrDlDl, DomainEdge) {
    EXPECT_THROW(dtdd::isr_dl_dl({dtdd::kMaxMobileX, 0.0}, params(1.75)), DomainError);
    EXPECT_THROW(dtdd::isr_dl_dl({-0.1, 0.0}, params(1.75)), DomainError);
    EXPECT_NO_THROW(dtdd::isr_dl_dl({0.57, 0.0}, params(1.75)));
}

TEST(IsrUlDl, ZeroAtOrigin) {
    EXPECT_EQ(dtdd::isr_ul_dl({0.0, 0.0}, params(1.75)), 0.0);
}

TEST(IsrUlDl, PinnedAgainstDiscQuadrature) {
    const auto np = params(1.75, 0.8);
    const double v = dtdd::isr_ul_dl({0.3, 0.0}, np);
    EXPECT_NEAR(v, kUlDl03b175k08, 1e-16);
    EXPECT_LT(rel(v, brute::ul_dl(1.75, 0.8, 0.45, 0.3, 24, 40.0)), 5e-6);
}

TEST(IsrUlDl, FixedAngleOracleAtX03) {
    const auto np = params(1.75, 0.8);
    EXPECT_LE(rel(dtdd::isr_ul_dl({0.3, 0.0}, np), dtdd::oracle_ul_dl(0.3, 0.0, np, {}).value), 1e-3);
}

TEST(IsrUlDl, VanishesWithCellRadius) {
    auto np = params(1.75, 0.8);
    double prev = dtdd::isr_ul_dl({0.3, 0.0}, np);
    for (double R : {0.1, 1e-2, 1e-4, 1e-8}) {
        np.cell_radius = R;
        const double v = dtdd::isr_ul_dl({0.3, 0.0}, np);
        EXPECT_LT(v, prev);
        prev = v;
    }
    EXPECT_LT(prev, 1e-20);
}

TEST(IsrUlDl, PowerRatioScaling) {
    const double a = dtdd::isr_ul_dl({0.2, 0.0}, params(1.2, 0.4, 1.0, 1.0));
    const double b = dtdd::isr_ul_dl({0.2, 0.0}, params(1.2, 0.4, 10.0, 1.0));
    EXPECT_NEAR(b, a / 10.0, 1e-15 * a);
}

TEST(IsrUlDl, RejectsOverlappingDisc) {
    auto np = params(1.75);
    np.cell_radius = 0.5;
    EXPECT_THROW(dtdd::isr_ul_dl({0.5, 0.0}, np), DomainError);
    np.cell_radius = 0.45;
    EXPECT_THROW(dtdd::isr_ul_dl({0.56, 0.0}, np), DomainError);
}

TEST(CoefA1, ZeroCompensationStructure) {
    const auto np = params(1.75, 0.0);
    const double R = np.cell_radius;
    double s = 0.0;
    for (int h = 0; h < 400; ++h) {
        s += std::exp(2.0 * std::lgamma(1.75 + h) - 2.0 * std::lgamma(h + 1.0) + 2.0 * h * std::log(R)) *
             dtdd::omega(1.75 + h) / (h + 1.0);
    }
    s *= 6.0 / std::exp(2.0 * std::lgamma(1.75));
    EXPECT_NEAR(dtdd::coef_a1(np), s, 1e-12 * s);
}

TEST(CoefA1, PinnedAgainstDiscQuadrature) {
    const double v = dtdd::coef_a1(params(1.75, 0.8));
    EXPECT_NEAR(v, kA1b175k08, 1e-15);
    EXPECT_LT(rel(v, brute::a1(1.75, 0.8, 0.45, 40.0)), 5e-6);
}

TEST(CoefA1, IncreasingInCellRadius) {
    auto np = params(1.75, 0.8);
    np.cell_radius = 0.2;
    const double small = dtdd::coef_a1(np);
    np.cell_radius = 0.45;
    EXPECT_LT(small, dtdd::coef_a1(np));
}

TEST(IsrUlUl, FullCompensationIgnoresPosition) {
    const auto np = params(1.75, 1.0);
    const double a1 = dtdd::coef_a1(np);
    for (double x : {0.0, 0.1, 0.3, 0.5}) EXPECT_EQ(dtdd::isr_ul_ul({x, 0.0}, np), a1);
}

TEST(IsrUlUl, ZeroAtOrigin) {
    EXPECT_EQ(dtdd::isr_ul_ul({0.0, 0.0}, params(1.75, 0.4)), 0.0);
}

TEST(IsrUlUl, PinnedAgainstDiscQuadrature) {
    const double v = dtdd::isr_ul_ul({0.3, 0.0}, params(1.2, 0.4));
    EXPECT_NEAR(v, kUlUl03b12k04, 1e-14);
    EXPECT_LT(rel(v, brute::a1(1.2, 0.4, 0.45, 60.0) * std::pow(0.3, 2.0 * 1.2 * 0.6)), 3e-5);
}

TEST(CoefA2, LatticeSumConstant) {
    const auto np = params(1.75, 0.4);
    const double sum = brute::epstein(1.75, 3000.0);
    EXPECT_LT(rel(dtdd::coef_a2(np), sum), 1e-9);
    EXPECT_LT(rel(dtdd::coef_a2(np, dtdd::A2Constant::AsPrinted), sum / 6.0), 1e-9);
    EXPECT_NEAR(dtdd::coef_a2(np, dtdd::A2Constant::AsPrinted) * 6.0, dtdd::coef_a2(np), 1e-15 * sum);
}

TEST(CoefA2, LinearInPowerRatio) {
    const double a = dtdd::coef_a2(params(1.2, 0.4, 1.0, 1.0));
    EXPECT_NEAR(dtdd::coef_a2(params(1.2, 0.4, 10.0, 1.0)), 10.0 * a, 1e-14 * a);
    EXPECT_NEAR(dtdd::coef_a2(params(1.2, 0.4, 1.0, 4.0)), a / 4.0, 1e-14 * a);
}

TEST(CoefA2, NoDeltaDependenceWithoutCompensation) {
    auto np = params(1.75, 0.0);
    const double a = dtdd::coef_a2(np);
    for (double d : {0.5, 2.0, 100.0}) {
        np.delta = d;
        np.cell_radius = 0.45 * d;
        EXPECT_EQ(dtdd::coef_a2(np), a);
    }
}

TEST(IsrDlUl, FullCompensationIgnoresPosition) {
    const auto np = params(1.75, 1.0, 10.0);
    const double a2 = dtdd::coef_a2(np);
    for (double x : {0.0, 0.1, 0.3, 0.5}) EXPECT_EQ(dtdd::isr_dl_ul({x, 0.0}, np), a2);
}

TEST(IsrDlUl, ZeroAtOrigin) {
    EXPECT_EQ(dtdd::isr_dl_ul({0.0, 0.0}, params(1.75, 0.4)), 0.0);
}

TEST(IsrDlUl, PinnedAgainstLatticeSum) {
    const double v = dtdd::isr_dl_ul({0.4, 0.0}, params(1.75, 0.4, 10.0, 1.0));
    EXPECT_NEAR(v, kDlUl04b175k04, 1e-13);
    EXPECT_LT(rel(v, 10.0 * brute::epstein(1.75, 3000.0) * std::pow(0.4, 2.0 * 1.75 * 0.6)), 1e-6);
}

TEST(IsrTotals, Mixes) {
    const auto np = params(1.2, 0.8, 10.0, 1.0);
    const MobileQuery q{0.3, 0.0};
    EXPECT_EQ(dtdd::isr_dl_total(q, np, TrafficMix{1.0, 0.0}), dtdd::isr_dl_dl(q, np));
    EXPECT_EQ(dtdd::isr_dl_total(q, np, TrafficMix{0.0, 0.0}), 0.0);
    EXPECT_NEAR(dtdd::isr_dl_total(q, np, TrafficMix{0.5, 0.5}),
                0.5 * (dtdd::isr_dl_dl(q, np) + dtdd::isr_ul_dl(q, np)), 1e-15);
    EXPECT_EQ(dtdd::isr_ul_total(q, np, TrafficMix{0.0, 1.0}), dtdd::isr_ul_ul(q, np));
    EXPECT_EQ(dtdd::isr_ul_total(q, np, TrafficMix{0.0, 0.0}), 0.0);
    EXPECT_NEAR(dtdd::isr_ul_total(q, np, TrafficMix{0.5, 0.5}),
                0.5 * (dtdd::isr_ul_ul(q, np) + dtdd::isr_dl_ul(q, np)), 1e-14);
}

TEST(IsrTotals, MixedComponentsAgainstBruteComponents) {
    const auto np = params(1.2, 0.8);
    const MobileQuery q{0.3, 0.0};
    const double expected = 0.5 * (brute::dl_dl(1.2, 0.3, 24, 400.0) + brute::ul_dl(1.2, 0.8, 0.45, 0.3, 24, 40.0));
    EXPECT_LT(rel(dtdd::isr_dl_total(q, np, TrafficMix{0.5, 0.5}), expected), 1e-5);
}

TEST(IsrBreakdown, ConsistentWithComponents) {
    const auto np = params(1.75, 0.4, 10.0, 1.0);
    const MobileQuery q{0.25, 0.0};
    const TrafficMix mix{0.75, 0.25};
    const auto br = dtdd::isr_breakdown(q, np, mix);
    EXPECT_EQ(br.dl_to_dl, dtdd::isr_dl_dl(q, np));
    EXPECT_EQ(br.ul_to_dl, dtdd::isr_ul_dl(q, np));
    EXPECT_EQ(br.ul_to_ul, dtdd::isr_ul_ul(q, np));
    EXPECT_EQ(br.dl_to_ul, dtdd::isr_dl_ul(q, np));
    EXPECT_EQ(br.total_dl, dtdd::isr_dl_total(q, np, mix));
    EXPECT_EQ(br.total_ul, dtdd::isr_ul_total(q, np, mix));
}

TEST(Validation, ParameterInvariants) {
    auto np = params(1.0);
    EXPECT_THROW(np.validate(), DomainError);
    np = params(1.75, 1.2);
    EXPECT_THROW(np.validate(), DomainError);
    np = params(1.75);
    np.cell_radius = 1.0;
    EXPECT_THROW(np.validate(), DomainError);
    EXPECT_THROW((TrafficMix{0.7, 0.7}.validate()), DomainError);
    EXPECT_THROW((TrafficMix{-0.1, 0.5}.validate()), DomainError);
    EXPECT_THROW((SeriesControl{0, 1e-14}.validate()), DomainError);
}

TEST(SeriesControl, CapPolicy) {
    const auto np = params(1.2);
    EXPECT_THROW(dtdd::isr_dl_dl({0.5, 0.0}, np, SeriesControl{6, 1e-14}), dtdd::ConvergenceError);
    const auto s = dtdd::isr_dl_dl_series({0.5, 0.0}, np, SeriesControl{6, 1e-14, dtdd::CapPolicy::Truncate});
    EXPECT_FALSE(s.converged);
    EXPECT_EQ(s.terms, 7);
    EXPECT_LT(s.value, dtdd::isr_dl_dl({0.5, 0.0}, np));
}

TEST(SeriesSum, RejectsNegativeTerm) {
    EXPECT_THROW(dtdd::sum_nonnegative_series(SeriesControl{}, "t", [](int h) { return h == 3 ? -1.0 : 1.0 / (1 << h); }),
                 dtdd::ConvergenceError);
}

// Properties

const std::vector<double> kXGrid{0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};

TEST(IsrProperty, MonotoneInPosition) {
    gen::Gen g(31);
    for (double b : {1.2, 1.75, g.b(), g.b()}) {
        for (double k : {0.0, 0.4, 0.8, g.k()}) {
            const auto np = params(b, k, 10.0, 1.0);
            double dd = 0, ud = 0, uu = 0, du = 0;
            for (double x : g.increasing(12, 0.0, 0.5)) {
                const MobileQuery q{x, 0.0};
                const double a = dtdd::isr_dl_dl(q, np), c = dtdd::isr_ul_dl(q, np);
                const double e = dtdd::isr_ul_ul(q, np), f = dtdd::isr_dl_ul(q, np);
                EXPECT_GT(a, dd) << b << ' ' << k << ' ' << x;
                EXPECT_GT(c, ud) << b << ' ' << k << ' ' << x;
                EXPECT_GT(e, uu) << b << ' ' << k << ' ' << x;
                EXPECT_GT(f, du) << b << ' ' << k << ' ' << x;
                dd = a, ud = c, uu = e, du = f;
            }
        }
    }
}

TEST(IsrProperty, FlatAtFullCompensation) {
    gen::Gen g(32);
    for (int i = 0; i < 10; ++i) {
        const auto np = params(g.b(), 1.0, g.log_uniform(0.1, 100.0), 1.0);
        const double uu = dtdd::isr_ul_ul({0.05, 0.0}, np), du = dtdd::isr_dl_ul({0.05, 0.0}, np);
        for (double x : g.increasing(10, 0.0, 0.55)) {
            EXPECT_EQ(dtdd::isr_ul_ul({x, 0.0}, np), uu);
            EXPECT_EQ(dtdd::isr_dl_ul({x, 0.0}, np), du);
        }
    }
}

TEST(IsrProperty, DownlinkOrderingAcrossMixes) {
    gen::Gen g(33);
    for (double b : {1.2, 1.75}) {
        const auto np = params(b, 0.8, 10.0, 1.0);
        for (int i = 0; i < 30; ++i) {
            const MobileQuery q{g.uniform(0.01, 0.5), 0.0};
            double prev = dtdd::isr_dl_total(q, np, TrafficMix{1.0, 0.0});
            for (double au : {0.25, 0.5, 0.75, 1.0}) {
                const double v = dtdd::isr_dl_total(q, np, TrafficMix{1.0 - au, au});
                EXPECT_LT(v, prev) << "b " << b << " x " << q.x << " alpha_u " << au;
                prev = v;
            }
        }
    }
}

TEST(IsrProperty, UplinkOrderingAcrossMixes) {
    gen::Gen g(34);
    for (double b : {1.2, 1.75}) {
        const auto np = params(b, 0.8, 10.0, 1.0);
        for (int i = 0; i < 30; ++i) {
            const MobileQuery q{g.uniform(0.01, 0.5), 0.0};
            double prev = dtdd::isr_ul_total(q, np, TrafficMix{0.0, 1.0});
            for (double ad : {0.25, 0.5}) {
                const double v = dtdd::isr_ul_total(q, np, TrafficMix{ad, 1.0 - ad});
                EXPECT_GT(v, prev) << "b " << b << " x " << q.x << " alpha_d " << ad;
                prev = v;
            }
        }
    }
}

SeriesControl capped(int h) { return SeriesControl{h, 1e-14, dtdd::CapPolicy::Truncate}; }

TEST(IsrProperty, TruncationStableDownlinkAndA1) {
    for (double b : {1.2, 1.75, 2.5}) {
        for (double k : {0.0, 0.4, 0.8, 1.0}) {
            const auto np = params(b, k);
            const double a20 = dtdd::coef_a1_series(np, capped(20)).value;
            const double a40 = dtdd::coef_a1_series(np, capped(40)).value;
            EXPECT_LE(rel(a20, a40), 1e-8) << "A1 b " << b << " k " << k;
        }
        for (double x : kXGrid) {
            const double d20 = dtdd::isr_dl_dl_series({x, 0.0}, params(b), capped(20)).value;
            const double d40 = dtdd::isr_dl_dl_series({x, 0.0}, params(b), capped(40)).value;
            EXPECT_LE(rel(d20, d40), 1e-8) << "dl_dl b " << b << " x " << x;
        }
    }
}

TEST(IsrProperty, TruncationStableUplinkToDownlink) {
    for (double b : {1.2, 1.75}) {
        for (double k : {0.0, 0.4, 0.8, 1.0}) {
            for (double x : kXGrid) {
                const double u20 = dtdd::isr_ul_dl_series({x, 0.0}, params(b, k), capped(20)).value;
                const double u40 = dtdd::isr_ul_dl_series({x, 0.0}, params(b, k), capped(40)).value;
                EXPECT_LE(rel(u20, u40), 1e-8) << "ul_dl b " << b << " k " << k << " x " << x;
            }
        }
    }
}

TEST(IsrProperty, PartialSumsMonotoneInCap) {
    gen::Gen g(35);
    for (int i = 0; i < 20; ++i) {
        const auto np = params(g.b(), g.k());
        const MobileQuery q{g.uniform(0.0, 0.5), 0.0};
        double prev_dd = -1.0, prev_ud = -1.0;
        for (int h = 5; h <= 35; h += 3) {
            const double dd = dtdd::isr_dl_dl_series(q, np, capped(h)).value;
            const double ud = dtdd::isr_ul_dl_series(q, np, capped(h)).value;
            EXPECT_GE(dd, prev_dd);
            EXPECT_GE(ud, prev_ud);
            prev_dd = dd, prev_ud = ud;
        }
    }
}

}  // namespace
