#include "dtdd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "dtdd/errors.hpp"
#include "dtdd/hexlattice.hpp"
#include "dtdd/quadrature.hpp"
#include "lattice_sum.hpp"
#include "montecarlo.hpp"

namespace dtdd {
namespace {

using detail::RadialProfile;

constexpr int kExpansionTerms = 48;
constexpr int kProfileOrder = 4;
constexpr std::uint64_t kBlockDraws = 4096;
constexpr double kEdge = 1.0 + 1e-9;

// ((b)_i / i!)^2
double pochhammer_ratio_sq(double b, int i) {
    double r = 1.0;
    for (int t = 0; t < i; ++t) r *= (b + t) / (t + 1.0);
    return r * r;
}

// a_j = ((b)_j / j!)^2 * moment(j): disc average of |p + y|^{-2b} is sum_j a_j |p|^{-2b-2j}.
template <class Moment>
std::vector<double> disc_coefficients(double b, Moment&& moment) {
    std::vector<double> a(kExpansionTerms);
    for (int j = 0; j < kExpansionTerms; ++j) a[static_cast<std::size_t>(j)] = pochhammer_ratio_sq(b, j) * moment(j);
    return a;
}

double site_expansion(const std::vector<double>& a, double b, double dist) {
    const double inv2 = 1.0 / (dist * dist);
    double power = std::pow(dist, -2.0 * b);
    double sum = 0.0;
    for (double aj : a) {
        const double t = aj * power;
        sum += t;
        if (t <= 1e-17 * sum) break;
        power *= inv2;
    }
    return sum;
}

// Ring average about the origin of sum_j a_j |s - p|^{-2b-2j}, |p| = shift.
RadialProfile shifted_profile(double b, const std::vector<double>& a, double shift) {
    RadialProfile prof{b, std::vector<double>(kProfileOrder, 0.0)};
    const double s2 = shift * shift;
    for (int n = 0; n < kProfileOrder; ++n) {
        double c = 0.0;
        for (int j = 0; j <= n && j < static_cast<int>(a.size()); ++j) {
            const int i = n - j;
            c += a[static_cast<std::size_t>(j)] * pochhammer_ratio_sq(b + j, i) * std::pow(s2, i);
        }
        prof.coeffs[static_cast<std::size_t>(n)] = c;
    }
    return prof;
}

struct DiscRule {
    std::vector<std::complex<double>> points;
    std::vector<double> weights;
};

// Nodes for (1 / pi R^2) int_disc rho^power g(y) dy.
DiscRule disc_rule(double radius, double power, int radial, int angular) {
    const QuadratureRule gl = gauss_legendre(radial, 0.0, radius);
    const QuadratureRule tr = periodic_trapezoid(angular);
    DiscRule rule;
    rule.points.reserve(gl.nodes.size() * tr.nodes.size());
    rule.weights.reserve(gl.nodes.size() * tr.nodes.size());
    const double norm = 1.0 / (std::numbers::pi * radius * radius);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double rho = gl.nodes[i];
        const double radial_weight = gl.weights[i] * std::pow(rho, power) * rho * norm;
        for (std::size_t j = 0; j < tr.nodes.size(); ++j) {
            rule.points.push_back(std::polar(rho, tr.nodes[j]));
            rule.weights.push_back(radial_weight * tr.weights[j]);
        }
    }
    return rule;
}

double disc_quadrature(const DiscRule& rule, std::complex<double> p, double b) {
    detail::CompensatedSum acc;
    for (std::size_t i = 0; i < rule.points.size(); ++i) {
        acc.add(rule.weights[i] * std::pow(std::norm(p + rule.points[i]), -b));
    }
    return acc.value();
}

void validate_macro_query(double x, const NetworkParams& np, const OracleConfig& oc) {
    np.validate();
    oc.validate();
    MobileQuery{x, 0.0}.validate();
}

// sum_s (1 / pi R^2) int_disc rho^{2bk} |s + y - m|^{-2b} dy, unscaled.
OracleResult macro_disc_sum(std::complex<double> m, const NetworkParams& np, const OracleConfig& oc) {
    const double b = np.b;
    const double power = 2.0 * b * np.k;
    const double radius = np.cell_radius;
    const LatticeSpec spec = macro_lattice(np.delta);
    const double r_out = oc.lattice_radius * np.delta;
    const double near = oc.near_field_radius * np.delta * kEdge;

    const auto a = disc_coefficients(b, [&](int j) {
        return 2.0 * std::pow(radius, power + 2.0 * j) / (power + 2.0 * j + 2.0);
    });
    const DiscRule rule = disc_rule(radius, power, oc.quad_radial_order, oc.quad_angular_order);
    const RadialProfile profile = shifted_profile(b, a, std::abs(m));

    OracleResult out;
    out.value = detail::windowed_lattice_sum(spec, r_out, profile, oc.workers,
                                             [&](std::complex<double> s, double norm) {
                                                 const std::complex<double> p = s - m;
                                                 if (norm <= near) return disc_quadrature(rule, p, b);
                                                 return site_expansion(a, b, std::abs(p));
                                             });
    out.tail_bound = detail::outer_bound(spec, r_out, b, a[0], std::abs(m) + radius);
    return out;
}

OracleResult scaled(OracleResult r, double factor) {
    r.value *= factor;
    r.tail_bound *= factor;
    r.mc_stderr *= factor;
    return r;
}

// Midpoint rule with 12 nodes over one period pi/3; evenness pairs them, so
// six evaluations cover it. Harmonics cos(6 l theta) vanish for l < 12.
template <class F>
OracleResult theta_mean(F&& at) {
    constexpr int kNodes = 6;
    OracleResult out;
    for (int j = 0; j < kNodes; ++j) {
        const OracleResult r = at((j + 0.5) * std::numbers::pi / 36.0);
        out.value += r.value / kNodes;
        out.tail_bound += r.tail_bound / kNodes;
    }
    return out;
}

struct ClusterSampleKey {
    double b, rho0, angle, delta_tilde, radius, intensity, lattice_radius, near_radius;
    std::uint64_t draws, seed;
    unsigned workers;

    auto tie() const {
        return std::tie(b, rho0, angle, delta_tilde, radius, intensity, lattice_radius, near_radius, draws, seed,
                        workers);
    }
    bool operator<(const ClusterSampleKey& o) const { return tie() < o.tie(); }
};

struct BlockMoments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double y) {
        count += 1.0;
        const double d = y - mean;
        mean += d / count;
        m2 += d * (y - mean);
    }
    void merge(const BlockMoments& o) {
        if (o.count == 0.0) return;
        const double n = count + o.count;
        const double d = o.mean - mean;
        mean += d * o.count / n;
        m2 += o.m2 + d * d * count * o.count / n;
        count = n;
    }
};

// lambda sum_{c != 0} int_{disc c} |y - s0|^{-2b} dy in absolute units.
OracleResult cluster_interference_sum(const ClusterParams& cp, double b, const OracleConfig& oc) {
    const LatticeSpec spec{cp.delta_tilde};
    const std::complex<double> s0 = std::polar(cp.rho0, cp.rho0_angle);
    const double mass = cp.intensity * std::numbers::pi * cp.cluster_radius * cp.cluster_radius;
    const int cells = std::max(1, cp.derived_cell_count());
    const double cell_weight = mass / cells;
    const double near = oc.mc_near_radius * cp.delta_tilde * kEdge;

    std::vector<std::complex<double>> near_centers;
    for (const LatticePoint& p : enumerate_lattice(spec, near)) near_centers.push_back(p.position);

    const std::uint64_t blocks = (oc.mc_draws + kBlockDraws - 1) / kBlockDraws;
    std::vector<BlockMoments> moments(blocks);
    detail::parallel_for(blocks, oc.workers, [&](std::size_t blk) {
        std::mt19937_64 gen(detail::substream_seed(oc.seed, blk));
        const std::uint64_t first = blk * kBlockDraws;
        const std::uint64_t last = std::min(oc.mc_draws, first + kBlockDraws);
        BlockMoments acc;
        for (std::uint64_t d = first; d < last; ++d) {
            double y = 0.0;
            for (const auto& c : near_centers) {
                for (int n = 0; n < cells; ++n) {
                    const double rho = cp.cluster_radius * std::sqrt(detail::unit_uniform(gen));
                    const double phi = 2.0 * std::numbers::pi * detail::unit_uniform(gen);
                    y += std::pow(std::norm(c + std::polar(rho, phi) - s0), -b);
                }
            }
            acc.push(cell_weight * y);
        }
        moments[blk] = acc;
    });
    BlockMoments total;
    for (const auto& m : moments) total.merge(m);

    const auto a = disc_coefficients(b, [&](int j) {
        return mass * std::pow(cp.cluster_radius, 2.0 * j) / (j + 1.0);
    });
    const RadialProfile profile = shifted_profile(b, a, cp.rho0);
    const double r_out = oc.lattice_radius * cp.delta_tilde;
    const double far = detail::windowed_lattice_sum(spec, r_out, profile, oc.workers,
                                                    [&](std::complex<double> c, double norm) {
                                                        if (norm <= near) return 0.0;
                                                        return site_expansion(a, b, std::abs(c - s0));
                                                    });

    OracleResult out;
    out.value = total.mean + far;
    out.mc_stderr = std::sqrt(total.m2 / (total.count - 1.0) / total.count);
    out.tail_bound = detail::outer_bound(spec, r_out, b, mass, cp.rho0 + cp.cluster_radius);
    return out;
}

}  // namespace

void OracleConfig::validate() const {
    if (!(lattice_radius >= 10.0) || !std::isfinite(lattice_radius)) {
        throw DomainError("OracleConfig: lattice_radius must be at least 10 spacings");
    }
    if (quad_radial_order < 1 || quad_angular_order < 1) {
        throw DomainError("OracleConfig: quadrature orders must be positive");
    }
    if (mc_draws < 2) throw DomainError("OracleConfig: mc_draws must be at least 2");
    if (!(near_field_radius >= 1.0 && near_field_radius <= lattice_radius / 4.0)) {
        throw DomainError("OracleConfig: near_field_radius must lie in [1, lattice_radius / 4]");
    }
    if (!(mc_near_radius >= 1.0 && mc_near_radius <= lattice_radius / 4.0)) {
        throw DomainError("OracleConfig: mc_near_radius must lie in [1, lattice_radius / 4]");
    }
}

std::vector<OracleResult> oracle_epstein(std::span<const double> z, double radius, unsigned workers) {
    if (!(radius >= 10.0)) throw DomainError("oracle_epstein: radius must be at least 10");
    for (double zi : z) {
        if (!(zi > 1.0)) throw DomainError("oracle_epstein: z must exceed 1");
    }
    const std::vector<double> sums = detail::epstein_windowed(radius, z, workers);
    std::vector<OracleResult> out(z.size());
    const LatticeSpec unit{1.0};
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i].value = sums[i];
        out[i].tail_bound = epstein_tail_bound(z[i], unit, 0.5 * radius);
    }
    return out;
}

OracleResult oracle_epstein(double z, const OracleConfig& oc) {
    oc.validate();
    const double zs[1] = {z};
    return oracle_epstein(zs, oc.lattice_radius, oc.workers).front();
}

OracleResult oracle_dl_dl(double x, double theta, const NetworkParams& np, const OracleConfig& oc) {
    validate_macro_query(x, np, oc);
    if (x == 0.0) return {};
    const double b = np.b;
    const double r = x * np.delta;
    const std::complex<double> m = std::polar(r, theta);
    const LatticeSpec spec = macro_lattice(np.delta);
    const double r_out = oc.lattice_radius * np.delta;
    const RadialProfile profile = shifted_profile(b, {1.0}, r);

    OracleResult out;
    out.value = detail::windowed_lattice_sum(spec, r_out, profile, oc.workers,
                                             [&](std::complex<double> s, double) {
                                                 return std::pow(std::norm(s - m), -b);
                                             });
    out.tail_bound = detail::outer_bound(spec, r_out, b, 1.0, r);
    return scaled(out, std::pow(r, 2.0 * b));
}

OracleResult oracle_dl_dl_theta_mean(double x, const NetworkParams& np, const OracleConfig& oc) {
    return theta_mean([&](double theta) { return oracle_dl_dl(x, theta, np, oc); });
}

OracleResult oracle_ul_dl(double x, double theta, const NetworkParams& np, const OracleConfig& oc) {
    validate_macro_query(x, np, oc);
    if (!(x + np.cell_radius / np.delta < 1.0)) {
        throw DomainError("oracle_ul_dl: x + R/delta must be below 1");
    }
    if (x == 0.0) return {};
    const double r = x * np.delta;
    const OracleResult sum = macro_disc_sum(std::polar(r, theta), np, oc);
    return scaled(sum, np.p_target / np.p_dl * std::pow(r, 2.0 * np.b));
}

OracleResult oracle_ul_dl_theta_mean(double x, const NetworkParams& np, const OracleConfig& oc) {
    return theta_mean([&](double theta) { return oracle_ul_dl(x, theta, np, oc); });
}

OracleResult oracle_ul_ul(double x, const NetworkParams& np, const OracleConfig& oc) {
    validate_macro_query(x, np, oc);
    const double r = x * np.delta;
    const OracleResult sum = macro_disc_sum({0.0, 0.0}, np, oc);
    return scaled(sum, std::pow(r, 2.0 * np.b * (1.0 - np.k)));
}

OracleResult oracle_dl_ul(double x, const NetworkParams& np, const OracleConfig& oc) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("oracle_dl_ul: x must be a nonnegative number");
    if (np.p_dl == 0.0) return {};
    np.validate();
    oc.validate();
    const double r = x * np.delta;
    const double zs[1] = {np.b};
    const OracleResult unit = oracle_epstein(zs, oc.lattice_radius, oc.workers).front();
    const double factor =
        np.p_dl / np.p_target * std::pow(r, 2.0 * np.b * (1.0 - np.k)) * std::pow(np.delta, -2.0 * np.b);
    return scaled(unit, factor);
}

OracleResult oracle_cluster_dl_ul(const ClusterParams& cp, const SmallCellQuery& q, const OracleConfig& oc) {
    cp.validate();
    q.validate();
    oc.validate();
    if (cp.intensity == 0.0) return {};

    static std::mutex cache_mutex;
    static std::map<ClusterSampleKey, OracleResult> cache;
    const ClusterSampleKey key{q.b,          cp.rho0,           cp.rho0_angle,     cp.delta_tilde,
                               cp.cluster_radius, cp.intensity, oc.lattice_radius, oc.mc_near_radius,
                               oc.mc_draws,  oc.seed,           resolve_workers(oc.workers)};
    OracleResult sum;
    {
        std::unique_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            sum = it->second;
        } else {
            lock.unlock();
            sum = cluster_interference_sum(cp, q.b, oc);
            lock.lock();
            cache.emplace(key, sum);
        }
    }
    const double r = q.x_tilde * cp.delta_tilde;
    return scaled(sum, cp.p_small_dl / cp.p_small_target * std::pow(r, 2.0 * q.b * (1.0 - q.k)));
}

OracleResult oracle_cluster_dl_ul_angle_mean(const ClusterParams& cp, const SmallCellQuery& q,
                                             const OracleConfig& oc) {
    if (cp.rho0 == 0.0) return oracle_cluster_dl_ul(cp, q, oc);
    constexpr int kAngles = 4;
    ClusterParams at = cp;
    OracleConfig sub = oc;
    OracleResult out;
    double variance = 0.0;
    for (int j = 0; j < kAngles; ++j) {
        at.rho0_angle = (j + 0.5) * std::numbers::pi / (6.0 * kAngles);
        sub.seed = detail::substream_seed(oc.seed, 0x616e676c65ULL + static_cast<std::uint64_t>(j));
        const OracleResult r = oracle_cluster_dl_ul(at, q, sub);
        out.value += r.value / kAngles;
        out.tail_bound += r.tail_bound / kAngles;
        variance += r.mc_stderr * r.mc_stderr;
    }
    out.mc_stderr = std::sqrt(variance) / kAngles;
    return out;
}

OracleResult oracle_coverage(double gamma, const ClusterParams& cp, const SmallCellQuery& q, const OracleConfig& oc,
                             const SeriesControl& sc) {
    if (!(gamma > 0.0)) throw DomainError("oracle_coverage: gamma must be positive");
    oc.validate();
    SmallCellQuery at = q;
    at.x_tilde = 0.0;
    const double denominator = coef_a2_tilde(cp, at, sc) + noise_term(cp, at).y0;
    const double exponent = 2.0 * q.b * (1.0 - q.k);
    const double scale = cp.smallcell_radius / cp.delta_tilde;

    const std::uint64_t blocks = (oc.mc_draws + kBlockDraws - 1) / kBlockDraws;
    std::vector<std::uint64_t> hits(blocks, 0);
    detail::parallel_for(blocks, oc.workers, [&](std::size_t blk) {
        std::mt19937_64 gen(detail::substream_seed(oc.seed, blk));
        const std::uint64_t first = blk * kBlockDraws;
        const std::uint64_t last = std::min(oc.mc_draws, first + kBlockDraws);
        std::uint64_t count = 0;
        for (std::uint64_t d = first; d < last; ++d) {
            const double x = scale * std::sqrt(detail::unit_uniform(gen));
            const double interference = denominator * std::pow(x, exponent);
            if (gamma * interference < 1.0) ++count;
        }
        hits[blk] = count;
    });
    std::uint64_t total = 0;
    for (auto h : hits) total += h;
    const double n = static_cast<double>(oc.mc_draws);
    OracleResult out;
    out.value = static_cast<double>(total) / n;
    out.mc_stderr = std::sqrt(out.value * (1.0 - out.value) / n);
    return out;
}

}  // namespace dtdd
