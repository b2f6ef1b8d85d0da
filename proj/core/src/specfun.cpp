#include "dtdd/specfun.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <unordered_map>

#include <boost/math/special_functions/gamma.hpp>

#include "dtdd/errors.hpp"

namespace dtdd {
namespace {

// B_{2j} / (2j)!, j = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    8.33333333333333287e-02,  -1.38888888888888894e-03, 3.30687830687830710e-05,
    -8.26719576719576754e-07, 2.08767569878681002e-08,  -5.28419013868749322e-10,
    1.33825365306846789e-11,  -3.38968029632258272e-13, 8.58606205627784517e-15,
    -2.17486869855806192e-16, 5.50900282836022953e-18,  -1.39544646858125223e-19,
    3.53470703962946728e-21,  -8.95351742703754628e-23, 2.26795245233768293e-24,
};

struct OmegaKey {
    double z;
    double rel_tol;
    int max_terms;
    bool operator==(const OmegaKey&) const = default;
};

struct OmegaKeyHash {
    std::size_t operator()(const OmegaKey& k) const noexcept {
        std::uint64_t h = std::bit_cast<std::uint64_t>(k.z);
        h ^= std::bit_cast<std::uint64_t>(k.rel_tol) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(k.max_terms) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

constexpr std::size_t kOmegaCacheLimit = 1 << 16;

}  // namespace

void SpecFunAccuracy::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw DomainError("SpecFunAccuracy: rel_tol must lie in (0, 1)");
    }
    if (max_terms < 10) {
        throw DomainError("SpecFunAccuracy: max_terms must be >= 10");
    }
}

double gamma_ln(double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError("gamma_ln: argument must be positive and finite, got " + std::to_string(z));
    }
    return boost::math::lgamma(z);
}

double hurwitz_zeta_scaled(double z, double a, double c, const SpecFunAccuracy& acc) {
    acc.validate();
    if (!(z > 1.0) || !std::isfinite(z)) {
        throw DomainError("hurwitz_zeta: requires z > 1, got " + std::to_string(z));
    }
    if (!(a > 0.0 && a <= 1.0)) {
        throw DomainError("hurwitz_zeta: requires 0 < a <= 1, got " + std::to_string(a));
    }
    if (!(c > 0.0)) {
        throw DomainError("hurwitz_zeta: scale must be positive");
    }

    // Successive Bernoulli corrections shrink roughly by (z + 2j)^2 / (2 pi x)^2,
    // so start with x of order z / pi.
    long n = std::max(10L, static_cast<long>(std::ceil(z / std::numbers::pi)) + 1);
    for (; n <= acc.max_terms; n *= 2) {
        double direct = 0.0;
        for (long i = n - 1; i >= 0; --i) {
            direct += std::exp(-z * std::log(c * (static_cast<double>(i) + a)));
        }

        const double x = static_cast<double>(n) + a;
        const double lead = std::exp(-z * std::log(c * x));  // (c x)^{-z}
        double tail = lead * x / (z - 1.0) + 0.5 * lead;

        double rising = z;       // z (z+1) ... (z+2j)
        double xpow = lead / x;  // c^{-z} x^{-z-2j-1}
        for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
            const double term = kBernoulliOverFactorial[j] * rising * xpow;
            tail += term;
            if (std::abs(term) <= acc.rel_tol * std::abs(direct + tail)) {
                return direct + tail;
            }
            const double k = static_cast<double>(2 * j);
            rising *= (z + k + 1.0) * (z + k + 2.0);
            xpow /= x * x;
        }
    }
    throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin tail did not reach rel_tol within max_terms",
                           acc.max_terms);
}

double hurwitz_zeta(double z, double a, const SpecFunAccuracy& acc) {
    return hurwitz_zeta_scaled(z, a, 1.0, acc);
}

double riemann_zeta(double z, const SpecFunAccuracy& acc) {
    return hurwitz_zeta(z, 1.0, acc);
}

double omega_uncached(double z, const SpecFunAccuracy& acc) {
    if (!(z > 1.0)) {
        throw DomainError("omega: requires z > 1, got " + std::to_string(z));
    }
    // 3^{-z} zeta(z,1/3) = sum (3n+1)^{-z} and 3^{-z} zeta(z,2/3) = sum (3n+2)^{-z};
    // evaluating the scaled sums keeps large z finite.
    const double first = hurwitz_zeta_scaled(z, 1.0 / 3.0, 3.0, acc);
    const double second = hurwitz_zeta_scaled(z, 2.0 / 3.0, 3.0, acc);
    return riemann_zeta(z, acc) * (first - second);
}

double omega(double z, const SpecFunAccuracy& acc) {
    thread_local std::unordered_map<OmegaKey, double, OmegaKeyHash> cache;
    const OmegaKey key{z, acc.rel_tol, acc.max_terms};
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    const double value = omega_uncached(z, acc);
    if (cache.size() >= kOmegaCacheLimit) {
        cache.clear();
    }
    cache.emplace(key, value);
    return value;
}

}  // namespace dtdd
