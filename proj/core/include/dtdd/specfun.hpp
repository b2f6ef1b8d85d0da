#pragma once

// Special-function kernel for the hexagonal-lattice interference series:
// log-Gamma, Riemann and Hurwitz zeta, and the lattice function
//
//     omega(z) = 3^{-z} zeta(z) (zeta(z, 1/3) - zeta(z, 2/3)),
//
// which equals one sixth of the Epstein zeta sum of the unit hexagonal
// lattice, sum_{(u,v) != 0} (u^2 + uv + v^2)^{-z}.

namespace dtdd {

struct SpecFunAccuracy {
    double rel_tol = 1e-12;  ///< target relative error
    int max_terms = 1 << 20; ///< cap on directly summed terms before the Euler-Maclaurin tail

    /// Throws DomainError unless 0 < rel_tol < 1 and max_terms >= 10.
    void validate() const;
};

/// ln Gamma(z) for z > 0.
double gamma_ln(double z);

/// Riemann zeta for z > 1. Defined as hurwitz_zeta(z, 1, acc), bit for bit.
double riemann_zeta(double z, const SpecFunAccuracy& acc = {});

/// Hurwitz zeta sum_{n>=0} (n + a)^{-z} for z > 1, 0 < a <= 1.
///
/// Direct summation of the first N terms followed by the Euler-Maclaurin
/// remainder (integral, half-term and Bernoulli corrections). N starts at
/// max(10, ceil(z/pi) + 1) and doubles until the first omitted Bernoulli
/// correction is below rel_tol of the total, so the truncation point is a
/// deterministic function of (z, a, rel_tol).
double hurwitz_zeta(double z, double a, const SpecFunAccuracy& acc = {});

/// c^{-z} * hurwitz_zeta(z, a): the same sum with every term rescaled,
/// which stays finite where 3^{z} alone would overflow.
double hurwitz_zeta_scaled(double z, double a, double c, const SpecFunAccuracy& acc = {});

/// Hexagonal lattice function omega(z), z > 1. Memoized per (z, accuracy)
/// in a per-thread cache.
double omega(double z, const SpecFunAccuracy& acc = {});

/// omega without the cache.
double omega_uncached(double z, const SpecFunAccuracy& acc = {});

}  // namespace dtdd
