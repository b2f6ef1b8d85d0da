#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "dtdd/errors.hpp"

namespace dtdd {

/// What to do when a series reaches h_max before the stopping rule fires.
enum class CapPolicy {
    Throw,     ///< raise ConvergenceError (default)
    Truncate,  ///< return the partial sum through h_max
};

/// Truncation policy shared by every infinite series in the library.
///
/// Summation over h = 0, 1, ..., h_max stops at the first h >= 5 whose term
/// is below rel_stop times the running partial sum.
struct SeriesControl {
    int h_max = 1000;
    double rel_stop = 1e-14;
    CapPolicy on_cap = CapPolicy::Throw;

    void validate() const;
};

struct SeriesSum {
    double value = 0.0;
    int terms = 0;
    bool converged = false;
};

/// Sums term(h) for h = 0, 1, ... under `sc`. Every term must be finite and
/// nonnegative, so partial sums are monotone in h.
template <class TermFn>
SeriesSum sum_nonnegative_series(const SeriesControl& sc, std::string_view name, TermFn&& term) {
    SeriesSum out;
    for (int h = 0; h <= sc.h_max; ++h) {
        const double t = term(h);
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw ConvergenceError(std::string(name) + ": series term " + std::to_string(h) +
                                       " is negative or not finite",
                                   h);
        }
        out.value += t;
        out.terms = h + 1;
        if (h >= 5 && (t < sc.rel_stop * out.value || (t == 0.0 && out.value == 0.0))) {
            out.converged = true;
            return out;
        }
    }
    if (sc.on_cap == CapPolicy::Throw) {
        throw ConvergenceError(std::string(name) + ": no convergence within h_max = " + std::to_string(sc.h_max),
                               out.terms);
    }
    return out;
}

}  // namespace dtdd
