#pragma once

#include <array>

#include "dtdd/specfun.hpp"

namespace dtdd {

/// ln(n!) from a table built on first use; falls back to gamma_ln past it.
inline double log_factorial(int n) {
    constexpr int kTable = 4096;
    static const std::array<double, kTable> table = [] {
        std::array<double, kTable> t{};
        for (int i = 0; i < kTable; ++i) t[static_cast<std::size_t>(i)] = gamma_ln(i + 1.0);
        return t;
    }();
    return n < kTable ? table[static_cast<std::size_t>(n)] : gamma_ln(n + 1.0);
}

}  // namespace dtdd
