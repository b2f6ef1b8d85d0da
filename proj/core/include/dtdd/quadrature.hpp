#pragma once

#include <vector>

namespace dtdd {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]; nodes ascending.
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// n-point trapezoid rule on a full period [0, 2 pi); equal weights 2 pi / n.
QuadratureRule periodic_trapezoid(int n);

}  // namespace dtdd
