#pragma once

#include <functional>
#include <vector>

namespace ptwell::quadrature {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(int n);

struct Estimate {
    double value;
    double error;
    int evaluations;
};

// Adaptive Gauss-Kronrod (7/15) on [a, b]. Integrable endpoint singularities
// are handled by bisection. Throws ConvergenceError if tol is not reached.
Estimate adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol, double rel_tol = 1e-12,
                  int max_depth = 60);

// Same on [a, inf) through t = a + u / (1 - u).
Estimate adaptive_semi_infinite(const std::function<double(double)>& f, double a, double abs_tol,
                                double rel_tol = 1e-12);

}  // namespace ptwell::quadrature
