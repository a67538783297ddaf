#pragma once

// Period of the classical complex pendulum of p^2 + x^2 (ix)^eps.

namespace ptwell::classical {

struct PeriodResult {
    double T;
    double ET_product;  // E * T
};

// T = 4 sqrt(pi) E^{-eps/(4+2eps)} Gamma((3+eps)/(2+eps)) cos(eps pi/(4+2eps)) / Gamma((4+eps)/(4+2eps))
PeriodResult period_exact(double epsilon, double E);

// Large-eps form 4 pi / (eps sqrt(E)).
double period_asymptotic(double epsilon, double E);

}  // namespace ptwell::classical
