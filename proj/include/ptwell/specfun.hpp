#pragma once

// Double-precision special functions: Gamma, and Bessel functions of real
// non-negative order and complex argument on the principal sheet.

#include <complex>

namespace ptwell::specfun {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double euler_gamma();

// Gamma function; throws DomainError at the poles 0, -1, -2, ...
double gamma(double x);

// I_nu(w), K_nu(w) and their w-derivatives, with a common exponential scale
// removed:  I = i * exp(|Re w|),  K = k * exp(-Re w).
// Valid for nu >= 0 and w != 0 with arg w in (-pi, pi].
struct ScaledIK {
    cplx i;
    cplx di;
    cplx k;
    cplx dk;
};

ScaledIK bessel_ik_scaled(double nu, cplx w);

cplx bessel_i(double nu, cplx w);
cplx bessel_k(double nu, cplx w);
cplx bessel_i_scaled(double nu, cplx w);  // I_nu(w) exp(-|Re w|)
cplx bessel_k_scaled(double nu, cplx w);  // K_nu(w) exp(Re w)

// Ordinary Bessel functions. Y requires non-integer nu.
cplx bessel_j(double nu, cplx w);
cplx bessel_y(double nu, cplx w);

// Coefficients of the continuation formulas
//   I_nu(e^{m pi i} w) = a * I_nu(w)
//   K_nu(e^{m pi i} w) = b * K_nu(w) + c * I_nu(w)
struct Rotation {
    cplx a;
    cplx b;
    cplx c;
};

Rotation rotation(double nu, int m);

namespace detail {

// Individual evaluation routes, exposed for cross-checking in tests.
// Both require Re w >= 0.
ScaledIK ik_steed(double nu, cplx w);
ScaledIK ik_asymptotic(double nu, cplx w);

// Switchover radius between the two routes above.
double asymptotic_radius(double nu);

cplx bessel_i_series(double nu, cplx w);

}  // namespace detail

}  // namespace ptwell::specfun
