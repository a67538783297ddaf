#pragma once

// Complex-plane geometry of H = p^2 + x^{2M} (ix)^eps: the potential on the
// cut plane, the centres of the two decay wedges, and the turning points.

#include <complex>

namespace ptwell {

using cplx = std::complex<double>;

// The Hamiltonian p^2 + x^{2M} (ix)^eps. Branch: (ix)^eps = exp(eps Log(ix)),
// principal Log, so the cut runs up the positive imaginary x axis.
struct ModelSpec {
    int M = 1;
    double epsilon = 0.0;

    // 2M + eps, the total power of |x| in the potential.
    double degree() const { return 2.0 * M + epsilon; }
};

void validate(const ModelSpec& model);

namespace geometry {

struct WedgePair {
    double theta_left;
    double theta_right;
    double opening;
};

struct TurningPair {
    cplx x_left;
    cplx x_right;
};

cplx potential_value(const ModelSpec& model, cplx x);

// Potential at x = r e^{i theta} with theta in [-pi, 0], evaluated in polar form.
cplx potential_polar(const ModelSpec& model, double r, double theta);

WedgePair wedge_angles(const ModelSpec& model);

TurningPair turning_points(const ModelSpec& model, double energy);

}  // namespace geometry

}  // namespace ptwell
