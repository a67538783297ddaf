#pragma once

#include <vector>

#include "ptwell/geometry.hpp"

namespace ptwell::wkb {

// Integral of sqrt(E - V(x)) from the left to the right turning point along
// the straight chord joining them. Gauss-Legendre after a sine substitution
// that absorbs the square-root zeros at both ends.
double action_integral(const ModelSpec& model, double energy, int nodes = 200);

// Same integral along an arbitrary polyline from x_left to x_right through the
// given interior vertices (all in the closed lower half-plane).
double action_integral_path(const ModelSpec& model, double energy, const std::vector<cplx>& interior, int nodes = 200);

// Leading-order closed form for M = 1.
double energy_closed(int k, double epsilon);

// Root of action_integral(model, E) = (k + 1/2) pi, any M.
double energy_quadrature(const ModelSpec& model, int k);

// Closed form including the next WKB correction (M = 1). The formula is the
// large-k expansion; it is exposed for every k.
double energy_next(int k, double epsilon);

// Large-eps spectrum E ~ (k + P/(M+1))^2 eps^2 / 4, 1 <= P <= M.
double asymptotic_energy(int M, int k, int P, double epsilon);

// Large-eps ground-state expansions through O(eps):
//   eps^2/16 - (eps ln eps)/4 + c eps
double ground_expansion_exact(double epsilon);  // c = (1 + gamma + 2 ln 2) / 4
double ground_expansion_wkb(double epsilon);    // c = (7/3 + ln 2) / 4

double exact_linear_coefficient();
double wkb_linear_coefficient();

// The WKB seed used by the shooting solver: closed form for M = 1,
// quadrature otherwise.
double seed_energy(const ModelSpec& model, int k);

}  // namespace ptwell::wkb
