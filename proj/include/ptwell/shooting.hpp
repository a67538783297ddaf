#pragma once

// Finite-eps eigensolver. The Schroedinger equation is integrated inward
// from an outer point deep in each decay wedge: along the anti-Stokes ray
// down to the turning radius, then horizontally to a matching point on the
// negative imaginary axis, where the left and right solutions are matched.
// The horizontal leg runs through the region where the solution oscillates;
// continuing down the rays to the origin would leave the eigenvalue
// condition in an exponentially small component once eps is large.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptwell/geometry.hpp"

namespace ptwell::shooting {

struct RayContour {
    double angle = 0.0;  // direction of the ray, in [-pi, 0]
    double outer_radius = 1.0;
    double corner_radius = 0.0;  // where the path leaves the ray
    cplx matching_point{0.0, 0.0};

    cplx outer_point() const { return std::polar(outer_radius, angle); }
    cplx corner() const { return std::polar(corner_radius, angle); }
};

struct Options {
    double rtol = 1e-11;           // Runge-Kutta relative tolerance
    double tol = 1e-10;            // secant convergence |dE| <= tol |E|
    double decay_depth = 25.0;     // WKB exponent accumulated beyond the turning point
    double radius_factor = 1.0;    // multiplies the outer radius found from decay_depth
    int max_iterations = 60;
};

struct EigenResult {
    int k = 0;
    cplx E{0.0, 0.0};
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string message;
};

// Solution vector (psi, dpsi/dx) at the matching point, normalised so that
// |psi| + |dpsi/dx| = 1.
struct RayEnd {
    cplx psi;
    cplx dpsi;
};

// Decay exponent Re int e^{i theta} sqrt(V - E) ds from the turning radius to r.
double decay_exponent(const ModelSpec& model, cplx energy, double angle, double r);

std::pair<RayContour, RayContour> build_contour(const ModelSpec& model, double energy_guess,
                                                const Options& opt = {});

RayEnd integrate_ray(const ModelSpec& model, cplx energy, const RayContour& ray, double rtol);

// Integrate along an arbitrary polyline in the lower half-plane, starting
// from the outward-decaying WKB solution at path.front().
RayEnd integrate_path(const ModelSpec& model, cplx energy, const std::vector<cplx>& path, double rtol);

// psi'/psi at the matching point. tol must lie in [1e-13, 1e-6].
cplx integrate_log_derivative(const ModelSpec& model, cplx energy, const RayContour& ray, double tol);

// Normalised Wronskian of the left and right solutions at the matching point; its
// zeros in E are the eigenvalues. Equals a positive multiple of
// psi_L psi_R (u_L - u_R) with u = psi'/psi.
cplx mismatch(const ModelSpec& model, cplx energy, const Options& opt = {});

EigenResult solve_level(const ModelSpec& model, int k, std::optional<cplx> seed = std::nullopt,
                        const Options& opt = {});

struct ScanPoint {
    ModelSpec model;
    EigenResult result;
};

struct ScanResult {
    std::vector<ScanPoint> points;  // ordered by grid position, then k
    std::vector<bool> monotone;     // per level: Re E non-decreasing along the grid
};

// Levels k = 0..k_max at every grid point, continuing each level from the
// previous grid point. Levels are solved concurrently (PT_WELL_THREADS caps
// the thread count); the output order does not depend on scheduling.
ScanResult scan_levels(const std::vector<ModelSpec>& grid, int k_max, const Options& opt = {});

}  // namespace ptwell::shooting
