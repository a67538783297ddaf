#include "ptwell/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptwell/error.hpp"

namespace ptwell {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate(const ModelSpec& model) {
    if (model.M < 1) throw DomainError("model: M must be a positive integer, got " + std::to_string(model.M));
    if (!(model.epsilon >= 0.0) || !std::isfinite(model.epsilon)) {
        throw DomainError("model: epsilon must be finite and >= 0, got " + std::to_string(model.epsilon));
    }
}

namespace geometry {

cplx potential_value(const ModelSpec& model, cplx x) {
    validate(model);
    if (x == cplx{0.0, 0.0}) return {0.0, 0.0};
    const cplx ix{-x.imag(), x.real()};
    // arg(ix) = pi exactly <=> x on the positive imaginary axis
    if (model.epsilon != 0.0 && ix.imag() == 0.0 && ix.real() < 0.0) {
        throw BranchCutError("potential evaluated on the branch cut (positive imaginary axis)");
    }
    const double log_r = std::log(std::abs(x));
    const double phase = 2.0 * model.M * std::arg(x) + model.epsilon * std::arg(ix);
    return std::polar(std::exp(model.degree() * log_r), phase);
}

cplx potential_polar(const ModelSpec& model, double r, double theta) {
    if (r == 0.0) return {0.0, 0.0};
    const double phase = 2.0 * model.M * theta + model.epsilon * (theta + kPi / 2.0);
    return std::polar(std::pow(r, model.degree()), phase);
}

WedgePair wedge_angles(const ModelSpec& model) {
    validate(model);
    const double eps = model.epsilon;
    const double offset = eps * kPi / (4.0 * model.M + 2.0 * eps + 4.0);
    return WedgePair{-kPi + offset, -offset, 2.0 * kPi / (2.0 * model.M + eps + 2.0)};
}

TurningPair turning_points(const ModelSpec& model, double energy) {
    validate(model);
    if (!(energy > 0.0)) throw DomainError("turning_points: energy must be positive");
    const double n = model.degree();
    const double radius = std::pow(energy, 1.0 / n);
    // x^{2M}(ix)^eps = E on the circle |x| = E^{1/n}: phase n*theta + eps*pi/2 = 0
    const double angle = model.epsilon * kPi / (2.0 * n);
    return TurningPair{std::polar(radius, -kPi + angle), std::polar(radius, -angle)};
}

}  // namespace geometry

}  // namespace ptwell
