#include "ptwell/wkb.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptwell/error.hpp"
#include "ptwell/quadrature.hpp"
#include "ptwell/specfun.hpp"

namespace ptwell::wkb {

namespace {

constexpr double kPi = std::numbers::pi;

void require_level(int k) {
    if (k < 0) throw DomainError("level index k must be >= 0, got " + std::to_string(k));
}

void require_epsilon(double epsilon) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be finite and >= 0");
}

struct Sample {
    cplx root;    // sqrt(E - V) before branch alignment
    cplx weight;  // quadrature weight times dx/ds times the substitution Jacobian
};

cplx chord_action(const ModelSpec& model, double energy, const std::vector<cplx>& vertices, int nodes) {
    const quadrature::Rule rule = quadrature::gauss_legendre(nodes);
    std::vector<Sample> samples;
    samples.reserve(rule.nodes.size() * (vertices.size() - 1));
    for (std::size_t seg = 0; seg + 1 < vertices.size(); ++seg) {
        const cplx a = vertices[seg];
        const cplx b = vertices[seg + 1];
        const cplx mid = 0.5 * (a + b);
        const cplx half = 0.5 * (b - a);
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            // s = sin(phi), phi in [-pi/2, pi/2]
            const double phi = 0.5 * kPi * rule.nodes[j];
            const double s = std::sin(phi);
            const double jac = 0.5 * kPi * std::cos(phi);
            const cplx x = mid + half * s;
            const cplx v = geometry::potential_value(model, x);
            samples.push_back({std::sqrt(energy - v), rule.weights[j] * jac * half});
        }
    }
    // continuity of the square-root branch, starting from the middle sample
    const std::size_t centre = samples.size() / 2;
    for (std::size_t i = centre + 1; i < samples.size(); ++i) {
        if (std::abs(samples[i].root - samples[i - 1].root) > std::abs(samples[i].root + samples[i - 1].root)) {
            samples[i].root = -samples[i].root;
        }
    }
    for (std::size_t i = centre; i-- > 0;) {
        if (std::abs(samples[i].root - samples[i + 1].root) > std::abs(samples[i].root + samples[i + 1].root)) {
            samples[i].root = -samples[i].root;
        }
    }
    cplx total = 0.0;
    for (const Sample& sm : samples) total += sm.root * sm.weight;
    return total.real() < 0.0 ? -total : total;
}

double real_action(const ModelSpec& model, double energy, const std::vector<cplx>& interior, int nodes) {
    validate(model);
    if (!(energy > 0.0)) throw DomainError("action_integral: energy must be positive");
    const geometry::TurningPair tp = geometry::turning_points(model, energy);
    std::vector<cplx> vertices;
    vertices.push_back(tp.x_left);
    for (const cplx& p : interior) {
        if (p.imag() > 0.0) throw BranchCutError("action_integral: path leaves the lower half-plane");
        vertices.push_back(p);
    }
    vertices.push_back(tp.x_right);
    for (int n = nodes; n <= 16 * nodes; n *= 2) {
        const cplx value = chord_action(model, energy, vertices, n);
        if (std::abs(value.imag()) <= 1e-9 * std::max(1.0, std::abs(value.real()))) return value.real();
    }
    throw BranchCutError("action_integral: integral did not come out real; the path crosses a branch discontinuity");
}

// Bracketed Illinois iteration on a monotone increasing function.
template <class F>
double solve_increasing(F&& f, double target, double guess) {
    double lo = guess;
    double hi = guess;
    double f_lo = f(lo) - target;
    if (f_lo == 0.0) return guess;
    double f_hi = f_lo;
    int expansions = 0;
    while (f_lo > 0.0) {
        hi = lo;
        f_hi = f_lo;
        lo *= 0.5;
        f_lo = f(lo) - target;
        if (++expansions > 200) throw ConvergenceError("wkb: failed to bracket the quantization root");
    }
    while (f_hi < 0.0) {
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = f(hi) - target;
        if (++expansions > 200) throw ConvergenceError("wkb: failed to bracket the quantization root");
    }
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    int side = 0;
    for (int it = 0; it < 200; ++it) {
        const double x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        const double fx = f(x) - target;
        if (fx == 0.0 || std::abs(hi - lo) <= 1e-15 * std::abs(x)) return x;
        if ((fx < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = fx;
            if (side == -1) f_hi *= 0.5;
            side = -1;
        } else {
            hi = x;
            f_hi = fx;
            if (side == 1) f_lo *= 0.5;
            side = 1;
        }
        if (std::abs(hi - lo) <= 4e-16 * std::abs(x)) return x;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double action_integral(const ModelSpec& model, double energy, int nodes) { return real_action(model, energy, {}, nodes); }

double action_integral_path(const ModelSpec& model, double energy, const std::vector<cplx>& interior, int nodes) {
    return real_action(model, energy, interior, nodes);
}

double energy_closed(int k, double epsilon) {
    require_level(k);
    require_epsilon(epsilon);
    const double e = epsilon;
    const double base = specfun::gamma((3.0 * e + 8.0) / (2.0 * e + 4.0)) * std::sqrt(kPi) * (k + 0.5) /
                        (std::sin(kPi / (e + 2.0)) * specfun::gamma((e + 3.0) / (e + 2.0)));
    return std::pow(base, (2.0 * e + 4.0) / (e + 4.0));
}

double energy_quadrature(const ModelSpec& model, int k) {
    validate(model);
    require_level(k);
    const double target = (k + 0.5) * kPi;
    return solve_increasing([&](double e) { return action_integral(model, e); }, target, 2.0 * k + 1.0);
}

double energy_next(int k, double epsilon) {
    require_level(k);
    const double e = epsilon;
    const double n = k + 0.5;
    const double correction =
        1.0 + (2.0 + e) * (1.0 + e) * std::sin(2.0 * kPi / (2.0 + e)) / (6.0 * kPi * n * n * (4.0 + e) * (4.0 + e));
    return energy_closed(k, epsilon) * correction;
}

double asymptotic_energy(int M, int k, int P, double epsilon) {
    require_level(k);
    if (M < 1) throw DomainError("asymptotic_energy: M must be >= 1");
    if (P < 1 || P > M) throw DomainError("asymptotic_energy: P must lie in [1, M], got " + std::to_string(P));
    const double nu = k + static_cast<double>(P) / (M + 1);
    return 0.25 * nu * nu * epsilon * epsilon;
}

double exact_linear_coefficient() { return 0.25 * (1.0 + specfun::kEulerGamma + 2.0 * std::numbers::ln2); }

double wkb_linear_coefficient() { return 0.25 * (7.0 / 3.0 + std::numbers::ln2); }

double ground_expansion_exact(double epsilon) {
    if (!(epsilon > 1.0)) throw DomainError("ground_expansion_exact: requires eps > 1");
    return epsilon * epsilon / 16.0 - 0.25 * epsilon * std::log(epsilon) + exact_linear_coefficient() * epsilon;
}

double ground_expansion_wkb(double epsilon) {
    if (!(epsilon > 1.0)) throw DomainError("ground_expansion_wkb: requires eps > 1");
    return epsilon * epsilon / 16.0 - 0.25 * epsilon * std::log(epsilon) + wkb_linear_coefficient() * epsilon;
}

double seed_energy(const ModelSpec& model, int k) {
    return model.M == 1 ? energy_closed(k, model.epsilon) : energy_quadrature(model, k);
}

}  // namespace ptwell::wkb
