#include "ptwell/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numbers>
#include <string>
#include <thread>

#include "ptwell/error.hpp"
#include "ptwell/ode.hpp"
#include "ptwell/wkb.hpp"

namespace ptwell::shooting {

namespace {

constexpr double kPi = std::numbers::pi;

// |Re(e^{i theta} sqrt(V - E))|: local decay rate along the ray.
double decay_rate(const ModelSpec& model, cplx energy, double angle, double r) {
    const cplx q = std::sqrt(geometry::potential_polar(model, r, angle) - energy);
    return std::abs((std::polar(1.0, angle) * q).real());
}

double turning_radius(const ModelSpec& model, cplx energy) {
    return std::pow(std::max(std::abs(energy), 1e-300), 1.0 / model.degree());
}

unsigned thread_cap() {
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PT_WELL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) cap = static_cast<unsigned>(v);
    }
    return cap;
}

}  // namespace

double decay_exponent(const ModelSpec& model, cplx energy, double angle, double r) {
    const double r0 = turning_radius(model, energy);
    if (r <= r0) return 0.0;
    // Simpson on a geometric-ish grid; the integrand is smooth beyond the turning point
    const int n = 400;
    const double h = (r - r0) / n;
    double sum = decay_rate(model, energy, angle, r0) + decay_rate(model, energy, angle, r);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * decay_rate(model, energy, angle, r0 + i * h);
    return sum * h / 3.0;
}

std::pair<RayContour, RayContour> build_contour(const ModelSpec& model, double energy_guess, const Options& opt) {
    validate(model);
    if (!(energy_guess > 0.0)) throw DomainError("build_contour: energy guess must be positive");
    const geometry::WedgePair wedges = geometry::wedge_angles(model);
    const cplx energy{energy_guess, 0.0};
    const double r0 = turning_radius(model, energy);

    // march outward until the accumulated decay exponent reaches the target depth
    double r = r0;
    double acc = 0.0;
    double g_prev = decay_rate(model, energy, wedges.theta_right, r);
    while (acc < opt.decay_depth) {
        const double g_est = std::max(g_prev, 1e-3);
        const double dr = std::min(0.02 * r, opt.decay_depth / (400.0 * g_est));
        const double g = decay_rate(model, energy, wedges.theta_right, r + dr);
        acc += 0.5 * (g + g_prev) * dr;
        r += dr;
        g_prev = g;
    }
    const double radius = std::max(r, 1.001 * r0) * opt.radius_factor;
    // leave the rays at the turning radius and meet on the negative imaginary axis
    const cplx corner = std::polar(r0, wedges.theta_right);
    const cplx match{0.0, corner.imag()};
    return {RayContour{wedges.theta_left, radius, r0, match}, RayContour{wedges.theta_right, radius, r0, match}};
}

RayEnd integrate_path(const ModelSpec& model, cplx energy, const std::vector<cplx>& path, double rtol) {
    if (path.size() < 2) throw DomainError("integrate_path: needs at least two vertices");
    const double n = model.degree();

    // initial data: leading WKB solution decaying outward, psi'/psi = -q - V'/(4 q^2)
    const cplx x_out = path.front();
    const cplx outward = (path.front() - path[1]) / std::abs(path.front() - path[1]);
    const cplx v_out = geometry::potential_value(model, x_out);
    cplx q = std::sqrt(v_out - energy);
    if ((q * outward).real() < 0.0) q = -q;
    const cplx u0 = -q - (n * v_out / x_out) / (4.0 * q * q);

    ode::State<2> y{cplx{1.0, 0.0}, u0};
    auto renormalise = [](double, ode::State<2>& s) {
        const double mag = std::abs(s[0]) + std::abs(s[1]);
        if (mag > 1e100 || mag < 1e-100) {
            s[0] /= mag;
            s[1] /= mag;
            return true;
        }
        return false;
    };
    renormalise(0.0, y);
    const double mag0 = std::abs(y[0]) + std::abs(y[1]);
    y[0] /= mag0;
    y[1] /= mag0;

    ode::Options opt;
    opt.rtol = rtol;
    for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
        const cplx a = path[seg];
        const cplx d = path[seg + 1] - a;  // x = a + t d, t in [0, 1]
        if (std::abs(d) == 0.0) continue;
        auto potential = [&](double t) { return geometry::potential_value(model, a + t * d); };
        auto rhs = [&](double t, const ode::State<2>& s) {
            return ode::State<2>{d * s[1], d * (potential(t) - energy) * s[0]};
        };
        auto norm = [&](double t, const ode::State<2>& err, const ode::State<2>& y0, const ode::State<2>& y1) {
            const double w = 1.0 + std::sqrt(std::abs(potential(t) - energy));
            const double scale =
                std::max({std::abs(y0[0]) * w, std::abs(y1[0]) * w, std::abs(y0[1]), std::abs(y1[1])});
            return std::max(std::abs(err[0]) * w, std::abs(err[1])) / scale;
        };
        ode::integrate<2>(rhs, norm, renormalise, 0.0, 1.0, y, opt);
    }

    const double mag = std::abs(y[0]) + std::abs(y[1]);
    if (!std::isfinite(mag) || mag == 0.0) throw ConvergenceError("integrate_path: solution lost (renormalisation overflow)");
    return RayEnd{y[0] / mag, y[1] / mag};
}

RayEnd integrate_ray(const ModelSpec& model, cplx energy, const RayContour& ray, double rtol) {
    std::vector<cplx> path{ray.outer_point()};
    if (ray.corner_radius > 0.0 && ray.corner_radius < ray.outer_radius) path.push_back(ray.corner());
    path.push_back(ray.matching_point);
    return integrate_path(model, energy, path, rtol);
}

cplx integrate_log_derivative(const ModelSpec& model, cplx energy, const RayContour& ray, double tol) {
    if (!(tol >= 1e-13 && tol <= 1e-6)) throw DomainError("integrate_log_derivative: tol must lie in [1e-13, 1e-6]");
    const RayEnd end = integrate_ray(model, energy, ray, tol);
    return end.dpsi / end.psi;
}

cplx mismatch(const ModelSpec& model, cplx energy, const Options& opt) {
    const double guess = std::max(std::abs(energy), 1e-8);
    const auto [left, right] = build_contour(model, guess, opt);
    const RayEnd l = integrate_ray(model, energy, left, opt.rtol);
    const RayEnd r = integrate_ray(model, energy, right, opt.rtol);
    const double kappa = 1.0 + std::sqrt(std::abs(energy));
    const double nl = std::abs(l.psi) + std::abs(l.dpsi) / kappa;
    const double nr = std::abs(r.psi) + std::abs(r.dpsi) / kappa;
    return (l.dpsi * r.psi - l.psi * r.dpsi) / (kappa * nl * nr);
}

EigenResult solve_level(const ModelSpec& model, int k, std::optional<cplx> seed, const Options& opt) {
    validate(model);
    if (k < 0) throw DomainError("solve_level: k must be >= 0");
    EigenResult res;
    res.k = k;
    cplx e0 = seed ? *seed : cplx{wkb::seed_energy(model, k), 0.0};
    cplx e1 = e0 * (1.0 + 1e-4);
    cplx d0 = mismatch(model, e0, opt);
    cplx d1 = mismatch(model, e1, opt);
    for (int it = 1; it <= opt.max_iterations; ++it) {
        res.iterations = it;
        if (d1 == d0) {
            res.message = "secant stalled (equal mismatch values)";
            break;
        }
        cplx step = -d1 * (e1 - e0) / (d1 - d0);
        const double limit = 0.25 * std::abs(e1);
        if (std::abs(step) > limit) step *= limit / std::abs(step);
        const cplx e2 = e1 + step;
        e0 = e1;
        d0 = d1;
        e1 = e2;
        d1 = mismatch(model, e1, opt);
        if (std::abs(step) <= opt.tol * std::abs(e1)) {
            res.converged = true;
            break;
        }
    }
    res.E = e1;
    res.residual = std::abs(d1);
    if (!res.converged) {
        if (res.message.empty()) res.message = "secant did not converge in " + std::to_string(opt.max_iterations) + " iterations";
        return res;
    }
    if (std::abs(res.E.imag()) > 1e-8 * std::abs(res.E.real())) {
        res.converged = false;
        res.message = "eigenvalue not real: |Im E| exceeds 1e-8 |Re E|";
    }
    return res;
}

ScanResult scan_levels(const std::vector<ModelSpec>& grid, int k_max, const Options& opt) {
    for (const ModelSpec& m : grid) validate(m);
    if (k_max < 0) throw DomainError("scan_levels: k_max must be >= 0");
    const std::size_t n_grid = grid.size();
    const int n_levels = k_max + 1;

    auto chain = [&](int k) {
        std::vector<EigenResult> out(n_grid);
        std::vector<cplx> good;  // converged values at earlier grid points, for continuation
        std::vector<double> good_eps;
        for (std::size_t g = 0; g < n_grid; ++g) {
            std::optional<cplx> seed;
            if (good.size() >= 2) {
                const std::size_t a = good.size() - 2, b = good.size() - 1;
                const double t = (grid[g].epsilon - good_eps[b]) / (good_eps[b] - good_eps[a]);
                seed = good[b] + t * (good[b] - good[a]);
            } else if (good.size() == 1 && grid[g].epsilon == good_eps[0]) {
                seed = good[0];
            }
            try {
                out[g] = solve_level(grid[g], k, seed, opt);
            } catch (const Error& e) {
                out[g].k = k;
                out[g].converged = false;
                out[g].message = e.what();
            }
            if (out[g].converged) {
                good.push_back(out[g].E);
                good_eps.push_back(grid[g].epsilon);
            }
        }
        return out;
    };

    std::vector<std::vector<EigenResult>> by_level(n_levels);
    const unsigned cap = thread_cap();
    for (int start = 0; start < n_levels; start += static_cast<int>(cap)) {
        std::vector<std::future<std::vector<EigenResult>>> jobs;
        const int stop = std::min(n_levels, start + static_cast<int>(cap));
        for (int k = start; k < stop; ++k) jobs.push_back(std::async(std::launch::async, chain, k));
        for (int k = start; k < stop; ++k) by_level[k] = jobs[k - start].get();
    }

    ScanResult result;
    result.monotone.assign(n_levels, true);
    for (std::size_t g = 0; g < n_grid; ++g) {
        for (int k = 0; k < n_levels; ++k) {
            EigenResult r = by_level[k][g];
            for (int j = 0; j < n_levels; ++j) {
                const EigenResult& o = by_level[j][g];
                if (j != k && r.converged && o.converged && std::abs(r.E - o.E) <= 1e-7 * std::abs(r.E)) {
                    r.message = "level collision: levels " + std::to_string(k) + " and " + std::to_string(j) +
                                " converged to the same root";
                }
            }
            result.points.push_back({grid[g], r});
        }
    }
    for (int k = 0; k < n_levels; ++k) {
        double prev = -1e300;
        double prev_eps = -1e300;
        for (std::size_t g = 0; g < n_grid; ++g) {
            const EigenResult& r = by_level[k][g];
            if (!r.converged) continue;
            if (grid[g].epsilon >= prev_eps && r.E.real() < prev) result.monotone[k] = false;
            prev = r.E.real();
            prev_eps = grid[g].epsilon;
        }
    }
    return result;
}

}  // namespace ptwell::shooting
