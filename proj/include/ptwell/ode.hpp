#pragma once

// Dormand-Prince 5(4) with PI step-size control over a fixed-size complex state.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "ptwell/error.hpp"

namespace ptwell::ode {

template <std::size_t N>
using State = std::array<std::complex<double>, N>;

struct Options {
    double rtol = 1e-11;
    double initial_step = 0.0;  // 0: pick from the first derivative
    double min_step_fraction = 1e-14;
    long max_steps = 2'000'000;
};

struct Stats {
    long accepted = 0;
    long rejected = 0;
};

// Integrates y' = rhs(t, y) from t0 to t1 (t1 > t0).
//   norm(t, err, y, y_new) -> scaled error, accepted when <= 1
//   after_step(t, y)       -> may rescale y in place (homogeneous problems)
template <std::size_t N, class Rhs, class Norm, class AfterStep>
Stats integrate(Rhs&& rhs, Norm&& norm, AfterStep&& after_step, double t0, double t1, State<N>& y,
                const Options& opt) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    Stats stats;
    const double span = t1 - t0;
    const double h_min = opt.min_step_fraction * std::max(std::abs(span), 1.0);
    double t = t0;
    State<N> k1 = rhs(t, y);
    double h = opt.initial_step;
    if (h <= 0.0) {
        double scale = 0.0;
        double dscale = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            scale = std::max(scale, std::abs(y[i]));
            dscale = std::max(dscale, std::abs(k1[i]));
        }
        h = dscale > 0.0 ? 0.01 * scale / dscale : 1e-3 * span;
        h = std::min(h, 0.1 * span);
    }
    double err_prev = 1e-4;
    State<N> tmp, k2, k3, k4, k5, k6, k7, y_new, err;

    while (t < t1) {
        if (stats.accepted + stats.rejected > opt.max_steps) {
            throw StepUnderflowError("ode: step budget exhausted (problem too stiff for the tolerance)");
        }
        bool last = false;
        if (t + h >= t1) {
            h = t1 - t;
            last = true;
        }
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a21 * k1[i]);
        k2 = rhs(t + c2 * h, tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = rhs(t + c3 * h, tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = rhs(t + c4 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = rhs(t + c5 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        k6 = rhs(t + h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        k7 = rhs(t + h, y_new);
        for (std::size_t i = 0; i < N; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);

        const double e = norm(t + h, err, y, y_new) / opt.rtol;
        if (!std::isfinite(e)) {
            h *= 0.1;
            ++stats.rejected;
            if (h < h_min) throw StepUnderflowError("ode: non-finite step");
            continue;
        }
        if (e <= 1.0) {
            t = last ? t1 : t + h;
            y = y_new;
            k1 = k7;
            ++stats.accepted;
            if (after_step(t, y)) k1 = rhs(t, y);
            const double fac = 0.9 * std::pow(std::max(e, 1e-10), -0.7 / 5) * std::pow(err_prev, 0.4 / 5);
            h *= std::clamp(fac, 0.2, 5.0);
            err_prev = std::max(e, 1e-4);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(e, -1.0 / 5));
            ++stats.rejected;
        }
        if (h < h_min && t < t1) throw StepUnderflowError("ode: step size underflow");
    }
    return stats;
}

}  // namespace ptwell::ode
