#include "ptwell/limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ptwell/error.hpp"
#include "ptwell/quadrature.hpp"
#include "ptwell/specfun.hpp"

namespace ptwell::limit {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

void require_supported(int M) {
    if (M != 1 && M != 2) {
        throw UnsupportedError("limit: only M = 1 and M = 2 have an explicit quantization condition, got M = " +
                               std::to_string(M));
    }
}

// Phase of zeta in units of pi, tracked continuously in z.
double zeta_turns(int M, cplx z) { return M % 2 ? 0.5 * z.real() : 0.5 * (z.real() - 1.0); }

}  // namespace

std::vector<LimitLevel> nu_spectrum(int M, int k_max) {
    if (M < 1) throw DomainError("nu_spectrum: M must be >= 1");
    if (k_max < 0) throw DomainError("nu_spectrum: k_max must be >= 0");
    std::vector<LimitLevel> out;
    for (int k = 0; k <= k_max; ++k) {
        for (int P = 1; P <= M; ++P) {
            const double nu = k + static_cast<double>(P) / (M + 1);
            out.push_back({k, P, nu, 0.25 * nu * nu});
        }
    }
    std::sort(out.begin(), out.end(), [](const LimitLevel& a, const LimitLevel& b) { return a.nu < b.nu; });
    return out;
}

double quantization_residual(int M, double nu) {
    require_supported(M);
    if (!(nu > 0.0)) throw DomainError("quantization_residual: nu must be positive");
    // reduce nu mod 2 first so that exact rationals land on exact zeros
    const double r = std::fmod(nu, 2.0);
    if (M == 1) return std::cos(r * kPi);
    return std::cos(2.0 * r * kPi) + 0.5;
}

LimitWavefunction::LimitWavefunction(int M, double nu) : M_(M), nu_(nu) {
    require_supported(M);
    if (!(nu > 0.0) || std::abs(nu - std::round(nu)) < 1e-12) {
        throw DomainError("LimitWavefunction: nu must be positive and non-integer");
    }
    // verticals Re z = -(M+1) and M+1 sit on sheets m_left and m_right of zeta
    m_left_ = static_cast<int>(std::lround(zeta_turns(M, cplx(-(M + 1.0), 0.0))));
    m_right_ = static_cast<int>(std::lround(zeta_turns(M, cplx(M + 1.0, 0.0))));
    b_ = 1.0 / kPi;
    const specfun::Rotation left = specfun::rotation(nu, m_left_);
    a_ = -b_ * left.c / left.a;
    const specfun::Rotation right = specfun::rotation(nu, m_right_);
    defect_ = std::abs(a_ * right.a + b_ * right.c) / (std::abs(a_) + std::abs(b_));
}

LimitWavefunction::Local LimitWavefunction::local(cplx z) const {
    const double turns = zeta_turns(M_, z);
    const int m = static_cast<int>(std::lround(turns));
    const double modulus = nu_ * std::exp(-0.5 * kPi * z.imag());
    const cplx zeta0 = std::polar(modulus, (turns - m) * kPi);
    const specfun::Rotation rot = specfun::rotation(nu_, m);
    cplx alpha = a_ * rot.a + b_ * rot.c;
    // exact zeros that rounding would otherwise turn into exponential growth
    if (m == m_left_ || (m == m_right_ && quantized())) alpha = 0.0;
    return {alpha, b_ * rot.b, zeta0};
}

cplx LimitWavefunction::log_value(cplx z) const {
    const Local loc = local(z);
    const specfun::ScaledIK s = specfun::bessel_ik_scaled(nu_, loc.zeta0);
    const double re = loc.zeta0.real();  // >= 0: I = i e^{re}, K = k e^{-re}
    if (loc.alpha == cplx(0.0)) return std::log(loc.beta * s.k) - re;
    return re + std::log(loc.alpha * s.i + loc.beta * s.k * std::exp(-2.0 * re));
}

cplx LimitWavefunction::operator()(cplx z) const {
    const cplx lg = log_value(z);
    if (lg.real() > 700.0) throw OverflowError("limit_wavefunction: |psi| overflows; use log_value");
    return std::exp(lg);
}

std::pair<cplx, cplx> LimitWavefunction::coefficients() const {
    if (M_ % 2) return {a_, b_};
    // J_nu(i zeta) = e^{i nu pi/2} I_nu(zeta),
    // Y_nu(i zeta) = -(2/pi) e^{-i nu pi/2} K_nu(zeta) + i e^{i nu pi/2} I_nu(zeta)
    const cplx half = std::polar(1.0, 0.5 * nu_ * kPi);
    const cplx c2 = -0.5 * kPi * half * b_;
    const cplx c1 = a_ / half - kI * c2;
    return {c1, c2};
}

cplx limit_wavefunction(int M, double nu, cplx z) { return LimitWavefunction(M, nu)(z); }

double scaled_ode_residual(int M, double F, cplx z, const std::function<cplx(cplx)>& psi) {
    if (M < 1) throw DomainError("scaled_ode_residual: M must be >= 1");
    const double sign = M % 2 ? 1.0 : -1.0;
    const double h = 1e-4;
    const cplx p0 = psi(z);
    auto second = [&](double step) { return (psi(z + step) - 2.0 * p0 + psi(z - step)) / (step * step); };
    const cplx d2 = (4.0 * second(h) - second(2.0 * h)) / 3.0;
    const cplx wave = std::exp(kI * kPi * z);
    const cplx coeff = F * kPi * kPi * (1.0 + sign * wave);
    // size of each term separately, so cancellation inside coeff does not inflate the ratio
    const double scale = std::abs(d2) + F * kPi * kPi * (1.0 + std::abs(wave)) * std::abs(p0);
    if (scale == 0.0) return 0.0;
    return std::abs(d2 + coeff * p0) / scale;
}

double F_of_eps(double E, double epsilon, int M) {
    if (!(E > 0.0)) throw DomainError("F_of_eps: E must be positive");
    if (!(epsilon >= 0.0)) throw DomainError("F_of_eps: eps must be >= 0");
    if (M < 1) throw DomainError("F_of_eps: M must be >= 1");
    const double n = 2.0 * M + epsilon;
    return std::pow(E, (n + 2.0) / n) / ((epsilon + 2.0) * (epsilon + 2.0));
}

double E_of_F(double F, double epsilon, int M) {
    if (!(F > 0.0)) throw DomainError("E_of_F: F must be positive");
    if (!(epsilon >= 0.0)) throw DomainError("E_of_F: eps must be >= 0");
    if (M < 1) throw DomainError("E_of_F: M must be >= 1");
    const double n = 2.0 * M + epsilon;
    return std::pow(F * (epsilon + 2.0) * (epsilon + 2.0), n / (n + 2.0));
}

double f1_ground() { return 0.25 * specfun::kEulerGamma; }

CorrectionCoeffs ground_corrections() { return {1.0 / 16.0, f1_ground()}; }

F1Parts f1_oracle_parts() {
    // Numerator: e^{2w} ln^2(2w) around the negative real axis. With w = -t,
    // ln(2w) = ln(2t) +- i pi above/below, so the jump of ln^2 is 4 pi i ln(2t)
    // and the pi^2 parts cancel.
    const quadrature::Estimate cut = quadrature::adaptive_semi_infinite(
        [](double t) { return t > 0.0 ? std::exp(-2.0 * t) * std::log(2.0 * t) : 0.0; }, 0.0, 1e-14, 1e-13);
    const cplx numerator = 4.0 * kPi * kI * cut.value;
    // Denominator: e^{2w}(4 + 1/w^2) has no cut; only the double pole at 0
    // contributes, residue 2, passed clockwise.
    const cplx denominator = -2.0 * kPi * kI * 2.0;
    return {numerator, denominator, 0.5 * (numerator / denominator).real()};
}

double f1_oracle() { return f1_oracle_parts().value; }

}  // namespace ptwell::limit
