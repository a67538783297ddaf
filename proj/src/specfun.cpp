#include "ptwell/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptwell/error.hpp"

namespace ptwell::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

const cplx kI{0.0, 1.0};

// sin(m x) / sin(x), finite at every x (Chebyshev polynomial of the second kind).
double sine_ratio(int m, double x) {
    if (m == 0) return 0.0;
    const int n = std::abs(m);
    const double c = std::cos(x);
    double u_prev = 1.0;  // U_0
    double u = 2.0 * c;   // U_1
    if (n == 1) return m > 0 ? 1.0 : -1.0;
    for (int j = 2; j < n; ++j) {
        const double next = 2.0 * c * u - u_prev;
        u_prev = u;
        u = next;
    }
    return m > 0 ? u : -u;
}

// Temme's auxiliary values 1/Gamma(1 -+ mu) and their symmetric combinations.
struct TemmeGammas {
    double gam1;
    double gam2;
    double gampl;
    double gammi;
};

TemmeGammas temme_gammas(double mu) {
    TemmeGammas g{};
    g.gampl = 1.0 / std::tgamma(1.0 + mu);
    g.gammi = 1.0 / std::tgamma(1.0 - mu);
    g.gam2 = 0.5 * (g.gammi + g.gampl);
    if (std::abs(mu) > 1e-3) {
        g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
    } else {
        // odd part of the Taylor series of 1/Gamma(1+x)
        g.gam1 = -kEulerGamma + 0.0420026350340952355 * mu * mu;
    }
    return g;
}

// Sum of a_k(nu) / w^k with alternating (sign = -1) or constant signs.
cplx hankel_sum(double nu, cplx w, double sign) {
    const double four_nu2 = 4.0 * nu * nu;
    cplx term{1.0, 0.0};
    cplx sum = term;
    double last = std::abs(term);
    for (int k = 1; k < 400; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= sign * (four_nu2 - odd * odd) / (8.0 * k * w);
        const double mag = std::abs(term);
        if (mag > last && odd * odd > four_nu2) break;  // series began to diverge
        sum += term;
        if (mag <= kEps * std::abs(sum) * 0.1) break;
        last = mag;
    }
    return sum;
}

void require_order(double nu) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) {
        throw DomainError("Bessel order must be finite and non-negative, got " + std::to_string(nu));
    }
}

void require_nonzero(cplx w) {
    if (w == cplx{0.0, 0.0}) throw DomainError("Bessel K/Y undefined at w = 0");
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw DomainError("non-finite Bessel argument");
}

}  // namespace

double euler_gamma() { return kEulerGamma; }

double gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) {
        throw DomainError("gamma: pole at non-positive integer " + std::to_string(x));
    }
    return std::tgamma(x);
}

Rotation rotation(double nu, int m) {
    const double phase = m * nu * kPi;
    return Rotation{std::polar(1.0, phase), std::polar(1.0, -phase), -kI * kPi * sine_ratio(m, nu * kPi)};
}

namespace detail {

double asymptotic_radius(double nu) { return nu + 20.0; }

cplx bessel_i_series(double nu, cplx w) {
    const cplx q = 0.25 * w * w;
    cplx term = 1.0 / std::tgamma(nu + 1.0);
    cplx sum = term;
    for (int k = 1; k < kMaxIter; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (k > std::abs(w) && std::abs(term) <= kEps * 0.1 * std::abs(sum)) break;
    }
    if (w == cplx{0.0, 0.0}) return nu == 0.0 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    return std::pow(0.5 * w, nu) * sum;
}

// Temme series (|w| < 2) or Steed's continued fraction for K_mu, K_{mu+1},
// |mu| <= 1/2, combined with the continued fraction for I'_nu / I_nu and the
// Wronskian. Follows the classical real-argument scheme in complex arithmetic.
ScaledIK ik_steed(double nu, cplx w) {
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    const double mu2 = mu * mu;
    const cplx xi = 1.0 / w;
    const cplx xi2 = 2.0 * xi;

    // I'_nu / I_nu by modified Lentz.
    cplx h = nu * xi;
    if (std::abs(h) < kTiny) h = kTiny;
    cplx b = xi2 * nu;
    cplx d = 0.0;
    cplx c = h;
    int it = 0;
    for (; it < kMaxIter; ++it) {
        b += xi2;
        d = b + d;
        if (std::abs(d) < kTiny) d = kTiny;
        d = 1.0 / d;
        c = b + 1.0 / c;
        if (std::abs(c) < kTiny) c = kTiny;
        const cplx del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    if (it == kMaxIter) throw ConvergenceError("bessel: continued fraction for I'/I did not converge");

    cplx ril = 1e-30;
    cplx ripl = h * ril;
    const cplx ril1 = ril;
    const cplx rip1 = ripl;
    cplx fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const cplx ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    const cplx f = ripl / ril;

    cplx rkmu;
    cplx rk1;
    if (std::abs(w) < 2.0) {
        const cplx x2 = 0.5 * w;
        const double pimu = kPi * mu;
        const double fac = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        const cplx dl = -std::log(x2);
        cplx e = mu * dl;
        const cplx fact2 = std::abs(e) < kEps ? cplx{1.0} : std::sinh(e) / e;
        const TemmeGammas g = temme_gammas(mu);
        cplx ff = fac * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dl);
        cplx sum = ff;
        e = std::exp(e);
        cplx p = 0.5 * e / g.gampl;
        cplx q = 0.5 / (e * g.gammi);
        cplx cc = 1.0;
        const cplx dd = x2 * x2;
        cplx sum1 = p;
        int i = 1;
        for (; i < kMaxIter; ++i) {
            ff = (static_cast<double>(i) * ff + p + q) / (static_cast<double>(i) * i - mu2);
            cc *= dd / static_cast<double>(i);
            p /= (i - mu);
            q /= (i + mu);
            const cplx del = cc * ff;
            sum += del;
            sum1 += cc * (p - static_cast<double>(i) * ff);
            if (std::abs(del) < std::abs(sum) * kEps) break;
        }
        if (i == kMaxIter) throw ConvergenceError("bessel: Temme series did not converge");
        rkmu = sum;
        rk1 = sum1 * xi2;
    } else {
        cplx bb = 2.0 * (1.0 + w);
        cplx dd = 1.0 / bb;
        cplx hh = dd;
        cplx delh = dd;
        cplx q1 = 0.0;
        cplx q2 = 1.0;
        const double a1 = 0.25 - mu2;
        cplx q = a1;
        double cc = a1;
        double a = -a1;
        cplx s = 1.0 + q * delh;
        int i = 2;
        for (; i < kMaxIter; ++i) {
            a -= 2.0 * (i - 1);
            cc = -a * cc / i;
            const cplx qnew = (q1 - bb * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += cc * qnew;
            bb += 2.0;
            dd = 1.0 / (bb + a * dd);
            delh = (bb * dd - 1.0) * delh;
            hh += delh;
            const cplx dels = q * delh;
            s += dels;
            if (std::abs(dels / s) < kEps) break;
        }
        if (i == kMaxIter) throw ConvergenceError("bessel: continued fraction for K did not converge");
        hh = a1 * hh;
        // keep K scaled by exp(Re w): drop |exp(-w)| but retain its phase
        rkmu = std::sqrt(kPi / (2.0 * w)) * std::polar(1.0, -w.imag()) / s;
        rk1 = rkmu * (mu + w + 0.5 - hh) * xi;
    }
    const double scale_k = std::abs(w) < 2.0 ? std::exp(w.real()) : 1.0;
    rkmu *= scale_k;
    rk1 *= scale_k;  // both now scaled by exp(Re w)

    const cplx rkmup = mu * xi * rkmu - rk1;
    // Wronskian I_mu K'_mu - I'_mu K_mu = -1/w, scaled consistently
    const cplx rimu = xi / (f * rkmu - rkmup);  // I_mu * exp(-Re w)

    ScaledIK out{};
    out.i = rimu * ril1 / ril;
    out.di = rimu * rip1 / ril;
    for (int i = 1; i <= nl; ++i) {
        const cplx rktemp = (mu + i) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    out.k = rkmu;
    out.dk = nu * xi * rkmu - rk1;
    return out;
}

ScaledIK ik_asymptotic(double nu, cplx w) {
    const double sigma = w.imag() >= 0.0 ? 1.0 : -1.0;
    const cplx root = std::sqrt(2.0 * kPi * w);
    const cplx grow = std::polar(1.0, w.imag());
    const cplx decay = std::exp(-2.0 * w.real()) * std::polar(1.0, -w.imag());
    const cplx stokes = sigma * kI * std::polar(1.0, sigma * nu * kPi);
    const cplx stokes1 = sigma * kI * std::polar(1.0, sigma * (nu + 1.0) * kPi);

    const cplx i0 = (grow * hankel_sum(nu, w, -1.0) + stokes * decay * hankel_sum(nu, w, 1.0)) / root;
    const cplx i1 = (grow * hankel_sum(nu + 1.0, w, -1.0) + stokes1 * decay * hankel_sum(nu + 1.0, w, 1.0)) / root;
    const cplx kpref = std::sqrt(kPi / (2.0 * w)) * std::polar(1.0, -w.imag());
    const cplx k0 = kpref * hankel_sum(nu, w, 1.0);
    const cplx k1 = kpref * hankel_sum(nu + 1.0, w, 1.0);

    return ScaledIK{i0, i1 + nu / w * i0, k0, -k1 + nu / w * k0};
}

}  // namespace detail

ScaledIK bessel_ik_scaled(double nu, cplx w) {
    require_order(nu);
    require_nonzero(w);
    auto right_half = [nu](cplx z) {
        return std::abs(z) > detail::asymptotic_radius(nu) ? detail::ik_asymptotic(nu, z) : detail::ik_steed(nu, z);
    };
    if (w.real() >= 0.0) return right_half(w);

    // w = e^{m pi i} w0 with Re w0 > 0
    const int m = w.imag() >= 0.0 ? 1 : -1;
    const cplx w0 = -w;
    const ScaledIK base = right_half(w0);
    const Rotation r = rotation(nu, m);
    const double damp = std::exp(-2.0 * w0.real());
    ScaledIK out{};
    out.i = r.a * base.i;
    out.di = -r.a * base.di;
    out.k = r.b * base.k * damp + r.c * base.i;
    out.dk = -(r.b * base.dk * damp + r.c * base.di);
    return out;
}

cplx bessel_i_scaled(double nu, cplx w) {
    require_order(nu);
    if (w == cplx{0.0, 0.0}) return nu == 0.0 ? cplx{1.0} : cplx{0.0};
    return bessel_ik_scaled(nu, w).i;
}

cplx bessel_k_scaled(double nu, cplx w) { return bessel_ik_scaled(nu, w).k; }

cplx bessel_i(double nu, cplx w) {
    require_order(nu);
    if (w == cplx{0.0, 0.0}) return nu == 0.0 ? cplx{1.0} : cplx{0.0};
    if (std::abs(w.real()) > 700.0) throw OverflowError("bessel_i: |Re w| too large, use bessel_i_scaled");
    return bessel_ik_scaled(nu, w).i * std::exp(std::abs(w.real()));
}

cplx bessel_k(double nu, cplx w) {
    require_order(nu);
    require_nonzero(w);
    if (w.real() < -700.0) throw OverflowError("bessel_k: Re w too negative, use bessel_k_scaled");
    return bessel_ik_scaled(nu, w).k * std::exp(-w.real());
}

namespace {

// J_{+nu} and J_{-nu} at w from I_nu, K_nu at a quarter-turn rotated argument.
std::pair<cplx, cplx> bessel_j_pair(double nu, cplx w) {
    const bool lower = w.imag() < 0.0 && w.real() <= 0.0;  // arg w in (-pi, -pi/2]
    const cplx zeta = lower ? kI * w : -kI * w;
    const double sgn = lower ? -1.0 : 1.0;
    const cplx ival = bessel_i(nu, zeta);
    const cplx kval = bessel_k(nu, zeta);
    const cplx iminus = ival + (2.0 / kPi) * std::sin(nu * kPi) * kval;
    return {std::polar(1.0, sgn * nu * kPi / 2.0) * ival, std::polar(1.0, -sgn * nu * kPi / 2.0) * iminus};
}

}  // namespace

cplx bessel_j(double nu, cplx w) {
    require_order(nu);
    if (w == cplx{0.0, 0.0}) return nu == 0.0 ? cplx{1.0} : cplx{0.0};
    return bessel_j_pair(nu, w).first;
}

cplx bessel_y(double nu, cplx w) {
    require_order(nu);
    require_nonzero(w);
    const double s = std::sin(nu * kPi);
    if (std::abs(nu - std::round(nu)) < 1e-12) throw DomainError("bessel_y: integer order not supported");
    const auto [jp, jm] = bessel_j_pair(nu, w);
    return (jp * std::cos(nu * kPi) - jm) / s;
}

}  // namespace ptwell::specfun
