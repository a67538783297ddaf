#pragma once

// The eps -> infinity limit. With x = (-i + z pi/(2+eps)) E^{1/(2+eps)} and
// F = E/eps^2 the Schroedinger equation becomes
//     psi''(z) + F pi^2 (1 + s e^{i pi z}) psi(z) = 0,   s = (-1)^{M+1},
// which w = nu e^{i pi z/2}, nu = 2 sqrt(F), turns into Bessel's equation
// (modified for odd M, ordinary for even M). Decay on the verticals
// Re z = +-(M+1) quantizes nu.

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace ptwell::limit {

using cplx = std::complex<double>;

struct LimitLevel {
    int k = 0;
    int P = 1;  // 1 <= P <= M
    double nu = 0.0;
    double F = 0.0;  // nu^2 / 4
};

// F = f0 + f1/eps + ..., ground state of M = 1.
struct CorrectionCoeffs {
    double f0;
    double f1;
};

// nu = k + P/(M+1) for k <= k_max, 1 <= P <= M, sorted by nu.
std::vector<LimitLevel> nu_spectrum(int M, int k_max);

// cos(nu pi) for M = 1, cos(2 nu pi) + 1/2 for M = 2; UnsupportedError otherwise.
double quantization_residual(int M, double nu);

// Solution of the scaled equation that decays on the left vertical
// Re z = -(M+1). It also decays on the right vertical exactly when nu is a
// quantized value; defect() measures the leftover growing component there.
//
// Internally psi = A I_nu(zeta) + B K_nu(zeta) with zeta = w (odd M) or
// zeta = -i w (even M), B = 1/pi. For M = 1, nu = 1/2 this is
// I_{1/2}(w) + K_{1/2}(w)/pi = e^w / sqrt(2 pi w).
class LimitWavefunction {
public:
    LimitWavefunction(int M, double nu);

    int M() const { return M_; }
    double nu() const { return nu_; }
    double F() const { return 0.25 * nu_ * nu_; }

    cplx operator()(cplx z) const;  // OverflowError if |psi| leaves the double range
    cplx log_value(cplx z) const;    // log psi; the imaginary part is only defined mod 2 pi

    // Coefficients in the natural basis: (C1, C2) of C1 I + C2 K for odd M,
    // of C1 J_nu(w) + C2 Y_nu(w) for even M.
    std::pair<cplx, cplx> coefficients() const;

    // |coefficient of the growing I_nu on the right vertical| / (|A| + |B|).
    double defect() const { return defect_; }
    bool quantized() const { return defect_ <= 1e-12; }

private:
    struct Local {
        cplx alpha;  // psi = alpha I(zeta0) + beta K(zeta0), |arg zeta0| <= pi/2
        cplx beta;
        cplx zeta0;
    };
    Local local(cplx z) const;

    int M_;
    double nu_;
    cplx a_;
    cplx b_;
    int m_left_;
    int m_right_;
    double defect_;
};

cplx limit_wavefunction(int M, double nu, cplx z);

// Relative residual of the scaled equation at z, with psi'' from central
// differences (step 1e-4, one Richardson refinement).
double scaled_ode_residual(int M, double F, cplx z, const std::function<cplx(cplx)>& psi);

// F = E^{(2M+eps+2)/(2M+eps)} / (eps+2)^2; for M = 1 this is
// E^{(eps+4)/(eps+2)} / (eps+2)^2.
double F_of_eps(double E, double epsilon, int M = 1);
double E_of_F(double F, double epsilon, int M = 1);

double f1_ground();  // gamma/4
CorrectionCoeffs ground_corrections();

// f1 from the contour-integral ratio, with the wrap-around contour reduced
// to a real integral along the cut and a residue.
struct F1Parts {
    cplx numerator;    // 4 pi i  int_0^inf e^{-2t} ln(2t) dt
    cplx denominator;  // -4 pi i
    double value;      // numerator / denominator / 2
};
F1Parts f1_oracle_parts();
double f1_oracle();

}  // namespace ptwell::limit
