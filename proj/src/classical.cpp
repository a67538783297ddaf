#include "ptwell/classical.hpp"

#include <cmath>
#include <numbers>

#include "ptwell/error.hpp"
#include "ptwell/specfun.hpp"

namespace ptwell::classical {

PeriodResult period_exact(double epsilon, double E) {
    if (!(E > 0.0)) throw DomainError("period_exact: E must be positive");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw DomainError("period_exact: eps must be finite and >= 0");
    const double e = epsilon;
    const double pi = std::numbers::pi;
    const double T = 4.0 * std::sqrt(pi) * std::pow(E, -e / (4.0 + 2.0 * e)) * specfun::gamma((3.0 + e) / (2.0 + e)) *
                     std::cos(e * pi / (4.0 + 2.0 * e)) / specfun::gamma((4.0 + e) / (4.0 + 2.0 * e));
    return {T, E * T};
}

double period_asymptotic(double epsilon, double E) {
    if (!(E > 0.0)) throw DomainError("period_asymptotic: E must be positive");
    if (!(epsilon > 0.0)) throw DomainError("period_asymptotic: eps must be positive");
    return 4.0 * std::numbers::pi / (epsilon * std::sqrt(E));
}

}  // namespace ptwell::classical
