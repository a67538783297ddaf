#include "ptwell/extrapolation.hpp"

#include <string>

#include "ptwell/error.hpp"

namespace ptwell::extrapolation {

namespace {

void check_grid(const std::vector<double>& epsilons, const std::vector<double>& values) {
    if (epsilons.size() != values.size()) throw DomainError("extrapolation: grid and values differ in length");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0)) throw DomainError("extrapolation: grid points must be positive");
        if (i > 0 && !(epsilons[i] > epsilons[i - 1])) throw DomainError("extrapolation: grid must be strictly increasing");
    }
}

}  // namespace

std::vector<double> richardson(const std::vector<double>& epsilons, const std::vector<double>& values, int order) {
    check_grid(epsilons, values);
    if (order < 1) throw DomainError("richardson: order must be >= 1");
    if (values.size() < static_cast<std::size_t>(order) + 1) {
        throw DomainError("richardson: order " + std::to_string(order) + " needs at least " + std::to_string(order + 1) +
                          " points");
    }
    std::vector<double> out;
    for (std::size_t n = order; n < values.size(); ++n) {
        // Neville in h = 1/eps, evaluated at h = 0
        std::vector<double> p(values.begin() + (n - order), values.begin() + n + 1);
        for (int level = 1; level <= order; ++level) {
            for (std::size_t i = 0; i + level <= static_cast<std::size_t>(order); ++i) {
                const double hi = 1.0 / epsilons[n - order + i];
                const double hj = 1.0 / epsilons[n - order + i + level];
                p[i] = (hi * p[i + 1] - hj * p[i]) / (hi - hj);
            }
        }
        out.push_back(p[0]);
    }
    return out;
}

std::vector<double> subtract_leading(const std::vector<double>& epsilons, const std::vector<double>& values, double f0) {
    if (epsilons.size() != values.size()) throw DomainError("subtract_leading: grid and values differ in length");
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - f0) * epsilons[i];
    return out;
}

const double* ExtrapolationTable::at(int order, std::size_t n) const {
    if (order == 0) return n < raw.size() ? &raw[n] : nullptr;
    const auto it = extrapolants.find(order);
    if (it == extrapolants.end() || n < static_cast<std::size_t>(order)) return nullptr;
    const std::size_t j = n - order;
    return j < it->second.size() ? &it->second[j] : nullptr;
}

ExtrapolationTable make_table(const std::vector<double>& epsilons, const std::vector<double>& raw, int max_order) {
    check_grid(epsilons, raw);
    ExtrapolationTable t{epsilons, raw, {}};
    for (int m = 1; m <= max_order && raw.size() > static_cast<std::size_t>(m); ++m) {
        t.extrapolants[m] = richardson(epsilons, raw, m);
    }
    return t;
}

}  // namespace ptwell::extrapolation
