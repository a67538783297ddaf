#pragma once

#include <map>
#include <vector>

namespace ptwell::extrapolation {

// Order-m extrapolant at grid position n: the value at 1/eps = 0 of the
// degree-m polynomial in 1/eps through the m+1 points ending at n. The result
// is aligned with the grid, so entry j belongs to position j + m.
std::vector<double> richardson(const std::vector<double>& epsilons, const std::vector<double>& values, int order);

// (values[n] - f0) * eps[n]
std::vector<double> subtract_leading(const std::vector<double>& epsilons, const std::vector<double>& values, double f0);

struct ExtrapolationTable {
    std::vector<double> epsilons;
    std::vector<double> raw;
    std::map<int, std::vector<double>> extrapolants;  // order -> raw.size() - order entries

    // Extrapolant of the given order at grid position n, if it exists.
    const double* at(int order, std::size_t n) const;
};

ExtrapolationTable make_table(const std::vector<double>& epsilons, const std::vector<double>& raw, int max_order);

}  // namespace ptwell::extrapolation
