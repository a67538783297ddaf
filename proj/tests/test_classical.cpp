#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ptwell/classical.hpp"
#include "ptwell/error.hpp"
#include "ptwell/shooting.hpp"

using namespace ptwell;
using namespace ptwell::classical;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("oscillator period") {
    for (double E : {0.01, 1.0, 9.0, 1e4}) {
        const PeriodResult p = period_exact(0.0, E);
        CHECK(std::abs(p.T - 2 * pi) <= 1e-12);
        CHECK(p.ET_product == doctest::Approx(E * p.T));
    }
}

TEST_CASE("large-eps period") {
    CHECK(period_asymptotic(100.0, 4.0) == doctest::Approx(0.0628318530717959).epsilon(1e-14));
    const double r58 = period_exact(58.0, 196.03417).T * 58.0 * std::sqrt(196.03417) / (4 * pi);
    CHECK(r58 >= 0.8);
    CHECK(r58 <= 1.2);
    CHECK(std::abs(period_exact(200.0, 1.0).T / period_asymptotic(200.0, 1.0) - 1.0) <= 0.05);
    for (double E : {1.0, 25.0}) {
        double last = 1e9;
        for (double eps : {50.0, 100.0, 200.0, 400.0}) {
            const double gap = std::abs(period_exact(eps, E).T / period_asymptotic(eps, E) - 1.0);
            CHECK(gap < last);
            last = gap;
        }
    }
    // E T_asym = 4 pi sqrt(E)/eps, which is pi at E = eps^2/16
    for (double eps : {40.0, 400.0}) {
        const double E = eps * eps / 16;
        CHECK(E * period_asymptotic(eps, E) == doctest::Approx(pi).epsilon(1e-14));
        CHECK(3.0 * E * period_asymptotic(3.0 * eps, E) == doctest::Approx(pi));
    }
}

TEST_CASE("period is positive") {
    for (double eps : {0.0, 0.5, 3.0, 20.0, 100.0}) {
        for (double E : {0.1, 1.0, 50.0}) CHECK(period_exact(eps, E).T > 0.0);
    }
}

TEST_CASE("uncertainty product of the ground state is of order one") {
    for (double eps : {8.0, 18.0, 28.0, 38.0, 48.0, 58.0}) {
        const auto r = shooting::solve_level({1, eps}, 0);
        REQUIRE(r.converged);
        const double et = period_exact(eps, r.E.real()).ET_product;
        CAPTURE(eps);
        CHECK(et >= 1.0);
        CHECK(et <= 10.0);
    }
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(period_exact(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(period_exact(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(period_asymptotic(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(period_asymptotic(1.0, -1.0), DomainError);
}
