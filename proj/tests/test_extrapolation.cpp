#include <doctest.h>

#include <cmath>
#include <vector>

#include "ptwell/error.hpp"
#include "ptwell/extrapolation.hpp"

using namespace ptwell;
using namespace ptwell::extrapolation;

namespace {
const std::vector<double> kEps = {8, 18, 28, 38, 48, 58};
}

TEST_CASE("worked values") {
    const auto r1 = richardson({8, 18}, {0.07825, 0.06998}, 1);
    REQUIRE(r1.size() == 1);
    CHECK(std::abs(r1[0] - 0.06336) <= 1e-5);
    CHECK(r1[0] == doctest::Approx((18 * 0.06998 - 8 * 0.07825) / 10.0).epsilon(1e-14));
    const auto r2 = richardson({8, 18, 28}, {0.07825, 0.06998, 0.06742}, 2);
    REQUIRE(r2.size() == 1);
    CHECK(std::abs(r2[0] - 0.06259) <= 1e-5);
}

TEST_CASE("leading subtraction") {
    const auto r0 = subtract_leading({8}, {0.07825}, 1.0 / 16);
    CHECK(r0[0] == doctest::Approx(0.126).epsilon(1e-12));
    const auto z = subtract_leading(kEps, std::vector<double>(6, 0.3), 0.3);
    for (double v : z) CHECK(v == 0.0);
    // R1(18) of the subtracted sequence, from full-precision F values
    const std::vector<double> F = {0.0782459843, 0.0699778349};
    const auto r = richardson({8, 18}, subtract_leading({8, 18}, F, 1.0 / 16), 1);
    CHECK(std::abs(r[0] - 0.14150) <= 2e-5);
    CHECK_THROWS_AS(subtract_leading({1, 2}, {1}, 0.0), DomainError);
}

TEST_CASE("polynomial exactness") {
    const std::vector<std::vector<double>> grids = {kEps, {1, 2, 3, 4, 5, 6, 7}, {2.5, 4, 7, 11, 20, 33}};
    const double c[] = {0.37, -1.2, 2.5, 0.8, -3.1};
    for (const auto& g : grids) {
        for (int m = 1; m <= 4; ++m) {
            if (g.size() < static_cast<std::size_t>(m + 1)) continue;
            std::vector<double> v;
            for (double e : g) {
                double s = 0.0;
                for (int j = 0; j <= m; ++j) s += c[j] * std::pow(e, -j);
                v.push_back(s);
            }
            const auto r = richardson(g, v, m);
            REQUIRE(r.size() == g.size() - m);
            for (double x : r) CHECK(std::abs(x - c[0]) <= 1e-12 * std::abs(c[0]));
        }
    }
}

TEST_CASE("table structure") {
    std::vector<double> raw;
    for (double e : kEps) raw.push_back(0.0625 + 0.14 / e);
    const ExtrapolationTable t = make_table(kEps, raw, 2);
    CHECK(t.extrapolants.at(1).size() == 5);
    CHECK(t.extrapolants.at(2).size() == 4);
    CHECK(t.at(1, 0) == nullptr);
    CHECK(t.at(2, 1) == nullptr);
    REQUIRE(t.at(2, 2) != nullptr);
    CHECK(*t.at(2, 2) == doctest::Approx(0.0625).epsilon(1e-13));
    CHECK(*t.at(1, 5) == doctest::Approx(0.0625).epsilon(1e-13));
    CHECK(t.at(3, 5) == nullptr);
    CHECK(t.at(1, 6) == nullptr);
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(richardson({8, 18}, {1, 2}, 2), DomainError);
    CHECK_THROWS_AS(richardson({8, 18}, {1, 2}, 0), DomainError);
    CHECK_THROWS_AS(richardson({18, 8}, {1, 2}, 1), DomainError);
    CHECK_THROWS_AS(richardson({0, 8}, {1, 2}, 1), DomainError);
    CHECK_THROWS_AS(richardson({8, 18, 28}, {1, 2}, 1), DomainError);
}
