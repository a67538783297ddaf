#include <doctest.h>

#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

#include "ptwell/error.hpp"
#include "ptwell/geometry.hpp"
#include "ptwell/shooting.hpp"

using namespace ptwell;
using namespace ptwell::shooting;

namespace {

constexpr double pi = std::numbers::pi;

const std::vector<double> kTableEps = {8, 18, 28, 38, 48, 58};
const std::vector<double> kTable1 = {5.55331, 20.67629, 46.94324, 84.78728, 134.43752, 196.03417};
// ground states of x^4 (ix)^eps at eps = 6, 16, ..., 56
const std::vector<double> kTable2 = {2.65128, 9.21477, 20.70525, 37.32010, 59.16865, 86.31766};

Options tight() {
    Options o;
    o.tol = 1e-12;
    o.rtol = 1e-13;
    return o;
}

}  // namespace

TEST_CASE("contour geometry") {
    auto [l, r] = build_contour({1, 0.0}, 1.0);
    CHECK(l.angle == doctest::Approx(-pi));
    CHECK(r.angle == doctest::Approx(0.0));
    CHECK(std::abs(r.matching_point) <= 1e-14);
    std::tie(l, r) = build_contour({1, 8.0}, 5.5);
    CHECK(r.angle == doctest::Approx(-pi / 3));
    CHECK(l.angle == doctest::Approx(-2 * pi / 3));
    CHECK(l.matching_point == r.matching_point);
    CHECK(r.matching_point.real() == 0.0);
    CHECK(r.matching_point.imag() < 0.0);
    std::tie(l, r) = build_contour({1, 58.0}, 196.0);
    CHECK(std::abs(r.angle + pi / 2) == doctest::Approx(4 * pi / 124));
    CHECK(std::abs(l.angle + pi / 2) == doctest::Approx(4 * pi / 124));
    // decay depth reached at the outer point
    for (double eps : {0.0, 1.0, 8.0, 38.0, 58.0}) {
        const ModelSpec m{1, eps};
        const double E = 2.0 + eps * eps / 16;
        std::tie(l, r) = build_contour(m, E);
        CHECK(l.angle >= -pi);
        CHECK(r.angle <= 0.0);
        CHECK(decay_exponent(m, E, r.angle, r.outer_radius) >= 25.0 - 1e-6);
        CHECK(r.corner_radius < r.outer_radius);
    }
    // the outer radius falls toward 1 at large eps
    double last = 1e9;
    for (double eps : {8.0, 18.0, 38.0, 58.0, 200.0}) {
        const double E = eps * eps / 16;
        const double R = build_contour({1, eps}, E).second.outer_radius;
        CHECK(R < last);
        CHECK(R > 1.0);
        last = R;
    }
    CHECK(last < 1.2);
}

TEST_CASE("log derivative at the oscillator ground state") {
    const ModelSpec m{1, 0.0};
    const auto [l, r] = build_contour(m, 1.0);
    const cplx ur = integrate_log_derivative(m, 1.0, r, 1e-10);
    const cplx ul = integrate_log_derivative(m, 1.0, l, 1e-10);
    CHECK(std::abs(ur) <= 1e-6);
    CHECK(std::abs(ul + ur) <= 1e-6);
    // off an eigenvalue the two sides disagree, with opposite signs by parity
    const cplx u2r = integrate_log_derivative(m, 2.0, r, 1e-10);
    const cplx u2l = integrate_log_derivative(m, 2.0, l, 1e-10);
    CHECK(std::abs(u2r) > 1e-2);
    CHECK(std::abs(u2l + u2r) <= 1e-6);
    CHECK_THROWS_AS(integrate_log_derivative(m, 1.0, r, 1e-3), DomainError);
    CHECK_THROWS_AS(integrate_log_derivative(m, 1.0, r, 1e-15), DomainError);
}

TEST_CASE("log derivatives match at the eps = 8 ground state") {
    const ModelSpec m{1, 8.0};
    const auto [l, r] = build_contour(m, 5.55331);
    const cplx ul = integrate_log_derivative(m, 5.55331, l, 1e-10);
    const cplx ur = integrate_log_derivative(m, 5.55331, r, 1e-10);
    CHECK(std::abs(ul - ur) <= 1e-5 * std::max(1.0, std::abs(ur)));
}

TEST_CASE("mismatch values") {
    CHECK(std::abs(mismatch({1, 0.0}, 1.0)) <= 1e-6);
    CHECK(std::abs(mismatch({1, 0.0}, 2.0)) > 1e-2);
    CHECK(std::abs(mismatch({2, 6.0}, 2.65128)) <= 1e-5);
    // real on the real axis
    for (double E : {0.7, 2.0, 4.4, 9.0}) {
        const cplx d = mismatch({1, 1.3}, E);
        CHECK(std::abs(d.imag()) <= 1e-8 * std::max(1e-3, std::abs(d)));
    }
}

TEST_CASE("oscillator levels") {
    for (int k = 0; k <= 5; ++k) {
        const EigenResult r = solve_level({1, 0.0}, k);
        CAPTURE(k);
        REQUIRE(r.converged);
        CHECK(r.k == k);
        CHECK(std::abs(r.E - cplx(2.0 * k + 1)) <= 1e-8 * (2 * k + 1));
        CHECK(r.residual <= 1e-8);
    }
    CHECK(std::abs(solve_level({1, 0.0}, 3).E.real() - 7.0) <= 1e-8);
}

TEST_CASE("single solves at table points") {
    const EigenResult a = solve_level({1, 18.0}, 0);
    REQUIRE(a.converged);
    CHECK(std::abs(a.E.real() - 20.67629) <= 1e-5);
    const EigenResult b = solve_level({2, 56.0}, 0);
    REQUIRE(b.converged);
    CHECK(std::abs(b.E.real() - 86.31766) <= 1e-4);
    // the quartic anchor
    const EigenResult c = solve_level({2, 0.0}, 0);
    REQUIRE(c.converged);
    CHECK(std::abs(c.E.real() - 1.0603620905) <= 1e-8);
}

TEST_CASE("table ground states") {
    for (std::size_t i = 0; i < kTableEps.size(); ++i) {
        const EigenResult r1 = solve_level({1, kTableEps[i]}, 0);
        const EigenResult r2 = solve_level({2, kTableEps[i] - 2.0}, 0);
        CAPTURE(kTableEps[i]);
        REQUIRE(r1.converged);
        REQUIRE(r2.converged);
        CHECK(std::abs(r1.E.real() - kTable1[i]) <= 2e-5);
        CHECK(std::abs(r2.E.real() - kTable2[i]) <= 2e-5);
    }
}

TEST_CASE("converged eigenvalues are real") {
    for (int M : {1, 2}) {
        for (double eps : {0.0, 0.5, 1.0, 3.0, 8.0, 20.0}) {
            for (int k = 0; k <= 3; ++k) {
                const EigenResult r = solve_level({M, eps}, k);
                CAPTURE(M);
                CAPTURE(eps);
                CAPTURE(k);
                REQUIRE(r.converged);
                CHECK(std::abs(r.E.imag()) <= 1e-8 * std::abs(r.E.real()));
                CHECK(r.E.real() > 0.0);
            }
        }
    }
}

TEST_CASE("discretization independence") {
    SUBCASE("doubled outer radius and halved tolerance, eps in {0, 1, 2}") {
        for (double eps : {0.0, 1.0, 2.0}) {
            for (int k = 0; k <= 2; ++k) {
                const EigenResult base = solve_level({1, eps}, k);
                Options o;
                o.radius_factor = 2.0;
                o.tol = 0.5e-10;
                o.rtol = 0.5e-11;
                const EigenResult wide = solve_level({1, eps}, k, std::nullopt, o);
                CAPTURE(eps);
                CAPTURE(k);
                REQUIRE(base.converged);
                REQUIRE(wide.converged);
                CHECK(std::abs(wide.E - base.E) <= 1e-7 * std::abs(base.E));
            }
        }
    }
    SUBCASE("doubled decay depth across the table range") {
        for (double eps : {8.0, 28.0, 58.0}) {
            for (int M : {1, 2}) {
                const EigenResult base = solve_level({M, eps}, 0);
                Options o;
                o.decay_depth = 50.0;
                o.tol = 0.5e-10;
                const EigenResult deep = solve_level({M, eps}, 0, std::nullopt, o);
                CAPTURE(eps);
                CAPTURE(M);
                REQUIRE(base.converged);
                REQUIRE(deep.converged);
                CHECK(std::abs(deep.E - base.E) <= 1e-7 * std::abs(base.E));
            }
        }
    }
}

TEST_CASE("self-consistency at eps = 1, 2") {
    Options o = tight();
    o.radius_factor = 2.0;
    // frozen from a tol = 1e-12 run with doubled outer radius
    const double frozen[] = {1.1562670719881121, 1.4771497535779949};
    int i = 0;
    for (double eps : {1.0, 2.0}) {
        const EigenResult ref = solve_level({1, eps}, 0, std::nullopt, o);
        const EigenResult r = solve_level({1, eps}, 0);
        REQUIRE(ref.converged);
        CHECK(std::abs(r.E.real() - ref.E.real()) <= 1e-9 * ref.E.real());
        CHECK(ref.E.real() == doctest::Approx(frozen[i++]).epsilon(1e-11));
    }
}

TEST_CASE("scan: oscillator and table column") {
    const ScanResult s0 = scan_levels({{1, 0.0}}, 4);
    REQUIRE(s0.points.size() == 5);
    for (int k = 0; k <= 4; ++k) {
        CHECK(s0.points[k].result.k == k);
        CHECK(std::abs(s0.points[k].result.E.real() - (2 * k + 1)) <= 1e-8 * (2 * k + 1));
    }
    std::vector<ModelSpec> grid;
    for (double e : kTableEps) grid.push_back({1, e});
    const ScanResult s1 = scan_levels(grid, 0);
    REQUIRE(s1.points.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(s1.points[i].model.epsilon == grid[i].epsilon);
        CHECK(std::abs(s1.points[i].result.E.real() - kTable1[i]) <= 2e-5);
    }
    CHECK(s1.monotone[0]);
}

TEST_CASE("levels rise monotonically in eps for M = 1, k <= 4") {
    std::vector<ModelSpec> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back({1, 0.25 * i});
    const ScanResult s = scan_levels(grid, 4);
    REQUIRE(s.points.size() == grid.size() * 5);
    for (int k = 0; k <= 4; ++k) CHECK(s.monotone[k]);
    double prev[5] = {0, 0, 0, 0, 0};
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double below = 0.0;
        for (int k = 0; k <= 4; ++k) {
            const auto& p = s.points[g * 5 + k];
            CAPTURE(p.model.epsilon);
            CAPTURE(k);
            REQUIRE(p.result.converged);
            CHECK(p.result.E.real() >= prev[k]);
            CHECK(p.result.E.real() > below * (1.0 + 1e-6));  // distinct, ordered levels
            prev[k] = p.result.E.real();
            below = p.result.E.real();
        }
    }
}

TEST_CASE("scan output does not depend on the thread count") {
    std::vector<ModelSpec> grid = {{1, 0.5}, {1, 1.5}, {1, 3.0}};
    setenv("PT_WELL_THREADS", "1", 1);
    const ScanResult a = scan_levels(grid, 3);
    setenv("PT_WELL_THREADS", "4", 1);
    const ScanResult b = scan_levels(grid, 3);
    unsetenv("PT_WELL_THREADS");
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].result.k == b.points[i].result.k);
        CHECK(a.points[i].result.E == b.points[i].result.E);
    }
}

TEST_CASE("failures are reported, not thrown") {
    Options o;
    o.max_iterations = 1;
    const EigenResult r = solve_level({1, 3.0}, 2, cplx(20.0), o);
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.message.empty());
    CHECK_THROWS_AS(solve_level({1, 1.0}, -1), DomainError);
    CHECK_THROWS_AS(build_contour({1, 1.0}, -1.0), DomainError);
}
