#include "ptwell/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <queue>

#include "ptwell/error.hpp"

namespace ptwell::quadrature {

Rule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                // one more pass for the derivative at the converged node
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                if (n == 1) p0 = 1.0;
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double value;
    double error;
};

Panel kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double gauss = fc * kWg[3];
    double kron = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    return {kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

Estimate adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol, double rel_tol,
                  int max_depth) {
    // Global bisection of the panel with the largest error estimate.
    struct Item {
        double a, b;
        Panel p;
        int depth;
        bool operator<(const Item& o) const { return p.error < o.p.error; }
    };
    std::priority_queue<Item> heap;
    Item first{a, b, kronrod15(f, a, b), 0};
    double value = first.p.value;
    double error = first.p.error;
    int evaluations = 15;
    heap.push(first);
    const int max_panels = 1 << 16;
    while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
        if (heap.empty() || static_cast<int>(heap.size()) > max_panels) {
            throw ConvergenceError("adaptive quadrature: tolerance not reached");
        }
        Item top = heap.top();
        if (top.depth >= max_depth) throw ConvergenceError("adaptive quadrature: maximum bisection depth reached");
        heap.pop();
        const double m = 0.5 * (top.a + top.b);
        Item left{top.a, m, kronrod15(f, top.a, m), top.depth + 1};
        Item right{m, top.b, kronrod15(f, m, top.b), top.depth + 1};
        evaluations += 30;
        value += left.p.value + right.p.value - top.p.value;
        error += left.p.error + right.p.error - top.p.error;
        heap.push(left);
        heap.push(right);
    }
    // re-sum to shed accumulated rounding from the running updates
    double total = 0.0;
    double total_err = 0.0;
    while (!heap.empty()) {
        total += heap.top().p.value;
        total_err += heap.top().p.error;
        heap.pop();
    }
    return Estimate{total, total_err, evaluations};
}

Estimate adaptive_semi_infinite(const std::function<double(double)>& f, double a, double abs_tol, double rel_tol) {
    auto mapped = [&](double u) {
        if (u >= 1.0) return 0.0;
        const double one_minus = 1.0 - u;
        const double t = a + u / one_minus;
        return f(t) / (one_minus * one_minus);
    };
    return adaptive(mapped, 0.0, 1.0, abs_tol, rel_tol);
}

}  // namespace ptwell::quadrature
