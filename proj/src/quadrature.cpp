#include "swfront/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace swfront::quad {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss
// weights (Kronrod extension of G7).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);

    double result_kronrod = kWgk[7] * fv[7];
    double result_gauss = kWg[3] * fv[7];
    for (int j = 0; j < 7; ++j) {
        result_kronrod += kWgk[j] * (fv[j] + fv[14 - j]);
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (fv[j] + fv[14 - j]);
    }
    result_kronrod *= h;
    result_gauss *= h;

    double err = std::abs(result_kronrod - result_gauss);
    // Kronrod error sharpening (as in QUADPACK): scale by (200*err)^1.5
    if (err > 0.0) {
        const double scaled = std::pow(200.0 * err, 1.5);
        if (scaled < err) err = scaled;
    }
    return Panel{a, b, result_kronrod, err};
}

} // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_panels) {
    Result out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Panel> heap;
    Panel p0 = evaluate_panel(f, a, b);
    out.evaluations = 15;
    double total = p0.value;
    double total_err = p0.error;
    heap.push(p0);

    int panels = 1;
    while (panels < max_panels) {
        const double tol = std::max(rel_tol * std::abs(total), abs_tol);
        if (total_err <= tol) break;
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval exhausted at machine resolution; keep its estimate
            total_err -= worst.error;
            continue;
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    out.value = total;
    out.error = total_err;
    out.converged = total_err <= std::max(rel_tol * std::abs(total), abs_tol);
    return out;
}

double integrate_value(const std::function<double(double)>& f, double a, double b,
                       double rel_tol, double abs_tol) {
    Result r = integrate(f, a, b, rel_tol, abs_tol);
    if (!r.converged)
        throw std::runtime_error("quadrature failed to converge: error estimate " +
                                 std::to_string(r.error));
    return r.value;
}

} // namespace swfront::quad
