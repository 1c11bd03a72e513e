#ifndef SWFRONT_ROOTFIND_HPP
#define SWFRONT_ROOTFIND_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

namespace swfront::rootfind {

// Bracketed root of a continuous function: bisection with secant refinement
// on the shrinking bracket. Requires f(a)*f(b) <= 0.
inline double find_root(const std::function<double(double)>& f, double a, double b,
                        double xtol = 1e-13, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw std::invalid_argument("find_root: endpoints do not bracket a root");
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(b - a) <= xtol) break;
        // secant candidate, fall back to midpoint when it leaves the bracket
        double x = (fb != fa) ? b - fb * (b - a) / (fb - fa) : 0.5 * (a + b);
        const double mid = 0.5 * (a + b);
        if (!(x > a && x < b)) x = mid;
        // force occasional bisection so the bracket provably shrinks
        if (it % 2 == 1) x = mid;
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (std::signbit(fx) == std::signbit(fa)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    return 0.5 * (a + b);
}

// Golden-section minimizer on [a,b] for a unimodal function.
inline double minimize_scalar(const std::function<double(double)>& f, double a, double b,
                              double xtol = 1e-12, int max_iter = 200) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace swfront::rootfind

#endif
