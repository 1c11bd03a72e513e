#ifndef SWFRONT_QUADRATURE_HPP
#define SWFRONT_QUADRATURE_HPP

#include <functional>

namespace swfront::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;       // estimated absolute error
    long evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval. Bisects the panel
// with the largest error estimate until the global estimate meets
// rel_tol*|value| + abs_tol or max_panels is exhausted.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 1e-15,
                 int max_panels = 4000);

// Convenience wrapper: returns the value, throws std::runtime_error if the
// requested tolerance was not reached.
double integrate_value(const std::function<double(double)>& f, double a, double b,
                       double rel_tol = 1e-12, double abs_tol = 1e-15);

} // namespace swfront::quad

#endif
