#ifndef SWFRONT_SELFSIM_HPP
#define SWFRONT_SELFSIM_HPP

#include <optional>
#include <utility>

#include "swfront/hierarchy.hpp"
#include "swfront/ode.hpp"

namespace swfront::selfsim {

// Self-similar solution class over the bottom b(x) = x^2 - 1:
//   eta(x,t) = mu(t) + gamma(t) (x - beta(t))^2
//   u(x,t)   = delta(t) + alpha(t) (x - beta(t))
struct ParabolicState {
    double alpha;  // velocity gradient
    double gamma;  // surface curvature
    double mu;     // apex thickness
    double beta;   // center-of-mass position
    double delta;  // center-of-mass velocity
    double t = 0.0;
};

struct ParabolicRate {
    double alpha, gamma, mu, beta, delta;
};

// (alpha', gamma', mu', beta', delta') =
//   (-alpha^2 - 2 gamma - 2, -3 alpha gamma, -alpha mu, delta, -2 beta)
ParabolicRate parabolic_rhs(const ParabolicState& s);

// Constant of motion H = (alpha^2 - 4 gamma + 2) / (2 gamma^{2/3}), real cube
// root convention so gamma^{2/3} = |gamma|^{2/3} > 0 for gamma < 0.
double invariant_h(double alpha, double gamma);

struct CanonicalPoint {
    double q;       // gamma^{-1/3}, real cube root (sign(q) = sign(gamma))
    double p;       // alpha gamma^{-1/3}
    double energy;  // E = p^2/2 + q^2 - 2/q
};
CanonicalPoint to_canonical(double alpha, double gamma);

struct Regime {
    enum class Kind { FixedPoint, Sloshing, BlowUp };
    Kind kind;
    double period = 0.0;       // Sloshing
    double blowup_time = 0.0;  // BlowUp
    double energy = 0.0;       // raw E, exposed alongside the derived times
};
Regime classify(double gamma0, double alpha0 = 0.0);

// Roots sigma_pm = (-1 +- sqrt(1 - 8 gamma0)) / (4 gamma0) of the quadratic
// factor 2 gamma0 s^2 + s + 1; real for gamma0 <= 1/8.
std::pair<double, double> sigma_roots(double gamma0);

// Curvature period for sloshing orbits labelled by gamma0 in (-1, 0) with
// alpha0 = 0; closed form through incomplete elliptic integrals. The value
// lies in (pi/sqrt(2), pi sqrt(2/3)).
double period(double gamma0);
// Independent route: adaptive quadrature of the sigma-plane time integral.
double period_quadrature(double gamma0);
// Period as orbit quadrature in q between the turning points of U(q)=E.
double period_from_energy(double energy);
// The (-1,0) label of the orbit with the given energy E > 3.
double representative_gamma0(double energy);

// Finite blow-up time for gamma0 > 0, alpha0 = 0:
//   t_bu = int_1^inf ds / [s sqrt(2 (s-1) (2 gamma0 s^2 + s + 1))].
// Normative value by adaptive quadrature with an s = 1 + v^2 endpoint
// substitution; the elliptic closed form is available where the sigma roots
// are real (gamma0 < 1/8).
double blowup_time(double gamma0);
double blowup_time_quadrature(double gamma0);
double blowup_time_elliptic(double gamma0);

enum class Branch { Plus, Minus };

// Time along the orbit as a function of sigma = (gamma/gamma0)^{1/3};
// branch picks the sign of the quadrature.
double time_of_sigma(double gamma0, double sigma, Branch branch = Branch::Plus);

// Pointwise ansatz evaluation; no wet-region clamping.
std::pair<double, double> reconstruct_fields(const ParabolicState& s, double x);

// The two physical-vacuum boundaries beta +- sqrt(mu/|gamma|) where the
// surface meets the bottom; empty when the surface does not intersect it.
std::optional<std::pair<double, double>> vacuum_points(const ParabolicState& s);

// Wavefront-series view of the right vacuum point (physical vacuum,
// exact at order 2 over the quadratic bottom).
hierarchy::FrontSeriesState selfsim_to_series(const ParabolicState& s);

struct TrajectoryResult {
    ode::IntegrationResult raw;
    std::optional<double> divergence_time;  // set when blow-up was detected
    ParabolicState state_at(double t) const;
    ParabolicState final_state() const;
};

// Adaptive integration of the five-field system. Blow-up is detected when
// |gamma| exceeds 1e12 or the step size underflows; the event time is
// refined by bisection on the last bracket.
TrajectoryResult integrate_parabolic(const ParabolicState& s0, double t_end,
                                     double tol);

} // namespace swfront::selfsim

#endif
