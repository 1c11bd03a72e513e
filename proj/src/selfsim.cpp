#include "swfront/selfsim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swfront/elliptic.hpp"
#include "swfront/quadrature.hpp"
#include "swfront/rootfind.hpp"

namespace swfront::selfsim {

using std::numbers::pi;

ParabolicRate parabolic_rhs(const ParabolicState& s) {
    ParabolicRate r;
    r.alpha = -s.alpha * s.alpha - 2.0 * s.gamma - 2.0;
    r.gamma = -3.0 * s.alpha * s.gamma;
    r.mu = -s.alpha * s.mu;
    r.beta = s.delta;
    r.delta = -2.0 * s.beta;
    return r;
}

double invariant_h(double alpha, double gamma) {
    if (gamma == 0.0) throw std::domain_error("invariant_h: gamma must be nonzero");
    const double c = std::cbrt(gamma);
    return (alpha * alpha - 4.0 * gamma + 2.0) / (2.0 * c * c);
}

CanonicalPoint to_canonical(double alpha, double gamma) {
    if (gamma == 0.0) throw std::domain_error("to_canonical: gamma must be nonzero");
    CanonicalPoint c;
    c.q = 1.0 / std::cbrt(gamma);
    c.p = alpha / std::cbrt(gamma);
    c.energy = 0.5 * c.p * c.p + c.q * c.q - 2.0 / c.q;
    return c;
}

std::pair<double, double> sigma_roots(double gamma0) {
    if (gamma0 == 0.0 || gamma0 > 0.125)
        throw std::domain_error("sigma_roots: need gamma0 != 0 and gamma0 <= 1/8");
    const double disc = std::sqrt(1.0 - 8.0 * gamma0);
    return {(-1.0 + disc) / (4.0 * gamma0), (-1.0 - disc) / (4.0 * gamma0)};
}

double representative_gamma0(double energy) {
    if (!(energy > 3.0))
        throw std::domain_error("representative_gamma0: sloshing requires E > 3");
    // most negative root of q^3 - E q - 2 = 0
    auto f = [energy](double q) { return q * q * q - energy * q - 2.0; };
    const double lo = -(std::sqrt(energy) + 2.0);
    const double q_minus = rootfind::find_root(f, lo, -1.0, 1e-15);
    return 1.0 / (q_minus * q_minus * q_minus);
}

double period(double gamma0) {
    if (!(gamma0 > -1.0 && gamma0 < 0.0))
        throw std::domain_error("period: gamma0 must lie in (-1, 0)");
    const auto [sp, sm] = sigma_roots(gamma0);
    const double k2 = (sm - 1.0) / (sm - sp);
    const double n = sp * k2;  // negative characteristic
    const double g = 2.0 / std::sqrt(sm - sp);
    const double k = std::sqrt(k2);
    const double F = elliptic::ellint_f(pi / 2, k);
    const double P = elliptic::ellint_pi(n, pi / 2, k);
    return g / std::sqrt(-gamma0) * (F / sp + (1.0 - 1.0 / sp) * P);
}

double period_quadrature(double gamma0) {
    if (!(gamma0 > -1.0 && gamma0 < 0.0))
        throw std::domain_error("period_quadrature: gamma0 must lie in (-1, 0)");
    const auto [sp, sm] = sigma_roots(gamma0);
    const double ag = -gamma0;
    // s = 1 + (sm-1) sin^2(theta) regularizes both turning points
    auto f = [&](double th) {
        const double st = std::sin(th);
        const double s = 1.0 + (sm - 1.0) * st * st;
        return 2.0 / (s * std::sqrt(4.0 * ag * (s - sp)));
    };
    return 2.0 * quad::integrate_value(f, 0.0, pi / 2, 1e-13, 1e-15);
}

double period_from_energy(double energy) {
    if (!(energy > 3.0))
        throw std::domain_error("period_from_energy: sloshing requires E > 3");
    auto cubic = [energy](double q) { return q * q * q - energy * q - 2.0; };
    const double lo = -(std::sqrt(energy) + 2.0);
    const double q_lo = rootfind::find_root(cubic, lo, -1.0, 1e-15);
    const double q_hi = rootfind::find_root(cubic, -1.0, -1e-12, 1e-15);
    const double q_s = rootfind::find_root(cubic, 1e-12, std::sqrt(energy) + 2.0, 1e-15);
    // q = q_lo + (q_hi - q_lo) sin^2(theta); the square-root endpoint factors
    // cancel against dq
    auto f = [&](double th) {
        const double st = std::sin(th);
        const double q = q_lo + (q_hi - q_lo) * st * st;
        return 2.0 * std::sqrt(-q) / std::sqrt(2.0 * (q_s - q));
    };
    return 2.0 * quad::integrate_value(f, 0.0, pi / 2, 1e-13, 1e-15);
}

double blowup_time_quadrature(double gamma0) {
    if (!(gamma0 > 0.0))
        throw std::domain_error("blowup_time: gamma0 must be positive");
    // s in [1,2] with s = 1 + v^2 (integrable endpoint), then s in [2,inf)
    // with s = 1/w
    auto f1 = [gamma0](double v) {
        const double s = 1.0 + v * v;
        return 2.0 / ((1.0 + v * v) *
                      std::sqrt(2.0 * (2.0 * gamma0 * s * s + s + 1.0)));
    };
    auto f2 = [gamma0](double w) {
        return std::sqrt(w) / std::sqrt(2.0 * (1.0 - w) * (2.0 * gamma0 + w + w * w));
    };
    return quad::integrate_value(f1, 0.0, 1.0, 1e-13, 1e-16) +
           quad::integrate_value(f2, 0.0, 0.5, 1e-13, 1e-16);
}

double blowup_time(double gamma0) { return blowup_time_quadrature(gamma0); }

double blowup_time_elliptic(double gamma0) {
    if (!(gamma0 > 0.0 && gamma0 < 0.125))
        throw std::domain_error(
            "blowup_time_elliptic: real sigma roots require 0 < gamma0 < 1/8");
    const auto [sp, sm] = sigma_roots(gamma0);  // sm < sp < 0 here
    const double k2 = (sp - sm) / (1.0 - sm);
    const double n = sp;
    const double k = std::sqrt(k2);
    const double F = elliptic::ellint_f(pi / 2, k);
    const double P = elliptic::ellint_pi(n, pi / 2, k);
    return ((sp - 1.0) * P + F) / (sp * std::sqrt(gamma0) * std::sqrt(1.0 - sm));
}

double time_of_sigma(double gamma0, double sigma, Branch branch) {
    if (gamma0 == 0.0 || gamma0 <= -1.0)
        throw std::domain_error("time_of_sigma: gamma0 must lie in (-1,0) or (0,inf)");
    const double sign = (branch == Branch::Plus) ? 1.0 : -1.0;
    if (sigma == 1.0) return 0.0;
    if (sigma < 1.0)
        throw std::domain_error("time_of_sigma: sigma below the orbit range");

    if (gamma0 < 0.0) {
        const auto [sp, sm] = sigma_roots(gamma0);
        if (sigma > sm * (1.0 + 1e-14))
            throw std::domain_error("time_of_sigma: sigma past the turning point");
        const double s_cap = std::min(sigma, sm);
        const double th1 = std::asin(std::sqrt((s_cap - 1.0) / (sm - 1.0)));
        const double ag = -gamma0;
        auto f = [&](double th) {
            const double st = std::sin(th);
            const double s = 1.0 + (sm - 1.0) * st * st;
            return 2.0 / (s * std::sqrt(4.0 * ag * (s - sp)));
        };
        return sign * quad::integrate_value(f, 0.0, th1, 1e-13, 1e-16);
    }

    // gamma0 > 0: integrand singular only at s = 1; substitute s = 1 + v^2
    const double mid = std::min(sigma, 2.0);
    auto f1 = [gamma0](double v) {
        const double s = 1.0 + v * v;
        return 2.0 / (s * std::sqrt(2.0 * (2.0 * gamma0 * s * s + s + 1.0)));
    };
    double value = quad::integrate_value(f1, 0.0, std::sqrt(mid - 1.0), 1e-13, 1e-16);
    if (sigma > 2.0) {
        auto f = [gamma0](double s) {
            return 1.0 /
                   (s * std::sqrt(2.0 * (s - 1.0) * (2.0 * gamma0 * s * s + s + 1.0)));
        };
        value += quad::integrate_value(f, 2.0, sigma, 1e-13, 1e-16);
    }
    return sign * value;
}

std::pair<double, double> reconstruct_fields(const ParabolicState& s, double x) {
    const double dx = x - s.beta;
    return {s.mu + s.gamma * dx * dx, s.delta + s.alpha * dx};
}

std::optional<std::pair<double, double>> vacuum_points(const ParabolicState& s) {
    if (s.gamma < 0.0 && s.mu >= 0.0) {
        const double r = std::sqrt(s.mu / -s.gamma);
        return std::make_pair(s.beta - r, s.beta + r);
    }
    if (s.gamma > 0.0 && s.mu < 0.0) {
        const double r = std::sqrt(-s.mu / s.gamma);
        return std::make_pair(s.beta - r, s.beta + r);
    }
    return std::nullopt;
}

hierarchy::FrontSeriesState selfsim_to_series(const ParabolicState& s) {
    if (!(s.gamma < 0.0) || !(s.mu > 0.0))
        throw std::domain_error("selfsim_to_series: requires gamma < 0 and mu > 0");
    const double r = std::sqrt(s.mu / -s.gamma);
    hierarchy::FrontSeriesState f;
    f.kind = hierarchy::FrontKind::PhysicalVacuum;
    f.order = 2;
    f.x = s.beta + r;
    f.u = {s.delta + s.alpha * r, s.alpha, 0.0};
    f.h = {0.0, -2.0 * std::sqrt(-s.gamma * s.mu), s.gamma};
    f.xdot = f.u[0];
    f.t = s.t;
    return f;
}

Regime classify(double gamma0, double alpha0) {
    if (gamma0 == 0.0) throw std::domain_error("classify: curvature must be nonzero");
    Regime r{};
    r.energy = invariant_h(alpha0, gamma0);
    if (std::abs(gamma0 + 1.0) <= 1e-12 && std::abs(alpha0) <= 1e-12) {
        r.kind = Regime::Kind::FixedPoint;
        return r;
    }
    if (gamma0 < 0.0) {
        r.kind = Regime::Kind::Sloshing;
        r.period = period(representative_gamma0(r.energy));
        return r;
    }
    r.kind = Regime::Kind::BlowUp;
    if (alpha0 == 0.0) {
        r.blowup_time = blowup_time(gamma0);
    } else {
        // generic start: integrate the five-field system to divergence
        ParabolicState s0{alpha0, gamma0, 0.0, 0.0, 0.0, 0.0};
        auto res = integrate_parabolic(s0, 1e6, 1e-12);
        r.blowup_time = res.divergence_time.value_or(0.0);
    }
    return r;
}

ParabolicState TrajectoryResult::state_at(double t) const {
    std::vector<double> y;
    raw.path.sample(t, y);
    return ParabolicState{y[0], y[1], y[2], y[3], y[4], t};
}

ParabolicState TrajectoryResult::final_state() const {
    const auto& y = raw.y_final;
    return ParabolicState{y[0], y[1], y[2], y[3], y[4], raw.t_final};
}

TrajectoryResult integrate_parabolic(const ParabolicState& s0, double t_end,
                                     double tol) {
    if (s0.gamma == 0.0)
        throw std::domain_error("integrate_parabolic: gamma0 must be nonzero");
    const double sign0 = s0.gamma > 0 ? 1.0 : -1.0;

    ode::Rhs rhs = [](double, const std::vector<double>& y, std::vector<double>& d) {
        d.resize(5);
        d[0] = -y[0] * y[0] - 2.0 * y[1] - 2.0;
        d[1] = -3.0 * y[0] * y[1];
        d[2] = -y[0] * y[2];
        d[3] = y[4];
        d[4] = -2.0 * y[3];
    };
    ode::Options opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol;
    opt.min_step = 1e-14;

    auto stop = [](double, const std::vector<double>& y) {
        return std::abs(y[1]) > 1e12;
    };
    auto observe = [sign0](double t, const std::vector<double>& y) {
        if (y[1] * sign0 <= 0.0)
            throw std::logic_error("integrate_parabolic: curvature sign flipped at t=" +
                                   std::to_string(t));
    };

    TrajectoryResult out;
    out.raw = ode::integrate(rhs, s0.t, {s0.alpha, s0.gamma, s0.mu, s0.beta, s0.delta},
                             s0.t + t_end, opt, stop, observe);
    if (out.raw.status == ode::Outcome::Stopped)
        out.divergence_time = out.raw.event_time;
    else if (out.raw.status == ode::Outcome::StepUnderflow)
        out.divergence_time = out.raw.t_final;
    return out;
}

} // namespace swfront::selfsim
