#include "swfront/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "swfront/quadrature.hpp"
#include "swfront/rootfind.hpp"

namespace swfront::hierarchy {

using bathy::BottomProfile;

// ---------------------------------------------------------------------------
// state plumbing
// ---------------------------------------------------------------------------

FrontSeriesState FrontSeriesState::still_water(double x, int direction, int order,
                                               const BottomProfile& bottom) {
    FrontSeriesState s;
    s.kind = FrontKind::StillWater;
    s.x = x;
    s.order = order;
    s.u.assign(static_cast<std::size_t>(order) + 1, 0.0);
    s.h.assign(static_cast<std::size_t>(order) + 1, 0.0);
    s.xdot = front_speed(bottom.eval(x), direction);
    return s;
}

FrontSeriesState FrontSeriesState::vacuum(double x, double u0, int order) {
    FrontSeriesState s;
    s.kind = FrontKind::NonphysicalVacuum;
    s.x = x;
    s.order = order;
    s.u.assign(static_cast<std::size_t>(order) + 1, 0.0);
    s.h.assign(static_cast<std::size_t>(order) + 1, 0.0);
    s.u[0] = u0;
    s.xdot = u0;
    return s;
}

void FrontSeriesState::validate() const {
    if (order < 1) throw std::domain_error("front state: order must be >= 1");
    const auto n = static_cast<std::size_t>(order) + 1;
    if (u.size() != n || h.size() != n)
        throw std::domain_error("front state: coefficient arrays must have order+1 entries");
    if (h[0] != 0.0) throw std::domain_error("front state: h[0] must vanish");
    switch (kind) {
        case FrontKind::StillWater:
            if (u[0] != 0.0)
                throw std::domain_error("still-water front: u[0] must vanish");
            break;
        case FrontKind::NonphysicalVacuum:
            if (h[1] != 0.0)
                throw std::domain_error("nonphysical vacuum: eta1 must vanish");
            break;
        case FrontKind::PhysicalVacuum:
            if (!(h[1] < 0.0))
                throw std::domain_error("physical vacuum: eta1 must be negative");
            break;
    }
}

double front_speed(double b0, int direction) {
    if (!(b0 < 0.0))
        throw std::domain_error("front_speed: front at or beyond the shoreline (b0 >= 0)");
    return (direction >= 0 ? 1.0 : -1.0) * std::sqrt(-b0);
}

// ---------------------------------------------------------------------------
// hierarchy right-hand sides
// ---------------------------------------------------------------------------

FrontSeriesRate hierarchy_rhs_still(const FrontSeriesState& s,
                                    const BottomProfile& bottom) {
    const int N = s.order;
    const auto bk = bottom.taylor_coeffs(s.x, std::max(N, 1));
    const int dir = s.xdot >= 0 ? 1 : -1;
    const double xdot = front_speed(bk[0], dir);
    const double xddot = -0.5 * bk[1];

    FrontSeriesRate r;
    r.du.assign(static_cast<std::size_t>(N) + 1, 0.0);
    r.dh.assign(static_cast<std::size_t>(N) + 1, 0.0);
    r.dx = xdot;

    const auto& u = s.u;
    const auto& h = s.h;
    for (int n = 1; n < N; ++n) {
        double su = 0.0, sz = 0.0;
        for (int k = 1; k <= n; ++k) {
            sz += (h[k] - bk[k]) * u[n + 1 - k];
            su += k * u[k] * u[n + 1 - k];
        }
        r.dh[n] = (n + 1) * (xdot * h[n + 1] + bk[0] * u[n + 1]) - (n + 1) * sz;
        r.du[n] = -(n + 1) * (h[n + 1] - xdot * u[n + 1]) - su;
    }
    // last retained order: the exact linear combination
    //   dzeta_N + xdot du_N + G_N = 0
    // split by the substitution closure d/dt (zeta_N - xdot u_N) = 0
    {
        double sz = 0.0, su = 0.0;
        for (int k = 1; k <= N; ++k) {
            sz += (h[k] - bk[k]) * u[N + 1 - k];
            su += k * u[k] * u[N + 1 - k];
        }
        const double g = (N + 1) * sz + xdot * su;
        r.du[N] = -(xddot * u[N] + g) / (2.0 * xdot);
        r.dh[N] = xddot * u[N] + xdot * r.du[N];
    }
    return r;
}

FrontSeriesRate hierarchy_rhs_vacuum(const FrontSeriesState& s,
                                     const BottomProfile& bottom) {
    const int N = s.order;
    const auto bk = bottom.taylor_coeffs(s.x, N + 1);

    FrontSeriesRate r;
    r.du.assign(static_cast<std::size_t>(N) + 1, 0.0);
    r.dh.assign(static_cast<std::size_t>(N) + 1, 0.0);

    const auto& u = s.u;
    const auto& h = s.h;
    r.dx = u[0];
    r.du[0] = -bk[1] - h[1];
    for (int n = 1; n <= N; ++n) {
        double se = 0.0, su = 0.0;
        for (int k = 1; k <= n; ++k) {
            se += u[k] * h[n + 1 - k];
            su += k * u[k] * u[n + 1 - k];
        }
        const double eta_next = (n < N) ? h[n + 1] : 0.0;  // truncation
        r.dh[n] = -(n + 1) * se;
        r.du[n] = -(n + 1) * (eta_next + bk[n + 1]) - su;
    }
    return r;
}

std::vector<double> dry_side_rhs(const std::vector<double>& uprime,
                                 const BottomProfile& bottom, double x) {
    const int M = static_cast<int>(uprime.size()) - 1;
    const auto bk = bottom.taylor_coeffs(x, M + 1);
    std::vector<double> d(uprime.size(), 0.0);
    d[0] = -bk[1];
    for (int n = 1; n <= M; ++n) {
        double su = 0.0;
        for (int k = 1; k <= n; ++k) su += k * uprime[k] * uprime[n + 1 - k];
        d[n] = -(n + 1) * bk[n + 1] - su;
    }
    return d;
}

// ---------------------------------------------------------------------------
// front paths
// ---------------------------------------------------------------------------

namespace {

class ClosedFormPath final : public FrontPath {
public:
    ClosedFormPath(std::function<double(double)> pos, std::function<double(double)> spd)
        : pos_(std::move(pos)), spd_(std::move(spd)) {}
    double position(double t) const override { return pos_(t); }
    double speed(double t) const override { return spd_(t); }

private:
    std::function<double(double)> pos_, spd_;
};

// numeric still-water front: dX/dt = dir sqrt(-b(X)); the speed query is
// algebraic in the interpolated position, so it stays accurate between nodes
class NumericStillPath final : public FrontPath {
public:
    NumericStillPath(const BottomProfile& bottom, double x0, int dir, double t_max)
        : bottom_(bottom), dir_(dir) {
        ode::Rhs rhs = [this](double, const std::vector<double>& y,
                              std::vector<double>& d) {
            d.resize(1);
            const double depth = -bottom_.eval(y[0]);
            d[0] = dir_ * std::sqrt(std::max(depth, 0.0));
        };
        ode::Options opt;
        opt.rel_tol = 1e-12;
        opt.abs_tol = 1e-14;
        auto stop = [this](double, const std::vector<double>& y) {
            return -bottom_.eval(y[0]) < 1e-14;
        };
        res_ = ode::integrate(rhs, 0.0, {x0}, t_max, opt, stop);
    }
    double position(double t) const override {
        std::vector<double> y;
        res_.path.sample(std::min(t, res_.t_final), y);
        return y[0];
    }
    double speed(double t) const override {
        const double depth = -bottom_.eval(position(t));
        return dir_ * std::sqrt(std::max(depth, 0.0));
    }

private:
    BottomProfile bottom_;
    int dir_;
    ode::IntegrationResult res_;
};

bool is_unit_parabola(const BottomProfile& b) {
    // b(x) = x^2 - 1, the scaled parabolic bottom
    const auto& c = b.coefficients();
    return c.size() == 3 && c[0] == -1.0 && c[1] == 0.0 && c[2] == 1.0;
}

class NumericVacuumPath final : public VacuumFrontPath {
public:
    NumericVacuumPath(const BottomProfile& bottom, double x0, double v0, double t_max)
        : energy_(0.5 * v0 * v0 + bottom.eval(x0)) {
        ode::Rhs rhs = [bottom](double, const std::vector<double>& y,
                                std::vector<double>& d) {
            d.resize(2);
            d[0] = y[1];
            d[1] = -bottom.derivative(y[0], 1);
        };
        ode::Options opt;
        opt.rel_tol = 1e-12;
        opt.abs_tol = 1e-14;
        res_ = ode::integrate(rhs, 0.0, {x0, v0}, t_max, opt);
    }
    double position(double t) const override { return sample(t)[0]; }
    double speed(double t) const override { return sample(t)[1]; }
    double energy() const override { return energy_; }

private:
    std::vector<double> sample(double t) const {
        std::vector<double> y;
        res_.path.sample(t, y);
        return y;
    }
    double energy_;
    ode::IntegrationResult res_;
};

class ClosedVacuumPath final : public VacuumFrontPath {
public:
    ClosedVacuumPath(std::function<double(double)> pos, std::function<double(double)> spd,
                     double energy)
        : pos_(std::move(pos)), spd_(std::move(spd)), energy_(energy) {}
    double position(double t) const override { return pos_(t); }
    double speed(double t) const override { return spd_(t); }
    double energy() const override { return energy_; }

private:
    std::function<double(double)> pos_, spd_;
    double energy_;
};

} // namespace

std::unique_ptr<FrontPath> still_front_path(const BottomProfile& bottom, double x0,
                                            int direction, double t_max) {
    const double b0 = bottom.eval(x0);
    if (!(b0 < 0.0))
        throw std::domain_error("still_front_path: start point must be wet");
    const double dir = direction >= 0 ? 1.0 : -1.0;

    if (bottom.degree() == 0) {  // flat: uniform motion with speed sqrt(Q)
        const double c = dir * std::sqrt(-b0);
        return std::make_unique<ClosedFormPath>(
            [x0, c](double t) { return x0 + c * t; }, [c](double) { return c; });
    }
    if (bottom.degree() == 1) {
        // sloping beach: Xddot = -b1/2 exactly, so the path is a parabola in
        // time; an uphill front stops exactly at the shoreline
        const double b1 = bottom.coefficients()[1];
        const double v0 = dir * std::sqrt(-b0);
        const double t_star = (v0 * b1 > 0.0) ? 2.0 * v0 / b1
                                              : std::numeric_limits<double>::infinity();
        return std::make_unique<ClosedFormPath>(
            [=](double t) {
                t = std::min(t, t_star);
                return x0 + v0 * t - 0.25 * b1 * t * t;
            },
            [=](double t) { return t >= t_star ? 0.0 : v0 - 0.5 * b1 * t; });
    }
    if (is_unit_parabola(bottom)) {
        // dX = dir sqrt(1 - X^2): X = sin(asin x0 + dir t) up to the shoreline
        const double phase0 = std::asin(std::clamp(x0, -1.0, 1.0));
        const double t_star = (dir > 0 ? std::numbers::pi / 2 - phase0
                                       : std::numbers::pi / 2 + phase0);
        return std::make_unique<ClosedFormPath>(
            [=](double t) {
                if (t >= t_star) return dir > 0 ? 1.0 : -1.0;
                return std::sin(phase0 + dir * t);
            },
            [=](double t) {
                if (t >= t_star) return 0.0;
                return std::cos(phase0 + dir * t);  // = sqrt(1-X^2) >= 0
            });
    }
    return std::make_unique<NumericStillPath>(bottom, x0, direction >= 0 ? 1 : -1, t_max);
}

std::unique_ptr<VacuumFrontPath> nonphysical_front_motion(const BottomProfile& bottom,
                                                          double x0, double v0,
                                                          double t_max) {
    const double energy = 0.5 * v0 * v0 + bottom.eval(x0);
    const auto& c = bottom.coefficients();
    const double c1 = bottom.degree() >= 1 ? c[1] : 0.0;
    const double c2 = bottom.degree() >= 2 ? c[2] : 0.0;

    if (bottom.degree() <= 1) {  // uniform acceleration
        return std::make_unique<ClosedVacuumPath>(
            [=](double t) { return x0 + v0 * t - 0.5 * c1 * t * t; },
            [=](double t) { return v0 - c1 * t; }, energy);
    }
    if (bottom.degree() == 2) {
        const double xc = -c1 / (2.0 * c2);
        if (c2 > 0.0) {  // harmonic about the parabola vertex
            const double w = std::sqrt(2.0 * c2);
            return std::make_unique<ClosedVacuumPath>(
                [=](double t) {
                    return xc + (x0 - xc) * std::cos(w * t) + v0 / w * std::sin(w * t);
                },
                [=](double t) {
                    return -(x0 - xc) * w * std::sin(w * t) + v0 * std::cos(w * t);
                },
                energy);
        }
        const double l = std::sqrt(-2.0 * c2);  // repelled from a downward parabola
        return std::make_unique<ClosedVacuumPath>(
            [=](double t) {
                return xc + (x0 - xc) * std::cosh(l * t) + v0 / l * std::sinh(l * t);
            },
            [=](double t) {
                return (x0 - xc) * l * std::sinh(l * t) + v0 * std::cosh(l * t);
            },
            energy);
    }
    return std::make_unique<NumericVacuumPath>(bottom, x0, v0, t_max);
}

// ---------------------------------------------------------------------------
// reduced (u1, eta2) system
// ---------------------------------------------------------------------------

ReducedResult reduced_u1eta2_step(double u1_0, double eta2_0,
                                  const std::function<double(double)>& b2_of_t,
                                  double t_end, double tol) {
    ode::Rhs rhs = [&b2_of_t](double t, const std::vector<double>& y,
                              std::vector<double>& d) {
        d.resize(2);
        d[0] = -y[0] * y[0] - 2.0 * y[1] - 2.0 * b2_of_t(t);
        d[1] = -3.0 * y[0] * y[1];
    };
    ode::Options opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol;
    auto stop = [](double, const std::vector<double>& y) {
        return std::abs(y[0]) > 1e10;
    };
    ReducedResult out;
    out.raw = ode::integrate(rhs, 0.0, {u1_0, eta2_0}, t_end, opt, stop);
    if (out.raw.status == ode::Outcome::Stopped)
        out.divergence_time = out.raw.event_time;
    else if (out.raw.status == ode::Outcome::StepUnderflow)
        out.divergence_time = out.raw.t_final;
    return out;
}

std::pair<double, double> ReducedResult::at(double t) const {
    std::vector<double> y;
    raw.path.sample(t, y);
    return {y[0], y[1]};
}

// ---------------------------------------------------------------------------
// Riccati slope law and catastrophe prediction
// ---------------------------------------------------------------------------

GradientCatastrophe::GradientCatastrophe(double when, double where)
    : std::runtime_error("gradient catastrophe at t=" + std::to_string(when)),
      time(when),
      position(where) {}

namespace {

double slope_integral(const FrontPath& path, double t) {
    if (t == 0.0) return 0.0;
    auto f = [&path](double s) {
        const double v = path.speed(s);
        if (!(v > 0.0))
            throw std::domain_error("riccati_slope_time: front must keep advancing");
        return std::pow(v, -2.5);
    };
    return quad::integrate_value(f, 0.0, t, 1e-12, 1e-15);
}

} // namespace

double riccati_slope_time(const FrontPath& path, double zeta1_0, double t) {
    const double xd0 = path.speed(0.0);
    if (!(xd0 > 0.0))
        throw std::domain_error("riccati_slope_time: initial front speed must be positive");
    if (zeta1_0 == 0.0) return 0.0;  // zero slope is preserved

    const double c = 1.5 * std::pow(xd0, 1.5);
    auto denom = [&](double s) { return 1.0 / zeta1_0 + c * slope_integral(path, s); };
    const double dt = denom(t);
    if (zeta1_0 < 0.0 && dt >= 0.0) {
        // monotone denominator: bracket and refine the catastrophe time
        const double root = rootfind::find_root(denom, 0.0, t, 1e-13);
        throw GradientCatastrophe(root, path.position(root));
    }
    return std::pow(xd0 / path.speed(t), 1.5) / dt;
}

namespace {

// first shoreline (simple zero of b) to the right of x0, if any
std::optional<double> find_shoreline(const BottomProfile& bottom, double x0) {
    const double span = 1000.0;
    double step = 0.01 * std::max(1.0, std::abs(x0));
    double a = x0;
    double fa = bottom.eval(a);
    while (a < x0 + span) {
        double b = a + step;
        double fb = bottom.eval(b);
        if (fa < 0.0 && fb >= 0.0)
            return rootfind::find_root([&](double x) { return bottom.eval(x); }, a, b,
                                       1e-14);
        a = b;
        fa = fb;
        step *= 1.5;
    }
    return std::nullopt;
}

} // namespace

std::optional<double> shock_position(const BottomProfile& bottom, double x0,
                                     double zeta1_0) {
    if (!(bottom.eval(x0) < 0.0))
        throw std::domain_error("shock_position: start point must be wet");
    if (zeta1_0 >= 0.0) return std::nullopt;  // no breaking on this branch

    const double c = 1.5 * std::pow(-bottom.eval(x0), 0.75);
    const auto shoreline = find_shoreline(bottom, x0);

    if (shoreline) {
        // integrate in v = (xs - x')^{1/4}; the integrand (-b)^{-7/4} has an
        // integrable profile in v away from the shoreline
        const double xs = *shoreline;
        const double v0 = std::pow(xs - x0, 0.25);
        auto ii = [&](double v_lo) {
            auto f = [&](double v) {
                const double x = xs - v * v * v * v;
                const double depth = -bottom.eval(x);
                return 4.0 * v * v * v * std::pow(depth, -1.75);
            };
            return quad::integrate_value(f, v_lo, v0, 1e-12, 1e-15);
        };
        auto denom = [&](double v) { return 1.0 / zeta1_0 + c * ii(v); };
        // bracket: denom(v0)=1/zeta1_0<0 and denom -> +inf as v -> 0+
        double v_lo = 0.5 * v0;
        int guard = 0;
        while (denom(v_lo) < 0.0 && guard++ < 200) v_lo *= 0.75;
        if (guard >= 200) return std::nullopt;
        const double v_root = rootfind::find_root(denom, v_lo, v0, 1e-13);
        return xs - v_root * v_root * v_root * v_root;
    }

    // no shoreline (e.g. flat bottom): direct quadrature in x
    auto ii = [&](double x) {
        auto f = [&](double xp) { return std::pow(-bottom.eval(xp), -1.75); };
        return quad::integrate_value(f, x0, x, 1e-12, 1e-15);
    };
    auto denom = [&](double x) { return 1.0 / zeta1_0 + c * ii(x); };
    double hi = x0 + 1.0;
    int guard = 0;
    while (denom(hi) < 0.0 && guard++ < 60) hi = x0 + 2.0 * (hi - x0);
    if (guard >= 60) return std::nullopt;
    return rootfind::find_root(denom, x0 + 1e-15, hi, 1e-13);
}

std::pair<double, double> shoulder_initial_slope(double zeta_in_slope, double b0) {
    if (!(b0 < 0.0))
        throw std::domain_error("shoulder_initial_slope: corner must be wet (b0 < 0)");
    return {0.5 * zeta_in_slope, 0.5 * zeta_in_slope / std::sqrt(-b0)};
}

CornerFronts corner_split_fronts(const BottomProfile& bottom, double x0,
                                 const std::function<double(double)>& surface_left,
                                 const std::function<double(double)>& surface_right,
                                 double t_max) {
    const double eta_r = surface_right(x0) - bottom.eval(x0);
    const double eta_l = surface_left(x0) - bottom.eval(x0);
    if (!(eta_r > 0.0) && !(eta_l > 0.0))
        throw std::domain_error("corner_split_fronts: dry corner");

    auto make = [&](const std::function<double(double)>& surface,
                    int dir) -> std::unique_ptr<FrontPath> {
        // quiescent side (zero surface elevation): the characteristic obeys
        // the still-water front law, with closed forms where available
        if (surface(x0) == 0.0 && surface(x0 + 1e-3) == 0.0 && surface(x0 - 1e-3) == 0.0)
            return still_front_path(bottom, x0, dir, t_max);
        ode::Rhs rhs = [&bottom, surface, dir](double, const std::vector<double>& y,
                                               std::vector<double>& d) {
            d.resize(1);
            const double eta = surface(y[0]) - bottom.eval(y[0]);
            d[0] = dir * std::sqrt(std::max(eta, 0.0));
        };
        ode::Options opt;
        opt.rel_tol = 1e-12;
        opt.abs_tol = 1e-14;
        auto res = std::make_shared<ode::IntegrationResult>(
            ode::integrate(rhs, 0.0, {x0}, t_max, opt));
        auto pos = [res](double t) {
            std::vector<double> y;
            res->path.sample(t, y);
            return y[0];
        };
        auto spd = [&bottom, surface, dir, pos](double t) {
            const double x = pos(t);
            return dir * std::sqrt(std::max(surface(x) - bottom.eval(x), 0.0));
        };
        return std::make_unique<ClosedFormPath>(pos, spd);
    };

    CornerFronts out;
    out.right = make(surface_right, +1);
    out.left = make(surface_left, -1);
    return out;
}

std::vector<std::pair<double, double>> velocity_jump_evolution(
    const std::function<double(double)>& eta1, double jump0,
    const std::vector<double>& times) {
    std::vector<std::pair<double, double>> out;
    out.reserve(times.size());
    double acc = jump0;
    double t_prev = 0.0;
    for (double t : times) {
        acc += quad::integrate_value(eta1, t_prev, t, 1e-12, 1e-15);
        out.emplace_back(t, acc);
        t_prev = t;
    }
    return out;
}

// ---------------------------------------------------------------------------
// truncated-front integration
// ---------------------------------------------------------------------------

namespace {

// state vector layout helpers (front + coefficient arrays)
void pack(const FrontSeriesState& s, std::vector<double>& y) {
    const int N = s.order;
    if (s.kind == FrontKind::StillWater) {
        y.resize(1 + 2 * static_cast<std::size_t>(N));
        y[0] = s.x;
        for (int k = 1; k <= N; ++k) {
            y[static_cast<std::size_t>(k)] = s.h[k];
            y[static_cast<std::size_t>(N + k)] = s.u[k];
        }
    } else {
        y.resize(2 + 2 * static_cast<std::size_t>(N));
        y[0] = s.x;
        y[1] = s.u[0];
        for (int k = 1; k <= N; ++k) {
            y[static_cast<std::size_t>(1 + k)] = s.u[k];
            y[static_cast<std::size_t>(1 + N + k)] = s.h[k];
        }
    }
}

FrontSeriesState unpack(FrontKind kind, int N, int dir, double t,
                        const std::vector<double>& y,
                        const BottomProfile* bottom) {
    FrontSeriesState s;
    s.kind = kind;
    s.order = N;
    s.t = t;
    s.u.assign(static_cast<std::size_t>(N) + 1, 0.0);
    s.h.assign(static_cast<std::size_t>(N) + 1, 0.0);
    if (kind == FrontKind::StillWater) {
        s.x = y[0];
        for (int k = 1; k <= N; ++k) {
            s.h[k] = y[static_cast<std::size_t>(k)];
            s.u[k] = y[static_cast<std::size_t>(N + k)];
        }
        s.xdot = bottom ? front_speed(bottom->eval(s.x), dir) : 0.0;
    } else {
        s.x = y[0];
        s.u[0] = y[1];
        for (int k = 1; k <= N; ++k) {
            s.u[k] = y[static_cast<std::size_t>(1 + k)];
            s.h[k] = y[static_cast<std::size_t>(1 + N + k)];
        }
        s.xdot = s.u[0];
    }
    return s;
}

} // namespace

FrontSeriesState FrontTrajectory::state_at(double t) const {
    std::vector<double> y;
    raw.path.sample(t, y);
    return unpack(kind, order, direction, t, y, bottom ? &*bottom : nullptr);
}

FrontTrajectory integrate_front(const FrontSeriesState& s0, const BottomProfile& bottom,
                                double t_end, double tol) {
    s0.validate();
    const int N = s0.order;
    const FrontKind kind = s0.kind;
    const int dir = s0.xdot >= 0 ? 1 : -1;

    ode::Rhs rhs = [N, kind, dir, &bottom](double t, const std::vector<double>& y,
                                           std::vector<double>& d) {
        FrontSeriesState s = unpack(kind, N, dir, t, y, &bottom);
        FrontSeriesRate r = (kind == FrontKind::StillWater)
                                ? hierarchy_rhs_still(s, bottom)
                                : hierarchy_rhs_vacuum(s, bottom);
        d.resize(y.size());
        if (kind == FrontKind::StillWater) {
            d[0] = r.dx;
            for (int k = 1; k <= N; ++k) {
                d[static_cast<std::size_t>(k)] = r.dh[k];
                d[static_cast<std::size_t>(N + k)] = r.du[k];
            }
        } else {
            d[0] = r.dx;
            d[1] = r.du[0];
            for (int k = 1; k <= N; ++k) {
                d[static_cast<std::size_t>(1 + k)] = r.du[k];
                d[static_cast<std::size_t>(1 + N + k)] = r.dh[k];
            }
        }
    };

    std::vector<double> y0;
    pack(s0, y0);
    ode::Options opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol;

    FrontTrajectory out;
    out.order = N;
    out.kind = kind;
    out.direction = dir;
    out.bottom = bottom;
    out.raw = ode::integrate(rhs, s0.t, y0, s0.t + t_end, opt);
    return out;
}

double PhysicalVacuumTrajectory::jump_at(double t) const {
    std::vector<double> y;
    raw.path.sample(t, y);
    return y.back();
}

FrontSeriesState PhysicalVacuumTrajectory::wet_state_at(double t) const {
    std::vector<double> y;
    raw.path.sample(t, y);
    const int N = order;
    std::vector<double> wet(y.begin(), y.begin() + 2 + 2 * N);
    return unpack(FrontKind::PhysicalVacuum, N, 1, t, wet, nullptr);
}

std::vector<double> PhysicalVacuumTrajectory::dry_coeffs_at(double t) const {
    std::vector<double> y;
    raw.path.sample(t, y);
    const int N = order;
    return std::vector<double>(y.begin() + 2 + 2 * N, y.end() - 1);
}

PhysicalVacuumTrajectory integrate_physical_vacuum(const FrontSeriesState& s0,
                                                   const std::vector<double>& dry_u0,
                                                   const BottomProfile& bottom,
                                                   double t_end, double tol) {
    s0.validate();
    if (s0.kind != FrontKind::PhysicalVacuum)
        throw std::domain_error("integrate_physical_vacuum: state must be a physical vacuum");
    const int N = s0.order;
    std::vector<double> up = dry_u0.empty() ? s0.u : dry_u0;  // continuous default
    if (static_cast<int>(up.size()) != N + 1)
        throw std::domain_error("integrate_physical_vacuum: dry coefficients must have order+1 entries");

    // layout: [X, u0..uN(wet interleaved as in pack), u'0..u'N, jump]
    std::vector<double> y0;
    pack(s0, y0);
    y0.insert(y0.end(), up.begin(), up.end());
    y0.push_back(up[0] - s0.u[0]);

    PhysicalVacuumTrajectory out;
    out.order = N;

    double* residual = &out.max_jump_rate_residual;
    ode::Rhs rhs = [N, &bottom, residual](double t, const std::vector<double>& y,
                                          std::vector<double>& d) {
        const std::size_t wet_len = 2 + 2 * static_cast<std::size_t>(N);
        std::vector<double> wet(y.begin(), y.begin() + wet_len);
        FrontSeriesState s = unpack(FrontKind::PhysicalVacuum, N, 1, t, wet, nullptr);
        FrontSeriesRate r = hierarchy_rhs_vacuum(s, bottom);
        std::vector<double> up(y.begin() + wet_len, y.end() - 1);
        std::vector<double> dup = dry_side_rhs(up, bottom, s.x);

        d.resize(y.size());
        d[0] = r.dx;
        d[1] = r.du[0];
        for (int k = 1; k <= N; ++k) {
            d[static_cast<std::size_t>(1 + k)] = r.du[k];
            d[static_cast<std::size_t>(1 + N + k)] = r.dh[k];
        }
        for (int k = 0; k <= N; ++k) d[wet_len + static_cast<std::size_t>(k)] = dup[k];
        d.back() = s.h[1];  // d[[u]]/dt = eta1
        *residual = std::max(*residual, std::abs((dup[0] - r.du[0]) - s.h[1]));
    };

    ode::Options opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol;
    out.raw = ode::integrate(rhs, s0.t, y0, s0.t + t_end, opt);
    return out;
}

} // namespace swfront::hierarchy
