#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

#include "swfront/hierarchy.hpp"
#include "swfront/quadrature.hpp"
#include "swfront/selfsim.hpp"

using namespace swfront;
using bathy::BottomProfile;
using hierarchy::FrontKind;
using hierarchy::FrontSeriesState;
using std::numbers::pi;

namespace {

// test-local classical RK4 with fixed steps, for derivative cross-checks
std::vector<double> rk4_advance(const ode::Rhs& rhs, std::vector<double> y, double t0,
                                double t1, int steps) {
    const double h = (t1 - t0) / steps;
    std::vector<double> k1, k2, k3, k4, tmp(y.size());
    for (int s = 0; s < steps; ++s) {
        const double t = t0 + s * h;
        rhs(t, y, k1);
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        rhs(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        rhs(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * k3[i];
        rhs(t + h, tmp, k4);
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    return y;
}

FrontSeriesState random_still_state(std::mt19937& rng, const BottomProfile& bottom,
                                    int order) {
    std::uniform_real_distribution<double> ux(-0.8, 0.8);
    std::uniform_real_distribution<double> uc(-0.5, 0.5);
    FrontSeriesState s = FrontSeriesState::still_water(ux(rng), +1, order, bottom);
    for (int k = 1; k <= order; ++k) {
        s.u[k] = uc(rng);
        s.h[k] = uc(rng);
    }
    s.h[1] = s.xdot * s.u[1];  // kernel relation at the front
    return s;
}

} // namespace

TEST_SUITE_BEGIN("hierarchy");

TEST_CASE("front speed law") {
    CHECK(hierarchy::front_speed(-1.0, +1) == 1.0);
    CHECK(hierarchy::front_speed(-4.0, +1) == 2.0);
    CHECK(hierarchy::front_speed(-0.75, +1) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    CHECK(hierarchy::front_speed(-1.0, -1) == -1.0);
    CHECK_THROWS_AS(hierarchy::front_speed(0.0, +1), std::domain_error);
    CHECK_THROWS_AS(hierarchy::front_speed(0.5, +1), std::domain_error);
}

TEST_CASE("still-water closure at N=1 reproduces the Riccati pair") {
    auto bottom = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_still_state(rng, bottom, 1);
        const auto bk = bottom.taylor_coeffs(s.x, 1);
        const double xdot = std::sqrt(-bk[0]);
        const double xddot = -0.5 * bk[1];
        auto r = hierarchy::hierarchy_rhs_still(s, bottom);
        const double u1 = s.u[1], z1 = s.h[1];
        const double du1 = -1.5 * u1 * u1 - 2.5 * xddot / xdot * u1;
        const double dz1 = -1.5 / xdot * z1 * z1 - 1.5 * xddot / xdot * z1;
        CHECK(r.du[1] == doctest::Approx(du1).epsilon(1e-12));
        CHECK(r.dh[1] == doctest::Approx(dz1).epsilon(1e-12));
    }
}

TEST_CASE("quiescent state is stationary over a flat bottom") {
    auto flat = BottomProfile::flat(2.0);
    auto s = FrontSeriesState::still_water(0.3, +1, 4, flat);
    auto r = hierarchy::hierarchy_rhs_still(s, flat);
    for (int k = 0; k <= 4; ++k) {
        CHECK(r.du[k] == 0.0);
        CHECK(r.dh[k] == 0.0);
    }
    CHECK(r.dx == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("still-water interior rows follow the coefficient recursion") {
    auto bottom = BottomProfile::polynomial({-1.0, 0.1, 1.0, -0.2});
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const int N = 4;
        auto s = random_still_state(rng, bottom, N);
        const auto bk = bottom.taylor_coeffs(s.x, N);
        const double xdot = std::sqrt(-bk[0]);
        auto r = hierarchy::hierarchy_rhs_still(s, bottom);
        for (int n = 1; n < N; ++n) {
            double sz = 0, su = 0;
            for (int k = 1; k <= n; ++k) {
                sz += (s.h[k] - bk[k]) * s.u[n + 1 - k];
                su += k * s.u[k] * s.u[n + 1 - k];
            }
            const double dh = (n + 1) * (xdot * s.h[n + 1] + bk[0] * s.u[n + 1]) - (n + 1) * sz;
            const double du = -(n + 1) * (s.h[n + 1] - xdot * s.u[n + 1]) - su;
            CHECK(r.dh[n] == doctest::Approx(dh).epsilon(1e-13));
            CHECK(r.du[n] == doctest::Approx(du).epsilon(1e-13));
        }
    }
}

TEST_CASE("still-front derivatives match finite differences of the flow") {
    auto bottom = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    std::mt19937 rng(11);
    auto s = random_still_state(rng, bottom, 3);
    const int N = 3;

    ode::Rhs rhs = [&bottom, N](double, const std::vector<double>& y,
                                std::vector<double>& d) {
        FrontSeriesState st;
        st.kind = FrontKind::StillWater;
        st.order = N;
        st.x = y[0];
        st.xdot = 1.0;
        st.u.assign(N + 1, 0.0);
        st.h.assign(N + 1, 0.0);
        for (int k = 1; k <= N; ++k) {
            st.h[k] = y[k];
            st.u[k] = y[N + k];
        }
        auto r = hierarchy::hierarchy_rhs_still(st, bottom);
        d.resize(y.size());
        d[0] = r.dx;
        for (int k = 1; k <= N; ++k) {
            d[k] = r.dh[k];
            d[N + k] = r.du[k];
        }
    };
    std::vector<double> y0 = {s.x};
    for (int k = 1; k <= N; ++k) y0.push_back(s.h[k]);
    for (int k = 1; k <= N; ++k) y0.push_back(s.u[k]);

    const double h = 1e-4;
    auto yp = rk4_advance(rhs, y0, 0.0, h, 64);
    auto ym = rk4_advance(rhs, y0, 0.0, -h, 64);
    std::vector<double> d0;
    rhs(0.0, y0, d0);
    for (std::size_t i = 0; i < y0.size(); ++i) {
        const double fd = (yp[i] - ym[i]) / (2.0 * h);
        CHECK(std::abs(fd - d0[i]) < 1e-6 * std::max(1.0, std::abs(d0[i])));
    }
}

TEST_CASE("vacuum hierarchy rows") {
    auto bottom = BottomProfile::flat(1.0);
    FrontSeriesState s = FrontSeriesState::vacuum(0.0, 0.0, 3);
    s.u[1] = 1.0;
    s.h[1] = 2.0;
    auto r = hierarchy::hierarchy_rhs_vacuum(s, bottom);
    CHECK(r.dh[1] == doctest::Approx(-4.0));  // eta1' + 2 u1 eta1 = 0

    FrontSeriesState s2 = FrontSeriesState::vacuum(0.0, 0.0, 3);
    s2.u[1] = 1.0;
    s2.u[2] = 1.0;
    auto r2 = hierarchy::hierarchy_rhs_vacuum(s2, bottom);
    CHECK(r2.du[2] == doctest::Approx(-3.0));  // u2' + 3b3 + 3u1u2 + 3eta3 = 0
}

TEST_CASE("quadratic bottom: zero tail has exactly zero derivatives") {
    auto bottom = BottomProfile::quadratic(-1.0, 0.3, 0.8);
    FrontSeriesState s = FrontSeriesState::vacuum(0.25, 0.1, 5);
    s.h[1] = -0.4;
    s.h[2] = -0.6;
    s.u[1] = 0.2;
    s.kind = FrontKind::PhysicalVacuum;
    auto r = hierarchy::hierarchy_rhs_vacuum(s, bottom);
    for (int k = 2; k <= 5; ++k) CHECK(r.du[k] == 0.0);
    for (int k = 3; k <= 5; ++k) CHECK(r.dh[k] == 0.0);
}

TEST_CASE("nonphysical front motion") {
    // harmonic over the scaled parabola: full period returns the start
    auto parabola = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto p = hierarchy::nonphysical_front_motion(parabola, 0.5, 0.0);
    CHECK(p->position(pi * std::sqrt(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p->position(0.0) == 0.5);

    // uniform acceleration over a linear bottom
    auto lin = BottomProfile::linear(-1.0, 0.4);
    auto pl = hierarchy::nonphysical_front_motion(lin, 0.1, 0.3);
    for (double t : {0.5, 1.0, 2.0})
        CHECK(pl->position(t) ==
              doctest::Approx(0.1 + 0.3 * t - 0.5 * 0.4 * t * t).epsilon(1e-14));

    // Duffing oscillation: energy conserved along the numerical path
    auto duff = BottomProfile::quartic(0.0, 1.0, 1.0);
    auto pd = hierarchy::nonphysical_front_motion(duff, 0.3, 0.0, 60.0);
    const double e0 = pd->energy();
    for (double t = 0.0; t <= 50.0; t += 2.5) {
        const double x = pd->position(t);
        const double v = pd->speed(t);
        CHECK(std::abs(0.5 * v * v + duff.eval(x) - e0) < 1e-10);
    }
}

TEST_CASE("reduced pair: fixed point and phi-form equivalence") {
    // constant b2 = 1 admits the equilibrium (u1, eta2) = (0, -1)
    auto res = hierarchy::reduced_u1eta2_step(0.0, -1.0, [](double) { return 1.0; }, 2.0,
                                              1e-12);
    auto [u1, eta2] = res.at(2.0);
    CHECK(std::abs(u1) < 1e-10);
    CHECK(std::abs(eta2 + 1.0) < 1e-10);

    // phi-linearization: phi'' + 2C/phi^2 + 2 b2 phi = 0, eta2 = C/phi^3
    auto b2 = [](double t) { return 1.0 + 0.3 * std::sin(t); };
    const double u1_0 = 0.07, eta2_0 = -0.8;
    auto direct = hierarchy::reduced_u1eta2_step(u1_0, eta2_0, b2, 2.0, 1e-12);
    const double C = eta2_0;  // phi(0) = 1
    ode::Rhs phi_rhs = [&](double t, const std::vector<double>& y, std::vector<double>& d) {
        d = {y[1], -2.0 * C / (y[0] * y[0]) - 2.0 * b2(t) * y[0]};
    };
    ode::Options opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-12;
    auto phi = ode::integrate(phi_rhs, 0.0, {1.0, u1_0}, 2.0, opt);
    REQUIRE(phi.status == ode::Outcome::ReachedEnd);
    for (double t : {0.5, 1.0, 1.5, 2.0}) {
        auto y = phi.path.at(t);
        auto [du, de] = direct.at(t);
        CHECK(std::abs(du - y[1] / y[0]) < 1e-8);
        CHECK(std::abs(de - C / (y[0] * y[0] * y[0])) < 1e-8);
    }

    // forcing from a Duffing front path: small data stay regular on [0, 10]
    auto duff = BottomProfile::quartic(0.0, 1.0, 1.0);
    auto pd = hierarchy::nonphysical_front_motion(duff, 0.3, 0.0, 20.0);
    auto b2_path = [&](double t) { return 0.5 * duff.derivative(pd->position(t), 2); };
    auto long_run = hierarchy::reduced_u1eta2_step(0.01, -0.99, b2_path, 10.0, 1e-10);
    CHECK(!long_run.divergence_time.has_value());
    CHECK(long_run.raw.status == ode::Outcome::ReachedEnd);
}

TEST_CASE("slope quadrature along a front") {
    auto flat = BottomProfile::flat(1.0);
    auto path = hierarchy::still_front_path(flat, 0.0, +1);

    // zero slope is preserved
    CHECK(hierarchy::riccati_slope_time(*path, 0.0, 1.0) == 0.0);

    // flat-bottom closed form: zeta1(t) = 1/(1/z0 + 1.5 t/sqrt(Q)); Q=1
    for (double t : {0.2, 0.5, 1.0}) {
        const double expected = 1.0 / (1.0 / -0.5 + 1.5 * t);
        CHECK(hierarchy::riccati_slope_time(*path, -0.5, t) ==
              doctest::Approx(expected).epsilon(1e-10));
    }

    // catastrophe at x - x0 = 4/3 for z0 = -1/2
    bool caught = false;
    try {
        hierarchy::riccati_slope_time(*path, -0.5, 2.0);
    } catch (const hierarchy::GradientCatastrophe& gc) {
        caught = true;
        CHECK(gc.time == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
        CHECK(gc.position == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    }
    CHECK(caught);

    // positive slope never breaks on this branch
    CHECK(hierarchy::riccati_slope_time(*path, 0.5, 3.0) ==
          doctest::Approx(1.0 / (2.0 + 4.5)).epsilon(1e-10));
}

TEST_CASE("slope quadrature matches direct Riccati integration over the parabola") {
    auto parabola = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto path = hierarchy::still_front_path(parabola, 0.2, +1);
    const double z0 = -0.08;

    // direct integration of zeta1' = -(3/(2 Xdot)) zeta1^2 - (3 Xddot/(2 Xdot)) zeta1
    // along the closed-form front (Xdot = cos, Xddot = -sin of the phase)
    const double phase0 = std::asin(0.2);
    ode::Rhs rhs = [phase0](double t, const std::vector<double>& y, std::vector<double>& d) {
        const double xdot = std::cos(phase0 + t);
        const double xddot = -std::sin(phase0 + t);
        d = {-1.5 / xdot * y[0] * y[0] - 1.5 * xddot / xdot * y[0]};
    };
    ode::Options opt;
    opt.rel_tol = 1e-13;
    opt.abs_tol = 1e-14;
    for (double t : {0.3, 0.7, 1.1}) {
        auto res = ode::integrate(rhs, 0.0, {z0}, t, opt);
        CHECK(std::abs(hierarchy::riccati_slope_time(*path, z0, t) - res.y_final[0]) <
              1e-8 * std::max(1.0, std::abs(res.y_final[0])));
    }
}

TEST_CASE("shock position over the parabolic bottom") {
    auto parabola = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto xs = hierarchy::shock_position(parabola, 0.5, -0.1);
    REQUIRE(xs.has_value());
    CHECK(*xs > 0.5);
    CHECK(*xs < 1.0);
    // frozen value from the quadrature + bisection oracle
    CHECK(*xs == doctest::Approx(0.982858983762692).epsilon(1e-10));

    // no catastrophe for non-negative initial slope
    CHECK(!hierarchy::shock_position(parabola, 0.5, 0.1).has_value());
    CHECK(!hierarchy::shock_position(parabola, 0.5, 0.0).has_value());

    // breaking position moves closer as the slope steepens
    auto x_steep = hierarchy::shock_position(parabola, 0.5, -0.5);
    REQUIRE(x_steep.has_value());
    CHECK(*x_steep < *xs);

    CHECK_THROWS_AS(hierarchy::shock_position(parabola, 1.5, -0.1), std::domain_error);
}

TEST_CASE("flat-bottom shock position agrees with the slope law") {
    auto flat = BottomProfile::flat(1.0);
    auto xs = hierarchy::shock_position(flat, 0.0, -0.5);
    REQUIRE(xs.has_value());
    CHECK(*xs == doctest::Approx(4.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("shoulder birth: half-slope initial data") {
    auto [z1, u1] = hierarchy::shoulder_initial_slope(-0.4, -1.0);
    CHECK(z1 == doctest::Approx(-0.2));
    CHECK(u1 == doctest::Approx(-0.2));

    auto [z2, u2] = hierarchy::shoulder_initial_slope(0.0, -1.0);
    CHECK(z2 == 0.0);
    CHECK(u2 == 0.0);

    auto [z3, u3] = hierarchy::shoulder_initial_slope(-0.4, -4.0);
    CHECK(z3 == doctest::Approx(-0.2));
    CHECK(u3 == doctest::Approx(-0.1));

    CHECK_THROWS_AS(hierarchy::shoulder_initial_slope(-0.4, 0.0), std::domain_error);
}

TEST_CASE("sloping-beach front path") {
    // linear bottom: Xddot = -b1/2, the front decelerates uniformly and
    // stops exactly at the shoreline
    auto beach = BottomProfile::linear(-1.0, 0.5);
    auto p = hierarchy::still_front_path(beach, 0.0, +1);
    for (double t : {0.3, 1.0, 2.0})
        CHECK(p->position(t) == doctest::Approx(t - 0.125 * t * t).epsilon(1e-14));
    const double t_star = 2.0 / 0.5;  // 2 v0 / b1
    CHECK(p->speed(t_star) == 0.0);
    CHECK(p->position(100.0) == doctest::Approx(2.0).epsilon(1e-14));  // shoreline x=2

    // the generic numeric path agrees with the linear closed form
    auto nearly = BottomProfile::polynomial({-1.0, 0.5, 1e-30});
    auto pn = hierarchy::still_front_path(nearly, 0.0, +1, 3.0);
    for (double t : {0.3, 1.0, 2.0})
        CHECK(pn->position(t) == doctest::Approx(t - 0.125 * t * t).epsilon(1e-9));
}

TEST_CASE("corner characteristics") {
    auto zero = [](double) { return 0.0; };

    auto parabola = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto fronts = hierarchy::corner_split_fronts(parabola, 0.0, zero, zero);
    CHECK(fronts.right->position(pi / 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fronts.left->position(pi / 2) == doctest::Approx(-1.0).epsilon(1e-12));

    auto flat = BottomProfile::flat(4.0);
    auto ff = hierarchy::corner_split_fronts(flat, 0.3, zero, zero);
    CHECK(ff.right->position(1.0) == doctest::Approx(0.3 + 2.0).epsilon(1e-14));

    // shock time along the parabolic front: t = asin(x_sh) - asin(x0)
    auto xs = hierarchy::shock_position(parabola, 0.5, -0.1);
    REQUIRE(xs.has_value());
    const double tsh = std::asin(*xs) - std::asin(0.5);
    auto pr = hierarchy::still_front_path(parabola, 0.5, +1);
    CHECK(pr->position(tsh) == doctest::Approx(*xs).epsilon(1e-11));

    auto dry = BottomProfile::polynomial({0.5});
    CHECK_THROWS_AS(hierarchy::corner_split_fronts(dry, 0.0, zero, zero),
                    std::domain_error);
}

TEST_CASE("velocity jump accumulates the eta1 integral") {
    auto samples = hierarchy::velocity_jump_evolution([](double) { return -2.0; }, 0.0,
                                                      {0.25, 0.5, 1.0});
    CHECK(samples[0].second == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(samples[1].second == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(samples[2].second == doctest::Approx(-2.0).epsilon(1e-13));

    // the drop (0,-1,1,0,0) has eta1 = -2 at t = 0
    auto f = selfsim::selfsim_to_series({0.0, -1.0, 1.0, 0.0, 0.0, 0.0});
    CHECK(f.h[1] == doctest::Approx(-2.0));

    // a jump with constant-sign rate crosses zero at most once
    auto path = hierarchy::velocity_jump_evolution(
        [](double t) { return -1.0 - 0.5 * std::sin(t); }, 0.3,
        {0.1, 0.2, 0.4, 0.6, 0.8, 1.0, 1.5, 2.0});
    int sign_changes = 0;
    for (std::size_t i = 1; i < path.size(); ++i)
        if ((path[i].second > 0) != (path[i - 1].second > 0)) ++sign_changes;
    CHECK(sign_changes <= 1);
}

TEST_CASE("dual-path check: hierarchy vs the five-field solution") {
    // the right vacuum point of the drop is exact at order 2 over x^2 - 1
    auto bottom = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    selfsim::ParabolicState drop{0.0, -7.0, 1.0, -1.0, 0.0, 0.0};
    auto s0 = selfsim::selfsim_to_series(drop);
    auto htraj = hierarchy::integrate_front(s0, bottom, 1.0, 1e-12);
    REQUIRE(htraj.raw.status == ode::Outcome::ReachedEnd);

    auto straj = selfsim::integrate_parabolic(drop, 1.0, 1e-12);
    for (double t : {0.25, 0.5, 0.75, 1.0}) {
        auto hs = htraj.state_at(t);
        auto ss = straj.state_at(t);
        auto expect = selfsim::selfsim_to_series(ss);
        CHECK(hs.x == doctest::Approx(expect.x).epsilon(1e-8));
        CHECK(hs.u[0] == doctest::Approx(expect.u[0]).epsilon(1e-8));
        CHECK(hs.u[1] == doctest::Approx(expect.u[1]).epsilon(1e-8));
        CHECK(hs.h[1] == doctest::Approx(expect.h[1]).epsilon(1e-8));
        CHECK(hs.h[2] == doctest::Approx(expect.h[2]).epsilon(1e-8));
    }
}

TEST_CASE("order robustness of the vacuum truncation") {
    auto bottom = BottomProfile::quartic(0.0, 1.0, 0.4);
    auto make = [&](int N) {
        FrontSeriesState s = FrontSeriesState::vacuum(0.3, 0.02, N);
        s.u[1] = 0.05;
        s.h[2] = -0.7;
        return hierarchy::integrate_front(s, bottom, 0.5, 1e-12);
    };
    auto lo = make(4);
    auto hi = make(6);
    for (double t : {0.1, 0.3, 0.5}) {
        auto a = lo.state_at(t);
        auto b = hi.state_at(t);
        CHECK(std::abs(a.x - b.x) < 1e-8);
        for (int k = 0; k <= 2; ++k) CHECK(std::abs(a.u[k] - b.u[k]) < 1e-8);
        for (int k = 1; k <= 3; ++k) CHECK(std::abs(a.h[k] - b.h[k]) < 1e-8);
    }
}

TEST_CASE("still-front order robustness") {
    auto bottom = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto make = [&](int N) {
        FrontSeriesState s = FrontSeriesState::still_water(0.2, +1, N, bottom);
        s.u[1] = -0.05;
        s.h[1] = s.xdot * s.u[1];
        return hierarchy::integrate_front(s, bottom, 0.3, 1e-12);
    };
    auto lo = make(3);
    auto hi = make(5);
    for (double t : {0.1, 0.2, 0.3}) {
        auto a = lo.state_at(t);
        auto b = hi.state_at(t);
        CHECK(std::abs(a.x - b.x) < 1e-8);
        CHECK(std::abs(a.u[1] - b.u[1]) < 1e-8);
        CHECK(std::abs(a.h[1] - b.h[1]) < 1e-8);
    }
}

TEST_CASE("slope-law blow-up time shrinks with steeper initial slope") {
    auto parabola = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto path = hierarchy::still_front_path(parabola, 0.3, +1);
    double prev = 1e300;
    for (double z0 : {-0.05, -0.1, -0.2, -0.4, -0.8}) {
        double t_break = -1.0;
        try {
            hierarchy::riccati_slope_time(*path, z0, 1.2);
        } catch (const hierarchy::GradientCatastrophe& gc) {
            t_break = gc.time;
        }
        REQUIRE(t_break > 0.0);
        CHECK(t_break < prev);
        prev = t_break;
    }
}

TEST_CASE("state validation") {
    auto bottom = BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto s = FrontSeriesState::still_water(0.0, +1, 2, bottom);
    CHECK_NOTHROW(s.validate());
    s.u[0] = 0.5;
    CHECK_THROWS_AS(s.validate(), std::domain_error);

    auto v = FrontSeriesState::vacuum(0.0, 0.1, 2);
    CHECK_NOTHROW(v.validate());
    v.h[1] = 0.2;  // nonphysical kind with nonzero eta1
    CHECK_THROWS_AS(v.validate(), std::domain_error);
    v.kind = FrontKind::PhysicalVacuum;  // physical needs eta1 < 0
    CHECK_THROWS_AS(v.validate(), std::domain_error);
    v.h[1] = -0.2;
    CHECK_NOTHROW(v.validate());
}

TEST_SUITE_END();
