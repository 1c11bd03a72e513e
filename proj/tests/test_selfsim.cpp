#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

#include "swfront/quadrature.hpp"
#include "swfront/selfsim.hpp"

using namespace swfront;
using selfsim::ParabolicState;
using std::numbers::pi;

TEST_SUITE_BEGIN("selfsim");

TEST_CASE("five-field right-hand side") {
    auto r = selfsim::parabolic_rhs({0.0, -1.0, 1.0, 0.0, 0.0, 0.0});
    CHECK(r.alpha == 0.0);
    CHECK(r.gamma == 0.0);
    CHECK(r.mu == 0.0);
    CHECK(r.beta == 0.0);
    CHECK(r.delta == 0.0);

    r = selfsim::parabolic_rhs({0.0, -7.0, 1.0, -1.0, 0.0, 0.0});
    CHECK(r.alpha == 12.0);
    CHECK(r.gamma == 0.0);
    CHECK(r.mu == 0.0);
    CHECK(r.beta == 0.0);
    CHECK(r.delta == 2.0);

    r = selfsim::parabolic_rhs({1.0, 2.0, 1.0, 0.0, 0.0, 0.0});
    CHECK(r.alpha == -7.0);
    CHECK(r.gamma == -6.0);
    CHECK(r.mu == -1.0);
    CHECK(r.beta == 0.0);
    CHECK(r.delta == 0.0);
}

TEST_CASE("constant of motion H") {
    CHECK(selfsim::invariant_h(0.0, -1.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(selfsim::invariant_h(0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK_THROWS_AS(selfsim::invariant_h(0.3, 0.0), std::domain_error);

    // constant along an integrated trajectory
    const double h0 = selfsim::invariant_h(0.0, -7.0);
    auto traj = selfsim::integrate_parabolic({0.0, -7.0, 1.0, -1.0, 0.0, 0.0}, 5.0, 1e-12);
    double drift = 0.0;
    for (std::size_t i = 0; i < traj.raw.path.size(); ++i) {
        const auto& y = traj.raw.path.state(i);
        drift = std::max(drift, std::abs(selfsim::invariant_h(y[0], y[1]) - h0));
    }
    CHECK(drift < 1e-10);
}

TEST_CASE("canonical coordinates and energy identity") {
    auto c = selfsim::to_canonical(0.0, -1.0);
    CHECK(c.q == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.p == 0.0);
    CHECK(c.energy == doctest::Approx(3.0).epsilon(1e-14));

    c = selfsim::to_canonical(0.0, 1.0);
    CHECK(c.q == 1.0);
    CHECK(c.energy == doctest::Approx(-1.0).epsilon(1e-14));

    std::mt19937 rng(2025);
    std::uniform_real_distribution<double> ua(-3.0, 3.0);
    std::uniform_real_distribution<double> ug(-5.0, -0.01);
    for (int i = 0; i < 1000; ++i) {
        const double a = ua(rng), g = ug(rng);
        const auto cp = selfsim::to_canonical(a, g);
        CHECK(std::abs(selfsim::invariant_h(a, g) - cp.energy) <
              1e-12 * std::max(1.0, std::abs(cp.energy)));
    }
}

TEST_CASE("regime classification") {
    auto r = selfsim::classify(-0.5, 0.0);
    CHECK(r.kind == selfsim::Regime::Kind::Sloshing);
    CHECK(r.period > pi / std::sqrt(2.0));
    CHECK(r.period < pi * std::sqrt(2.0 / 3.0));

    r = selfsim::classify(2.0, 0.0);
    CHECK(r.kind == selfsim::Regime::Kind::BlowUp);
    CHECK(r.blowup_time > 0.0);

    r = selfsim::classify(-1.0, 0.0);
    CHECK(r.kind == selfsim::Regime::Kind::FixedPoint);

    CHECK_THROWS_AS(selfsim::classify(0.0, 0.0), std::domain_error);
}

TEST_CASE("period endpoints and quadrature agreement") {
    // limits: pi*sqrt(2/3) as gamma0 -> -1 and pi/sqrt(2) as gamma0 -> 0
    CHECK(selfsim::period(-0.999) == doctest::Approx(2.565).epsilon(2e-3));
    CHECK(selfsim::period(-0.001) == doctest::Approx(2.2303).epsilon(1e-3));

    // frozen quadrature oracle value
    CHECK(selfsim::period(-0.5) == doctest::Approx(2.55301273523972418).epsilon(1e-12));
    CHECK(selfsim::period_quadrature(-0.5) ==
          doctest::Approx(2.55301273523972418).epsilon(1e-12));

    CHECK_THROWS_AS(selfsim::period(-1.5), std::domain_error);
    CHECK_THROWS_AS(selfsim::period(0.2), std::domain_error);
}

TEST_CASE("period is strictly decreasing in gamma0") {
    double prev = 10.0;
    for (int i = 0; i <= 18; ++i) {
        const double g0 = -0.95 + 0.05 * i;
        const double p = selfsim::period(g0);
        CHECK(p < prev);
        prev = p;
    }
}

TEST_CASE("subharmonic limit of the period") {
    const double p = selfsim::period(-1e-4);
    CHECK(std::abs(p / (pi * std::sqrt(2.0)) - 0.5) < 1e-3);
}

TEST_CASE("period from energy matches the sigma route") {
    for (double g0 : {-0.9, -0.5, -0.13}) {
        const double e = selfsim::invariant_h(0.0, g0);
        CHECK(selfsim::period_from_energy(e) ==
              doctest::Approx(selfsim::period(g0)).epsilon(1e-11));
    }
    // the (0,-7) orbit is labelled by its (-1,0) representative
    const double e = selfsim::invariant_h(0.0, -7.0);
    const double rep = selfsim::representative_gamma0(e);
    CHECK(rep == doctest::Approx(-0.19929530169523118).epsilon(1e-12));
    CHECK(selfsim::period(rep) == doctest::Approx(2.49955601511643831).epsilon(1e-12));
}

TEST_CASE("blow-up time: asymptotics and oracle values") {
    CHECK(std::abs(selfsim::blowup_time(1e-6) - pi / std::pow(2.0, 1.5)) < 1e-3);
    CHECK(selfsim::blowup_time(1e6) * 4.0 * std::sqrt(1e6) / pi ==
          doctest::Approx(1.0).epsilon(1e-2));

    // frozen adaptive-quadrature value at gamma0 = 1
    CHECK(selfsim::blowup_time(1.0) ==
          doctest::Approx(0.611984314757496965).epsilon(1e-12));

    // real-root branch: elliptic closed form against quadrature
    for (double g0 : {0.02, 0.05, 0.1, 0.12}) {
        CHECK(std::abs(selfsim::blowup_time_elliptic(g0) -
                       selfsim::blowup_time_quadrature(g0)) < 1e-11);
    }
    CHECK_THROWS_AS(selfsim::blowup_time(-0.1), std::domain_error);
    CHECK_THROWS_AS(selfsim::blowup_time_elliptic(0.5), std::domain_error);
}

TEST_CASE("time along the orbit as a function of sigma") {
    CHECK(selfsim::time_of_sigma(-0.5, 1.0) == 0.0);

    // half period at the turning point sigma_minus
    const auto [sp, sm] = selfsim::sigma_roots(-0.5);
    (void)sp;
    CHECK(selfsim::time_of_sigma(-0.5, sm) ==
          doctest::Approx(0.5 * selfsim::period(-0.5)).epsilon(1e-11));

    // frozen quadrature value
    CHECK(selfsim::time_of_sigma(-0.5, 1.2) ==
          doctest::Approx(0.618336500075562078).epsilon(1e-11));
    CHECK(selfsim::time_of_sigma(-0.5, 1.2, selfsim::Branch::Minus) ==
          doctest::Approx(-0.618336500075562078).epsilon(1e-11));

    CHECK_THROWS_AS(selfsim::time_of_sigma(-0.5, sm + 0.1), std::domain_error);
    CHECK_THROWS_AS(selfsim::time_of_sigma(-0.5, 0.5), std::domain_error);
}

TEST_CASE("field reconstruction and vacuum points") {
    ParabolicState s{0.0, -1.0, 1.0, 0.0, 0.0, 0.0};
    auto [eta, u] = selfsim::reconstruct_fields(s, 0.0);
    CHECK(eta == 1.0);
    CHECK(u == 0.0);
    auto [eta1, u1] = selfsim::reconstruct_fields(s, 1.0);
    CHECK(eta1 == 0.0);
    CHECK(u1 == 0.0);

    ParabolicState s2{0.0, -7.0, 1.0, -1.0, 0.0, 0.0};
    auto [eta2, u2] = selfsim::reconstruct_fields(s2, -1.0);
    CHECK(eta2 == 1.0);
    CHECK(u2 == 0.0);

    auto vp = selfsim::vacuum_points(s);
    REQUIRE(vp.has_value());
    CHECK(vp->first == doctest::Approx(-1.0));
    CHECK(vp->second == doctest::Approx(1.0));

    auto vp2 = selfsim::vacuum_points(s2);
    REQUIRE(vp2.has_value());
    CHECK(vp2->first == doctest::Approx(-1.0 - 1.0 / std::sqrt(7.0)).epsilon(1e-14));
    CHECK(vp2->second == doctest::Approx(-1.0 + 1.0 / std::sqrt(7.0)).epsilon(1e-14));

    auto vp3 = selfsim::vacuum_points({0.0, -4.0, 1.0, 0.5, 0.0, 0.0});
    REQUIRE(vp3.has_value());
    CHECK(vp3->first == doctest::Approx(0.0));
    CHECK(vp3->second == doctest::Approx(1.0));

    CHECK(!selfsim::vacuum_points({0.0, 1.0, 1.0, 0.0, 0.0, 0.0}).has_value());
}

TEST_CASE("series view of the right vacuum point") {
    auto f = selfsim::selfsim_to_series({0.0, -1.0, 1.0, 0.0, 0.0, 0.0});
    CHECK(f.x == doctest::Approx(1.0));
    CHECK(f.h[1] == doctest::Approx(-2.0));
    CHECK(f.h[2] == doctest::Approx(-1.0));
    CHECK(f.u[0] == 0.0);
    CHECK(f.u[1] == 0.0);

    auto f2 = selfsim::selfsim_to_series({0.0, -4.0, 1.0, 0.0, 0.0, 0.0});
    CHECK(f2.x == doctest::Approx(0.5));
    CHECK(f2.h[1] == doctest::Approx(-4.0));
    CHECK(f2.h[2] == doctest::Approx(-4.0));
    CHECK(f2.u[0] == 0.0);
    CHECK(f2.u[1] == 0.0);
}

TEST_CASE("fixed point stays fixed") {
    auto traj = selfsim::integrate_parabolic({0.0, -1.0, 1.0, 0.0, 0.0, 0.0}, 3.0, 1e-12);
    const auto s = traj.final_state();
    CHECK(std::abs(s.alpha) < 1e-12);
    CHECK(std::abs(s.gamma + 1.0) < 1e-11);
    CHECK(std::abs(s.mu - 1.0) < 1e-11);
}

TEST_CASE("sloshing orbit returns after one curvature period") {
    const auto regime = selfsim::classify(-7.0, 0.0);
    REQUIRE(regime.kind == selfsim::Regime::Kind::Sloshing);
    auto traj =
        selfsim::integrate_parabolic({0.0, -7.0, 1.0, -1.0, 0.0, 0.0}, regime.period, 1e-12);
    const auto s = traj.final_state();
    CHECK(std::abs(s.alpha) < 1e-8);
    CHECK(std::abs(s.gamma + 7.0) < 1e-7);
    CHECK(std::abs(s.mu - 1.0) < 1e-8);

    // the center of mass follows the harmonic closed form
    const double t = regime.period;
    CHECK(s.beta == doctest::Approx(-std::cos(std::sqrt(2.0) * t)).epsilon(1e-9));
    CHECK(s.delta == doctest::Approx(std::sqrt(2.0) * std::sin(std::sqrt(2.0) * t))
                         .epsilon(1e-8));
}

TEST_CASE("periodicity across a range of labels") {
    for (int i = 0; i < 20; ++i) {
        const double g0 = -0.95 + 0.9 * i / 19.0;
        const double p = selfsim::period(g0);
        auto traj = selfsim::integrate_parabolic({0.0, g0, 0.5, 0.0, 0.0, 0.0}, p, 1e-12);
        const auto s = traj.final_state();
        CHECK(std::abs(s.alpha) < 1e-7);
        CHECK(std::abs(s.gamma - g0) < 1e-7 * std::max(1.0, std::abs(g0)));
        CHECK(std::abs(s.mu - 0.5) < 1e-7);
    }
}

TEST_CASE("blow-up detection matches the closed form") {
    auto traj = selfsim::integrate_parabolic({0.0, 2.0, -0.5, 0.0, 0.0, 0.0}, 10.0, 1e-12);
    REQUIRE(traj.divergence_time.has_value());
    CHECK(std::abs(*traj.divergence_time - selfsim::blowup_time(2.0)) < 1e-6);

    for (double g0 : {0.1, 1.0, 10.0}) {
        auto tr = selfsim::integrate_parabolic({0.0, g0, -0.5, 0.0, 0.0, 0.0}, 100.0, 1e-12);
        REQUIRE(tr.divergence_time.has_value());
        CHECK(std::abs(*tr.divergence_time - selfsim::blowup_time(g0)) < 1e-6);
    }
}

TEST_CASE("sigma route matches direct integration in time") {
    // integrate to the time the closed form assigns to sigma = 1.2 and
    // compare curvatures: gamma(t) = gamma0 sigma^3
    const double g0 = -0.5;
    const double t = selfsim::time_of_sigma(g0, 1.2);
    auto traj = selfsim::integrate_parabolic({0.0, g0, 1.0, 0.0, 0.0, 0.0}, t, 1e-12);
    const auto s = traj.final_state();
    CHECK(s.gamma == doctest::Approx(g0 * 1.2 * 1.2 * 1.2).epsilon(1e-9));
}

TEST_SUITE_END();
