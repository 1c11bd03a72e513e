#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "swfront/shoulder.hpp"

using namespace swfront;
using shoulder::Scenario;

TEST_SUITE_BEGIN("shoulder");

TEST_CASE("core parametrization") {
    auto c = shoulder::pp_core_state(-1.0, 2.0, 1.0);
    CHECK(c.alpha == 0.0);
    CHECK(c.gamma == -1.0);
    CHECK(c.mu == 2.0);

    c = shoulder::pp_core_state(-1.0, 2.0, 0.5);
    CHECK(c.alpha == doctest::Approx(2.0 * 0.5 * std::sqrt(0.5)).epsilon(1e-15));
    CHECK(c.gamma == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(c.mu == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("parametric core satisfies the flat-bottom coefficient system") {
    // d/dt via sigma' = -2 sqrt|g0| sigma^2 sqrt(1-sigma); residuals of
    // alpha' + alpha^2 + 2 gamma = 0 and gamma' + alpha gamma ... = 0
    const double g0 = -1.7, mu0 = 2.3;
    for (double sigma : {0.95, 0.8, 0.6, 0.4, 0.2}) {
        const double sg = std::sqrt(-g0);
        const double sdot = -2.0 * sg * sigma * sigma * std::sqrt(1.0 - sigma);
        const double eps = 1e-7;
        auto a = [&](double s) { return shoulder::pp_core_state(g0, mu0, s).alpha; };
        auto g = [&](double s) { return shoulder::pp_core_state(g0, mu0, s).gamma; };
        auto m = [&](double s) { return shoulder::pp_core_state(g0, mu0, s).mu; };
        const double da = (a(sigma + eps) - a(sigma - eps)) / (2 * eps) * sdot;
        const double dg = (g(sigma + eps) - g(sigma - eps)) / (2 * eps) * sdot;
        const double dm = (m(sigma + eps) - m(sigma - eps)) / (2 * eps) * sdot;
        const auto c = shoulder::pp_core_state(g0, mu0, sigma);
        CHECK(std::abs(da + c.alpha * c.alpha + 2.0 * c.gamma) < 2e-6);
        CHECK(std::abs(dg + 3.0 * c.alpha * c.gamma) < 2e-6);
        CHECK(std::abs(dm + c.alpha * c.mu) < 2e-6);
    }
}

TEST_CASE("time of sigma and its inverse") {
    CHECK(shoulder::pp_time_of_sigma(-1.0, 1.0) == 0.0);
    // t(sigma_c) for Q=1, mu0=1.4 is the coalescence time ~ 0.672
    CHECK(shoulder::pp_time_of_sigma(-1.0, 1.0 / 1.4) ==
          doctest::Approx(0.672).epsilon(1e-3));

    // strictly decreasing in sigma
    double prev = 1e300;
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        const double t = shoulder::pp_time_of_sigma(-1.0, s);
        CHECK(t < prev);
        prev = t;
    }

    // round trip
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> us(0.05, 1.0);
    for (int i = 0; i < 40; ++i) {
        const double s = us(rng);
        const double t = shoulder::pp_time_of_sigma(-0.7, s);
        CHECK(shoulder::pp_sigma_of_time(-0.7, t) == doctest::Approx(s).epsilon(1e-11));
    }

    CHECK_THROWS_AS(shoulder::pp_time_of_sigma(-1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(shoulder::pp_time_of_sigma(-1.0, 1.5), std::domain_error);
}

TEST_CASE("left corner characteristic") {
    Scenario s{1.0, -1.0, 2.0};
    CHECK(shoulder::pp_left_front(s, 1.0) == doctest::Approx(s.corner_x0()).epsilon(1e-14));
    CHECK(shoulder::pp_left_front(s, s.sigma_c()) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(shoulder::pp_left_front(s, 0.75) ==
          doctest::Approx((std::sqrt(0.75) - std::sqrt(0.25)) / 0.75).epsilon(1e-14));
    CHECK_THROWS_AS(shoulder::pp_left_front(s, 0.3), std::domain_error);

    // strictly decreasing along the orbit from x0 to 0
    double prev = 1e300;
    for (double sig : {1.0, 0.9, 0.8, 0.7, 0.6, 0.5}) {
        const double x = shoulder::pp_left_front(s, sig);
        CHECK(x < prev);
        prev = x;
    }
}

TEST_CASE("regime selection and golden numbers") {
    Scenario steep{1.0, -1.0, 2.0};
    auto r = shoulder::pp_regime(steep);
    CHECK(r.regime == shoulder::PpRegime::ShockBeforeCoalescence);
    CHECK(r.t_shock == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    Scenario shallow{1.0, -1.0, 1.4};
    auto r2 = shoulder::pp_regime(shallow);
    CHECK(r2.regime == shoulder::PpRegime::CoalescenceBeforeShock);
    CHECK(r2.t_shock == doctest::Approx(1.054).epsilon(5e-3));
    CHECK(r2.t_coalesce == doctest::Approx(0.672).epsilon(5e-3));
    CHECK(r2.t_coalesce < r2.t_shock);

    CHECK(shoulder::critical_depth_ratio() == doctest::Approx(0.6213).epsilon(8e-4));
}

TEST_CASE("chart construction and the characteristic map") {
    Scenario scn{1.0, -1.0, 2.0};
    auto chart = shoulder::build_chart(scn, 512);

    // corner continuity: N = Q at sigma0 = 1, and again at coalescence
    const auto& labs = chart.labels();
    CHECK(labs.front().nn == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(labs.back().nn == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(labs.back().vv == doctest::Approx(0.0).epsilon(1e-9));

    // constant Riemann invariant V - 2 sqrt(N) = -2 sqrt(Q) on every label
    for (const auto& lab : labs)
        CHECK(std::abs(lab.vv - 2.0 * std::sqrt(lab.nn) + 2.0 * std::sqrt(1.0)) < 1e-12);

    // boundary identities of the map
    const double t0 = 0.2;
    CHECK(shoulder::char_map(chart, t0, t0) ==
          doctest::Approx(chart.left_boundary(t0)).epsilon(1e-11));
    CHECK(shoulder::char_map(chart, 0.0, 0.5) ==
          doctest::Approx(chart.right_boundary(0.5)).epsilon(1e-12));

    // interior points stay strictly between the boundaries before the shock
    for (double tau : {0.3, 0.5, 0.6}) {
        const double x = shoulder::char_map(chart, 0.2, tau);
        CHECK(x > chart.left_boundary(tau));
        CHECK(x <= chart.right_boundary(tau) + 1e-12);
    }
}

TEST_CASE("per-label shock times") {
    Scenario scn{1.0, -1.0, 2.0};
    auto chart = shoulder::build_chart(scn, 512);

    // the corner label is the infimum: tau_bar(0) = t_sh
    auto tau0 = shoulder::shock_time_of_char(chart, 0.0);
    REQUIRE(tau0.has_value());
    CHECK(*tau0 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // pairwise-crossing oracle: two nearby characteristics meet at tau_bar
    for (double t0 : {0.05, 0.15, 0.30}) {
        auto tau = shoulder::shock_time_of_char(chart, t0);
        REQUIRE(tau.has_value());
        const double dt = 1e-6;
        auto cross = [&](double ta, double tb) {
            // x(ta, tau) = x(tb, tau): straight characteristics
            const auto a = chart.eval_label_t0(ta);
            const auto b = chart.eval_label_t0(tb);
            const double ca = 3.0 * std::sqrt(a.nn) - 2.0;
            const double cb = 3.0 * std::sqrt(b.nn) - 2.0;
            return (b.xl - cb * tb - (a.xl - ca * ta)) / (ca - cb);
        };
        CHECK(cross(t0 - dt, t0 + dt) == doctest::Approx(*tau).epsilon(1e-4));
    }
}

TEST_CASE("earliest shock: steep, shallow and quiescent") {
    Scenario steep{1.0, -1.0, 2.0};
    auto chart = shoulder::build_chart(steep, 2048);
    auto tau = shoulder::earliest_shock(chart);
    REQUIRE(tau.has_value());
    CHECK(std::abs(*tau - 2.0 / 3.0) < 1e-10);

    Scenario shallow{1.0, -1.0, 1.4};
    auto chart2 = shoulder::build_chart(shallow, 2048);
    auto tau2 = shoulder::earliest_shock(chart2);
    REQUIRE(tau2.has_value());
    CHECK(*tau2 == doctest::Approx(1.054).epsilon(5e-3));
}

TEST_CASE("post-coalescence labels carry the hydrostatic state and stay open") {
    Scenario shallow{1.0, -1.0, 1.4};
    auto chart = shoulder::build_chart(shallow, 256);
    const double t0 = chart.t_coalesce() + 0.2;
    CHECK(!shoulder::shock_time_of_char(chart, t0).has_value());
    // the re-seeded boundary is itself a characteristic of the chart
    CHECK(shoulder::char_map(chart, t0, t0 + 0.3) ==
          doctest::Approx(chart.left_boundary(t0 + 0.3)).epsilon(1e-12));
}

TEST_CASE("chart infimum equals the closed form across random scenarios") {
    std::mt19937 rng(4096);
    std::uniform_real_distribution<double> uq(0.3, 2.0);
    std::uniform_real_distribution<double> ug(-2.5, -0.3);
    std::uniform_real_distribution<double> um(1.05, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        Scenario s{uq(rng), ug(rng), 0.0};
        s.mu0 = s.depth_q * um(rng);
        auto chart = shoulder::build_chart(s, 2048);
        auto tau = shoulder::earliest_shock(chart);
        REQUIRE(tau.has_value());
        CHECK(std::abs(*tau - shoulder::pp_shock_time(s)) < 1e-10);
    }
}

TEST_CASE("boundary gradients stay finite before the shock") {
    Scenario scn{1.0, -1.0, 2.0};
    auto chart = shoulder::build_chart(scn, 256);
    for (double t0 : {0.01, 0.1, 0.3, 0.5}) {
        const double tau = std::min(0.6, t0 + 0.2);
        const double slope = chart.surface_slope(t0, tau);
        CHECK(std::isfinite(slope));
    }
}

TEST_CASE("half-slope recovery at the corner") {
    Scenario scn{1.0, -1.0, 2.0};
    auto chart = shoulder::build_chart(scn, 256);
    const double expected = scn.gamma0 * scn.corner_x0();  // eta_in'(x0)/2
    // one-sided extrapolation toward (t0, tau) -> (0, 0)
    const double s1 = chart.surface_slope(1e-4, 1e-4);
    const double s2 = chart.surface_slope(5e-5, 5e-5);
    const double extrap = 2.0 * s2 - s1;
    CHECK(std::abs(extrap - expected) < 1e-6);
}

TEST_CASE("exact solution evaluator") {
    Scenario scn{1.0, -1.0, 2.0};
    // initial data: core parabola inside, background outside
    auto [e0, u0] = shoulder::exact_fields(scn, 0.0, 0.0);
    CHECK(e0 == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(u0 == 0.0);
    auto [eb, ub] = shoulder::exact_fields(scn, 2.5, 0.0);
    CHECK(eb == 1.0);
    CHECK(ub == 0.0);

    // downstream of the right boundary the state stays hydrostatic
    auto [er, ur] = shoulder::exact_fields(scn, scn.corner_x0() + 0.4 + 1e-9, 0.4);
    CHECK(er == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ur == doctest::Approx(0.0).epsilon(1e-12));

    // symmetry: eta even, u odd
    for (double t : {0.2, 0.5}) {
        for (double x : {0.3, 0.8, 1.1}) {
            auto [ep, up] = shoulder::exact_fields(scn, x, t);
            auto [em, um] = shoulder::exact_fields(scn, -x, t);
            CHECK(ep == doctest::Approx(em).epsilon(1e-12));
            CHECK(up == doctest::Approx(-um).epsilon(1e-12));
        }
    }

    // Riemann invariant u - 2 sqrt(eta) = -2 sqrt(Q) throughout the shoulder
    for (double t : {0.2, 0.4, 0.6}) {
        auto chart = shoulder::build_chart(scn, 128);
        const double xl = chart.left_boundary(t), xr = chart.right_boundary(t);
        for (int i = 1; i < 8; ++i) {
            const double x = xl + (xr - xl) * i / 8.0;
            auto [e, u] = shoulder::exact_fields(scn, x, t);
            CHECK(std::abs(u - 2.0 * std::sqrt(e) + 2.0) < 1e-10);
        }
    }
}

TEST_CASE("scenario validation") {
    CHECK_THROWS_AS((Scenario{1.0, -1.0, 0.9}).validate(), std::domain_error);
    CHECK_THROWS_AS((Scenario{1.0, 0.5, 2.0}).validate(), std::domain_error);
    CHECK_THROWS_AS((Scenario{-1.0, -1.0, 2.0}).validate(), std::domain_error);
}

TEST_SUITE_END();
