#include "swfront/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "swfront/bathymetry.hpp"
#include "swfront/hierarchy.hpp"
#include "swfront/refsolver.hpp"
#include "swfront/selfsim.hpp"
#include "swfront/shoulder.hpp"

namespace swfront::acceptance {

using std::numbers::pi;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream details;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (details.tellp() > 0) details << "; ";
            details << what;
        }
    }
    void note(const std::string& s) {
        if (details.tellp() > 0) details << "; ";
        details << s;
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// --- criterion 1: period endpoints and monotonicity --------------------------

CriterionResult criterion_period_endpoints() {
    Check c;
    const double p_lo = selfsim::period(-0.999);
    const double p_hi = selfsim::period(-0.001);
    c.expect(p_lo >= 2.555 && p_lo <= 2.575,
             "period(-0.999)=" + fmt(p_lo) + " outside [2.555,2.575]");
    c.expect(p_hi >= 2.21 && p_hi <= 2.24,
             "period(-0.001)=" + fmt(p_hi) + " outside [2.21,2.24]");
    double prev = -1.0;
    bool decreasing = true;
    for (int i = 0; i < 50; ++i) {
        const double g0 = -0.999 + (0.998 * i) / 49.0;
        const double p = selfsim::period(g0);
        if (i > 0 && p >= prev) decreasing = false;
        prev = p;
    }
    c.expect(decreasing, "period not strictly decreasing on the 50-point grid");
    return {1, "period endpoints and monotonicity", c.ok, c.details.str()};
}

// --- criterion 2: elliptic closed forms vs quadrature oracle -----------------

CriterionResult criterion_elliptic_vs_quadrature() {
    Check c;
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> gs(-0.99, -0.01);
    double worst_p = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double g0 = gs(rng);
        const double a = selfsim::period(g0);
        const double b = selfsim::period_quadrature(g0);
        worst_p = std::max(worst_p, std::abs(a - b) / a);
    }
    c.expect(worst_p <= 1e-8, "period mismatch " + fmt(worst_p));

    std::uniform_real_distribution<double> gb(0.01, 0.125);
    double worst_b = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double g0 = gb(rng);
        const double a = selfsim::blowup_time_elliptic(g0);
        const double b = selfsim::blowup_time_quadrature(g0);
        worst_b = std::max(worst_b, std::abs(a - b) / a);
    }
    c.expect(worst_b <= 1e-8, "blow-up time mismatch " + fmt(worst_b));
    c.note("max rel diff: period " + fmt(worst_p) + ", blow-up " + fmt(worst_b));
    return {2, "closed forms agree with the quadrature oracle", c.ok, c.details.str()};
}

// --- criterion 3: blow-up asymptotics ----------------------------------------

CriterionResult criterion_blowup_asymptotics() {
    Check c;
    const double t_small = selfsim::blowup_time(1e-6);
    c.expect(std::abs(t_small - pi / std::pow(2.0, 1.5)) <= 1e-3,
             "t_bu(1e-6)=" + fmt(t_small));
    const double t_large = selfsim::blowup_time(1e6);
    const double ratio = t_large * 4.0 * std::sqrt(1e6) / pi;
    c.expect(ratio >= 0.99 && ratio <= 1.01, "large-gamma0 ratio " + fmt(ratio));
    return {3, "blow-up time asymptotics", c.ok, c.details.str()};
}

// --- criterion 4: Hamiltonian conservation over 100 periods ------------------

CriterionResult criterion_h_conservation() {
    Check c;
    const double h0 = selfsim::invariant_h(0.0, -7.0);
    const auto regime = selfsim::classify(-7.0, 0.0);
    const double horizon = 100.0 * regime.period;

    double drift = 0.0;
    ode::Rhs rhs = [](double, const std::vector<double>& y, std::vector<double>& d) {
        d.resize(5);
        d[0] = -y[0] * y[0] - 2.0 * y[1] - 2.0;
        d[1] = -3.0 * y[0] * y[1];
        d[2] = -y[0] * y[2];
        d[3] = y[4];
        d[4] = -2.0 * y[3];
    };
    ode::Options opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-12;
    opt.store_path = false;
    auto observe = [&](double, const std::vector<double>& y) {
        drift = std::max(drift, std::abs(selfsim::invariant_h(y[0], y[1]) - h0));
    };
    auto res =
        ode::integrate(rhs, 0.0, {0.0, -7.0, 1.0, -1.0, 0.0}, horizon, opt, {}, observe);
    c.expect(res.status == ode::Outcome::ReachedEnd, "integration did not finish");
    c.expect(drift <= 1e-10, "H drift " + fmt(drift));
    c.note("drift " + fmt(drift) + " over " + fmt(horizon) + " time units");
    return {4, "Hamiltonian conservation over 100 periods", c.ok, c.details.str()};
}

// --- criterion 5: Appendix C golden numbers ----------------------------------

CriterionResult criterion_appendix_c() {
    Check c;
    shoulder::Scenario steep{1.0, -1.0, 2.0};
    const double tsh = shoulder::pp_shock_time(steep);
    c.expect(std::abs(tsh - 2.0 / 3.0) <= 1e-15, "closed-form t_sh " + fmt(tsh));

    auto chart = shoulder::build_chart(steep, 2048);
    auto tau = shoulder::earliest_shock(chart);
    c.expect(tau.has_value(), "earliest_shock open on the steep scenario");
    if (tau) c.expect(std::abs(*tau - 2.0 / 3.0) <= 1e-10,
                      "chart infimum " + fmt(*tau) + " vs 2/3");

    shoulder::Scenario shallow{1.0, -1.0, 1.4};
    const double tsh2 = shoulder::pp_shock_time(shallow);
    const double tc2 = shoulder::pp_coalescence_time(shallow);
    c.expect(std::abs(tsh2 - 1.054) <= 5e-3, "t_sh(1,-1,1.4)=" + fmt(tsh2));
    c.expect(std::abs(tc2 - 0.672) <= 5e-3, "t_c(1,-1,1.4)=" + fmt(tc2));

    const double rho = shoulder::critical_depth_ratio();
    c.expect(std::abs(rho - 0.6213) <= 5e-4, "critical ratio " + fmt(rho));
    return {5, "piecewise-parabolic golden numbers", c.ok, c.details.str()};
}

// --- criterion 6: vacuum hierarchy matches the tabulated rows ----------------

CriterionResult criterion_table_rows() {
    Check c;
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> un(-2.0, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> pc(6);
        for (auto& v : pc) v = un(rng);
        if (pc.back() == 0.0) pc.back() = 1.0;
        auto bottom = bathy::BottomProfile::polynomial(pc);

        hierarchy::FrontSeriesState s = hierarchy::FrontSeriesState::vacuum(un(rng), un(rng), 3);
        for (int k = 1; k <= 3; ++k) {
            s.u[k] = un(rng);
            s.h[k] = un(rng);
        }
        auto r = hierarchy::hierarchy_rhs_vacuum(s, bottom);
        const auto bk = bottom.taylor_coeffs(s.x, 4);
        const auto& u = s.u;
        const auto& h = s.h;
        // independent transcription of the first rows of the two families
        const double du0 = -(bk[1] + h[1]);
        const double dh1 = -2.0 * u[1] * h[1];
        const double du1 = -(2.0 * bk[2] + u[1] * u[1] + 2.0 * h[2]);
        const double dh2 = -(3.0 * u[2] * h[1] + 3.0 * u[1] * h[2]);
        const double du2 = -(3.0 * bk[3] + 3.0 * u[1] * u[2] + 3.0 * h[3]);
        const double dh3 = -(4.0 * u[3] * h[1] + 4.0 * u[2] * h[2] + 4.0 * u[1] * h[3]);
        const double du3 = -(4.0 * bk[4] + 2.0 * u[2] * u[2] + 4.0 * u[1] * u[3] + 0.0);
        worst = std::max({worst, std::abs(r.du[0] - du0), std::abs(r.dh[1] - dh1),
                          std::abs(r.du[1] - du1), std::abs(r.dh[2] - dh2),
                          std::abs(r.du[2] - du2), std::abs(r.dh[3] - dh3),
                          std::abs(r.du[3] - du3), std::abs(r.dh[0])});
    }
    c.expect(worst <= 1e-13, "max row residual " + fmt(worst));
    return {6, "vacuum hierarchy matches the tabulated rows", c.ok, c.details.str()};
}

// --- criterion 7: exact truncation over a quadratic bottom -------------------

CriterionResult criterion_exact_truncation() {
    Check c;
    auto bottom = bathy::BottomProfile::quadratic(-1.0, 0.0, 1.0);
    const int N = 6;
    hierarchy::FrontSeriesState s0 = hierarchy::FrontSeriesState::vacuum(0.2, 0.0, N);
    s0.h[1] = -0.5;
    s0.h[2] = -0.8;
    s0.u[1] = 0.1;
    s0.kind = hierarchy::FrontKind::PhysicalVacuum;

    auto traj = hierarchy::integrate_front(s0, bottom, 10.0, 1e-10);
    c.expect(traj.raw.status == ode::Outcome::ReachedEnd, "integration did not finish");

    double tail = 0.0;
    for (std::size_t i = 0; i < traj.raw.path.size(); ++i) {
        const double t = traj.raw.path.time(i);
        auto s = traj.state_at(t);
        for (int k = 2; k <= N; ++k) tail = std::max(tail, std::abs(s.u[k]));
        for (int k = 3; k <= N; ++k) tail = std::max(tail, std::abs(s.h[k]));
    }
    c.expect(tail <= 1e-14, "tail coefficients reached " + fmt(tail));

    // the retained quartet matches the closed four-ODE reduction
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        hierarchy::FrontSeriesState s = hierarchy::FrontSeriesState::vacuum(un(rng), un(rng), N);
        s.h[1] = un(rng);
        s.h[2] = un(rng);
        s.u[1] = un(rng);
        auto r = hierarchy::hierarchy_rhs_vacuum(s, bottom);
        const double c1 = 0.0, c2 = 2.0;  // b = x^2 - 1: b_x = c1 + c2 x
        worst = std::max(worst, std::abs(r.du[0] - (-(c2 * s.x + c1) - s.h[1])));
        worst = std::max(worst, std::abs(r.dh[1] - (-2.0 * s.u[1] * s.h[1])));
        worst = std::max(worst, std::abs(r.dh[2] - (-3.0 * s.u[1] * s.h[2])));
        worst = std::max(worst,
                         std::abs(r.du[1] - (-(s.u[1] * s.u[1] + 2.0 * s.h[2] + c2))));
    }
    c.expect(worst <= 1e-13, "reduced-system residual " + fmt(worst));
    return {7, "exact truncation over a quadratic bottom", c.ok, c.details.str()};
}

// --- criterion 8: eta1 preservation and linearity past the leading pair ------

CriterionResult criterion_eta1_and_linearity() {
    Check c;
    auto bottom = bathy::BottomProfile::quartic(0.0, 1.0, 0.5);
    const int N = 3;
    hierarchy::FrontSeriesState base = hierarchy::FrontSeriesState::vacuum(0.3, 0.05, N);
    base.u[1] = 0.04;
    base.h[2] = -0.9;

    // eta1 stays zero along the nonphysical evolution
    auto traj = hierarchy::integrate_front(base, bottom, 10.0, 1e-10);
    c.expect(traj.raw.status == ode::Outcome::ReachedEnd, "integration did not finish");
    double eta1_max = 0.0;
    for (std::size_t i = 0; i < traj.raw.path.size(); ++i) {
        auto s = traj.state_at(traj.raw.path.time(i));
        eta1_max = std::max(eta1_max, std::abs(s.h[1]));
    }
    c.expect(eta1_max <= 1e-12, "eta1 drifted to " + fmt(eta1_max));

    // affine superposition of the (u2, eta3) pair: z(2a) - 2 z(a) + z(0) = 0;
    // states compared at exact integration endpoints
    auto tail_at = [&](double scale, double t) {
        hierarchy::FrontSeriesState s = base;
        s.u[2] = 0.3 * scale;
        s.h[3] = -0.2 * scale;
        auto traj = hierarchy::integrate_front(s, bottom, t, 1e-12);
        return traj.state_at(traj.raw.t_final);
    };
    double worst = 0.0;
    for (double t : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        auto s0 = tail_at(0.0, t), s1 = tail_at(1.0, t), s2 = tail_at(2.0, t);
        worst = std::max(worst, std::abs(s2.u[2] - 2.0 * s1.u[2] + s0.u[2]));
        worst = std::max(worst, std::abs(s2.h[3] - 2.0 * s1.h[3] + s0.h[3]));
    }
    c.expect(worst <= 1e-10, "superposition residual " + fmt(worst));
    return {8, "eta1 preservation and tail linearity", c.ok, c.details.str()};
}

// --- criterion 9: half-slope rule measured by the finite-volume oracle -------

CriterionResult criterion_half_slope() {
    Check c;
    shoulder::Scenario scn{1.0, -1.0, 2.0};
    const double x0 = scn.corner_x0();
    auto bottom = bathy::BottomProfile::flat(1.0);
    auto eta0 = [&](double x) {
        return std::abs(x) <= x0 ? scn.gamma0 * x * x + scn.mu0 : scn.depth_q;
    };
    fv::SolverOptions opt;
    opt.order = 2;
    auto g0 = fv::make_grid(bottom, -3.0, 3.0, 4000, eta0, [](double) { return 0.0; });
    auto rr = fv::run(g0, {0.02}, opt);
    c.expect(!rr.failed && rr.snapshots.size() == 1, "solver run failed");
    if (!rr.snapshots.empty()) {
        const auto& g = rr.snapshots.back();
        const double t = g.t;
        const double xl = x0 - t;  // left shoulder boundary speed -sqrt(Q) at birth
        const double xr = x0 + std::sqrt(scn.depth_q) * t;
        // least-squares slope over the middle half of the shoulder
        const double a = xl + 0.25 * (xr - xl), b = xl + 0.75 * (xr - xl);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (std::size_t i = 0; i < g.cells(); ++i) {
            const double x = g.center(i);
            if (x < a || x > b) continue;
            sx += x;
            sy += g.h[i];
            sxx += x * x;
            sxy += x * g.h[i];
            ++n;
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double expected = 0.5 * (2.0 * scn.gamma0 * x0);  // eta_in'(x0)/2
        c.expect(std::abs(slope - expected) <= 0.1 * std::abs(expected),
                 "measured slope " + fmt(slope) + " vs " + fmt(expected));
        c.note("slope " + fmt(slope) + " expected " + fmt(expected));
    }
    return {9, "half-slope rule at shoulder birth", c.ok, c.details.str()};
}

// --- criterion 10: oracle cross-validation -----------------------------------

CriterionResult criterion_oracle_cross_validation() {
    Check c;
    // sloshing drop vs the exact ansatz at t=1
    selfsim::ParabolicState s0{0.0, -7.0, 1.0, -1.0, 0.0, 0.0};
    auto bottom = bathy::BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto eta0 = [&](double x) {
        auto [e, u] = selfsim::reconstruct_fields(s0, x);
        (void)u;
        return std::max(e, 0.0);
    };
    auto u0 = [&](double x) {
        auto [e, u] = selfsim::reconstruct_fields(s0, x);
        return e > 0 ? u : 0.0;
    };
    fv::SolverOptions opt;
    opt.order = 2;
    auto grid = fv::make_grid(bottom, -1.55, 1.55, 2000, eta0, u0);
    auto rr = fv::run(grid, {1.0}, opt);
    c.expect(!rr.failed && !rr.snapshots.empty(), "drop run failed");
    if (!rr.snapshots.empty()) {
        auto traj = selfsim::integrate_parabolic(s0, 1.0, 1e-12);
        const auto sf = traj.final_state();
        const auto& g = rr.snapshots.back();
        double linf = 0.0;
        for (std::size_t i = 0; i < g.cells(); ++i) {
            auto [eta, u] = selfsim::reconstruct_fields(sf, g.center(i));
            (void)u;
            linf = std::max(linf, std::abs(g.h[i] - std::max(eta, 0.0)));
        }
        c.expect(linf <= 2e-2, "drop Linf " + fmt(linf));
        c.note("drop Linf " + fmt(linf));
    }

    // shoulder chart vs the solver along the left boundary
    shoulder::Scenario scn{1.0, -1.0, 2.0};
    auto chart = shoulder::build_chart(scn, 512);
    std::vector<double> t0s;
    for (int k = 1; k <= 11; ++k) t0s.push_back(0.05 * k);
    auto eta_pp = [&](double x) {
        auto [e, u] = shoulder::exact_fields(scn, x, 0.0);
        (void)u;
        return e;
    };
    auto g2 = fv::make_grid(bathy::BottomProfile::flat(1.0), -3.5, 3.5, 2000, eta_pp,
                            [](double) { return 0.0; });
    auto rr2 = fv::run(g2, t0s, opt);
    c.expect(!rr2.failed && rr2.snapshots.size() == t0s.size(), "shoulder run failed");
    if (rr2.snapshots.size() == t0s.size()) {
        double linf = 0.0;
        for (std::size_t k = 0; k < t0s.size(); ++k) {
            const auto lab = chart.eval_label_t0(t0s[k]);
            const auto& g = rr2.snapshots[k];
            const auto i = static_cast<std::size_t>(
                std::clamp((lab.xl - g.x_left) / g.dx - 0.5, 0.0,
                           static_cast<double>(g.cells() - 1)));
            linf = std::max(linf, std::abs(g.h[i] - lab.nn));
        }
        c.expect(linf <= 2e-2, "chart Linf " + fmt(linf));
        c.note("chart Linf " + fmt(linf));
    }
    return {10, "finite-volume oracle cross-validation", c.ok, c.details.str()};
}

// --- criterion 11: velocity-jump law ------------------------------------------

CriterionResult criterion_velocity_jump() {
    Check c;
    selfsim::ParabolicState drop{0.0, -4.0, 1.0, 0.0, 0.0, 0.0};
    auto s0 = selfsim::selfsim_to_series(drop);
    auto bottom = bathy::BottomProfile::quadratic(-1.0, 0.0, 1.0);
    auto traj = hierarchy::integrate_physical_vacuum(s0, {}, bottom, 1.0, 1e-10);
    c.expect(traj.raw.status == ode::Outcome::ReachedEnd, "integration did not finish");
    c.expect(traj.max_jump_rate_residual <= 1e-10,
             "jump-rate residual " + fmt(traj.max_jump_rate_residual));
    bool nonzero = true;
    double dual_route = 0.0;
    for (double t = 0.1; t <= 1.0; t += 0.1) {
        if (traj.jump_at(t) == 0.0) nonzero = false;
        // the integrated jump must track the independently accumulated
        // difference of the dry- and wet-side velocities
        const double u0_wet = traj.wet_state_at(t).u[0];
        const double u0_dry = traj.dry_coeffs_at(t)[0];
        dual_route = std::max(dual_route,
                              std::abs(traj.jump_at(t) - (u0_dry - u0_wet)));
    }
    c.expect(nonzero, "jump vanished at a sampled time");
    c.expect(traj.jump_at(1.0) < 0.0, "jump should be negative (eta1 < 0)");
    c.expect(dual_route <= 1e-10, "dual-route mismatch " + fmt(dual_route));
    return {11, "velocity-jump law at a physical vacuum", c.ok, c.details.str()};
}

// --- criterion 12: shock-position asymptotics ---------------------------------

CriterionResult criterion_shock_asymptotics() {
    Check c;
    auto bottom = bathy::BottomProfile::quadratic(-1.0, 0.0, 1.0);
    const double z1 = -0.15;
    std::vector<double> ratios;
    for (double x0 : {0.9, 0.99, 0.999}) {
        auto xs = hierarchy::shock_position(bottom, x0, z1);
        c.expect(xs.has_value(), "no shock found from x0=" + fmt(x0));
        if (xs) ratios.push_back((1.0 - *xs) / (1.0 - x0));
    }
    if (ratios.size() == 3) {
        const double lo = *std::min_element(ratios.begin(), ratios.end());
        const double hi = *std::max_element(ratios.begin(), ratios.end());
        const double spread = (hi - lo) / (0.5 * (hi + lo));
        c.expect(spread <= 0.05, "ratio spread " + fmt(spread));
        c.note("ratios " + fmt(ratios[0]) + ", " + fmt(ratios[1]) + ", " + fmt(ratios[2]));
    }
    return {12, "shock-position asymptotics near the shoreline", c.ok, c.details.str()};
}

} // namespace

std::vector<CriterionResult> run_all(
    const std::function<void(const CriterionResult&)>& on_done) {
    std::vector<CriterionResult (*)()> criteria = {
        criterion_period_endpoints,     criterion_elliptic_vs_quadrature,
        criterion_blowup_asymptotics,   criterion_h_conservation,
        criterion_appendix_c,           criterion_table_rows,
        criterion_exact_truncation,     criterion_eta1_and_linearity,
        criterion_half_slope,           criterion_oracle_cross_validation,
        criterion_velocity_jump,        criterion_shock_asymptotics,
    };
    std::vector<CriterionResult> out;
    for (auto* fn : criteria) {
        CriterionResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.passed = false;
            r.details = std::string("exception: ") + e.what();
            r.id = static_cast<int>(out.size()) + 1;
            r.name = "criterion threw";
        }
        if (on_done) on_done(r);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace swfront::acceptance
