#include "swfront/shoulder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swfront/rootfind.hpp"

namespace swfront::shoulder {

namespace {

double artanh_clamped(double v) {
    v = std::min(v, 1.0 - 1e-15);
    return 0.5 * std::log((1.0 + v) / (1.0 - v));
}

} // namespace

double Scenario::corner_x0() const { return std::sqrt((mu0 - depth_q) / -gamma0); }

void Scenario::validate() const {
    if (!(depth_q > 0.0)) throw std::domain_error("scenario: Q must be positive");
    if (!(gamma0 < 0.0)) throw std::domain_error("scenario: gamma0 must be negative");
    if (!(mu0 > depth_q)) throw std::domain_error("scenario: corner must be wet (mu0 > Q)");
}

CoreState pp_core_state(double gamma0, double mu0, double sigma) {
    const double g = -gamma0;
    return CoreState{2.0 * std::sqrt(g) * sigma * std::sqrt(std::max(1.0 - sigma, 0.0)),
                     gamma0 * sigma * sigma * sigma, mu0 * sigma};
}

double pp_time_of_sigma(double gamma0, double sigma) {
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw std::domain_error("pp_time_of_sigma: sigma must lie in (0, 1]");
    const double g = -gamma0;
    if (sigma == 1.0) return 0.0;
    const double v = std::sqrt(1.0 - sigma);
    return (v + sigma * artanh_clamped(v)) / (2.0 * std::sqrt(g) * sigma);
}

double pp_sigma_of_time(double gamma0, double t) {
    if (t < 0.0) throw std::domain_error("pp_sigma_of_time: t must be non-negative");
    if (t == 0.0) return 1.0;
    auto f = [gamma0, t](double s) { return pp_time_of_sigma(gamma0, s) - t; };
    double lo = 0.5;
    while (f(lo) < 0.0 && lo > 1e-14) lo *= 0.5;  // t(lo) must exceed t
    return rootfind::find_root(f, lo, 1.0, 1e-15);
}

double pp_left_front(const Scenario& s, double sigma) {
    const double sc = s.sigma_c();
    if (sigma < sc * (1.0 - 1e-12) || sigma > 1.0)
        throw std::domain_error("pp_left_front: sigma outside [sigma_c, 1]");
    sigma = std::max(sigma, sc);
    const double g = -s.gamma0;
    return (std::sqrt((s.mu0 - s.depth_q) * sigma) -
            std::sqrt(s.depth_q * (1.0 - sigma))) /
           (std::sqrt(g) * sigma);
}

double pp_shock_time(const Scenario& s) {
    const double r = s.sigma_c();
    return (2.0 / 3.0) * std::sqrt(r / (-s.gamma0 * (1.0 - r)));
}

double pp_coalescence_time(const Scenario& s) {
    return pp_time_of_sigma(s.gamma0, s.sigma_c());
}

double critical_depth_ratio() {
    // gamma0 cancels between the two times; solve in the ratio r = Q/mu0
    auto f = [](double r) {
        const double tsh = (2.0 / 3.0) * std::sqrt(r / (1.0 - r));
        const double v = std::sqrt(1.0 - r);
        const double tc = (v + r * artanh_clamped(v)) / (2.0 * r);
        return tsh - tc;
    };
    return rootfind::find_root(f, 0.1, 0.9, 1e-14);
}

RegimeResult pp_regime(const Scenario& s) {
    s.validate();
    const double ratio = s.depth_q / s.mu0;
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::domain_error("pp_regime: Q/mu0 must lie in (0,1)");
    RegimeResult r;
    r.t_shock = pp_shock_time(s);
    r.t_coalesce = pp_coalescence_time(s);
    r.critical_ratio = critical_depth_ratio();
    r.regime = (r.t_shock <= r.t_coalesce) ? PpRegime::ShockBeforeCoalescence
                                           : PpRegime::CoalescenceBeforeShock;
    return r;
}

// ---------------------------------------------------------------------------
// chart
// ---------------------------------------------------------------------------

ChartLabel ShoulderChart::eval_label_u(double u) const {
    const double q = scn_.depth_q;
    const double g = -scn_.gamma0;
    const double mu0 = scn_.mu0;
    const double sg = std::sqrt(g);
    const double sq = std::sqrt(q);

    const double sigma = 1.0 - u * u;
    // X_l = (A - B)/D with A = sqrt((mu0-Q) sigma), B = sqrt(Q) u, D = sqrt(g) sigma
    const double A = std::sqrt((mu0 - q) * sigma);
    const double B = sq * u;
    const double D = sg * sigma;
    const double Ap = (u == 0.0) ? 0.0 : -(mu0 - q) * u / A;
    const double Bp = sq;
    const double Dp = -2.0 * sg * u;
    const double xl = (A - B) / D;
    const double xl_du = ((Ap - Bp) * D - (A - B) * Dp) / (D * D);

    const double udot = sg * sigma * sigma;  // du/dt0 along the left boundary
    const double gam = scn_.gamma0 * sigma * sigma * sigma;
    const double dgam_du = -6.0 * scn_.gamma0 * sigma * sigma * u;
    const double dmu_du = -2.0 * mu0 * u;

    ChartLabel lab;
    lab.u = u;
    lab.sigma0 = sigma;
    lab.t0 = (u + sigma * artanh_clamped(u)) / (2.0 * sg * sigma);
    lab.xl = xl;
    lab.xl_dot = xl_du * udot;
    lab.nn = gam * xl * xl + mu0 * sigma;
    lab.nn_dt0 = (dgam_du * xl * xl + gam * 2.0 * xl * xl_du + dmu_du) * udot;
    lab.vv = 2.0 * sg * sigma * u * xl;
    return lab;
}

ChartLabel ShoulderChart::eval_label_t0(double t0) const {
    if (t0 < 0.0) throw std::domain_error("chart label t0 must be non-negative");
    if (t0 == 0.0) return eval_label_u(0.0);
    if (t0 > t_c_) {
        // past coalescence the left boundary is the straight characteristic
        // x = sqrt(Q)(t - t_c) carrying the hydrostatic state
        ChartLabel lab;
        lab.u = std::sqrt(1.0 - scn_.sigma_c());
        lab.sigma0 = scn_.sigma_c();
        lab.t0 = t0;
        lab.xl = std::sqrt(scn_.depth_q) * (t0 - t_c_);
        lab.xl_dot = std::sqrt(scn_.depth_q);
        lab.nn = scn_.depth_q;
        lab.nn_dt0 = 0.0;
        lab.vv = 0.0;
        return lab;
    }
    const double sigma = pp_sigma_of_time(scn_.gamma0, std::min(t0, t_c_));
    return eval_label_u(std::sqrt(std::max(1.0 - sigma, 0.0)));
}

ShoulderChart::ShoulderChart(const Scenario& s, int labels) : scn_(s) {
    scn_.validate();
    t_c_ = pp_coalescence_time(scn_);
    const double u_max = std::sqrt(1.0 - scn_.sigma_c());
    grid_.reserve(static_cast<std::size_t>(labels));
    // cosine clustering toward u = 0 (the corner label sigma0 = 1, where the
    // shock-time infimum sits)
    for (int j = 0; j < labels; ++j) {
        const double th = 0.5 * std::numbers::pi * j / (labels - 1);
        grid_.push_back(eval_label_u(u_max * (1.0 - std::cos(th))));
    }
}

double ShoulderChart::left_boundary(double t) const {
    if (t >= t_c_) return std::sqrt(scn_.depth_q) * (t - t_c_);
    const double sigma = pp_sigma_of_time(scn_.gamma0, t);
    return pp_left_front(scn_, sigma);
}

double ShoulderChart::right_boundary(double t) const {
    return scn_.corner_x0() + std::sqrt(scn_.depth_q) * t;
}

double ShoulderChart::surface_slope(double t0, double tau) const {
    const ChartLabel lab = eval_label_t0(t0);
    const double sq = std::sqrt(scn_.depth_q);
    const double sn = std::sqrt(lab.nn);
    const double dsn = lab.nn_dt0 / (2.0 * sn);
    const double x_t0 = lab.xl_dot + 3.0 * dsn * (tau - t0) - 3.0 * sn + 2.0 * sq;
    return lab.nn_dt0 / x_t0;
}

ShoulderChart build_chart(const Scenario& s, int labels) {
    return ShoulderChart(s, labels);
}

double char_map(const ShoulderChart& chart, double t0, double tau) {
    if (tau < t0) throw std::domain_error("char_map: requires t0 <= tau");
    const ChartLabel lab = chart.eval_label_t0(t0);
    return lab.xl +
           (3.0 * std::sqrt(lab.nn) - 2.0 * std::sqrt(chart.depth_q())) * (tau - t0);
}

namespace {

std::optional<double> shock_time_of_label(const ShoulderChart& chart,
                                          const ChartLabel& lab) {
    const double sq = std::sqrt(chart.depth_q());
    const double sn = std::sqrt(lab.nn);
    const double dsn = lab.nn_dt0 / (2.0 * sn);
    if (std::abs(dsn) < 1e-14) return std::nullopt;  // no crossing in this family
    const double tau = lab.t0 + (3.0 * sn - 2.0 * sq - lab.xl_dot) / (3.0 * dsn);
    if (!(tau > lab.t0)) return std::nullopt;  // expansion side: crossing in the past
    return tau;
}

} // namespace

std::optional<double> shock_time_of_char(const ShoulderChart& chart, double t0) {
    return shock_time_of_label(chart, chart.eval_label_t0(t0));
}

std::optional<double> earliest_shock(const ShoulderChart& chart) {
    const auto& grid = chart.labels();
    const double sq = std::sqrt(chart.depth_q());

    auto admissible_time = [&](const ChartLabel& lab) -> std::optional<double> {
        auto tau = shock_time_of_label(chart, lab);
        if (!tau) return std::nullopt;
        // shock must land inside the shoulder
        const double x = lab.xl + (3.0 * std::sqrt(lab.nn) - 2.0 * sq) * (*tau - lab.t0);
        const double tol = 1e-10 * std::max(1.0, std::abs(x));
        if (x < chart.left_boundary(*tau) - tol) return std::nullopt;
        if (x > chart.right_boundary(*tau) + tol) return std::nullopt;
        return tau;
    };

    std::optional<double> best;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        auto tau = admissible_time(grid[j]);
        if (tau && (!best || *tau < *best)) {
            best = tau;
            best_j = j;
        }
    }
    if (!best) return std::nullopt;

    // local refinement in the chart parameter u around the grid minimum
    const double u_lo = grid[best_j > 0 ? best_j - 1 : 0].u;
    const double u_hi = grid[std::min(best_j + 1, grid.size() - 1)].u;
    if (u_hi > u_lo) {
        auto objective = [&](double u) {
            auto tau = admissible_time(chart.eval_label_u(u));
            return tau ? *tau : 1e300;
        };
        const double u_star = rootfind::minimize_scalar(objective, u_lo, u_hi, 1e-14);
        auto tau = admissible_time(chart.eval_label_u(u_star));
        if (tau && *tau < *best) best = tau;
    }
    return best;
}

std::pair<double, double> exact_fields(const Scenario& s, double x, double t) {
    const double q = s.depth_q;
    const double sq = std::sqrt(q);
    const double t_c = pp_coalescence_time(s);
    const double ax = std::abs(x);
    const double xr = s.corner_x0() + sq * t;

    if (ax >= xr) return {q, 0.0};

    double xl;
    if (t < t_c) {
        const double sigma_t = pp_sigma_of_time(s.gamma0, t);
        xl = pp_left_front(s, sigma_t);
        if (ax <= xl) {
            const CoreState c = pp_core_state(s.gamma0, s.mu0, sigma_t);
            return {c.gamma * x * x + c.mu, c.alpha * x};
        }
    } else {
        xl = sq * (t - t_c);
        if (ax <= xl) return {q, 0.0};  // hydrostatic state between the shoulders
    }

    // shoulder region: invert the characteristic map for the label t0
    auto residual = [&](double t0) {
        const double sigma0 = pp_sigma_of_time(s.gamma0, t0);
        const CoreState c = pp_core_state(s.gamma0, s.mu0, sigma0);
        const double xl0 = pp_left_front(s, sigma0);
        const double nn = c.gamma * xl0 * xl0 + c.mu;
        return xl0 + (3.0 * std::sqrt(nn) - 2.0 * sq) * (t - t0) - ax;
    };
    const double t0_hi = std::min(t, t_c);
    double t0;
    const double r_lo = residual(0.0);
    if (std::abs(r_lo) < 1e-13)
        t0 = 0.0;
    else if (residual(t0_hi) * r_lo > 0.0)
        t0 = (std::abs(residual(t0_hi)) < std::abs(r_lo)) ? t0_hi : 0.0;
    else
        t0 = rootfind::find_root(residual, 0.0, t0_hi, 1e-14);

    const double sigma0 = pp_sigma_of_time(s.gamma0, t0);
    const CoreState c = pp_core_state(s.gamma0, s.mu0, sigma0);
    const double xl0 = pp_left_front(s, sigma0);
    const double nn = c.gamma * xl0 * xl0 + c.mu;
    const double vv = c.alpha * xl0;
    return {nn, x >= 0 ? vv : -vv};
}

} // namespace swfront::shoulder
