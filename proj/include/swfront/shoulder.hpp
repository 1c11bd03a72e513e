#ifndef SWFRONT_SHOULDER_HPP
#define SWFRONT_SHOULDER_HPP

#include <optional>
#include <utility>
#include <vector>

namespace swfront::shoulder {

// Piecewise-parabolic initial surface over a flat bottom b = -Q:
//   eta(x,0) = gamma0 (x^2 - x0^2) + mu0 - gamma0 x0^2 ... written as
//   eta_in(x) = gamma0 x^2 + mu0 on |x| <= x0, eta = Q outside,
// with the wet-corner condition mu0 > Q and gamma0 < 0, so the corner sits at
// x0 = sqrt((mu0 - Q)/|gamma0|).
struct Scenario {
    double depth_q;  // background depth Q
    double gamma0;   // core curvature, < 0
    double mu0;      // core apex, > Q

    double corner_x0() const;
    double sigma_c() const { return depth_q / mu0; }
    void validate() const;
};

// Core evolution parametrized by sigma = (gamma/gamma0)^{1/3} in (0,1]:
//   alpha = 2 sqrt|gamma0| sigma sqrt(1-sigma), gamma = gamma0 sigma^3,
//   mu = mu0 sigma
struct CoreState {
    double alpha, gamma, mu;
};
CoreState pp_core_state(double gamma0, double mu0, double sigma);

// t(sigma) = (sqrt(1-sigma) + sigma artanh sqrt(1-sigma)) / (2 sqrt|gamma0| sigma);
// strictly decreasing from +inf (sigma->0) to 0 (sigma=1).
double pp_time_of_sigma(double gamma0, double sigma);
double pp_sigma_of_time(double gamma0, double t);

// Left corner characteristic X_l(sigma) = (sqrt((mu0-Q) sigma) - sqrt(Q(1-sigma)))
//                                         / (sqrt|gamma0| sigma), sigma in [sigma_c, 1].
double pp_left_front(const Scenario& s, double sigma);

double pp_shock_time(const Scenario& s);        // (2/3) sqrt( (Q/mu0) / (|g0|(1-Q/mu0)) )
double pp_coalescence_time(const Scenario& s);  // t(sigma_c)

enum class PpRegime { ShockBeforeCoalescence, CoalescenceBeforeShock };
struct RegimeResult {
    PpRegime regime;
    double t_shock;
    double t_coalesce;
    double critical_ratio;  // recomputed root of t_sh(r) = t_c(r)
};
RegimeResult pp_regime(const Scenario& s);

// Root of t_sh(rho) = t_c(rho) in rho = Q/mu0 (independent of gamma0).
double critical_depth_ratio();

// Simple-wave chart of the shoulder region: characteristic labels t0 (the
// time a positive characteristic leaves the left boundary), with constant
// traces N(t0), V(t0) carried along straight characteristics. The constant
// Riemann invariant V - 2 sqrt(N) = -2 sqrt(Q) holds on every label.
struct ChartLabel {
    double u;        // sqrt(1 - sigma0); regular chart parameter at the corner
    double sigma0;
    double t0;
    double xl;       // X_l(t0)
    double xl_dot;   // dX_l/dt0
    double nn;       // N(t0)
    double nn_dt0;   // dN/dt0
    double vv;       // V(t0)
};

class ShoulderChart {
public:
    ShoulderChart(const Scenario& s, int labels);

    const Scenario& scenario() const { return scn_; }
    const std::vector<ChartLabel>& labels() const { return grid_; }
    double depth_q() const { return scn_.depth_q; }
    double t_coalesce() const { return t_c_; }

    // two-segment left boundary: curved until t_c, then x = sqrt(Q) (t - t_c)
    double left_boundary(double t) const;
    double right_boundary(double t) const;  // x0 + sqrt(Q) t

    ChartLabel eval_label_u(double u) const;     // closed-form traces at u
    ChartLabel eval_label_t0(double t0) const;

    // N_x inside the shoulder via the characteristic coordinates
    double surface_slope(double t0, double tau) const;

private:
    Scenario scn_;
    std::vector<ChartLabel> grid_;
    double t_c_;
};

ShoulderChart build_chart(const Scenario& s, int labels = 2048);

// x(t0, tau) = X_l(t0) + (3 sqrt(N(t0)) - 2 sqrt(Q)) (tau - t0)
double char_map(const ShoulderChart& chart, double t0, double tau);

// Crossing time of infinitesimally separated characteristics of the same
// family; open (nullopt) when dN/dt0 vanishes.
std::optional<double> shock_time_of_char(const ShoulderChart& chart, double t0);

// Infimum of admissible per-label shock times (shock inside the shoulder);
// grid minimum refined by golden-section search. Open when no label shocks.
std::optional<double> earliest_shock(const ShoulderChart& chart);

// Exact pre-shock solution (eta, u) of the piecewise-parabolic problem:
// core / shoulder / background by region, symmetric in x.
std::pair<double, double> exact_fields(const Scenario& s, double x, double t);

} // namespace swfront::shoulder

#endif
