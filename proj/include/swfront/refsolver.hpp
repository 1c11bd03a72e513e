#ifndef SWFRONT_REFSOLVER_HPP
#define SWFRONT_REFSOLVER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swfront/bathymetry.hpp"

namespace swfront::fv {

// Uniform finite-volume grid for the shallow water equations (g = 1,
// dimensionless form). h is the layer thickness eta, q = eta*u.
struct GridState {
    double x_left = 0.0;
    double dx = 0.0;
    double t = 0.0;
    std::vector<double> h, q, b;

    std::size_t cells() const { return h.size(); }
    double center(std::size_t i) const { return x_left + (static_cast<double>(i) + 0.5) * dx; }
    double velocity(std::size_t i, double dry_tol = 1e-10) const {
        return h[i] > dry_tol ? q[i] / h[i] : 0.0;
    }
    double mass() const;
    double max_abs_slope() const;  // max |dh/dx| over interior interfaces
};

struct SolverOptions {
    double cfl = 0.45;
    int order = 2;          // 1: Rusanov + hydrostatic reconstruction, 2: + minmod MUSCL
    double dry_tol = 1e-10; // below this a cell is treated as dry (u set to 0)
};

GridState make_grid(const bathy::BottomProfile& bottom, double x_min, double x_max,
                    std::size_t cells, const std::function<double(double)>& eta0,
                    const std::function<double(double)>& u0);

// One forward step of the well-balanced scheme (hydrostatic reconstruction
// for the bottom source, positivity-preserving flux, reflective walls).
// dt = cfl*dx / max wave speed, optionally capped. Throws on NaN/negative
// depth beyond roundoff.
GridState step(const GridState& g, const SolverOptions& opt,
               double dt_cap = -1.0);

struct RunResult {
    std::vector<GridState> snapshots;                    // at requested times
    std::vector<std::pair<double, double>> slope_history; // (t, max|dh/dx|)
    bool failed = false;
    std::string diagnostics;
};

RunResult run(GridState g, const std::vector<double>& output_times,
              const SolverOptions& opt);

// First time the discrete max slope exceeds threshold * (initial max slope),
// interpolated on the recorded slope history; open when never exceeded.
std::optional<double> detect_gradient_blowup(const RunResult& traj, double threshold);

struct BlowupEstimate {
    double time;
    bool saturated;  // slope growth did not sharpen under refinement
};
// Richardson-style confirmation across two resolutions: the fine-grid
// estimate is returned; saturated is set when the fine grid does not reach a
// distinctly larger peak slope.
std::optional<BlowupEstimate> detect_gradient_blowup_confirmed(
    const RunResult& coarse, const RunResult& fine, double threshold);

} // namespace swfront::fv

#endif
