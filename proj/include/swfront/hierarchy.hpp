#ifndef SWFRONT_HIERARCHY_HPP
#define SWFRONT_HIERARCHY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swfront/bathymetry.hpp"
#include "swfront/ode.hpp"

namespace swfront::hierarchy {

enum class FrontKind { StillWater, NonphysicalVacuum, PhysicalVacuum };

// Truncated wavefront-expansion state: a moving front X(t) with series
// coefficients of the fields behind it,
//   still-water front:  h[k] = zeta_k (surface elevation), u[k];
//                       u[0] = h[0] = 0, front speed from Xdot^2 + b0 = 0
//   vacuum fronts:      h[k] = eta_k (layer thickness), u[k];
//                       h[0] = 0, Xdot = u[0]
struct FrontSeriesState {
    FrontKind kind = FrontKind::StillWater;
    double x = 0.0;
    double xdot = 0.0;  // still-water: +-sqrt(-b0); vacuum: u[0]
    int order = 1;      // N: arrays hold indices 0..N
    std::vector<double> u;
    std::vector<double> h;
    double t = 0.0;

    static FrontSeriesState still_water(double x, int direction, int order,
                                        const bathy::BottomProfile& bottom);
    static FrontSeriesState vacuum(double x, double u0, int order);
    void validate() const;
};

struct FrontSeriesRate {
    double dx = 0.0;
    std::vector<double> du;
    std::vector<double> dh;
};

// Front speed of a wavefront over still water: Xdot = direction*sqrt(-b0).
double front_speed(double b0, int direction);

// Still-water hierarchy right-hand side. Orders n < N use the exact pair of
// coefficient equations; the last retained order is closed by the
// order-reduction substitution zeta_N - Xdot u_N = const, so no order-(N+1)
// coefficient is needed. At N = 1 this closure reduces to the two Riccati
// slope equations.
FrontSeriesRate hierarchy_rhs_still(const FrontSeriesState& s,
                                    const bathy::BottomProfile& bottom);

// Vacuum-front hierarchy right-hand side (rows (I)/(II)): u0' = -b1 - eta1,
// eta_n' + (n+1) sum u_k eta_{n+1-k} = 0,
// u_n' + (n+1)(eta_{n+1} + b_{n+1}) + sum k u_k u_{n+1-k} = 0,
// truncated by eta_{N+1} = 0.
FrontSeriesRate hierarchy_rhs_vacuum(const FrontSeriesState& s,
                                     const bathy::BottomProfile& bottom);

// Time derivatives of the dry-side velocity coefficients u'_0..u'_M at a
// physical vacuum point: d(u'_n)/dt + (n+1) b_{n+1} + sum k u'_k u'_{n+1-k} = 0.
std::vector<double> dry_side_rhs(const std::vector<double>& uprime,
                                 const bathy::BottomProfile& bottom, double x);

// A front path X(t) with exact speed queries.
class FrontPath {
public:
    virtual ~FrontPath() = default;
    virtual double position(double t) const = 0;
    virtual double speed(double t) const = 0;
};

// Still-water front path from x0 with the given direction; closed forms for
// flat bottoms and the parabolic bottom x^2-1, dense ODE solution otherwise.
std::unique_ptr<FrontPath> still_front_path(const bathy::BottomProfile& bottom,
                                            double x0, int direction,
                                            double t_max = 50.0);

// Nonphysical-vacuum front: Xddot + b_x(X) = 0 (particle in the bottom
// potential). Closed forms for linear and symmetric quadratic bottoms,
// numerical integration otherwise (e.g. the Duffing case of a quartic).
class VacuumFrontPath : public FrontPath {
public:
    virtual double energy() const = 0;  // Xdot^2/2 + b(X), conserved
};
std::unique_ptr<VacuumFrontPath> nonphysical_front_motion(
    const bathy::BottomProfile& bottom, double x0, double v0, double t_max = 100.0);

// Closed system at a nonphysical vacuum point:
//   u1' + u1^2 + 2 eta2 + 2 b2(t) = 0,  eta2' + 3 u1 eta2 = 0.
struct ReducedResult {
    ode::IntegrationResult raw;
    std::optional<double> divergence_time;  // finite-time blow-up of u1
    std::pair<double, double> at(double t) const;  // (u1, eta2)
};
ReducedResult reduced_u1eta2_step(double u1_0, double eta2_0,
                                  const std::function<double(double)>& b2_of_t,
                                  double t_end, double tol);

struct GradientCatastrophe : std::runtime_error {
    explicit GradientCatastrophe(double when, double where = 0.0);
    double time;      // catastrophe time (root of the Riccati denominator)
    double position;  // front position at the catastrophe when known
};

// Quadrature solution of the slope Riccati equation along a front path:
//   zeta1(t) = (Xdot(0)/Xdot(t))^{3/2} / [zeta1(0)^{-1} + (3/2) Xdot(0)^{3/2} I(t)],
//   I(t) = int_0^t Xdot(s)^{-5/2} ds.
// Throws GradientCatastrophe when the denominator vanishes on [0, t].
double riccati_slope_time(const FrontPath& path, double zeta1_0, double t);

// Gradient-catastrophe position for a front launched at x0 with initial
// surface slope zeta1_0 < 0: root of
//   zeta1(0)^{-1} + (3/2) (-b(x0))^{3/4} I(x) = 0,
//   I(x) = int_{x0}^x (-b)^{-7/4} dx'.
// Returns nullopt when zeta1_0 >= 0 (no catastrophe on this branch).
std::optional<double> shock_position(const bathy::BottomProfile& bottom,
                                     double x0, double zeta1_0);

// Shoulder-birth initial data at a corner over still water:
// zeta1(0) = zeta_in'/2 and u1(0) = zeta_in' / (2 sqrt(-b0)).
std::pair<double, double> shoulder_initial_slope(double zeta_in_slope, double b0);

// The two characteristics splitting from a corner of the initial surface,
// integrated through the initial fields on each side.
struct CornerFronts {
    std::unique_ptr<FrontPath> left;
    std::unique_ptr<FrontPath> right;
};
CornerFronts corner_split_fronts(
    const bathy::BottomProfile& bottom, double x0,
    const std::function<double(double)>& surface_left,
    const std::function<double(double)>& surface_right, double t_max = 50.0);

// Velocity jump [[u]](t) = [[u]](0) + int_0^t eta1(s) ds at a physical
// vacuum point, sampled at the given times.
std::vector<std::pair<double, double>> velocity_jump_evolution(
    const std::function<double(double)>& eta1, double jump0,
    const std::vector<double>& times);

// Full truncated-front integration (wet side only for vacuum kinds).
struct FrontTrajectory {
    ode::IntegrationResult raw;
    int order = 1;
    FrontKind kind = FrontKind::StillWater;
    int direction = 1;
    std::optional<bathy::BottomProfile> bottom;

    FrontSeriesState state_at(double t) const;
};
FrontTrajectory integrate_front(const FrontSeriesState& s0,
                                const bathy::BottomProfile& bottom, double t_end,
                                double tol);

// Physical vacuum with a dry-side velocity field: evolves the wet hierarchy,
// the dry-side coefficients u', and the velocity jump; used to observe the
// instantaneous-shock law d[[u]]/dt = eta1.
struct PhysicalVacuumTrajectory {
    ode::IntegrationResult raw;  // state layout: [X,u0..uN,eta1..etaN,u'0..u'N,jump]
    int order;
    double jump_at(double t) const;
    FrontSeriesState wet_state_at(double t) const;
    std::vector<double> dry_coeffs_at(double t) const;
    // max |d jump/dt - eta1| over accepted steps (RHS consistency residual)
    double max_jump_rate_residual = 0.0;
};
PhysicalVacuumTrajectory integrate_physical_vacuum(
    const FrontSeriesState& s0, const std::vector<double>& dry_u0,
    const bathy::BottomProfile& bottom, double t_end, double tol);

} // namespace swfront::hierarchy

#endif
