#ifndef SWFRONT_ODE_HPP
#define SWFRONT_ODE_HPP

#include <functional>
#include <limits>
#include <vector>

namespace swfront::ode {

using Rhs = std::function<void(double t, const std::vector<double>& y,
                               std::vector<double>& dydt)>;
using StopCondition = std::function<bool(double t, const std::vector<double>& y)>;
using StepObserver = std::function<void(double t, const std::vector<double>& y)>;

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double initial_step = 0.0;  // 0 = choose automatically
    double max_step = std::numeric_limits<double>::infinity();
    double min_step = 1e-14;
    long max_steps = 100'000'000;
    bool store_path = true;
};

enum class Outcome {
    ReachedEnd,
    Stopped,         // stop condition triggered; event time refined by bisection
    StepUnderflow,   // |h| fell below min_step
    MaxSteps,
    NonFinite        // RHS or state became non-finite
};

// Accepted-step record of an integration with cubic Hermite interpolation
// between nodes.
class DenseTrajectory {
public:
    void append(double t, std::vector<double> y, std::vector<double> f);
    std::size_t size() const { return times_.size(); }
    bool empty() const { return times_.empty(); }
    double time(std::size_t i) const { return times_[i]; }
    const std::vector<double>& state(std::size_t i) const { return states_[i]; }
    const std::vector<double>& derivative(std::size_t i) const { return derivs_[i]; }
    double t_front() const { return times_.front(); }
    double t_back() const { return times_.back(); }
    const std::vector<double>& times() const { return times_; }

    // Hermite evaluation; t clamped to the covered interval.
    void sample(double t, std::vector<double>& out) const;
    std::vector<double> at(double t) const;

private:
    std::vector<double> times_;
    std::vector<std::vector<double>> states_;
    std::vector<std::vector<double>> derivs_;
};

struct IntegrationResult {
    Outcome status = Outcome::ReachedEnd;
    double t_final = 0.0;
    std::vector<double> y_final;
    double event_time = 0.0;  // meaningful when status == Stopped
    long accepted_steps = 0;
    long rejected_steps = 0;
    DenseTrajectory path;     // populated when Options::store_path
};

// Embedded Dormand-Prince 5(4) pair with PI step-size control and FSAL.
// The stop condition is checked after every accepted step; the trigger time
// is then refined by bisection on the dense output of the last step.
IntegrationResult integrate(const Rhs& rhs, double t0, std::vector<double> y0,
                            double t_end, const Options& opt = {},
                            const StopCondition& stop = {},
                            const StepObserver& observe = {});

} // namespace swfront::ode

#endif
