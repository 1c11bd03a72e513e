#include "swfront/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swfront::ode {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// y5 - y4 error coefficients
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

void hermite(double t, double t0, double t1, const std::vector<double>& y0,
             const std::vector<double>& f0, const std::vector<double>& y1,
             const std::vector<double>& f1, std::vector<double>& out) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s2 * (3 - 2 * s);
    const double h11 = s2 * (s - 1);
    out.resize(y0.size());
    for (std::size_t i = 0; i < y0.size(); ++i)
        out[i] = h00 * y0[i] + h * h10 * f0[i] + h01 * y1[i] + h * h11 * f1[i];
}

} // namespace

void DenseTrajectory::append(double t, std::vector<double> y, std::vector<double> f) {
    times_.push_back(t);
    states_.push_back(std::move(y));
    derivs_.push_back(std::move(f));
}

void DenseTrajectory::sample(double t, std::vector<double>& out) const {
    if (times_.empty()) throw std::runtime_error("DenseTrajectory: empty");
    const bool fwd = times_.back() >= times_.front();
    double lo = fwd ? times_.front() : times_.back();
    double hi = fwd ? times_.back() : times_.front();
    t = std::clamp(t, lo, hi);
    // locate segment
    std::size_t k;
    if (fwd) {
        auto it = std::upper_bound(times_.begin(), times_.end(), t);
        k = static_cast<std::size_t>(std::distance(times_.begin(), it));
    } else {
        auto it = std::upper_bound(times_.begin(), times_.end(), t,
                                   [](double a, double b) { return a > b; });
        k = static_cast<std::size_t>(std::distance(times_.begin(), it));
    }
    if (k == 0) k = 1;
    if (k >= times_.size()) k = times_.size() - 1;
    hermite(t, times_[k - 1], times_[k], states_[k - 1], derivs_[k - 1], states_[k],
            derivs_[k], out);
}

std::vector<double> DenseTrajectory::at(double t) const {
    std::vector<double> out;
    sample(t, out);
    return out;
}

IntegrationResult integrate(const Rhs& rhs, double t0, std::vector<double> y0,
                            double t_end, const Options& opt,
                            const StopCondition& stop, const StepObserver& observe) {
    const std::size_t n = y0.size();
    IntegrationResult res;
    const double dir = (t_end >= t0) ? 1.0 : -1.0;

    std::vector<double> y = std::move(y0);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    std::vector<double> ytmp(n), ynew(n), yerr(n);

    double t = t0;
    rhs(t, y, k1);
    if (!all_finite(k1) || !all_finite(y)) {
        res.status = Outcome::NonFinite;
        res.t_final = t;
        res.y_final = y;
        return res;
    }

    if (opt.store_path) res.path.append(t, y, k1);
    if (observe) observe(t, y);

    // initial step: crude norm-based guess unless provided
    double h;
    if (opt.initial_step > 0.0) {
        h = opt.initial_step;
    } else {
        double ynorm = 0, fnorm = 0;
        for (std::size_t i = 0; i < n; ++i) {
            ynorm = std::max(ynorm, std::abs(y[i]));
            fnorm = std::max(fnorm, std::abs(k1[i]));
        }
        h = (fnorm > 0) ? 0.01 * std::max(ynorm, 1.0) / fnorm : 1e-4;
        h = std::min(h, std::abs(t_end - t0));
        if (h <= 0) h = 1e-8;
    }
    h = std::min(h, opt.max_step);

    constexpr double safety = 0.9, fac_min = 0.2, fac_max = 10.0;
    constexpr double alpha = 0.17, beta = 0.04;  // PI exponents
    double err_old = 1e-4;
    bool previous_rejected = false;

    while (true) {
        if (res.accepted_steps + res.rejected_steps >= opt.max_steps) {
            res.status = Outcome::MaxSteps;
            break;
        }
        const double remaining = (t_end - t) * dir;
        if (remaining <= 0) {
            res.status = Outcome::ReachedEnd;
            break;
        }
        bool last = false;
        if (h >= remaining) {
            h = remaining;
            last = true;
        }
        if (h < opt.min_step && !last) {
            res.status = Outcome::StepUnderflow;
            break;
        }
        const double hs = h * dir;

        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * a21 * k1[i];
        rhs(t + c2 * hs, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * hs, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * hs, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * hs, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                   a64 * k4[i] + a65 * k5[i]);
        rhs(t + hs, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                   b6 * k6[i]);
        rhs(t + hs, ynew, k7);  // FSAL

        double err = 0.0;
        bool finite = all_finite(ynew) && all_finite(k7);
        if (finite) {
            for (std::size_t i = 0; i < n; ++i) {
                const double ei = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                        e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                const double sc =
                    opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                const double r = ei / sc;
                err += r * r;
            }
            err = std::sqrt(err / static_cast<double>(n));
        } else {
            err = 10.0;  // force rejection and step reduction
        }

        if (err <= 1.0 && finite) {
            // accepted
            const double t_prev = t;
            t += hs;
            std::vector<double> yprev = y;
            std::vector<double> fprev = k1;
            y = ynew;
            k1 = k7;
            ++res.accepted_steps;
            if (opt.store_path) res.path.append(t, y, k1);
            if (observe) observe(t, y);

            if (stop && stop(t, y)) {
                // bisect the trigger time on the Hermite interpolant of this step
                double lo = t_prev, hi = t;
                std::vector<double> ymid;
                for (int it = 0; it < 80 && std::abs(hi - lo) > 1e-15 * std::max(1.0, std::abs(hi));
                     ++it) {
                    const double mid = 0.5 * (lo + hi);
                    hermite(mid, t_prev, t, yprev, fprev, y, k1, ymid);
                    if (stop(mid, ymid))
                        hi = mid;
                    else
                        lo = mid;
                }
                res.status = Outcome::Stopped;
                res.event_time = hi;
                break;
            }

            double fac = safety * std::pow(err_old, beta) / std::pow(std::max(err, 1e-10), alpha);
            fac = std::clamp(fac, fac_min, previous_rejected ? 1.0 : fac_max);
            h = std::min(h * fac, opt.max_step);
            err_old = std::max(err, 1e-10);
            previous_rejected = false;
        } else {
            // rejected
            ++res.rejected_steps;
            double fac = safety / std::pow(err, alpha);
            fac = std::max(fac, fac_min);
            h *= fac;
            previous_rejected = true;
            if (h < opt.min_step) {
                res.status = Outcome::StepUnderflow;
                break;
            }
        }
    }

    res.t_final = t;
    res.y_final = y;
    return res;
}

} // namespace swfront::ode
