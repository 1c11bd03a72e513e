#include "swfront/refsolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swfront::fv {

namespace {

double minmod(double a, double b) {
    if (a > 0 && b > 0) return std::min(a, b);
    if (a < 0 && b < 0) return std::max(a, b);
    return 0.0;
}

struct Workspace {
    // reconstructed interface values per cell (left/minus and right/plus edge)
    std::vector<double> hm, hp, qm, qp, bm, bp;
    std::vector<double> fh, fq;  // interface fluxes (numerical, hydrostatic-corrected per side below)
    std::vector<double> hstar_l, hstar_r;
    std::vector<double> dh, dq;
};

// single evaluation of the semidiscrete operator L(U); returns max wave speed
double eval_rhs(const GridState& g, const SolverOptions& opt, Workspace& w) {
    const std::size_t n = g.cells();
    const double dry = opt.dry_tol;

    w.hm.assign(n, 0.0); w.hp.assign(n, 0.0);
    w.qm.assign(n, 0.0); w.qp.assign(n, 0.0);
    w.bm.assign(n, 0.0); w.bp.assign(n, 0.0);

    // reconstruction: first order copies cell values; second order applies
    // minmod slopes to h, w = h+b and q, with a positivity cut on h
    if (opt.order <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            w.hm[i] = w.hp[i] = g.h[i];
            w.qm[i] = w.qp[i] = g.q[i];
            w.bm[i] = w.bp[i] = g.b[i];
        }
    } else {
        auto at = [&](const std::vector<double>& v, long i) {
            // reflective ghosts: mirror values
            if (i < 0) i = -1 - i;
            const long m = static_cast<long>(n);
            if (i >= m) i = 2 * m - 1 - i;
            return v[static_cast<std::size_t>(i)];
        };
        for (std::size_t i = 0; i < n; ++i) {
            const long li = static_cast<long>(i);
            const double wc = g.h[i] + g.b[i];
            const double wl = at(g.h, li - 1) + at(g.b, li - 1);
            const double wr = at(g.h, li + 1) + at(g.b, li + 1);
            double sw = minmod(wc - wl, wr - wc);
            double sh = minmod(g.h[i] - at(g.h, li - 1), at(g.h, li + 1) - g.h[i]);
            double sq = minmod(g.q[i] - at(g.q, li - 1), at(g.q, li + 1) - g.q[i]);
            // keep reconstructed depths non-negative
            if (g.h[i] - 0.5 * std::abs(sh) < 0.0) sh = 0.0;
            if (g.h[i] <= dry) { sh = 0.0; sw = 0.0; sq = 0.0; }
            w.hm[i] = g.h[i] - 0.5 * sh;
            w.hp[i] = g.h[i] + 0.5 * sh;
            w.qm[i] = g.q[i] - 0.5 * sq;
            w.qp[i] = g.q[i] + 0.5 * sq;
            w.bm[i] = (wc - 0.5 * sw) - w.hm[i];
            w.bp[i] = (wc + 0.5 * sw) - w.hp[i];
        }
    }

    // interface fluxes with hydrostatic reconstruction; interface k sits
    // between cells k-1 and k, k = 0..n (walls at k=0 and k=n)
    w.fh.assign(n + 1, 0.0);
    w.fq.assign(n + 1, 0.0);
    w.hstar_l.assign(n + 1, 0.0);
    w.hstar_r.assign(n + 1, 0.0);

    double max_speed = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        // left state: right edge of cell k-1 (mirrored for the wall)
        double hl, ql, bl, hr, qr, br;
        if (k == 0) {
            hl = w.hm[0]; ql = -w.qm[0]; bl = w.bm[0];
        } else {
            hl = w.hp[k - 1]; ql = w.qp[k - 1]; bl = w.bp[k - 1];
        }
        if (k == n) {
            hr = w.hp[n - 1]; qr = -w.qp[n - 1]; br = w.bp[n - 1];
        } else {
            hr = w.hm[k]; qr = w.qm[k]; br = w.bm[k];
        }

        const double bstar = std::max(bl, br);
        const double hsl = std::max(0.0, hl + bl - bstar);
        const double hsr = std::max(0.0, hr + br - bstar);
        const double ul = hl > dry ? ql / hl : 0.0;
        const double ur = hr > dry ? qr / hr : 0.0;
        const double qsl = hsl * ul;
        const double qsr = hsr * ur;

        const double cl = std::abs(ul) + std::sqrt(hsl);
        const double cr = std::abs(ur) + std::sqrt(hsr);
        const double a = std::max(cl, cr);
        max_speed = std::max(max_speed, a);

        // Rusanov flux on the hydrostatically reconstructed states
        const double fl_h = qsl;
        const double fr_h = qsr;
        const double fl_q = hsl > 0 ? qsl * ul + 0.5 * hsl * hsl : 0.0;
        const double fr_q = hsr > 0 ? qsr * ur + 0.5 * hsr * hsr : 0.0;
        w.fh[k] = 0.5 * (fl_h + fr_h) - 0.5 * a * (hsr - hsl);
        w.fq[k] = 0.5 * (fl_q + fr_q) - 0.5 * a * (qsr - qsl);
        w.hstar_l[k] = hsl;
        w.hstar_r[k] = hsr;
    }

    w.dh.assign(n, 0.0);
    w.dq.assign(n, 0.0);
    const double inv_dx = 1.0 / g.dx;
    for (std::size_t i = 0; i < n; ++i) {
        w.dh[i] = -(w.fh[i + 1] - w.fh[i]) * inv_dx;
        // interface pressure corrections restore the cell-edge states, the
        // centered term balances the in-cell bottom variation
        const double corr_r = 0.5 * (w.hp[i] * w.hp[i] - w.hstar_l[i + 1] * w.hstar_l[i + 1]);
        const double corr_l = 0.5 * (w.hm[i] * w.hm[i] - w.hstar_r[i] * w.hstar_r[i]);
        const double centered = 0.5 * (w.hm[i] + w.hp[i]) * (w.bm[i] - w.bp[i]);
        w.dq[i] = -(w.fq[i + 1] + corr_r - (w.fq[i] + corr_l)) * inv_dx + centered * inv_dx;
    }
    return max_speed;
}

void apply_update(GridState& g, const Workspace& w, double dt, double dry_tol) {
    const std::size_t n = g.cells();
    for (std::size_t i = 0; i < n; ++i) {
        g.h[i] += dt * w.dh[i];
        g.q[i] += dt * w.dq[i];
        if (g.h[i] < 0.0) {
            if (g.h[i] < -1e-12)
                throw std::runtime_error("refsolver: negative depth " +
                                         std::to_string(g.h[i]) + " in cell " +
                                         std::to_string(i) + " at t=" +
                                         std::to_string(g.t));
            g.h[i] = 0.0;
        }
        if (!std::isfinite(g.h[i]) || !std::isfinite(g.q[i]))
            throw std::runtime_error("refsolver: non-finite state in cell " +
                                     std::to_string(i) + " at t=" + std::to_string(g.t));
        if (g.h[i] <= dry_tol) g.q[i] = 0.0;  // dry cell: velocity set to zero
    }
}

} // namespace

double GridState::mass() const {
    double s = 0.0;
    for (double v : h) s += v;
    return s * dx;
}

double GridState::max_abs_slope() const {
    double m = 0.0;
    for (std::size_t i = 1; i < h.size(); ++i)
        m = std::max(m, std::abs(h[i] - h[i - 1]));
    return m / dx;
}

GridState make_grid(const bathy::BottomProfile& bottom, double x_min, double x_max,
                    std::size_t cells, const std::function<double(double)>& eta0,
                    const std::function<double(double)>& u0) {
    if (!(x_max > x_min) || cells < 4)
        throw std::domain_error("make_grid: bad domain or resolution");
    GridState g;
    g.x_left = x_min;
    g.dx = (x_max - x_min) / static_cast<double>(cells);
    g.h.resize(cells);
    g.q.resize(cells);
    g.b.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const double x = g.center(i);
        g.b[i] = bottom.eval(x);
        g.h[i] = std::max(eta0(x), 0.0);
        g.q[i] = g.h[i] * u0(x);
    }
    return g;
}

GridState step(const GridState& g, const SolverOptions& opt, double dt_cap) {
    if (!(opt.cfl > 0.0 && opt.cfl <= 1.0))
        throw std::domain_error("step: cfl must lie in (0, 1]");
    Workspace w;
    GridState out = g;
    const double max_speed = eval_rhs(g, opt, w);
    double dt = max_speed > 0 ? opt.cfl * g.dx / max_speed : opt.cfl * g.dx;
    if (dt_cap > 0.0) dt = std::min(dt, dt_cap);

    if (opt.order <= 1) {
        apply_update(out, w, dt, opt.dry_tol);
    } else {
        // SSP-RK2 (Heun): convex combination keeps positivity of the Euler steps
        GridState mid = g;
        apply_update(mid, w, dt, opt.dry_tol);
        mid.t = g.t + dt;
        Workspace w2;
        eval_rhs(mid, opt, w2);
        GridState fin = mid;
        apply_update(fin, w2, dt, opt.dry_tol);
        const std::size_t n = g.cells();
        for (std::size_t i = 0; i < n; ++i) {
            out.h[i] = 0.5 * (g.h[i] + fin.h[i]);
            out.q[i] = 0.5 * (g.q[i] + fin.q[i]);
            if (out.h[i] <= opt.dry_tol) out.q[i] = 0.0;
        }
    }
    out.t = g.t + dt;
    return out;
}

RunResult run(GridState g, const std::vector<double>& output_times,
              const SolverOptions& opt) {
    RunResult res;
    std::vector<double> times = output_times;
    std::sort(times.begin(), times.end());
    res.slope_history.emplace_back(g.t, g.max_abs_slope());

    std::size_t next = 0;
    while (next < times.size() && times[next] <= g.t + 1e-14) {
        res.snapshots.push_back(g);
        ++next;
    }
    try {
        while (next < times.size()) {
            const double dt_cap = times[next] - g.t;
            g = step(g, opt, dt_cap);
            res.slope_history.emplace_back(g.t, g.max_abs_slope());
            if (g.t >= times[next] - 1e-12) {
                res.snapshots.push_back(g);
                ++next;
            }
        }
    } catch (const std::exception& e) {
        res.failed = true;
        res.diagnostics = e.what();
    }
    return res;
}

std::optional<double> detect_gradient_blowup(const RunResult& traj, double threshold) {
    if (!(threshold > 0.0))
        throw std::domain_error("detect_gradient_blowup: threshold must be positive");
    if (traj.slope_history.empty()) return std::nullopt;
    const double s0 = traj.slope_history.front().second;
    if (s0 <= 0.0) return std::nullopt;
    const double target = threshold * s0;
    for (std::size_t i = 1; i < traj.slope_history.size(); ++i) {
        const auto [t1, v1] = traj.slope_history[i];
        const auto [t0, v0] = traj.slope_history[i - 1];
        if (v1 >= target) {
            if (v1 == v0) return t1;
            const double f = std::clamp((target - v0) / (v1 - v0), 0.0, 1.0);
            return t0 + f * (t1 - t0);
        }
    }
    return std::nullopt;
}

std::optional<BlowupEstimate> detect_gradient_blowup_confirmed(const RunResult& coarse,
                                                               const RunResult& fine,
                                                               double threshold) {
    auto tf = detect_gradient_blowup(fine, threshold);
    if (!tf) return std::nullopt;
    auto tc = detect_gradient_blowup(coarse, threshold);
    BlowupEstimate est;
    est.time = *tf;
    // a genuine catastrophe sharpens under refinement: the fine grid must
    // reach a distinctly larger peak slope than the coarse one
    double peak_c = 0.0, peak_f = 0.0;
    for (const auto& [t, v] : coarse.slope_history) peak_c = std::max(peak_c, v);
    for (const auto& [t, v] : fine.slope_history) peak_f = std::max(peak_f, v);
    est.saturated = !(peak_f > 1.3 * peak_c) || !tc;
    return est;
}

} // namespace swfront::fv
