#include "swfront/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "swfront/acceptance.hpp"
#include "swfront/hierarchy.hpp"
#include "swfront/output.hpp"
#include "swfront/refsolver.hpp"
#include "swfront/selfsim.hpp"
#include "swfront/shoulder.hpp"

namespace swfront::scenario {

using nlohmann::json;
namespace fs = std::filesystem;

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Slosh: return "slosh";
        case Kind::Blowup: return "blowup";
        case Kind::PwParabolaFlat: return "pw-parabola-flat";
        case Kind::PwParabolaParabolic: return "pw-parabola-parabolic";
        case Kind::VacuumHierarchy: return "vacuum-hierarchy";
        case Kind::PeriodCurve: return "period-curve";
        case Kind::BlowupCurve: return "blowup-curve";
        case Kind::Validate: return "validate";
    }
    return "?";
}

ConfigError::ConfigError(std::vector<std::string> v)
    : std::runtime_error([&v] {
          std::ostringstream os;
          os << "invalid configuration (" << v.size() << " violation"
             << (v.size() == 1 ? "" : "s") << "):";
          for (const auto& s : v) os << "\n  - " << s;
          return os.str();
      }()),
      violations(std::move(v)) {}

namespace {

struct Collector {
    std::vector<std::string> violations;
    void add(const std::string& msg) { violations.push_back(msg); }
    void require(bool ok, const std::string& msg) {
        if (!ok) add(msg);
    }
};

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed, Collector& c) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            c.add("unknown key: " + (where.empty() ? "" : where + ".") + it.key());
}

double get_num(const json& obj, const std::string& where, const std::string& key,
               double fallback, Collector& c) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) {
        c.add(where + "." + key + ": must be a number");
        return fallback;
    }
    return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& where, const std::string& key,
            int fallback, Collector& c) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) {
        c.add(where + "." + key + ": must be an integer");
        return fallback;
    }
    return obj[key].get<int>();
}

std::vector<double> get_array(const json& obj, const std::string& where,
                              const std::string& key, Collector& c) {
    std::vector<double> out;
    if (!obj.contains(key)) return out;
    if (!obj[key].is_array()) {
        c.add(where + "." + key + ": must be an array of numbers");
        return out;
    }
    for (const auto& v : obj[key]) {
        if (!v.is_number()) {
            c.add(where + "." + key + ": must be an array of numbers");
            return {};
        }
        out.push_back(v.get<double>());
    }
    return out;
}

bathy::BottomProfile parse_bottom(const json& obj, Collector& c) {
    auto fallback = bathy::BottomProfile::quadratic(-1.0, 0.0, 1.0);
    check_keys(obj, "bottom", {"kind", "coefficients"}, c);
    if (!obj.contains("kind") || !obj["kind"].is_string()) {
        c.add("bottom.kind: must be one of flat, linear, quadratic, quartic, polynomial");
        return fallback;
    }
    const std::string kind = obj["kind"].get<std::string>();
    const auto co = get_array(obj, "bottom", "coefficients", c);
    try {
        if (kind == "flat") {
            if (co.size() != 1) throw std::domain_error("flat bottom takes one coefficient [Q]");
            return bathy::BottomProfile::flat(co[0]);
        }
        if (kind == "linear") {
            if (co.size() != 2) throw std::domain_error("linear bottom takes [c0, c1]");
            return bathy::BottomProfile::linear(co[0], co[1]);
        }
        if (kind == "quadratic") {
            if (co.size() != 3) throw std::domain_error("quadratic bottom takes [c0, c1, c2]");
            return bathy::BottomProfile::quadratic(co[0], co[1], co[2]);
        }
        if (kind == "quartic") {
            if (co.size() != 3) throw std::domain_error("quartic bottom takes [c0, c2, c4]");
            return bathy::BottomProfile::quartic(co[0], co[1], co[2]);
        }
        if (kind == "polynomial") return bathy::BottomProfile::polynomial(co);
        throw std::domain_error("unknown bottom kind '" + kind + "'");
    } catch (const std::exception& e) {
        c.add(std::string("bottom: ") + e.what());
        return fallback;
    }
}

bool is_unit_parabola(const bathy::BottomProfile& b) {
    const auto& c = b.coefficients();
    return c.size() == 3 && c[0] == -1.0 && c[1] == 0.0 && c[2] == 1.0;
}

void validate_semantics(ScenarioConfig& cfg, Collector& c) {
    c.require(cfg.tol > 0 && cfg.tol < 1e-2, "numerics.tol: must lie in (0, 1e-2)");
    c.require(cfg.cfl > 0 && cfg.cfl <= 1.0, "numerics.cfl: must lie in (0, 1]");
    c.require(cfg.resolution >= 8, "numerics.resolution: at least 8 cells");
    c.require(cfg.scheme_order == 1 || cfg.scheme_order == 2,
              "numerics.scheme_order: must be 1 or 2");
    c.require(cfg.order >= 1, "initial.order: truncation order must be >= 1");
    for (double t : cfg.output_times)
        c.require(t >= 0.0, "numerics.output_times: times must be non-negative");

    switch (cfg.kind) {
        case Kind::Slosh:
            c.require(cfg.gamma0 != 0.0, "initial.gamma0: curvature must be nonzero");
            c.require(cfg.gamma0 < 0.0 || cfg.gamma0 == 0.0,
                      "initial.gamma0: sloshing requires negative curvature");
            c.require(cfg.mu0 >= 0.0, "initial.mu0: apex thickness must be non-negative");
            c.require(is_unit_parabola(cfg.bottom),
                      "bottom: slosh runs on the scaled parabolic bottom x^2 - 1");
            break;
        case Kind::Blowup:
            c.require(cfg.gamma0 != 0.0, "initial.gamma0: curvature must be nonzero");
            c.require(cfg.gamma0 > 0.0 || cfg.gamma0 == 0.0,
                      "initial.gamma0: blow-up requires positive curvature");
            c.require(is_unit_parabola(cfg.bottom),
                      "bottom: blowup runs on the scaled parabolic bottom x^2 - 1");
            break;
        case Kind::PwParabolaFlat:
            c.require(cfg.depth_q > 0.0, "initial.Q: background depth must be positive");
            c.require(cfg.gamma0 != 0.0, "initial.gamma0: curvature must be nonzero");
            c.require(cfg.gamma0 < 0.0 || cfg.gamma0 == 0.0,
                      "initial.gamma0: core curvature must be negative");
            if (cfg.depth_q > 0 && cfg.gamma0 < 0)
                c.require(cfg.mu0 > cfg.depth_q, "initial.mu0: corner must be wet");
            break;
        case Kind::PwParabolaParabolic: {
            c.require(cfg.x0 > 0.0 && cfg.x0 < 1.0,
                      "initial.x0: corner must lie inside (0, 1)");
            c.require(is_unit_parabola(cfg.bottom),
                      "bottom: this scenario runs on the scaled parabolic bottom x^2 - 1");
            const double z1 = cfg.zeta1_given ? cfg.zeta1_0 : (cfg.gamma0 + 1.0) * cfg.x0;
            c.require(z1 < 0.0,
                      "initial: corner surface slope must be negative (gamma0 < -1 or zeta1_0 < 0)");
            break;
        }
        case Kind::VacuumHierarchy: {
            c.require(static_cast<int>(cfg.eta_coeffs.size()) <= cfg.order,
                      "initial.eta: at most order coefficients (eta_1..eta_N)");
            c.require(static_cast<int>(cfg.u_coeffs.size()) <= cfg.order + 1,
                      "initial.u: at most order+1 coefficients (u_0..u_N)");
            if (!cfg.eta_coeffs.empty())
                c.require(cfg.eta_coeffs[0] <= 0.0,
                          "initial.eta: eta_1 must be <= 0 (wet side below the bottom slope)");
            c.require(cfg.dry_velocity == "continuous" || cfg.dry_velocity == "coefficients",
                      "initial.dry_velocity: 'continuous' or 'coefficients'");
            if (cfg.dry_velocity == "coefficients")
                c.require(static_cast<int>(cfg.dry_u.size()) == cfg.order + 1,
                          "initial.dry_u: needs exactly order+1 coefficients");
            break;
        }
        case Kind::PeriodCurve: {
            if (cfg.curve_lo == 0.0 && cfg.curve_hi == 0.0) {
                cfg.curve_lo = -0.999;
                cfg.curve_hi = -0.001;
            }
            c.require(cfg.curve_lo > -1.0 && cfg.curve_hi < 0.0 && cfg.curve_lo < cfg.curve_hi,
                      "numerics.curve_range: need -1 < lo < hi < 0");
            c.require(cfg.curve_points >= 2, "numerics.curve_points: need at least 2");
            break;
        }
        case Kind::BlowupCurve: {
            if (cfg.curve_lo == 0.0 && cfg.curve_hi == 0.0) {
                cfg.curve_lo = 0.01;
                cfg.curve_hi = 100.0;
            }
            c.require(cfg.curve_lo > 0.0 && cfg.curve_lo < cfg.curve_hi,
                      "numerics.curve_range: need 0 < lo < hi");
            c.require(cfg.curve_points >= 2, "numerics.curve_points: need at least 2");
            break;
        }
        case Kind::Validate:
            break;
    }
}

} // namespace

ScenarioConfig parse_config(const std::string& text) {
    Collector c;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("invalid JSON: ") + e.what()});
    }
    if (!root.is_object()) throw ConfigError({"top level must be a JSON object"});

    ScenarioConfig cfg;
    check_keys(root, "", {"scenario", "bottom", "initial", "numerics", "output"}, c);

    if (!root.contains("scenario") || !root["scenario"].is_string()) {
        c.add("scenario: required string key");
    } else {
        const std::string s = root["scenario"].get<std::string>();
        bool found = false;
        for (Kind k : {Kind::Slosh, Kind::Blowup, Kind::PwParabolaFlat,
                       Kind::PwParabolaParabolic, Kind::VacuumHierarchy,
                       Kind::PeriodCurve, Kind::BlowupCurve, Kind::Validate}) {
            if (kind_name(k) == s) {
                cfg.kind = k;
                found = true;
            }
        }
        if (!found) c.add("scenario: unknown kind '" + s + "'");
    }

    if (root.contains("bottom")) {
        if (!root["bottom"].is_object())
            c.add("bottom: must be an object {kind, coefficients}");
        else
            cfg.bottom = parse_bottom(root["bottom"], c);
    }

    if (root.contains("initial")) {
        const json& in = root["initial"];
        if (!in.is_object()) {
            c.add("initial: must be an object");
        } else {
            check_keys(in, "initial",
                       {"gamma0", "mu0", "beta0", "delta0", "alpha0", "Q", "x0",
                        "zeta1_0", "order", "eta", "u", "dry_velocity", "dry_u"},
                       c);
            cfg.gamma0 = get_num(in, "initial", "gamma0", cfg.gamma0, c);
            cfg.mu0 = get_num(in, "initial", "mu0", cfg.mu0, c);
            cfg.beta0 = get_num(in, "initial", "beta0", cfg.beta0, c);
            cfg.delta0 = get_num(in, "initial", "delta0", cfg.delta0, c);
            cfg.alpha0 = get_num(in, "initial", "alpha0", cfg.alpha0, c);
            cfg.depth_q = get_num(in, "initial", "Q", cfg.depth_q, c);
            cfg.x0 = get_num(in, "initial", "x0", cfg.x0, c);
            if (in.contains("zeta1_0")) {
                cfg.zeta1_0 = get_num(in, "initial", "zeta1_0", 0.0, c);
                cfg.zeta1_given = true;
            }
            cfg.order = get_int(in, "initial", "order", cfg.order, c);
            cfg.eta_coeffs = get_array(in, "initial", "eta", c);
            cfg.u_coeffs = get_array(in, "initial", "u", c);
            if (in.contains("dry_velocity")) {
                if (!in["dry_velocity"].is_string())
                    c.add("initial.dry_velocity: must be a string");
                else
                    cfg.dry_velocity = in["dry_velocity"].get<std::string>();
            }
            cfg.dry_u = get_array(in, "initial", "dry_u", c);
        }
    }

    if (root.contains("numerics")) {
        const json& nu = root["numerics"];
        if (!nu.is_object()) {
            c.add("numerics: must be an object");
        } else {
            check_keys(nu, "numerics",
                       {"tol", "cfl", "t_end", "resolution", "scheme_order",
                        "output_times", "curve_points", "curve_range", "with_refsolver"},
                       c);
            cfg.tol = get_num(nu, "numerics", "tol", cfg.tol, c);
            cfg.cfl = get_num(nu, "numerics", "cfl", cfg.cfl, c);
            cfg.t_end = get_num(nu, "numerics", "t_end", cfg.t_end, c);
            cfg.resolution = get_int(nu, "numerics", "resolution", cfg.resolution, c);
            cfg.scheme_order = get_int(nu, "numerics", "scheme_order", cfg.scheme_order, c);
            cfg.output_times = get_array(nu, "numerics", "output_times", c);
            cfg.curve_points = get_int(nu, "numerics", "curve_points", cfg.curve_points, c);
            auto range = get_array(nu, "numerics", "curve_range", c);
            if (!range.empty()) {
                if (range.size() != 2)
                    c.add("numerics.curve_range: needs [lo, hi]");
                else {
                    cfg.curve_lo = range[0];
                    cfg.curve_hi = range[1];
                }
            }
        }
    }

    if (root.contains("output")) {
        const json& ou = root["output"];
        if (!ou.is_object()) {
            c.add("output: must be an object");
        } else {
            check_keys(ou, "output", {"directory", "prefix"}, c);
            if (ou.contains("directory")) {
                if (!ou["directory"].is_string()) c.add("output.directory: must be a string");
                else cfg.out_dir = ou["directory"].get<std::string>();
            }
            if (ou.contains("prefix")) {
                if (!ou["prefix"].is_string()) c.add("output.prefix: must be a string");
                else cfg.prefix = ou["prefix"].get<std::string>();
            }
        }
    }

    if (cfg.prefix.empty()) cfg.prefix = kind_name(cfg.kind);
    validate_semantics(cfg, c);
    if (!c.violations.empty()) throw ConfigError(std::move(c.violations));
    cfg.normalized = root.dump(2);
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError({"cannot open config file: " + path});
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// scenario execution
// ---------------------------------------------------------------------------

namespace {

using output::Curve;
using output::Table;

struct Emitter {
    const ScenarioConfig& cfg;
    RunArtifacts& art;
    bool figures_only;

    std::string path(const std::string& stem) const {
        return (fs::path(cfg.out_dir) / (cfg.prefix + "_" + stem)).string();
    }
    void table(const std::string& stem, const Table& t) {
        if (figures_only) return;
        const std::string p = path(stem + ".csv");
        t.write_csv(p);
        art.files.push_back(p);
    }
    void svg(const std::string& stem, const std::vector<Curve>& curves,
             const std::string& title) {
        const std::string p = path(stem + ".svg");
        output::write_svg(p, curves, title);
        art.files.push_back(p);
    }
};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = a + (b - a) * i / std::max(1, n - 1);
    return v;
}

// finite-volume oracle snapshots with the exported column set (x,eta,u,b,zeta)
void emit_fv_snapshots(Emitter& em, const bathy::BottomProfile& bottom, double x_min,
                       double x_max, const std::function<double(double)>& eta0,
                       const std::function<double(double)>& u0,
                       const std::vector<double>& times) {
    fv::SolverOptions sopt;
    sopt.cfl = em.cfg.cfl;
    sopt.order = em.cfg.scheme_order;
    auto g0 = fv::make_grid(bottom, x_min, x_max, static_cast<std::size_t>(em.cfg.resolution),
                            eta0, u0);
    auto rr = fv::run(g0, times, sopt);
    for (std::size_t k = 0; k < rr.snapshots.size(); ++k) {
        const auto& g = rr.snapshots[k];
        Table t({"x", "eta", "u", "b", "zeta"});
        for (std::size_t i = 0; i < g.cells(); ++i)
            t.add_row({g.center(i), g.h[i], g.velocity(i), g.b[i], g.h[i] + g.b[i]});
        em.table("fv_t" + std::to_string(k), t);
    }
    if (rr.failed) em.art.exit_code = 2;
}

bool wants_refsolver(const ScenarioConfig& cfg) {
    // opt-in key handled leniently: absent -> false
    try {
        auto j = json::parse(cfg.normalized);
        return j.contains("numerics") && j["numerics"].contains("with_refsolver") &&
               j["numerics"]["with_refsolver"].get<bool>();
    } catch (...) {
        return false;
    }
}

void run_slosh(Emitter& em) {
    const ScenarioConfig& cfg = em.cfg;
    auto regime = selfsim::classify(cfg.gamma0, cfg.alpha0);
    em.art.derived["energy"] = regime.energy;
    if (regime.kind == selfsim::Regime::Kind::Sloshing)
        em.art.derived["period"] = regime.period;

    std::vector<double> times = cfg.output_times;
    if (times.empty()) times = {0.0, 0.30, 0.60, 1.11, 1.60, 2.00, 2.22, 2.50};
    const double t_max = *std::max_element(times.begin(), times.end());

    selfsim::ParabolicState s0{cfg.alpha0, cfg.gamma0, cfg.mu0, cfg.beta0, cfg.delta0, 0.0};
    auto traj = selfsim::integrate_parabolic(s0, t_max + 1e-9, cfg.tol);
    if (traj.divergence_time) {
        em.art.exit_code = 2;
        em.art.derived["divergence_time"] = *traj.divergence_time;
        return;
    }

    const auto xs = linspace(-1.6, 1.6, std::max(cfg.resolution, 64));
    std::vector<Curve> surface_curves;
    for (std::size_t k = 0; k < times.size(); ++k) {
        const auto s = traj.state_at(times[k]);
        Table t({"x", "eta", "u", "b", "zeta"});
        Curve cz;
        cz.name = "t=" + output::format_g17(times[k]).substr(0, 5);
        for (double x : xs) {
            auto [eta, u] = selfsim::reconstruct_fields(s, x);
            const double b = x * x - 1.0;
            if (eta < 0.0) { eta = 0.0; u = 0.0; }  // dry region outside the drop
            t.add_row({x, eta, u, b, eta + b});
            cz.x.push_back(x);
            cz.y.push_back(eta + b);
        }
        em.table("profile_t" + std::to_string(k), t);
        surface_curves.push_back(std::move(cz));
    }
    {
        Curve bottom;
        bottom.name = "bottom";
        for (double x : xs) { bottom.x.push_back(x); bottom.y.push_back(x * x - 1.0); }
        surface_curves.push_back(std::move(bottom));
    }
    em.svg("snapshots", surface_curves, "sloshing drop: surface elevation");

    em.art.derived["H0"] = selfsim::invariant_h(cfg.alpha0, cfg.gamma0);
    const auto sf = traj.final_state();
    em.art.derived["H_final"] = selfsim::invariant_h(sf.alpha, sf.gamma);

    if (wants_refsolver(cfg)) {
        auto eta0 = [&](double x) {
            auto [e, u] = selfsim::reconstruct_fields(s0, x);
            (void)u;
            return std::max(e, 0.0);
        };
        auto u0f = [&](double x) {
            auto [e, u] = selfsim::reconstruct_fields(s0, x);
            return e > 0 ? u : 0.0;
        };
        emit_fv_snapshots(em, cfg.bottom, -1.6, 1.6, eta0, u0f, times);
    }
}

void run_blowup(Emitter& em) {
    const ScenarioConfig& cfg = em.cfg;
    const double tbu = selfsim::blowup_time(cfg.gamma0);
    em.art.derived["t_bu"] = tbu;
    if (cfg.gamma0 < 0.125)
        em.art.derived["t_bu_elliptic"] = selfsim::blowup_time_elliptic(cfg.gamma0);
    em.art.derived["t_bu_flat_bottom"] =
        std::numbers::pi / (4.0 * std::sqrt(cfg.gamma0));

    const double t_end = cfg.t_end > 0 ? cfg.t_end : 0.98 * tbu;
    selfsim::ParabolicState s0{cfg.alpha0, cfg.gamma0, cfg.mu0, cfg.beta0, cfg.delta0, 0.0};
    auto traj = selfsim::integrate_parabolic(s0, t_end, cfg.tol);
    if (traj.divergence_time) em.art.derived["divergence_time"] = *traj.divergence_time;

    Table t({"t", "alpha", "gamma", "mu", "beta", "delta", "H"});
    Curve cg;
    cg.name = "gamma(t)";
    const double t_fin = traj.raw.t_final;
    for (double tt : linspace(0.0, t_fin, 400)) {
        const auto s = traj.state_at(tt);
        t.add_row({tt, s.alpha, s.gamma, s.mu, s.beta, s.delta,
                   selfsim::invariant_h(s.alpha, s.gamma)});
        cg.x.push_back(tt);
        cg.y.push_back(std::min(s.gamma, 1e3));
    }
    em.table("trajectory", t);
    em.svg("gamma", {cg}, "curvature approaching blow-up");
}

void run_pw_flat(Emitter& em) {
    const ScenarioConfig& cfg = em.cfg;
    shoulder::Scenario scn{cfg.depth_q, cfg.gamma0, cfg.mu0};
    auto rr = shoulder::pp_regime(scn);
    em.art.derived["t_sh"] = rr.t_shock;
    em.art.derived["t_c"] = rr.t_coalesce;
    em.art.derived["critical_ratio"] = rr.critical_ratio;
    em.art.derived["regime"] =
        rr.regime == shoulder::PpRegime::ShockBeforeCoalescence ? 0.0 : 1.0;

    auto chart = shoulder::build_chart(scn, 2048);
    if (auto tau = shoulder::earliest_shock(chart))
        em.art.derived["tau_sh_chart"] = *tau;

    Table chart_table({"t0", "sigma0", "xl", "xl_dot", "N", "dN_dt0", "V", "tau_bar"});
    for (const auto& lab : chart.labels()) {
        auto tau = shoulder::shock_time_of_char(chart, lab.t0);
        chart_table.add_row({lab.t0, lab.sigma0, lab.xl, lab.xl_dot, lab.nn, lab.nn_dt0,
                             lab.vv, tau ? *tau : std::numeric_limits<double>::quiet_NaN()});
    }
    em.table("chart", chart_table);

    std::vector<double> times = cfg.output_times;
    if (times.empty()) times = linspace(0.0, 0.98 * rr.t_shock, 6);
    Collector c;
    for (double t : times)
        c.require(t <= rr.t_shock + 1e-12,
                  "numerics.output_times: beyond the shock time of this scenario");
    if (!c.violations.empty()) throw ConfigError(std::move(c.violations));

    const double t_max = *std::max_element(times.begin(), times.end());
    const double L = scn.corner_x0() + std::sqrt(cfg.depth_q) * t_max + 0.6;
    const auto xs = linspace(-L, L, std::max(cfg.resolution, 64));
    std::vector<Curve> curves;
    for (std::size_t k = 0; k < times.size(); ++k) {
        Table t({"x", "eta", "u", "b", "zeta"});
        Curve ce;
        ce.name = "t=" + output::format_g17(times[k]).substr(0, 5);
        for (double x : xs) {
            auto [eta, u] = shoulder::exact_fields(scn, x, times[k]);
            t.add_row({x, eta, u, -cfg.depth_q, eta - cfg.depth_q});
            ce.x.push_back(x);
            ce.y.push_back(eta);
        }
        em.table("profile_t" + std::to_string(k), t);
        curves.push_back(std::move(ce));
    }
    em.svg("snapshots", curves, "piecewise-parabolic surface over a flat bottom");

    if (wants_refsolver(cfg)) {
        auto eta0 = [&](double x) {
            auto [e, u] = shoulder::exact_fields(scn, x, 0.0);
            (void)u;
            return e;
        };
        emit_fv_snapshots(em, cfg.bottom.kind() == bathy::ProfileKind::Flat
                              ? cfg.bottom
                              : bathy::BottomProfile::flat(cfg.depth_q),
                          -L, L, eta0, [](double) { return 0.0; }, times);
    }
}

void run_pw_parabolic(Emitter& em) {
    const ScenarioConfig& cfg = em.cfg;
    const double z1 = cfg.zeta1_given ? cfg.zeta1_0 : (cfg.gamma0 + 1.0) * cfg.x0;
    em.art.derived["zeta1_corner"] = z1;

    auto xsh = hierarchy::shock_position(cfg.bottom, cfg.x0, z1);
    if (!xsh) {
        em.art.exit_code = 2;
        return;
    }
    em.art.derived["x_sh"] = *xsh;
    em.art.derived["t_sh"] = std::asin(*xsh) - std::asin(cfg.x0);

    auto path = hierarchy::still_front_path(cfg.bottom, cfg.x0, +1);
    Table t({"t", "X", "Xdot", "zeta1"});
    Curve cs;
    cs.name = "zeta1 along the front";
    const double t_sh = em.art.derived["t_sh"];
    for (double tt : linspace(0.0, 0.995 * t_sh, 256)) {
        double z;
        try {
            z = hierarchy::riccati_slope_time(*path, z1, tt);
        } catch (const hierarchy::GradientCatastrophe&) {
            break;
        }
        t.add_row({tt, path->position(tt), path->speed(tt), z});
        cs.x.push_back(path->position(tt));
        cs.y.push_back(z);
    }
    em.table("front", t);
    em.svg("slope", {cs}, "surface slope at the advancing front");
}

void run_vacuum_hierarchy(Emitter& em) {
    const ScenarioConfig& cfg = em.cfg;
    const int N = cfg.order;
    hierarchy::FrontSeriesState s0 = hierarchy::FrontSeriesState::vacuum(
        cfg.x0, cfg.u_coeffs.empty() ? 0.0 : cfg.u_coeffs[0], N);
    for (std::size_t k = 0; k < cfg.u_coeffs.size(); ++k) s0.u[k] = cfg.u_coeffs[k];
    for (std::size_t k = 0; k < cfg.eta_coeffs.size(); ++k) s0.h[k + 1] = cfg.eta_coeffs[k];
    s0.xdot = s0.u[0];
    const bool physical = !cfg.eta_coeffs.empty() && cfg.eta_coeffs[0] < 0.0;
    s0.kind = physical ? hierarchy::FrontKind::PhysicalVacuum
                       : hierarchy::FrontKind::NonphysicalVacuum;

    const double t_end = cfg.t_end > 0 ? cfg.t_end : 1.0;
    std::vector<std::string> cols = {"t", "X"};
    for (int k = 0; k <= N; ++k) cols.push_back("u" + std::to_string(k));
    for (int k = 1; k <= N; ++k) cols.push_back("eta" + std::to_string(k));

    if (physical) {
        const std::vector<double> dry =
            cfg.dry_velocity == "coefficients" ? cfg.dry_u : std::vector<double>{};
        auto traj = hierarchy::integrate_physical_vacuum(s0, dry, cfg.bottom, t_end, cfg.tol);
        cols.push_back("jump");
        Table t(cols);
        const double tf = traj.raw.t_final;
        for (double tt : linspace(0.0, tf, 256)) {
            auto s = traj.wet_state_at(tt);
            std::vector<double> row = {tt, s.x};
            for (int k = 0; k <= N; ++k) row.push_back(s.u[k]);
            for (int k = 1; k <= N; ++k) row.push_back(s.h[k]);
            row.push_back(traj.jump_at(tt));
            t.add_row(row);
        }
        em.table("coefficients", t);
        em.art.derived["jump_final"] = traj.jump_at(tf);
        em.art.derived["jump_rate_residual"] = traj.max_jump_rate_residual;
        if (traj.raw.status != ode::Outcome::ReachedEnd) em.art.exit_code = 2;
    } else {
        auto traj = hierarchy::integrate_front(s0, cfg.bottom, t_end, cfg.tol);
        Table t(cols);
        const double tf = traj.raw.t_final;
        Curve cx;
        cx.name = "X(t)";
        for (double tt : linspace(0.0, tf, 256)) {
            auto s = traj.state_at(tt);
            std::vector<double> row = {tt, s.x};
            for (int k = 0; k <= N; ++k) row.push_back(s.u[k]);
            for (int k = 1; k <= N; ++k) row.push_back(s.h[k]);
            t.add_row(row);
            cx.x.push_back(tt);
            cx.y.push_back(s.x);
        }
        em.table("coefficients", t);
        em.svg("front", {cx}, "vacuum point trajectory");
        if (traj.raw.status != ode::Outcome::ReachedEnd) em.art.exit_code = 2;
    }
}

void run_period_curve(Emitter& em) {
    const ScenarioConfig& cfg = em.cfg;
    Table t({"gamma0", "period", "period_quadrature", "energy"});
    Curve cp;
    cp.name = "T'(gamma0)";
    for (double g0 : linspace(cfg.curve_lo, cfg.curve_hi, cfg.curve_points)) {
        const double p = selfsim::period(g0);
        const double pq = selfsim::period_quadrature(g0);
        t.add_row({g0, p, pq, selfsim::invariant_h(0.0, g0)});
        cp.x.push_back(g0);
        cp.y.push_back(p);
    }
    em.table("curve", t);
    em.svg("curve", {cp}, "curvature oscillation period");
    em.art.derived["period_lo_end"] = selfsim::period(cfg.curve_lo);
    em.art.derived["period_hi_end"] = selfsim::period(cfg.curve_hi);
}

void run_blowup_curve(Emitter& em) {
    const ScenarioConfig& cfg = em.cfg;
    Table t({"gamma0", "t_bu", "t_bu_elliptic", "t_bu_flat_bottom"});
    Curve cb, cf;
    cb.name = "t_bu (parabolic bottom)";
    cf.name = "pi/(4 sqrt(gamma0)) (flat)";
    const double llo = std::log(cfg.curve_lo), lhi = std::log(cfg.curve_hi);
    for (int i = 0; i < cfg.curve_points; ++i) {
        const double g0 = std::exp(llo + (lhi - llo) * i / (cfg.curve_points - 1));
        const double tb = selfsim::blowup_time(g0);
        const double te = g0 < 0.125 ? selfsim::blowup_time_elliptic(g0)
                                     : std::numeric_limits<double>::quiet_NaN();
        const double tf = std::numbers::pi / (4.0 * std::sqrt(g0));
        t.add_row({g0, tb, te, tf});
        cb.x.push_back(std::log10(g0));
        cb.y.push_back(tb);
        cf.x.push_back(std::log10(g0));
        cf.y.push_back(tf);
    }
    em.table("curve", t);
    em.svg("curve", {cb, cf}, "blow-up time vs log10(gamma0)");
}

} // namespace

RunArtifacts run_scenario(const ScenarioConfig& cfg, bool figures_only) {
    RunArtifacts art;
    const auto t_start = std::chrono::steady_clock::now();
    fs::create_directories(cfg.out_dir);
    Emitter em{cfg, art, figures_only};

    switch (cfg.kind) {
        case Kind::Slosh: run_slosh(em); break;
        case Kind::Blowup: run_blowup(em); break;
        case Kind::PwParabolaFlat: run_pw_flat(em); break;
        case Kind::PwParabolaParabolic: run_pw_parabolic(em); break;
        case Kind::VacuumHierarchy: run_vacuum_hierarchy(em); break;
        case Kind::PeriodCurve: run_period_curve(em); break;
        case Kind::BlowupCurve: run_blowup_curve(em); break;
        case Kind::Validate: {
            auto results = acceptance::run_all([](const acceptance::CriterionResult& r) {
                std::printf("[%s] criterion %2d: %s%s%s\n", r.passed ? "PASS" : "FAIL",
                            r.id, r.name.c_str(), r.details.empty() ? "" : " -- ",
                            r.details.c_str());
                std::fflush(stdout);
            });
            int failures = 0;
            for (const auto& r : results)
                if (!r.passed) ++failures;
            art.derived["criteria"] = static_cast<double>(results.size());
            art.derived["failures"] = failures;
            if (failures > 0) art.exit_code = 2;
            break;
        }
    }

    // manifest: parameters, version, timings and derived quantities
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t_start)
                        .count();
    json manifest;
    manifest["version"] = kVersion;
    manifest["scenario"] = kind_name(cfg.kind);
    manifest["parameters"] = cfg.normalized.empty() ? json::object() : json::parse(cfg.normalized);
    manifest["derived"] = json::object();
    for (const auto& [k, v] : art.derived) manifest["derived"][k] = v;
    manifest["artifacts"] = art.files;
    manifest["timing_ms"] = ms;
    const std::string mpath = (fs::path(cfg.out_dir) / (cfg.prefix + "_manifest.json")).string();
    std::ofstream os(mpath);
    os << manifest.dump(2) << "\n";
    art.files.push_back(mpath);
    return art;
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    std::vector<double> out;
    if (spec.rfind("lin:", 0) == 0 || spec.rfind("log:", 0) == 0) {
        const bool logspace = spec[1] == 'o';
        std::string rest = spec.substr(4);
        std::replace(rest.begin(), rest.end(), ':', ' ');
        std::istringstream is(rest);
        double a, b;
        int n;
        if (!(is >> a >> b >> n) || n < 1)
            throw ConfigError({"grid spec: expected lin:a:b:n or log:a:b:n"});
        for (int i = 0; i < n; ++i) {
            const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            out.push_back(logspace ? std::exp(std::log(a) + f * (std::log(b) - std::log(a)))
                                   : a + f * (b - a));
        }
        return out;
    }
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw ConfigError({"grid spec: no values"});
    return out;
}

namespace {

void apply_param(ScenarioConfig& cfg, const std::string& param, double value) {
    static const std::map<std::string, double ScenarioConfig::*> scalars = {
        {"initial.gamma0", &ScenarioConfig::gamma0},
        {"initial.mu0", &ScenarioConfig::mu0},
        {"initial.beta0", &ScenarioConfig::beta0},
        {"initial.delta0", &ScenarioConfig::delta0},
        {"initial.alpha0", &ScenarioConfig::alpha0},
        {"initial.Q", &ScenarioConfig::depth_q},
        {"initial.x0", &ScenarioConfig::x0},
        {"initial.zeta1_0", &ScenarioConfig::zeta1_0},
        {"numerics.tol", &ScenarioConfig::tol},
        {"numerics.cfl", &ScenarioConfig::cfl},
        {"numerics.t_end", &ScenarioConfig::t_end},
    };
    auto it = scalars.find(param);
    if (it == scalars.end())
        throw ConfigError({"sweep parameter not recognized: " + param});
    cfg.*(it->second) = value;
    if (param == "initial.zeta1_0") cfg.zeta1_given = true;
}

} // namespace

RunArtifacts run_sweep(const ScenarioConfig& base, const std::string& param,
                       const std::vector<double>& grid, int threads) {
    const int nw = threads > 0 ? threads
                               : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    struct Slot {
        RunArtifacts art;
        std::string error;
    };
    std::vector<Slot> slots(grid.size());

    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= grid.size()) return;
            ScenarioConfig cfg = base;
            cfg.prefix = base.prefix + "_p" + std::to_string(i);
            try {
                apply_param(cfg, param, grid[i]);
                Collector c;
                validate_semantics(cfg, c);
                if (!c.violations.empty()) throw ConfigError(std::move(c.violations));
                slots[i].art = run_scenario(cfg);
            } catch (const std::exception& e) {
                slots[i].error = e.what();
                slots[i].art.exit_code = 1;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_workers = std::min(static_cast<std::size_t>(nw), grid.size());
    for (std::size_t k = 0; k < n_workers; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    // merge, in parameter order
    RunArtifacts merged;
    std::set<std::string> keys;
    for (const auto& s : slots)
        for (const auto& [k, v] : s.art.derived) keys.insert(k);
    std::vector<std::string> cols = {param};
    cols.insert(cols.end(), keys.begin(), keys.end());
    Table t(cols);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<double> row = {grid[i]};
        for (const auto& k : keys) {
            auto it = slots[i].art.derived.find(k);
            row.push_back(it == slots[i].art.derived.end()
                              ? std::numeric_limits<double>::quiet_NaN()
                              : it->second);
        }
        t.add_row(row);
        merged.exit_code = std::max(merged.exit_code, slots[i].art.exit_code);
        for (const auto& f : slots[i].art.files) merged.files.push_back(f);
    }
    fs::create_directories(base.out_dir);
    std::string param_slug = param;
    std::replace(param_slug.begin(), param_slug.end(), '.', '_');
    const std::string p =
        (fs::path(base.out_dir) / (base.prefix + "_sweep_" + param_slug + ".csv")).string();
    t.write_csv(p);
    merged.files.push_back(p);
    return merged;
}

} // namespace swfront::scenario
