#ifndef SWFRONT_SCENARIO_HPP
#define SWFRONT_SCENARIO_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "swfront/bathymetry.hpp"

namespace swfront::scenario {

inline constexpr const char* kVersion = "swfront 0.1.0";

enum class Kind {
    Slosh,
    Blowup,
    PwParabolaFlat,
    PwParabolaParabolic,
    VacuumHierarchy,
    PeriodCurve,
    BlowupCurve,
    Validate
};

std::string kind_name(Kind k);

// Configuration rejected with the full list of violations, not just the first.
struct ConfigError : std::runtime_error {
    explicit ConfigError(std::vector<std::string> violations);
    std::vector<std::string> violations;
};

struct ScenarioConfig {
    Kind kind = Kind::Slosh;
    bathy::BottomProfile bottom = bathy::BottomProfile::quadratic(-1.0, 0.0, 1.0);

    // initial data (interpretation depends on the scenario kind)
    double gamma0 = -0.5;
    double mu0 = 1.0;
    double beta0 = 0.0;
    double delta0 = 0.0;
    double alpha0 = 0.0;
    double depth_q = 1.0;
    double x0 = 0.5;
    double zeta1_0 = 0.0;
    bool zeta1_given = false;
    int order = 3;                      // truncation order N
    std::vector<double> eta_coeffs;     // eta_1..eta_N
    std::vector<double> u_coeffs;       // u_0..u_N
    std::string dry_velocity = "continuous";
    std::vector<double> dry_u;          // explicit dry-side u'_0..u'_N

    // numerics
    double tol = 1e-10;
    double cfl = 0.45;
    double t_end = -1.0;                // negative: scenario default
    int resolution = 2000;
    int scheme_order = 2;
    int curve_points = 200;
    double curve_lo = 0.0, curve_hi = 0.0;  // 0,0: scenario default
    std::vector<double> output_times;

    // output
    std::string out_dir = "out";
    std::string prefix;
    std::string normalized;  // canonical JSON echo, stored in the manifest
};

// Strict parse: unknown keys are rejected, all violations are reported.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);

struct RunArtifacts {
    std::vector<std::string> files;
    std::map<std::string, double> derived;
    int exit_code = 0;  // 0 ok, 1 validation failure, 2 numerical failure
};

RunArtifacts run_scenario(const ScenarioConfig& cfg, bool figures_only = false);

// Parameter sweep: fans the grid over worker threads, results merged in
// parameter order. `param` is a dotted path such as "initial.gamma0".
RunArtifacts run_sweep(const ScenarioConfig& base, const std::string& param,
                       const std::vector<double>& grid, int threads = 0);

// Grid specs: "lin:a:b:n", "log:a:b:n" or a comma list "0.1,0.2,0.5".
std::vector<double> parse_grid_spec(const std::string& spec);

} // namespace swfront::scenario

#endif
