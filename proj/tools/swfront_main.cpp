#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swfront/scenario.hpp"

using namespace swfront;

namespace {

int do_run(const std::string& config_path, bool figures_only) {
    auto cfg = scenario::load_config_file(config_path);
    auto art = scenario::run_scenario(cfg, figures_only);
    for (const auto& f : art.files) std::printf("wrote %s\n", f.c_str());
    for (const auto& [k, v] : art.derived) std::printf("%s = %.17g\n", k.c_str(), v);
    return art.exit_code;
}

int do_sweep(const std::string& config_path, const std::string& param,
             const std::string& grid_spec, int threads) {
    auto cfg = scenario::load_config_file(config_path);
    auto grid = scenario::parse_grid_spec(grid_spec);
    auto art = scenario::run_sweep(cfg, param, grid, threads);
    for (const auto& f : art.files) std::printf("wrote %s\n", f.c_str());
    return art.exit_code;
}

int do_validate() {
    scenario::ScenarioConfig cfg;
    cfg.kind = scenario::Kind::Validate;
    cfg.prefix = "validate";
    auto art = scenario::run_scenario(cfg);
    std::printf("%g/%g criteria passed\n", art.derived["criteria"] - art.derived["failures"],
                art.derived["criteria"]);
    return art.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shallow-water wavefront and vacuum-point analysis toolkit"};
    app.require_subcommand(1);

    std::string config_path, param, grid_spec;
    int threads = 0;

    auto* run = app.add_subcommand("run", "run a scenario from a JSON config");
    run->add_option("config", config_path, "scenario configuration file")->required();

    auto* sweep = app.add_subcommand("sweep", "fan a scenario over a parameter grid");
    sweep->add_option("config", config_path, "scenario configuration file")->required();
    sweep->add_option("--param", param, "dotted parameter path, e.g. initial.gamma0")
        ->required();
    sweep->add_option("--grid", grid_spec, "lin:a:b:n | log:a:b:n | v1,v2,...")->required();
    sweep->add_option("--threads", threads, "worker threads (default: hardware)");

    auto* validate = app.add_subcommand("validate", "run the acceptance suite");

    auto* figures = app.add_subcommand("export-figures", "write only the figure files");
    figures->add_option("config", config_path, "scenario configuration file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return do_run(config_path, false);
        if (sweep->parsed()) return do_sweep(config_path, param, grid_spec, threads);
        if (validate->parsed()) return do_validate();
        if (figures->parsed()) return do_run(config_path, true);
    } catch (const scenario::ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    }
    return 0;
}
