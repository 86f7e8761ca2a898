#include <iostream>

#include <CLI11.hpp>

#include "viscorod/cli.hpp"

namespace viscorod {

int cli_main(int argc, char** argv) {
    CLI::App app{
        "viscorod: forced oscillations of a body on a distributed-order "
        "fractional viscoelastic rod"};
    app.require_subcommand(1);
    app.footer("Thread count is taken from the VISCOROD_THREADS environment variable.");

    std::string config_path;
    double tol_quad = 0.0;
    int grid_points = 0;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", config_path, "run configuration file")->required();
        cmd->add_option("--tol-quad", tol_quad, "override the quadrature relative tolerance");
        cmd->add_option("--grid-points", grid_points, "override the time grid point count");
    };
    CLI::App* run_cmd =
        app.add_subcommand("run", "full pipeline: admissibility, certification, CSV + report");
    add_common(run_cmd);
    CLI::App* check_cmd =
        app.add_subcommand("check", "admissibility and pole certificate only (report)");
    add_common(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        RunConfig config = load_config(config_path);
        CLI::App* active = run_cmd->parsed() ? run_cmd : check_cmd;
        if (active->count("--tol-quad") > 0) {
            if (!(tol_quad > 0.0)) throw ConfigError("--tol-quad must be > 0");
            config.quad.rel_tol = tol_quad;
        }
        if (active->count("--grid-points") > 0) {
            if (grid_points < 16) throw ConfigError("--grid-points must be >= 16");
            config.n_points = grid_points;
        }
        return run_pipeline(config, check_cmd->parsed());
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace viscorod
