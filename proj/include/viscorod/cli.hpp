#pragma once

/**
 * @file cli.hpp
 * @brief Run-configuration parsing and the end-to-end pipeline behind the
 *        command-line tool: admissibility -> pole certification -> kernel
 *        tabulation -> response, with CSV and report artifacts.
 *
 * Exit protocol: 0 success, 1 configuration error, 2 admissibility rejection
 * (report still written), 3 certification/quadrature failure.
 */

#include <string>
#include <vector>

#include "viscorod/kernels.hpp"
#include "viscorod/models.hpp"
#include "viscorod/response.hpp"

namespace viscorod {

struct ModelConfig {
    enum class Family { zener, distributed, explicit_lists };

    Family family = Family::zener;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;
    double x0 = 0.0;
    std::vector<OrderDistribution::Atom> sigma_atoms, eps_atoms;
    std::vector<OrderDistribution::Density> sigma_densities, eps_densities;

    MaterialModel build() const;
};

struct ForcingConfig {
    enum class Kind { impulse, step, cosine, file };

    Kind kind = Kind::impulse;
    double F0 = 1.0;
    double omega = 1.0;
    std::string path;
};

struct RunConfig {
    ModelConfig model;
    ForcingConfig forcing;
    double t_end = 0.0;
    int n_points = 2000;
    std::string csv_path = "response.csv";
    std::string report_path = "report.txt";
    QuadratureConfig quad;
};

/// Parses the sectioned key=value configuration text. Throws ConfigError
/// with a line/field diagnostic on the first offending entry.
RunConfig parse_config(const std::string& text);

/// parse_config on the contents of a file.
RunConfig load_config(const std::string& path);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitInadmissible = 2;
inline constexpr int kExitNumerical = 3;

/// Full pipeline: writes the CSV (header `t,eps,sigma,P,Q`) and the run
/// report, returns the exit code. check_only stops after certification and
/// writes the report alone.
int run_pipeline(const RunConfig& config, bool check_only = false);

/// Command-line entry point (subcommands `run` and `check`).
int cli_main(int argc, char** argv);

}  // namespace viscorod
