#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwave/dr_solver.hpp"
#include "qwave/synthesis.hpp"

namespace qwave {

enum ExitCode : int {
    kExitOk = 0,
    kExitUnsolved = 2,
    kExitCheckFailed = 3,
    kExitUsage = 64,
    kExitCantCreate = 73,
};

struct RunConfig {
    SolverConfig solver;
    int cascade_level = 6;
    int grid_n = 101;
    std::filesystem::path out = "out";
};

struct CheckTolerances {
    double residual = 1e-7;
    double cascade = 5e-3;
    int qqmf_points = 50;
    std::uint64_t qqmf_seed = 12345;
};

struct CheckResults {
    double qqmf = 0;
    double completeness = 0;
    double vanishing_moments = 0;
    std::optional<double> symmetry;
    double lambda_min = 0;
    double partition_of_unity = 0;
    double phi_integral_error = 0;
    double psi_integral_error = 0;
    double separability = 0;
    std::string cascade_error;
    bool passed = false;

    nlohmann::json to_json() const;
};

struct CheckOutputs {
    LambdaGrid lambda;
    std::optional<CascadeResult> cascade;
};

// QQMF at random points, completeness, moments, symmetry, Lambda profile, cascade and separability
CheckResults check_filters(const FilterBank& fb, int mu, bool symmetric, int cascade_level, int grid_n,
                           const CheckTolerances& tol = {}, CheckOutputs* outputs = nullptr);

// throws ConfigError on invalid parameters
void validate(const RunConfig& cfg);
nlohmann::json config_json(const RunConfig& cfg);

struct RunOutcome {
    int exit_code = kExitOk;
    SolveResult solve;
    std::optional<CheckResults> checks;
};

// solve, check, export; files go to cfg.out
RunOutcome run(const RunConfig& cfg, std::ostream* log = nullptr);

// one run per seed in out/seed_<s>, statistics in out/stats.csv
int batch(const RunConfig& cfg, const std::vector<std::uint64_t>& seeds, int jobs, std::ostream* log = nullptr);

// "1,2,5-8" -> {1, 2, 5, 6, 7, 8}
std::vector<std::uint64_t> parse_seed_list(const std::string& s);

}  // namespace qwave
