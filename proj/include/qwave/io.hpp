#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwave/ensemble.hpp"
#include "qwave/synthesis.hpp"

namespace qwave {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"eta": n, "filters": [{"epsilon": e, "coefficients": [{"k": [k1, k2], "q": [x0, x1, x2, x12]}, ...]}, ...]}
nlohmann::json filters_to_json(const FilterBank& fb);
FilterBank filters_from_json(const nlohmann::json& j);
void write_filters(const std::filesystem::path& path, const FilterBank& fb);
FilterBank read_filters(const std::filesystem::path& path);

// x1,x2,magnitude,R,G,B
void write_samples_csv(const std::filesystem::path& path, const SampledFunction& f);
// xi1,xi2,lambda
void write_lambda_csv(const std::filesystem::path& path, const LambdaGrid& g);

// one record per slot: k1 k2 block_row block_col slot x0 x1 x2 x12, slot in {s1, v1, v2, s2}
void write_ensemble(std::ostream& os, const Ensemble& u);
Ensemble read_ensemble(std::istream& is);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

struct IterationStats {
    int solved = 0;
    int runs = 0;
    // over solved runs only; quartiles by linear interpolation between order statistics
    double min = 0, q1 = 0, median = 0, q3 = 0, mean = 0, max = 0;
};

IterationStats iteration_stats(std::vector<long> solved_iterations, int runs);
void write_stats_csv(const std::filesystem::path& path, const std::string& problem, int eta, int mu,
                     const IterationStats& s);

}  // namespace qwave
