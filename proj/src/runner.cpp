#include "qwave/runner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "qwave/io.hpp"

namespace qwave {

namespace fs = std::filesystem;

nlohmann::json CheckResults::to_json() const {
    nlohmann::json j{{"qqmf", qqmf},
                     {"completeness", completeness},
                     {"vanishing_moments", vanishing_moments},
                     {"lambda_min", lambda_min},
                     {"orthonormal", lambda_min > 0},
                     {"partition_of_unity", partition_of_unity},
                     {"phi_integral_error", phi_integral_error},
                     {"psi_integral_error", psi_integral_error},
                     {"separability", separability},
                     {"passed", passed}};
    j["symmetry"] = symmetry ? nlohmann::json(*symmetry) : nlohmann::json(nullptr);
    if (!cascade_error.empty()) j["cascade_error"] = cascade_error;
    return j;
}

CheckResults check_filters(const FilterBank& fb, int mu, bool symmetric, int cascade_level, int grid_n,
                           const CheckTolerances& tol, CheckOutputs* outputs) {
    CheckResults r;
    std::mt19937_64 rng(tol.qqmf_seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < tol.qqmf_points; ++i) {
        const double x1 = u(rng), x2 = u(rng);
        r.qqmf = std::max(r.qqmf, qqmf_residual(fb, x1, x2));
    }
    r.completeness = completeness_residual(fb);
    r.vanishing_moments = vanishing_moment_residual(fb, mu);
    if (symmetric) r.symmetry = symmetry_residual(fb);
    LambdaGrid lg = orthonormality_check(fb, grid_n);
    r.lambda_min = lg.min;
    bool cascade_ok = false;
    try {
        CascadeResult c = cascade(fb, cascade_level);
        r.partition_of_unity = partition_of_unity_residual(c.phi);
        r.phi_integral_error = abs(integral(c.phi) - Quaternion::one());
        for (const auto& p : c.psi) r.psi_integral_error = std::max(r.psi_integral_error, abs(integral(p)));
        r.separability = separability(c.phi);
        cascade_ok = r.partition_of_unity <= tol.cascade && r.phi_integral_error <= tol.cascade &&
                     r.psi_integral_error <= tol.cascade;
        if (outputs) outputs->cascade = std::move(c);
    } catch (const DegenerateError& e) {
        r.cascade_error = e.what();
    }
    r.passed = r.qqmf <= tol.residual && r.completeness <= tol.residual && r.vanishing_moments <= tol.residual &&
               (!r.symmetry || *r.symmetry <= tol.residual) && r.lambda_min > 0 && cascade_ok;
    if (outputs) outputs->lambda = std::move(lg);
    return r;
}

void validate(const RunConfig& cfg) {
    const auto& s = cfg.solver;
    if (s.eta < 4 || s.eta % 2) throw ConfigError("--eta must be even and at least 4");
    if (s.mu < 1) throw ConfigError("--mu must be at least 1");
    if (!(s.tol > 0)) throw ConfigError("--tol must be positive");
    if (s.max_iters < 0) throw ConfigError("--max-iters must be non-negative");
    if (cfg.cascade_level < 1 || cfg.cascade_level > 12) throw ConfigError("--cascade-level must be in 1..12");
    if (cfg.grid_n < 2) throw ConfigError("--grid-n must be at least 2");
}

nlohmann::json config_json(const RunConfig& cfg) {
    const auto& s = cfg.solver;
    return {{"eta", s.eta},
            {"mu", s.mu},
            {"symmetric", s.symmetric},
            {"seed", s.seed},
            {"tol", s.tol},
            {"max_iters", s.max_iters > 0 ? s.max_iters : default_max_iters(s.eta)},
            {"cascade_level", cfg.cascade_level},
            {"grid_n", cfg.grid_n},
            {"out", cfg.out.string()}};
}

namespace {

void prepare_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path probe = dir / ".write_probe";
    {
        std::ofstream os(probe);
        if (ec || !os) throw IoError("output directory is not writable: " + dir.string());
    }
    fs::remove(probe, ec);
}

}  // namespace

RunOutcome run(const RunConfig& cfg, std::ostream* log) {
    validate(cfg);
    prepare_dir(cfg.out);
    SolverConfig sc = cfg.solver;
    sc.log = log;
    RunOutcome out;
    out.solve = DRSolver(sc).run();
    nlohmann::json manifest{{"config", config_json(cfg)},
                            {"report",
                             {{"solved", out.solve.solved},
                              {"iterations", out.solve.iterations},
                              {"final_error", out.solve.final_error}}}};
    std::vector<std::string> files;
    if (!out.solve.solved) {
        out.exit_code = kExitUnsolved;
    } else {
        CheckOutputs co;
        CheckResults cr = check_filters(out.solve.filters, cfg.solver.mu, cfg.solver.symmetric, cfg.cascade_level,
                                        cfg.grid_n, {}, &co);
        write_filters(cfg.out / "filters.json", out.solve.filters);
        files.push_back("filters.json");
        if (co.cascade) {
            write_samples_csv(cfg.out / "samples_phi.csv", co.cascade->phi);
            files.push_back("samples_phi.csv");
            for (int e = 0; e < 3; ++e) {
                const std::string name = "samples_psi" + std::to_string(e + 1) + ".csv";
                write_samples_csv(cfg.out / name, co.cascade->psi[e]);
                files.push_back(name);
            }
        }
        write_lambda_csv(cfg.out / "lambda_grid.csv", co.lambda);
        files.push_back("lambda_grid.csv");
        manifest["checks"] = cr.to_json();
        out.exit_code = cr.passed ? kExitOk : kExitCheckFailed;
        out.checks = std::move(cr);
    }
    manifest["files"] = files;
    manifest["exit_code"] = out.exit_code;
    write_json(cfg.out / "manifest.json", manifest);
    return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& s) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto dash = item.find('-');
        try {
            size_t used = 0;
            if (dash == std::string::npos) {
                seeds.push_back(std::stoull(item, &used));
                if (used != item.size()) throw ConfigError("bad seed '" + item + "'");
            } else {
                const auto a = std::stoull(item.substr(0, dash)), b = std::stoull(item.substr(dash + 1));
                if (b < a) throw ConfigError("bad seed range '" + item + "'");
                for (auto v = a; v <= b; ++v) seeds.push_back(v);
            }
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const ConfigError*>(&e)) throw;
            throw ConfigError("bad seed '" + item + "'");
        }
    }
    if (seeds.empty()) throw ConfigError("--seeds needs at least one seed");
    return seeds;
}

int batch(const RunConfig& cfg, const std::vector<std::uint64_t>& seeds, int jobs, std::ostream* log) {
    validate(cfg);
    if (seeds.empty()) throw ConfigError("--seeds needs at least one seed");
    prepare_dir(cfg.out);
    std::vector<RunOutcome> outcomes(seeds.size());
    std::atomic<size_t> next{0};
    std::mutex log_mutex;
    auto worker = [&] {
        for (size_t i = next++; i < seeds.size(); i = next++) {
            RunConfig rc = cfg;
            rc.solver.seed = seeds[i];
            rc.out = cfg.out / ("seed_" + std::to_string(seeds[i]));
            outcomes[i] = run(rc);
            outcomes[i].solve.dr_err.clear();
            outcomes[i].solve.shadow_err.clear();
            if (log) {
                std::lock_guard<std::mutex> lock(log_mutex);
                *log << "seed=" << seeds[i] << " solved=" << outcomes[i].solve.solved
                     << " iterations=" << outcomes[i].solve.iterations << " exit=" << outcomes[i].exit_code << '\n';
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(seeds.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<long> iters;
    bool check_failure = false;
    for (const auto& o : outcomes) {
        if (o.solve.solved) iters.push_back(o.solve.iterations);
        check_failure = check_failure || o.exit_code == kExitCheckFailed;
    }
    write_stats_csv(cfg.out / "stats.csv", cfg.solver.symmetric ? "b" : "a", cfg.solver.eta, cfg.solver.mu,
                    iteration_stats(iters, static_cast<int>(seeds.size())));
    return check_failure ? kExitCheckFailed : kExitOk;
}

}  // namespace qwave
