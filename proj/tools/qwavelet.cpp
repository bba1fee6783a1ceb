// qwavelet: search for quaternionic wavelet filters by Douglas-Rachford
// and export the filters, sampled functions and checks.

#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "qwave/io.hpp"
#include "qwave/runner.hpp"

int main(int argc, char** argv) {
    using namespace qwave;
    CLI::App app{"Quaternionic wavelet filter search by Douglas-Rachford"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    long log_every = 0;
    app.add_option("--eta", cfg.solver.eta, "filter support per axis (even, >= 4)")->capture_default_str();
    app.add_option("--mu", cfg.solver.mu, "number of vanishing moments")->capture_default_str();
    app.add_flag("--symmetric", cfg.solver.symmetric, "add the point-symmetry constraint");
    app.add_option("--seed", cfg.solver.seed, "seed of the random start")->capture_default_str();
    app.add_option("--tol", cfg.solver.tol, "stopping tolerance")->capture_default_str();
    app.add_option("--max-iters", cfg.solver.max_iters, "iteration cutoff (0: 10000 for eta 4, else 300000)")
        ->capture_default_str();
    app.add_option("--cascade-level", cfg.cascade_level, "dyadic refinement level")->capture_default_str();
    app.add_option("--grid-n", cfg.grid_n, "points per axis of the orthonormality grid")->capture_default_str();
    app.add_option("--out", cfg.out, "output directory")->capture_default_str();
    app.add_option("--log-every", log_every, "progress line every N iterations (0: final line only)");

    auto* bat = app.add_subcommand("batch", "run a list of seeds and write stats.csv");
    bat->fallthrough();
    std::string seeds = "1-20";
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bat->add_option("--seeds", seeds, "seed list, e.g. 1,2,5-8")->capture_default_str();
    bat->add_option("--jobs", jobs, "parallel runs")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    cfg.solver.log_every = log_every;

    try {
        if (bat->parsed()) {
            const int code = batch(cfg, parse_seed_list(seeds), jobs, &std::cerr);
            std::cout << (cfg.out / "stats.csv").string() << '\n';
            return code;
        }
        const RunOutcome r = run(cfg, &std::cerr);
        std::cout << "solved=" << r.solve.solved << " iterations=" << r.solve.iterations
                  << " manifest=" << (cfg.out / "manifest.json").string() << '\n';
        return r.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitCantCreate;
    }
}
