#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "qwave/projectors.hpp"

namespace qwave {

struct SolverConfig {
    int eta = 4;
    int mu = 1;
    bool symmetric = false;
    double tol = 1e-9;
    long max_iters = 0;  // 0 picks the default cutoff for eta
    std::uint64_t seed = 0;
    long log_every = 0;
    std::ostream* log = nullptr;
    bool keep_history = true;
    // empty: the four unitarity sets and C2, plus C3 when symmetric
    std::vector<Constraint> sets;
};

long default_max_iters(int eta);

using Point = std::vector<Ensemble>;

struct SolveResult {
    bool solved = false;
    long iterations = 0;
    double final_error = 0;
    Ensemble solution;
    FilterBank filters;
    std::vector<double> dr_err;      // ||x_n - x_{n-1}||
    std::vector<double> shadow_err;  // ||P_C x_n - P_C x_{n-1}||
};

class DRSolver {
public:
    explicit DRSolver(const SolverConfig& cfg);

    const std::vector<Constraint>& constraints() const { return sets_; }
    const Projectors& projectors() const { return proj_; }

    Point project_sets(const Point& x) const;
    static Point project_diagonal(const Point& x);
    // x + P_C(2 P_D x - x) - P_D x
    Point step(const Point& x) const;
    // ||P_D P_C x - P_C x||
    double stop_error(const Point& x) const;

    Point random_start() const;
    SolveResult run(Point x) const;
    SolveResult run() const { return run(random_start()); }

private:
    SolverConfig cfg_;
    Projectors proj_;
    std::vector<Constraint> sets_;
};

double norm(const Point& x);
Point operator-(const Point& a, const Point& b);

inline SolveResult solve(const SolverConfig& cfg) { return DRSolver(cfg).run(); }

}  // namespace qwave
