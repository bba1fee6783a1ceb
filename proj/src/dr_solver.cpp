#include "qwave/dr_solver.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

namespace qwave {

long default_max_iters(int eta) { return eta <= 4 ? 10000 : 300000; }

double norm(const Point& x) {
    double s = 0;
    for (const auto& e : x) {
        const double n = norm(e);
        s += n * n;
    }
    return std::sqrt(s);
}

Point operator-(const Point& a, const Point& b) {
    Point r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

DRSolver::DRSolver(const SolverConfig& cfg) : cfg_(cfg), proj_(cfg.eta, cfg.mu) {
    if (!(cfg.tol > 0)) throw ConfigError("tolerance must be positive");
    sets_ = {Constraint::UnitaryCorner, Constraint::UnitaryShift1, Constraint::UnitaryShift2,
             Constraint::UnitaryShift3, Constraint::VanishingMoments};
    if (cfg.symmetric) sets_.push_back(Constraint::Symmetry);
    if (!cfg.sets.empty()) sets_ = cfg.sets;
    if (cfg_.max_iters <= 0) cfg_.max_iters = default_max_iters(cfg.eta);
}

Point DRSolver::project_sets(const Point& x) const {
    if (x.size() != sets_.size()) throw std::invalid_argument("point has the wrong number of coordinates");
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = proj_.project(sets_[i], x[i]);
    return r;
}

Point DRSolver::project_diagonal(const Point& x) {
    Ensemble m = x[0];
    for (size_t i = 1; i < x.size(); ++i) m += x[i];
    m *= 1.0 / static_cast<double>(x.size());
    return Point(x.size(), m);
}

Point DRSolver::step(const Point& x) const {
    const Ensemble p = project_diagonal(x)[0];
    Point y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = 2.0 * p - x[i];
    Point c = project_sets(y);
    for (size_t i = 0; i < x.size(); ++i) {
        c[i] += x[i];
        c[i] -= p;
    }
    return c;
}

double DRSolver::stop_error(const Point& x) const {
    const Point pc = project_sets(x);
    return norm(project_diagonal(pc) - pc);
}

Point DRSolver::random_start() const {
    std::mt19937_64 rng(cfg_.seed);
    const Ensemble u = symmetrize(random_raw_ensemble(cfg_.eta, rng));
    return Point(sets_.size(), u);
}

SolveResult DRSolver::run(Point x) const {
    SolveResult res;
    Point pc = project_sets(x), prev_x, prev_pc;
    for (long n = 0;; ++n) {
        const Point pd = project_diagonal(pc);
        const double err = norm(pd - pc);
        double dr = 0, sh = 0;
        if (n > 0) {
            dr = norm(x - prev_x);
            sh = norm(pc - prev_pc);
            if (cfg_.keep_history) {
                res.dr_err.push_back(dr);
                res.shadow_err.push_back(sh);
            }
        }
        const bool done = err < cfg_.tol || n >= cfg_.max_iters;
        if (cfg_.log && ((cfg_.log_every > 0 && n % cfg_.log_every == 0) || done))
            *cfg_.log << "iter=" << n << " dr_err=" << dr << " shadow_err=" << sh << " stop=" << err << '\n';
        if (done) {
            res.solved = err < cfg_.tol;
            res.iterations = n;
            res.final_error = err;
            res.solution = pd[0];
            res.filters = filters_from(res.solution);
            return res;
        }
        prev_x = std::move(x);
        prev_pc = std::move(pc);
        x = step(prev_x);
        pc = project_sets(x);
    }
}

}  // namespace qwave
