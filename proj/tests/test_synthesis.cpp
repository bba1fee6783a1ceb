#include <doctest.h>

#include "helpers.hpp"
#include "qwave/dr_solver.hpp"
#include "qwave/synthesis.hpp"

using namespace qwave;
using namespace qtest;

namespace {

const FilterBank& solved_bank() {
    static const FilterBank fb = [] {
        SolverConfig cfg;
        cfg.seed = 1;
        // tight, so that the lattice fixed point is exact at the 1e-10 level
        cfg.tol = 1e-12;
        cfg.max_iters = 10000;
        const SolveResult r = solve(cfg);
        REQUIRE(r.solved);
        return r.filters;
    }();
    return fb;
}

}  // namespace

TEST_CASE("Haar reference bank") {
    const FilterBank h = haar_bank();
    CHECK(completeness_residual(h) < 1e-15);
    std::mt19937_64 g(50);
    std::uniform_real_distribution<double> d(0, 1);
    for (int i = 0; i < 50; ++i) CHECK(qqmf_pair_residual(h, 0, 0, d(g), d(g)) < 1e-12);
    CHECK(orthonormality_check(h, 101).min > 0);
    CHECK(vanishing_moment_residual(h, 1) > 0.1);
    CHECK_THROWS_AS(cascade(h, 3), DegenerateError);
}

TEST_CASE("negative control: doubled bank is not a QQMF") {
    FilterBank fb = solved_bank();
    for (auto& f : fb.a)
        for (auto& q : f) q *= 2.0;
    CHECK(qqmf_residual(fb, 0.3, 0.1) > 1);
}

TEST_CASE("zeroth moment equals the value at the origin") {
    std::mt19937_64 g(51);
    const FilterBank fb = rand_bank(4, g);
    for (int e = 1; e < 4; ++e) CHECK(moment_term(fb, e, {0, 0}, 0) == doctest::Approx(abs(fb.eval(e, 0, 0))));
}

TEST_CASE("checks on a solved bank") {
    const FilterBank& fb = solved_bank();
    CHECK(qqmf_residual_grid(fb, 8) < 1e-7);
    CHECK(completeness_residual(fb) < 1e-7);
    CHECK(vanishing_moment_residual(fb, 1) < 1e-7);
    const LambdaGrid lg = orthonormality_check(fb, 101);
    CHECK(lg.lambda.size() == 101u * 101u);
    CHECK(lg.min > 0);
    // the centre of an odd grid is xi = 0, where [m0(0)] = I
    CHECK(lg.xi1[50 * 101 + 50] == 0);
    CHECK(lg.lambda[50 * 101 + 50] == doctest::Approx(1).epsilon(1e-7));
    CHECK(lg.min == doctest::Approx(*std::min_element(lg.lambda.begin(), lg.lambda.end())));
}

TEST_CASE("cascade of a solved bank") {
    const FilterBank& fb = solved_bank();
    const auto lv = lattice_values(fb);
    Quaternion s;
    for (const auto& q : lv) s += q;
    CHECK(abs(s - Quaternion::one()) < 1e-12);

    const CascadeResult c5 = cascade(fb, 5), c6 = cascade(fb, 6);
    CHECK(c6.phi.n == 3 * 64 + 1);
    CHECK(partition_of_unity_residual(c6.phi) < 5e-3);
    CHECK(abs(integral(c6.phi) - Quaternion::one()) < 5e-3);
    for (const auto& p : c6.psi) CHECK(abs(integral(p)) < 5e-3);
    CHECK(separability(c6.phi) > 1e-3);

    // boundary values vanish
    double edge = 0;
    for (int p = 0; p < c6.phi.n; ++p) {
        edge = std::max({edge, abs(c6.phi.at(0, p)), abs(c6.phi.at(p, 0)), abs(c6.phi.at(c6.phi.n - 1, p)),
                         abs(c6.phi.at(p, c6.phi.n - 1))});
    }
    CHECK(edge < 1e-10);

    // coarse points are reproduced on the finer grid
    double nest = 0;
    for (int p1 = 0; p1 < c5.phi.n; ++p1)
        for (int p2 = 0; p2 < c5.phi.n; ++p2) {
            nest = std::max(nest, abs(c6.phi.at(2 * p1, 2 * p2) - c5.phi.at(p1, p2)));
            for (int e = 0; e < 3; ++e) nest = std::max(nest, abs(c6.psi[e].at(2 * p1, 2 * p2) - c5.psi[e].at(p1, p2)));
        }
    CHECK(nest < 1e-10);

    // level 0 values are the lattice fixed point
    for (int k1 = 0; k1 < 4; ++k1)
        for (int k2 = 0; k2 < 4; ++k2) CHECK(abs(c6.phi.at(64 * k1, 64 * k2) - lv[k1 * 4 + k2]) < 1e-10);
}

TEST_CASE("separability of a product grid") {
    SampledFunction f(4, 5);
    std::vector<double> gx(f.n), hx(f.n);
    double sg = 0, sh = 0;
    for (int p = 0; p < f.n; ++p) {
        const double x = p * f.h;
        gx[p] = x * (3 - x);
        hx[p] = std::sin(x * M_PI / 3);
        sg += gx[p] * f.h;
        sh += hx[p] * f.h;
    }
    for (int p1 = 0; p1 < f.n; ++p1)
        for (int p2 = 0; p2 < f.n; ++p2) f.at(p1, p2) = Quaternion(gx[p1] / sg * hx[p2] / sh);
    CHECK(separability(f) <= 1e-10);
    f.at(10, 20) += Quaternion(0, 1, 0, 0);
    CHECK(separability(f) > 0);
}
