#include <doctest.h>

#include <numbers>

#include "helpers.hpp"

using namespace qwave;
using namespace qtest;

namespace {

// U(xi) straight from the trigonometric polynomials
SVBlockMatrix wavelet_matrix(const FilterBank& fb, double x1, double x2) {
    SVBlockMatrix m(4);
    for (int i = 0; i < 4; ++i) {
        const double y1 = x1 + 0.5 * kCorners[i][0], y2 = x2 + 0.5 * kCorners[i][1];
        for (int e = 0; e < 4; ++e) m.set_block(i, e, sv_of_values(fb.eval(e, y1, y2), fb.eval(e, -y1, -y2)));
    }
    return m;
}

Ensemble const_ensemble(int eta, const SVBlockMatrix& x) {
    Ensemble u(eta);
    for (int j1 = 0; j1 < eta; ++j1)
        for (int j2 = 0; j2 < eta; ++j2) u.set_entry(j1, j2, x);
    return u;
}

}  // namespace

TEST_CASE("dft matches the direct double sum") {
    std::mt19937_64 g(20);
    for (int eta : {4, 6}) {
        const Ensemble b = random_raw_ensemble(eta, g);
        CHECK(max_diff(dft(b), direct_dft(b)) < 1e-12);
        CHECK(max_diff(idft(b), direct_dft(b, 1.0 / (eta * eta))) < 1e-13);
    }
}

TEST_CASE("dft impulse and constant") {
    std::mt19937_64 g(21);
    const int eta = 4;
    const SVBlockMatrix x = rand_block(4, g);
    Ensemble delta(eta);
    delta.set_entry(0, 0, x);
    CHECK(max_diff(dft(delta), const_ensemble(eta, x)) < 1e-14);

    const Ensemble c = dft(const_ensemble(eta, x));
    Ensemble expect(eta);
    expect.set_entry(0, 0, x * double(eta * eta));
    CHECK(max_diff(c, expect) < 1e-13);

    CHECK(max_diff(idft(const_ensemble(eta, x)), delta) < 1e-14);
}

TEST_CASE("dft inversion and Parseval") {
    std::mt19937_64 g(22);
    for (int eta : {4, 6, 8}) {
        const Ensemble b = random_raw_ensemble(eta, g);
        CHECK(norm(idft(dft(b)) - b) < 1e-12);
        CHECK(norm(dft(idft(b)) - b) < 1e-12);
        const Ensemble f = dft(b);
        CHECK(std::abs(inner(f, f) - eta * eta * inner(b, b)) < 1e-10 * inner(f, f));
        const Ensemble a = random_raw_ensemble(eta, g);
        CHECK(inner(a, b) == doctest::Approx(inner(b, a)));
    }
    Ensemble z(4);
    CHECK(inner(z, z) == 0);
}

TEST_CASE("modulation") {
    std::mt19937_64 g(23);
    const Ensemble b = random_raw_ensemble(4, g);
    CHECK(max_diff(modulate(b, 0), b) == 0);
    // eta = 4, k = (0, 2), l = 1: angle pi/2, phase pair (e12, -e12)
    const Ensemble m = modulate(b, 1);
    CHECK(max_diff(m.entry(0, 2), phase_act(Quaternion::e12(), b.entry(0, 2))) < 1e-15);
    for (int l = 1; l < 4; ++l) CHECK(max_diff(modulate(modulate(b, l), l, true), b) < 1e-15);
    // round trip through dense samples
    const Ensemble u = rand_consistent(4, g);
    for (int l = 0; l < 4; ++l) CHECK(max_diff(modulate(idft(dense_samples(u, l)), l, true), idft(u)) < 1e-14);
}

TEST_CASE("dense samples equal direct evaluation at shifted points") {
    std::mt19937_64 g(24);
    for (int eta : {4, 6}) {
        const FilterBank fb = rand_bank(eta, g);
        const Ensemble u = synthesize(fb);
        CHECK(max_diff(dense_samples(u, 0), u) < 1e-12);
        for (int l = 0; l < 4; ++l) {
            const Ensemble d = dense_samples(u, l);
            for (int j1 = 0; j1 < eta; ++j1)
                for (int j2 = 0; j2 < eta; ++j2) {
                    const SVBlockMatrix ref =
                        wavelet_matrix(fb, (j1 + 0.5 * kCorners[l][0]) / eta, (j2 + 0.5 * kCorners[l][1]) / eta);
                    CHECK(max_diff(d.entry(j1, j2), ref) < 1e-11);
                }
        }
    }
}

TEST_CASE("sigma group and tau") {
    std::mt19937_64 g(25);
    const Code8 u = codify(rand_block(4, g));
    CHECK((sigma(sigma(u, 1), 2) - sigma(u, 3)).norm() == 0);
    CHECK((sigma(sigma(u, 2), 1) - sigma(u, 3)).norm() == 0);
    for (int k = 0; k < 4; ++k) CHECK((sigma(sigma(u, k), k) - u).norm() == 0);
    CHECK((tau(tau(u)) - u).norm() == 0);

    // tau in quaternion form: swap values at x and -x, i.e. conjugate every 2x2 block by [[0,1],[1,0]]
    const SVBlockMatrix q = decodify(u);
    SVBlockMatrix t(4);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) t.at(r ^ 1, c ^ 1) = q.at(r, c);
    CHECK(max_diff(decodify(tau(u)), t) < 1e-15);
}

TEST_CASE("symmetrize projects onto consistent ensembles") {
    std::mt19937_64 g(26);
    for (int eta : {4, 6}) {
        const Ensemble b = random_raw_ensemble(eta, g);
        CHECK(consistency_residual(b) > 0.1);
        const Ensemble s = symmetrize(b);
        CHECK(consistency_residual(s) < 1e-13);
        CHECK(max_diff(symmetrize(s), s) < 1e-14);
        // orthogonal: the residual is perpendicular to consistent ensembles
        const Ensemble c = rand_consistent(eta, g);
        CHECK(std::abs(inner(b - s, c)) < 1e-11);
    }
    const FilterBank fb = rand_bank(4, g);
    const Ensemble u = synthesize(fb);
    CHECK(consistency_residual(u) < 1e-12);
    CHECK(max_diff(symmetrize(u), u) < 1e-12);
}

TEST_CASE("filters, samples and coefficients round trip") {
    std::mt19937_64 g(27);
    for (int eta : {4, 6}) {
        const FilterBank fb = rand_bank(eta, g);
        const Ensemble u = synthesize(fb);
        CHECK(max_diff(from_coefficients(fb), u) < 1e-12);
        const FilterBank back = filters_from(u);
        double d = 0;
        for (int e = 0; e < 4; ++e)
            for (size_t k = 0; k < fb.a[e].size(); ++k) d = std::max(d, abs(back.a[e][k] - fb.a[e][k]));
        CHECK(d < 1e-12);
        CHECK(max_diff(from_samples(eta, samples_of(u)), u) < 1e-12);
        // top row holds m_eps(j / eta)
        const auto m = samples_of(u);
        CHECK(abs(m[2][u.index(1, 3)] - fb.eval(2, 1.0 / eta, 3.0 / eta)) < 1e-12);
    }
}

TEST_CASE("filter evaluation") {
    const FilterBank h = haar_bank();
    CHECK(abs(h.eval(0, 0, 0) - Quaternion::one()) < 1e-15);
    CHECK(abs(h.eval(0, 0.5, 0)) < 1e-15);
    CHECK(abs(h.eval(0, 0, 0.5)) < 1e-15);
    CHECK(abs(h.eval(0, 0.5, 0.5)) < 1e-15);
    std::mt19937_64 g(28);
    const FilterBank fb = rand_bank(4, g);
    std::uniform_real_distribution<double> d(-1, 1);
    for (int i = 0; i < 50; ++i) {
        const double x1 = d(g), x2 = d(g);
        CHECK(abs(fb.eval(1, x1, x2) - fb.eval(1, x1 + 3, x2 - 2)) < 1e-12);
    }
}

TEST_CASE("random raw ensembles") {
    std::mt19937_64 a(5), b(5), c(6);
    const Ensemble ea = random_raw_ensemble(4, a), eb = random_raw_ensemble(4, b), ec = random_raw_ensemble(4, c);
    CHECK(max_diff(ea, eb) == 0);
    CHECK(norm(ea - ec) > 0);
    for (size_t n = 0; n < ea.size(); ++n) {
        const SVBlockMatrix m = decodify(ea[n]);
        CHECK(is_valid_sv(m));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                for (int k = 0; k < 4; ++k) CHECK(std::abs(m.at(i, j)[k]) <= 1.0);
    }
}
