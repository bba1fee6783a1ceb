#include <doctest.h>

#include "contract.hpp"
#include "qwave/synthesis.hpp"

using namespace qwave;
using namespace qtest;

TEST_CASE("projector contract on random consistent ensembles") {
    std::mt19937_64 g(30);
    for (auto [eta, mu] : {std::pair{4, 1}, std::pair{6, 2}}) {
        const Projectors p(eta, mu);
        for (Constraint c : kAllConstraints) {
            CAPTURE(to_string(c));
            CAPTURE(eta);
            for (int i = 0; i < 3; ++i) {
                const Ensemble u = rand_consistent(eta, g);
                CHECK(membership_residual(c, u, mu) > 1e-3);
                const ContractResult r = projector_contract(p, c, u);
                CHECK(r.idempotence < 1e-10);
                CHECK(r.fixed_point < 1e-10);
                CHECK(r.consistency < 1e-12);
                CHECK(r.membership < 1e-10);
            }
        }
    }
}

TEST_CASE("corner projection fixes and rescales") {
    std::mt19937_64 g(31);
    const Projectors p(4, 1);
    const Ensemble u = p.unitary_corner(rand_consistent(4, g));
    CHECK(norm(p.unitary_corner(u) - u) < 1e-12);
    // doubling every entry leaves the nearest unitaries unchanged
    CHECK(norm(p.unitary_corner(2.0 * u) - u) < 1e-12);
}

TEST_CASE("shift projection fixes unitary shifted samples") {
    std::mt19937_64 g(32);
    const Projectors p(6, 2);
    for (int l = 1; l < 4; ++l) {
        const Ensemble u = p.unitary_shift(rand_consistent(6, g), l);
        CHECK(norm(p.unitary_shift(u, l) - u) < 1e-11);
    }
}

TEST_CASE("moment null-space projectors") {
    for (auto [eta, mu] : {std::pair{4, 1}, std::pair{6, 2}, std::pair{8, 3}}) {
        const Projectors p(eta, mu);
        const auto alphas = moment_indices(mu);
        CHECK(alphas.size() == size_t((mu + 1) * (mu + 2) / 2 - 1));
        Eigen::MatrixXd r(alphas.size(), eta * eta);
        for (size_t a = 0; a < alphas.size(); ++a)
            for (int k1 = 0; k1 < eta; ++k1)
                for (int k2 = 0; k2 < eta; ++k2)
                    r(a, k1 * eta + k2) = std::pow(k2, alphas[a][0]) * std::pow(k1, alphas[a][1]);
        const Eigen::MatrixXd& rt = p.wavelet_null_projector();
        CHECK((rt * rt - rt).norm() < 1e-10);
        CHECK((rt - rt.transpose()).norm() < 1e-12);
        std::mt19937_64 g(33);
        std::normal_distribution<double> d;
        Eigen::VectorXd x(eta * eta);
        for (auto& v : x) v = d(g);
        CHECK((r * (rt * x)).norm() < 1e-10);
        const Eigen::MatrixXd& st = p.scaling_null_projector();
        CHECK((st * st - st).norm() < 1e-10);
    }
    // eta = 4, mu = 1: two rows, the alpha = (1, 0) row carries k2
    const auto a1 = moment_indices(1);
    REQUIRE(a1.size() == 2);
    CHECK(a1[0] == std::array<int, 2>{1, 0});
    CHECK(a1[1] == std::array<int, 2>{0, 1});
}

TEST_CASE("singular moment systems are rejected") {
    // k^4 on {0..3} is a combination of k, k^2, k^3
    CHECK_THROWS_AS(Projectors(4, 4), ConfigError);
    CHECK_THROWS_AS(Projectors(5, 1), ConfigError);
    CHECK_THROWS_AS(Projectors(2, 1), ConfigError);
    CHECK_THROWS_AS(Projectors(4, 0), ConfigError);
}

TEST_CASE("vanishing moments of the projected coefficients") {
    std::mt19937_64 g(34);
    const Projectors p(6, 2);
    const Ensemble u = p.vanishing_moments(rand_consistent(6, g));
    const FilterBank fb = filters_from(u);
    for (const auto& al : moment_indices(2)) {
        for (int e = 1; e < 4; ++e) CHECK(moment_term(fb, e, al, 0) < 1e-10);
        for (int t = 1; t < 4; ++t) CHECK(moment_term(fb, 0, al, t) < 1e-10);
    }
}

TEST_CASE("symmetry pair projection") {
    const auto [p1, p2] = project_symmetry_pair(Quaternion::one(), Quaternion(), Quaternion::one());
    CHECK(abs(p1 - Quaternion(0.5)) < 1e-15);
    CHECK(abs(p2 - Quaternion(0.5)) < 1e-15);

    std::mt19937_64 g(35);
    for (int i = 0; i < 100; ++i) {
        const Quaternion w = phase(std::uniform_real_distribution<double>(0, 7)(g));
        const Quaternion z2 = rand_q(g), z1 = w * z2;
        const auto [a, b] = project_symmetry_pair(z1, z2, w);
        CHECK(abs(a - z1) < 1e-15);
        CHECK(abs(b - z2) < 1e-15);
        // result is feasible and the correction is orthogonal to the feasible line
        const Quaternion y1 = rand_q(g), y2 = rand_q(g);
        const auto [q1, q2] = project_symmetry_pair(y1, y2, w);
        CHECK(abs(q1 - w * q2) < 1e-14);
        CHECK(std::abs(dot(y1 - q1, z1) + dot(y2 - q2, z2)) < 1e-14);
    }
}

TEST_CASE("symmetry projection details") {
    std::mt19937_64 g(36);
    const Projectors p(6, 2);
    const Ensemble u = rand_consistent(6, g);
    const Ensemble s = p.symmetry(u);
    CHECK(sample_symmetry_residual(s) < 1e-11);
    CHECK(symmetry_residual(filters_from(s)) < 1e-11);
    // j = 0 pairs with itself
    CHECK(abs(samples_of(s)[0][0] - samples_of(u)[0][0]) < 1e-15);
    // wavelet samples are untouched
    const auto mu = samples_of(u), ms = samples_of(s);
    double d = 0;
    for (int e = 1; e < 4; ++e)
        for (size_t j = 0; j < mu[e].size(); ++j) d = std::max(d, abs(mu[e][j] - ms[e][j]));
    CHECK(d < 1e-15);
    CHECK(norm(p.symmetry(s) - s) < 1e-12);
    const auto mi = mirror_index(6, 1, 4);
    CHECK(mi == std::array<int, 2>{4, 1});
}
