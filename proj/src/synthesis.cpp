#include "qwave/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwave/ensemble.hpp"

namespace qwave {

namespace {

double ipow(int base, int e) {
    double r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

double twist_sign(int twist, int k1, int k2) {
    switch (twist) {
        case 1: return k2 % 2 ? -1.0 : 1.0;
        case 2: return k1 % 2 ? -1.0 : 1.0;
        case 3: return (k1 + k2) % 2 ? -1.0 : 1.0;
        default: return 1.0;
    }
}

// matrix of q -> q a on the components (x0, x1, x2, x12)
Eigen::Matrix4d right_mult(const Quaternion& a) {
    Eigen::Matrix4d m;
    for (int j = 0; j < 4; ++j) {
        Quaternion e;
        e[j] = 1;
        const Quaternion r = e * a;
        for (int i = 0; i < 4; ++i) m(i, j) = r[i];
    }
    return m;
}

double sv_norm(const SVMatrix& m) { return std::sqrt(norm2(m.s1) + norm2(m.v1) + norm2(m.v2) + norm2(m.s2)); }

}  // namespace

SVMatrix filter_matrix(const FilterBank& fb, int eps, double xi1, double xi2) {
    return sv_of_values(fb.eval(eps, xi1, xi2), fb.eval(eps, -xi1, -xi2));
}

double qqmf_pair_residual(const FilterBank& fb, int eps, int zeta, double xi1, double xi2) {
    SVMatrix s{};
    for (const auto& v : kCorners) {
        const double x1 = xi1 + 0.5 * v[0], x2 = xi2 + 0.5 * v[1];
        const SVMatrix p =
            sv_multiply(sv_adjoint(filter_matrix(fb, eps, x1, x2)), filter_matrix(fb, zeta, x1, x2));
        s = {s.s1 + p.s1, s.v1 + p.v1, s.v2 + p.v2, s.s2 + p.s2};
    }
    if (eps == zeta) {
        s.s1.x0 -= 1;
        s.s2.x0 -= 1;
    }
    return sv_norm(s);
}

double qqmf_residual(const FilterBank& fb, double xi1, double xi2) {
    double r = 0;
    for (int e = 0; e < 4; ++e)
        for (int z = 0; z < 4; ++z) r = std::max(r, qqmf_pair_residual(fb, e, z, xi1, xi2));
    return r;
}

double qqmf_residual_grid(const FilterBank& fb, int n) {
    double r = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r = std::max(r, qqmf_residual(fb, double(i) / n, double(j) / n));
    return r;
}

double completeness_residual(const FilterBank& fb) {
    double r = abs(fb.eval(0, 0, 0) - Quaternion::one());
    for (int j = 1; j < 4; ++j) r = std::max(r, abs(fb.eval(0, 0.5 * kCorners[j][0], 0.5 * kCorners[j][1])));
    for (int e = 1; e < 4; ++e) r = std::max(r, abs(fb.eval(e, 0, 0)));
    return r;
}

double moment_term(const FilterBank& fb, int eps, std::array<int, 2> alpha, int twist) {
    Quaternion s;
    for (int k1 = 0; k1 < fb.eta; ++k1)
        for (int k2 = 0; k2 < fb.eta; ++k2)
            s += (twist_sign(twist, k1, k2) * ipow(k2, alpha[0]) * ipow(k1, alpha[1])) * fb.coeff(eps, k1, k2);
    return abs(s);
}

double vanishing_moment_residual(const FilterBank& fb, int mu) {
    double r = 0;
    for (int s = 0; s <= mu; ++s)
        for (int a1 = 0; a1 <= s; ++a1) {
            const std::array<int, 2> alpha{a1, s - a1};
            for (int e = 1; e < 4; ++e) r = std::max(r, moment_term(fb, e, alpha, 0));
            for (int t = 1; t < 4; ++t) r = std::max(r, moment_term(fb, 0, alpha, t));
        }
    return r;
}

double symmetry_residual(const FilterBank& fb) {
    double r = 0;
    for (int k1 = 0; k1 < fb.eta; ++k1)
        for (int k2 = 0; k2 < fb.eta; ++k2)
            r = std::max(r, abs(fb.coeff(0, k1, k2) - fb.coeff(0, fb.eta - 1 - k1, fb.eta - 1 - k2)));
    return r;
}

LambdaGrid orthonormality_check(const FilterBank& fb, int n) {
    if (n < 2) throw std::invalid_argument("grid needs at least two points per axis");
    LambdaGrid g;
    g.n = n;
    g.min = INFINITY;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x1 = -0.25 + 0.5 * i / (n - 1), x2 = -0.25 + 0.5 * j / (n - 1);
            const SVMatrix m = filter_matrix(fb, 0, x1, x2);
            const auto ev = sv_eigenvalues(sv_multiply(sv_adjoint(m), m));
            const double lam = std::min(ev.first.real(), ev.second.real());
            g.xi1.push_back(x1);
            g.xi2.push_back(x2);
            g.lambda.push_back(lam);
            g.min = std::min(g.min, lam);
        }
    return g;
}

SampledFunction::SampledFunction(int eta, int level_)
    : level(level_), n((eta - 1) * (1 << level_) + 1), h(1.0 / (1 << level_)), v(static_cast<size_t>(n * n)) {}

std::vector<Quaternion> lattice_values(const FilterBank& fb, double tol) {
    const int eta = fb.eta, n = eta * eta;
    Eigen::MatrixXd m = -Eigen::MatrixXd::Identity(4 * n, 4 * n);
    for (int a1 = 0; a1 < eta; ++a1)
        for (int a2 = 0; a2 < eta; ++a2)
            for (int b1 = 0; b1 < eta; ++b1)
                for (int b2 = 0; b2 < eta; ++b2) {
                    const int k1 = 2 * a1 - b1, k2 = 2 * a2 - b2;
                    if (k1 < 0 || k2 < 0 || k1 >= eta || k2 >= eta) continue;
                    m.block<4, 4>(4 * (a1 * eta + a2), 4 * (b1 * eta + b2)) += right_mult(4.0 * fb.coeff(0, k1, k2));
                }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const Eigen::VectorXd& s = svd.singularValues();  // descending
    const Eigen::Index last = s.size() - 1;
    // the fixed points form a left module over the quaternions, so a simple eigenvalue
    // gives a four-dimensional real null space
    if (s(last - 3) > std::sqrt(tol)) throw DegenerateError("refinement matrix has no eigenvalue 1");
    if (s.size() > 4 && s(last - 4) < tol) throw DegenerateError("eigenvalue 1 of the refinement matrix is not simple");
    const Eigen::VectorXd w = svd.matrixV().col(last);
    std::vector<Quaternion> v(static_cast<size_t>(n));
    Quaternion sum;
    for (int i = 0; i < n; ++i) {
        v[i] = Quaternion(w(4 * i), w(4 * i + 1), w(4 * i + 2), w(4 * i + 3));
        sum += v[i];
    }
    if (abs(sum) < tol) throw DegenerateError("fixed point of the refinement matrix has zero sum");
    const Quaternion inv = inverse(sum);
    for (auto& q : v) q = inv * q;
    return v;
}

SampledFunction refine(const FilterBank& fb, int eps, const SampledFunction& coarse) {
    const int eta = fb.eta;
    SampledFunction f(eta, coarse.level + 1);
    const int step = 1 << coarse.level;
    for (int p1 = 0; p1 < f.n; ++p1)
        for (int p2 = 0; p2 < f.n; ++p2) {
            Quaternion s;
            for (int k1 = 0; k1 < eta; ++k1) {
                const int q1 = p1 - k1 * step;
                if (q1 < 0 || q1 >= coarse.n) continue;
                for (int k2 = 0; k2 < eta; ++k2) {
                    const int q2 = p2 - k2 * step;
                    if (q2 < 0 || q2 >= coarse.n) continue;
                    s += coarse.at(q1, q2) * fb.coeff(eps, k1, k2);
                }
            }
            f.at(p1, p2) = 4.0 * s;
        }
    return f;
}

CascadeResult cascade(const FilterBank& fb, int level) {
    if (level < 1) throw std::invalid_argument("cascade level must be at least 1");
    SampledFunction phi(fb.eta, 0);
    phi.v = lattice_values(fb);
    for (int l = 1; l < level; ++l) phi = refine(fb, 0, phi);
    CascadeResult r;
    for (int e = 1; e < 4; ++e) r.psi[e - 1] = refine(fb, e, phi);
    r.phi = refine(fb, 0, phi);
    return r;
}

double partition_of_unity_residual(const SampledFunction& phi) {
    const int cell = 1 << phi.level;
    double r = 0;
    for (int p1 = 0; p1 < cell; ++p1)
        for (int p2 = 0; p2 < cell; ++p2) {
            Quaternion s;
            for (int q1 = p1; q1 < phi.n; q1 += cell)
                for (int q2 = p2; q2 < phi.n; q2 += cell) s += phi.at(q1, q2);
            r = std::max(r, abs(s - Quaternion::one()));
        }
    return r;
}

Quaternion integral(const SampledFunction& f) {
    Quaternion s;
    for (const auto& q : f.v) s += q;
    return s * (f.h * f.h);
}

double separability(const SampledFunction& f) {
    std::vector<Quaternion> g1(static_cast<size_t>(f.n)), g2(static_cast<size_t>(f.n));
    for (int p1 = 0; p1 < f.n; ++p1)
        for (int p2 = 0; p2 < f.n; ++p2) {
            g1[p1] += f.at(p1, p2) * f.h;
            g2[p2] += f.at(p1, p2) * f.h;
        }
    double z = 0;
    for (int p1 = 0; p1 < f.n; ++p1)
        for (int p2 = 0; p2 < f.n; ++p2) z += norm2(f.at(p1, p2) - g1[p1] * g2[p2]);
    return z * f.h * f.h;
}

}  // namespace qwave
