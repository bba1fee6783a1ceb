#include "qwave/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwave {

namespace {

int wrap(int j, int eta) { return ((j % eta) + eta) % eta; }

std::vector<cd> twiddles(int eta) {
    std::vector<cd> w(static_cast<size_t>(eta));
    for (int p = 0; p < eta; ++p) w[p] = std::polar(1.0, 2 * std::numbers::pi * p / eta);
    return w;
}

// sum_k e^{2 pi j^k / eta} B_k as two one-dimensional passes. The kernel is
// antisymmetric in (j, k), so this map is its own inverse up to eta^2.
Ensemble transform(const Ensemble& b) {
    const int eta = b.eta();
    const auto w = twiddles(eta);
    Eigen::MatrixXcd w1(eta, eta), w2(eta, eta);
    for (int k = 0; k < eta; ++k)
        for (int j = 0; j < eta; ++j) {
            w1(k, j) = w[wrap(j * k, eta)];
            w2(k, j) = w[wrap(-j * k, eta)];
        }
    // t(:, k1 * eta + j1) = sum_k2 e^{2 pi j1 k2 / eta} b(:, k1 * eta + k2)
    Eigen::MatrixXcd t(64, eta * eta);
    const auto bf = b.flat();
    for (int k1 = 0; k1 < eta; ++k1) t.middleCols(k1 * eta, eta).noalias() = bf.middleCols(k1 * eta, eta) * w1;
    Ensemble c(eta);
    auto cf = c.flat();
    using Strided = Eigen::Map<const Eigen::MatrixXcd, 0, Eigen::OuterStride<>>;
    for (int j1 = 0; j1 < eta; ++j1)
        cf.middleCols(j1 * eta, eta).noalias() =
            Strided(t.data() + 64 * j1, 64, eta, Eigen::OuterStride<>(64 * eta)) * w2;
    return c;
}

Eigen::Matrix2cd tau_block(const Eigen::Matrix2cd& m) {
    Eigen::Matrix2cd r;
    r << std::conj(m(1, 1)), -std::conj(m(1, 0)), -std::conj(m(0, 1)), std::conj(m(0, 0));
    return r;
}

}  // namespace

SVBlockMatrix Ensemble::entry(int j1, int j2) const { return decodify((*this)(j1, j2)); }

void Ensemble::set_entry(int j1, int j2, const SVBlockMatrix& m) {
    if (m.blocks() != 4) throw std::invalid_argument("ensemble entries are 4x4 block matrices");
    (*this)(j1, j2) = codify(m);
}

Ensemble& Ensemble::operator+=(const Ensemble& o) {
    for (size_t n = 0; n < e_.size(); ++n) e_[n] += o.e_[n];
    return *this;
}
Ensemble& Ensemble::operator-=(const Ensemble& o) {
    for (size_t n = 0; n < e_.size(); ++n) e_[n] -= o.e_[n];
    return *this;
}
Ensemble& Ensemble::operator*=(double s) {
    for (auto& m : e_) m *= s;
    return *this;
}

Ensemble operator+(Ensemble a, const Ensemble& b) { return a += b; }
Ensemble operator-(Ensemble a, const Ensemble& b) { return a -= b; }
Ensemble operator*(Ensemble a, double s) { return a *= s; }
Ensemble operator*(double s, Ensemble a) { return a *= s; }

double inner(const Ensemble& a, const Ensemble& b) {
    double s = 0;
    for (size_t n = 0; n < a.size(); ++n) s += (a[n].array().conjugate() * b[n].array()).real().sum();
    return s;
}

double norm(const Ensemble& a) {
    double s = 0;
    for (size_t n = 0; n < a.size(); ++n) s += a[n].squaredNorm();
    return std::sqrt(s);
}

Ensemble dft(const Ensemble& b) { return transform(b); }

Ensemble idft(const Ensemble& c) {
    Ensemble b = transform(c);
    b *= 1.0 / (c.eta() * c.eta());
    return b;
}

Ensemble modulate(const Ensemble& b, int l, bool inverse) {
    const int eta = b.eta();
    const auto& v = kCorners.at(static_cast<size_t>(l));
    Ensemble r(eta);
    for (int k1 = 0; k1 < eta; ++k1)
        for (int k2 = 0; k2 < eta; ++k2) {
            const double ang = std::numbers::pi * (v[0] * k2 - v[1] * k1) / eta;
            r(k1, k2) = std::polar(1.0, inverse ? -ang : ang) * b(k1, k2);
        }
    return r;
}

Ensemble dense_samples(const Ensemble& u, int l) { return dft(modulate(idft(u), l)); }

Code8 sigma(const Code8& u, int k) {
    static constexpr int perm[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    Code8 r;
    for (int i = 0; i < 4; ++i) r.middleRows<2>(2 * i) = u.middleRows<2>(2 * perm[k][i]);
    return r;
}

Code8 tau(const Code8& u) {
    Code8 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.block<2, 2>(2 * i, 2 * j) = tau_block(u.block<2, 2>(2 * i, 2 * j));
    return r;
}

// The three averaging steps (sigma_1, sigma_2, tau) collapse into one group average,
// evaluated on the coarse grid and spread by sigma.
Ensemble symmetrize(const Ensemble& b) {
    const int eta = b.eta(), h = eta / 2;
    Ensemble v(eta);
    for (int j1 = 0; j1 < h; ++j1)
        for (int j2 = 0; j2 < h; ++j2) {
            Code8 s = b(j1, j2), t = b(-j1, -j2);
            for (int k = 1; k <= 3; ++k) {
                s += sigma(b(j1 + h * kCorners[k][0], j2 + h * kCorners[k][1]), k);
                t += sigma(b(-j1 + h * kCorners[k][0], -j2 + h * kCorners[k][1]), k);
            }
            const Code8 r = 0.125 * (s + tau(t));
            v(j1, j2) = r;
            for (int k = 1; k <= 3; ++k) v(j1 + h * kCorners[k][0], j2 + h * kCorners[k][1]) = sigma(r, k);
        }
    return v;
}

double consistency_residual(const Ensemble& u) {
    const int eta = u.eta(), h = eta / 2;
    double r = 0;
    for (int j1 = 0; j1 < eta; ++j1)
        for (int j2 = 0; j2 < eta; ++j2) {
            for (int k = 1; k <= 3; ++k) {
                const auto& c = kCorners[k];
                r = std::max(r, (u(j1 + h * c[0], j2 + h * c[1]) - sigma(u(j1, j2), k)).norm());
            }
            r = std::max(r, (u(-j1, -j2) - tau(u(j1, j2))).norm());
        }
    return r;
}

Ensemble random_raw_ensemble(int eta, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Ensemble r(eta);
    for (int j1 = 0; j1 < eta; ++j1)
        for (int j2 = 0; j2 < eta; ++j2) {
            SVBlockMatrix m(4);
            for (int a = 0; a < 8; ++a)
                for (int b = 0; b < 8; ++b) {
                    Quaternion& q = m.at(a, b);
                    if ((a + b) % 2 == 0) {
                        q.x0 = d(rng);
                        q.x12 = d(rng);
                    } else {
                        q.x1 = d(rng);
                        q.x2 = d(rng);
                    }
                }
            r.set_entry(j1, j2, m);
        }
    return r;
}

std::array<std::vector<Quaternion>, 4> samples_of(const Ensemble& u) {
    std::array<std::vector<Quaternion>, 4> m;
    for (int eps = 0; eps < 4; ++eps) {
        m[eps].resize(u.size());
        for (size_t n = 0; n < u.size(); ++n)
            m[eps][n] = spinor_from_code(u[n](0, 2 * eps)) + vector_from_code(-std::conj(u[n](0, 2 * eps + 1)));
    }
    return m;
}

Ensemble from_samples(int eta, const std::array<std::vector<Quaternion>, 4>& m) {
    const int h = eta / 2;
    Ensemble u(eta);
    for (int j1 = 0; j1 < eta; ++j1)
        for (int j2 = 0; j2 < eta; ++j2) {
            Code8& c = u(j1, j2);
            for (int i = 0; i < 4; ++i) {
                const int p = u.index(j1 + h * kCorners[i][0], j2 + h * kCorners[i][1]);
                const int pm = u.index(-(j1 + h * kCorners[i][0]), -(j2 + h * kCorners[i][1]));
                for (int eps = 0; eps < 4; ++eps)
                    c.block<2, 2>(2 * i, 2 * eps) = codify(sv_of_values(m[eps][p], m[eps][pm]));
            }
        }
    return u;
}

Ensemble synthesize(const FilterBank& fb) {
    const int eta = fb.eta;
    Ensemble u(eta);
    for (int j1 = 0; j1 < eta; ++j1)
        for (int j2 = 0; j2 < eta; ++j2) {
            SVBlockMatrix m(4);
            for (int i = 0; i < 4; ++i) {
                const double x1 = static_cast<double>(j1) / eta + 0.5 * kCorners[i][0];
                const double x2 = static_cast<double>(j2) / eta + 0.5 * kCorners[i][1];
                for (int eps = 0; eps < 4; ++eps)
                    m.set_block(i, eps, sv_of_values(fb.eval(eps, x1, x2), fb.eval(eps, -x1, -x2)));
            }
            u.set_entry(j1, j2, m);
        }
    return u;
}

Ensemble from_coefficients(const FilterBank& fb) {
    const int eta = fb.eta;
    Ensemble a(eta);
    for (int k1 = 0; k1 < eta; ++k1)
        for (int k2 = 0; k2 < eta; ++k2) {
            const double sgn[4] = {1.0, k2 % 2 ? -1.0 : 1.0, k1 % 2 ? -1.0 : 1.0, (k1 + k2) % 2 ? -1.0 : 1.0};
            Code8& c = a(k1, k2);
            for (int eps = 0; eps < 4; ++eps) {
                const Eigen::Matrix2cd blk = codify(sv_const(fb.coeff(eps, k1, k2)));
                for (int i = 0; i < 4; ++i) c.block<2, 2>(2 * i, 2 * eps) = sgn[i] * blk;
            }
        }
    return dft(a);
}

FilterBank filters_from(const Ensemble& u) {
    const Ensemble a = idft(u);
    const auto m = samples_of(a);
    FilterBank fb(u.eta());
    fb.a = m;
    return fb;
}

}  // namespace qwave
