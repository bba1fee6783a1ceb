#include "qwave/projectors.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

namespace qwave {

namespace {

double ipow(int base, int e) {
    double r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Eigen::MatrixXd null_projector(const Eigen::MatrixXd& r, const char* what) {
    const Eigen::MatrixXd g = r * r.transpose();
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(g).singularValues();
    const double cond = sv(0) / sv(sv.size() - 1);
    if (!(cond <= 1e12))
        throw ConfigError(std::string(what) + " moment system is singular for this (eta, mu)");
    const Eigen::Index n = r.cols();
    return Eigen::MatrixXd::Identity(n, n) - r.transpose() * g.ldlt().solve(r);
}

}  // namespace

std::string to_string(Constraint c) {
    switch (c) {
        case Constraint::UnitaryCorner: return "C1_0";
        case Constraint::UnitaryShift1: return "C1_1";
        case Constraint::UnitaryShift2: return "C1_2";
        case Constraint::UnitaryShift3: return "C1_3";
        case Constraint::VanishingMoments: return "C2";
        case Constraint::Symmetry: return "C3";
    }
    return "?";
}

std::vector<std::array<int, 2>> moment_indices(int mu) {
    std::vector<std::array<int, 2>> idx;
    for (int s = 1; s <= mu; ++s)
        for (int a1 = s; a1 >= 0; --a1) idx.push_back({a1, s - a1});
    return idx;
}

Projectors::Projectors(int eta, int mu) : eta_(eta), mu_(mu) {
    if (eta < 4 || eta % 2) throw ConfigError("eta must be even and at least 4");
    if (mu < 1) throw ConfigError("mu must be at least 1");
    const auto alphas = moment_indices(mu);
    const int na = static_cast<int>(alphas.size()), n = eta * eta;
    Eigen::MatrixXd r(na, n), s(3 * na, n);
    for (int k1 = 0; k1 < eta; ++k1)
        for (int k2 = 0; k2 < eta; ++k2) {
            const int col = k1 * eta + k2;
            const double sg[3] = {k2 % 2 ? -1.0 : 1.0, k1 % 2 ? -1.0 : 1.0, (k1 + k2) % 2 ? -1.0 : 1.0};
            for (int a = 0; a < na; ++a) {
                const double mono = ipow(k2, alphas[a][0]) * ipow(k1, alphas[a][1]);
                r(a, col) = mono;
                for (int t = 0; t < 3; ++t) s(t * na + a, col) = sg[t] * mono;
            }
        }
    r_null_ = null_projector(r, "wavelet");
    // rows of F chi_l F^{-1} and F chi_l^{-1} F^{-1} at the coarse grid points
    const int h = eta / 2;
    auto wedge_phase = [eta](double a1, double a2, double b1, double b2, double scale) {
        return std::polar(1.0, scale * std::numbers::pi * wedge_coeff(a1, a2, b1, b2) / eta);
    };
    for (int l = 1; l <= 3; ++l) {
        Eigen::MatrixXcd kf = Eigen::MatrixXcd::Zero(h * h, n), kb = Eigen::MatrixXcd::Zero(h * h, n);
        const double v1 = kCorners[l][0], v2 = kCorners[l][1];
        for (int f = 0; f < h * h; ++f)
            for (int i = 0; i < n; ++i)
                for (int k1 = 0; k1 < eta; ++k1)
                    for (int k2 = 0; k2 < eta; ++k2) {
                        const cd t = wedge_phase(f / h, f % h, k1, k2, 2) * wedge_phase(k1, k2, i / eta, i % eta, 2);
                        const cd m = wedge_phase(v1, v2, k1, k2, 1);
                        kf(f, i) += t * m;
                        kb(f, i) += t * std::conj(m);
                    }
        shift_fwd_[l - 1] = kf / static_cast<double>(n);
        shift_back_[l - 1] = kb / static_cast<double>(n);
    }
    s_null_ = null_projector(s, "scaling");
}

Ensemble Projectors::project(Constraint c, const Ensemble& u) const {
    switch (c) {
        case Constraint::UnitaryCorner: return unitary_corner(u);
        case Constraint::UnitaryShift1: return unitary_shift(u, 1);
        case Constraint::UnitaryShift2: return unitary_shift(u, 2);
        case Constraint::UnitaryShift3: return unitary_shift(u, 3);
        case Constraint::VanishingMoments: return vanishing_moments(u);
        case Constraint::Symmetry: return symmetry(u);
    }
    throw std::logic_error("unknown constraint");
}

double Projectors::distance(Constraint c, const Ensemble& u) const { return norm(project(c, u) - u); }

std::vector<Code8> Projectors::unitary_coarse(const std::vector<Code8>& w, int l) const {
    const int h = eta_ / 2;
    std::vector<Code8> out(w.size());
    std::vector<char> done(w.size(), 0);
    for (int j1 = 0; j1 < h; ++j1)
        for (int j2 = 0; j2 < h; ++j2) {
            // W_{-j-v_l} = tau W_j tau; write -j - v_l = f + h c with f on the coarse grid
            const int q1 = ((-j1 - kCorners[l][0]) % eta_ + eta_) % eta_;
            const int q2 = ((-j2 - kCorners[l][1]) % eta_ + eta_) % eta_;
            const int f = (q1 % h) * h + q2 % h, j = j1 * h + j2;
            const int c = (q1 / h) + 2 * (q2 / h);
            Code8& p = out[j];
            if (done[f] && f != j) {
                p = tau(sigma(out[f], c));
            } else if (l == 0 && j == 0) {
                p.setZero();
                p.topLeftCorner<2, 2>().setIdentity();
                p.bottomRightCorner<6, 6>() = polar_unitary<6>(w[0].bottomRightCorner<6, 6>());
            } else {
                p = polar_unitary<8>(w[j]);
            }
            done[j] = 1;
        }
    return out;
}

Ensemble Projectors::spread(const std::vector<Code8>& c) const {
    const int h = eta_ / 2;
    Ensemble out(eta_);
    for (int f1 = 0; f1 < h; ++f1)
        for (int f2 = 0; f2 < h; ++f2) {
            const Code8& p = c[f1 * h + f2];
            out(f1, f2) = p;
            for (int k = 1; k <= 3; ++k) out(f1 + h * kCorners[k][0], f2 + h * kCorners[k][1]) = sigma(p, k);
        }
    return out;
}

Ensemble Projectors::unitary_corner(const Ensemble& u) const {
    const int h = eta_ / 2;
    std::vector<Code8> w(static_cast<size_t>(h * h));
    for (int f = 0; f < h * h; ++f) w[f] = u(f / h, f % h);
    return symmetrize(spread(unitary_coarse(w, 0)));
}

Ensemble Projectors::unitary_shift(const Ensemble& u, int l) const {
    const int h = eta_ / 2;
    std::vector<Code8> w(static_cast<size_t>(h * h));
    Eigen::Map<Eigen::MatrixXcd>(w.front().data(), 64, h * h).noalias() = u.flat() * shift_fwd_[l - 1].transpose();
    const Ensemble p = spread(unitary_coarse(w, l));
    Eigen::Map<Eigen::MatrixXcd>(w.front().data(), 64, h * h).noalias() = p.flat() * shift_back_[l - 1].transpose();
    return symmetrize(spread(w));
}

Ensemble Projectors::vanishing_moments(const Ensemble& u) const {
    FilterBank fb = filters_from(u);
    const int n = eta_ * eta_;
    for (int eps = 0; eps < 4; ++eps) {
        const Eigen::MatrixXd& p = eps == 0 ? s_null_ : r_null_;
        for (int c = 0; c < 4; ++c) {
            Eigen::VectorXd x(n);
            for (int i = 0; i < n; ++i) x(i) = fb.a[eps][i][c];
            const Eigen::VectorXd y = p * x;
            for (int i = 0; i < n; ++i) fb.a[eps][i][c] = y(i);
        }
    }
    return from_coefficients(fb);
}

std::pair<Quaternion, Quaternion> project_symmetry_pair(const Quaternion& z1, const Quaternion& z2,
                                                       const Quaternion& w) {
    return {0.5 * (z1 + w * z2), 0.5 * (z2 + conj(w) * z1)};
}

Ensemble Projectors::symmetry(const Ensemble& u) const {
    auto m = samples_of(u);
    auto& m0 = m[0];
    const double p = 0.5 * (eta_ - 1);
    for (int j1 = 0; j1 < eta_; ++j1)
        for (int j2 = 0; j2 < eta_; ++j2) {
            const int a = u.index(j1, j2), b = u.index(-j1, -j2);
            if (a > b) continue;
            // m0(j) = e^{4 pi j^P / eta} m0(-j)
            const Quaternion w = phase(4 * std::numbers::pi * wedge_coeff(j1, j2, p, p) / eta_);
            std::tie(m0[a], m0[b]) = project_symmetry_pair(m0[a], m0[b], w);
        }
    return from_samples(eta_, m);
}

}  // namespace qwave
