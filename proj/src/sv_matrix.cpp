#include "qwave/sv_matrix.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwave {

SVMatrix sv_multiply(const SVMatrix& a, const SVMatrix& b) {
    return {a.s1 * b.s1 + a.v1 * b.v2, a.s1 * b.v1 + a.v1 * b.s2,
            a.v2 * b.s1 + a.s2 * b.v2, a.v2 * b.v1 + a.s2 * b.s2};
}

SVMatrix sv_adjoint(const SVMatrix& a) { return {conj(a.s1), conj(a.v2), conj(a.v1), conj(a.s2)}; }

bool sv_is_valid(const SVMatrix& a, double tol) {
    auto sp = [tol](const Quaternion& q) { return std::abs(q.x1) <= tol && std::abs(q.x2) <= tol; };
    auto ve = [tol](const Quaternion& q) { return std::abs(q.x0) <= tol && std::abs(q.x12) <= tol; };
    return sp(a.s1) && sp(a.s2) && ve(a.v1) && ve(a.v2);
}

bool sv_is_self_adjoint(const SVMatrix& a, double tol) {
    return sv_is_valid(a, tol) && std::abs(a.s1.x12) <= tol && std::abs(a.s2.x12) <= tol &&
           abs(a.v2 + a.v1) <= tol;
}

SVMatrix sv_of_values(const Quaternion& fx, const Quaternion& fmx) {
    return {spinor_part(fx), vector_part(fx), vector_part(fmx), spinor_part(fmx)};
}

std::pair<cd, cd> sv_eigenvalues(const SVMatrix& a) {
    const Quaternion t = a.s1 + conj(a.s2);
    const Quaternion d = a.s1 - conj(a.s2);
    const Quaternion disc = d * d + 4.0 * (a.v1 * a.v2);
    const cd root = std::sqrt(spinor_code(disc));
    const cd tr = spinor_code(t);
    return {(tr + root) / 2.0, (tr - root) / 2.0};
}

bool sv_is_positive_definite(const SVMatrix& a, double tol) {
    if (!sv_is_self_adjoint(a)) return false;
    const auto [l1, l2] = sv_eigenvalues(a);
    return l1.real() > tol && l2.real() > tol;
}

SVBlockMatrix SVBlockMatrix::identity(int m) {
    SVBlockMatrix r(m);
    for (int i = 0; i < 2 * m; ++i) r.at(i, i) = Quaternion::one();
    return r;
}

SVMatrix SVBlockMatrix::block(int i, int j) const {
    return {at(2 * i, 2 * j), at(2 * i, 2 * j + 1), at(2 * i + 1, 2 * j), at(2 * i + 1, 2 * j + 1)};
}

void SVBlockMatrix::set_block(int i, int j, const SVMatrix& b) {
    at(2 * i, 2 * j) = b.s1;
    at(2 * i, 2 * j + 1) = b.v1;
    at(2 * i + 1, 2 * j) = b.v2;
    at(2 * i + 1, 2 * j + 1) = b.s2;
}

SVBlockMatrix& SVBlockMatrix::operator+=(const SVBlockMatrix& o) {
    for (size_t i = 0; i < q_.size(); ++i) q_[i] += o.q_[i];
    return *this;
}
SVBlockMatrix& SVBlockMatrix::operator-=(const SVBlockMatrix& o) {
    for (size_t i = 0; i < q_.size(); ++i) q_[i] -= o.q_[i];
    return *this;
}
SVBlockMatrix& SVBlockMatrix::operator*=(double s) {
    for (auto& q : q_) q *= s;
    return *this;
}

SVBlockMatrix operator+(SVBlockMatrix a, const SVBlockMatrix& b) { return a += b; }
SVBlockMatrix operator-(SVBlockMatrix a, const SVBlockMatrix& b) { return a -= b; }
SVBlockMatrix operator*(SVBlockMatrix a, double s) { return a *= s; }

SVBlockMatrix operator*(const SVBlockMatrix& a, const SVBlockMatrix& b) {
    if (a.blocks() != b.blocks()) throw std::invalid_argument("block size mismatch");
    const int n = a.dim();
    SVBlockMatrix r(a.blocks());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Quaternion acc;
            for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

SVBlockMatrix adjoint(const SVBlockMatrix& a) {
    SVBlockMatrix r(a.blocks());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = conj(a.at(j, i));
    return r;
}

double inner(const SVBlockMatrix& a, const SVBlockMatrix& b) {
    double s = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += dot(a.at(i, j), b.at(i, j));
    return s;
}

double frobenius_norm(const SVBlockMatrix& a) { return std::sqrt(inner(a, a)); }

bool is_valid_sv(const SVBlockMatrix& a, double tol) {
    for (int i = 0; i < a.blocks(); ++i)
        for (int j = 0; j < a.blocks(); ++j)
            if (!sv_is_valid(a.block(i, j), tol)) return false;
    return true;
}

Eigen::Matrix2cd codify(const SVMatrix& a) {
    Eigen::Matrix2cd c;
    c(0, 0) = spinor_code(a.s1);
    c(0, 1) = -std::conj(vector_code(a.v1));
    c(1, 0) = vector_code(a.v2);
    c(1, 1) = std::conj(spinor_code(a.s2));
    return c;
}

SVMatrix decodify_block(const Eigen::Matrix2cd& c) {
    return {spinor_from_code(c(0, 0)), vector_from_code(-std::conj(c(0, 1))), vector_from_code(c(1, 0)),
            spinor_from_code(std::conj(c(1, 1)))};
}

Eigen::MatrixXcd codify(const SVBlockMatrix& a) {
    const int m = a.blocks();
    Eigen::MatrixXcd c(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c.block<2, 2>(2 * i, 2 * j) = codify(a.block(i, j));
    return c;
}

SVBlockMatrix decodify(const Eigen::MatrixXcd& c) {
    if (c.rows() != c.cols() || c.rows() % 2) throw std::invalid_argument("code must be square of even size");
    const int m = static_cast<int>(c.rows() / 2);
    SVBlockMatrix a(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a.set_block(i, j, decodify_block(c.block<2, 2>(2 * i, 2 * j)));
    return a;
}

void polar_unitary(int n, const cd* a, cd* out) {
    thread_local std::vector<cd> buf;
    thread_local std::vector<double> sv, rwork;
    buf.resize(static_cast<size_t>(3 * n * n));
    sv.resize(static_cast<size_t>(n));
    rwork.resize(static_cast<size_t>(5 * n));
    cd* c = buf.data();
    cd* u = c + n * n;
    cd* vt = u + n * n;
    std::copy(a, a + n * n, c);
    cd wq;
    LAPACKE_zgesvd_work(LAPACK_COL_MAJOR, 'A', 'A', n, n, c, n, sv.data(), u, n, vt, n, &wq, -1, rwork.data());
    thread_local std::vector<cd> work;
    work.resize(static_cast<size_t>(std::max(1.0, wq.real())));
    const lapack_int info = LAPACKE_zgesvd_work(LAPACK_COL_MAJOR, 'A', 'A', n, n, c, n, sv.data(), u, n, vt, n,
                                                work.data(), static_cast<lapack_int>(work.size()), rwork.data());
    if (info != 0) throw std::runtime_error("zgesvd did not converge");
    Eigen::Map<Eigen::MatrixXcd>(out, n, n) =
        Eigen::Map<const Eigen::MatrixXcd>(u, n, n) * Eigen::Map<const Eigen::MatrixXcd>(vt, n, n);
}

Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& c) {
    if (c.rows() != c.cols()) throw std::invalid_argument("polar factor needs a square matrix");
    Eigen::MatrixXcd r(c.rows(), c.cols());
    polar_unitary(static_cast<int>(c.rows()), c.data(), r.data());
    return r;
}

SVBlockMatrix project_unitary(const SVBlockMatrix& a) { return decodify(polar_unitary(codify(a))); }

SVBlockMatrix project_corner_unitary(const SVBlockMatrix& a) {
    const int m = a.blocks();
    if (m < 2) throw std::invalid_argument("corner projection needs at least two blocks");
    const Eigen::MatrixXcd c = codify(a);
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
    r.topLeftCorner<2, 2>().setIdentity();
    r.bottomRightCorner(2 * m - 2, 2 * m - 2) = polar_unitary(c.bottomRightCorner(2 * m - 2, 2 * m - 2));
    return decodify(r);
}

double unitarity_residual(const SVBlockMatrix& a) {
    return frobenius_norm(adjoint(a) * a - SVBlockMatrix::identity(a.blocks()));
}

}  // namespace qwave
