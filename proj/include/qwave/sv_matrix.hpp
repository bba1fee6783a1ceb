#pragma once

// Block matrices whose 2x2 blocks have spinor diagonals and vector off-diagonals,
// together with their complex codification.

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "qwave/quaternion.hpp"

namespace qwave {

using cd = std::complex<double>;

// [[s1, v1], [v2, s2]]
struct SVMatrix {
    Quaternion s1, v1, v2, s2;
};

SVMatrix sv_multiply(const SVMatrix& a, const SVMatrix& b);
SVMatrix sv_adjoint(const SVMatrix& a);
bool sv_is_valid(const SVMatrix& a, double tol = 0);
bool sv_is_self_adjoint(const SVMatrix& a, double tol = 1e-14);
// [f(x)] from the values f(x) and f(-x)
SVMatrix sv_of_values(const Quaternion& f_x, const Quaternion& f_minus_x);
// [a] for a constant quaternion a
inline SVMatrix sv_const(const Quaternion& a) { return sv_of_values(a, a); }

// (s1 + conj(s2) +- sqrt((s1 - conj(s2))^2 + 4 v1 v2)) / 2, principal root
std::pair<cd, cd> sv_eigenvalues(const SVMatrix& a);
// self-adjoint with both eigenvalues above tol
bool sv_is_positive_definite(const SVMatrix& a, double tol = 0);

// m x m array of SV blocks, stored as a 2m x 2m quaternion matrix
class SVBlockMatrix {
public:
    SVBlockMatrix() = default;
    explicit SVBlockMatrix(int m) : m_(m), q_(static_cast<size_t>(4 * m * m)) {}

    static SVBlockMatrix identity(int m);

    int blocks() const { return m_; }
    int dim() const { return 2 * m_; }

    Quaternion& at(int r, int c) { return q_[static_cast<size_t>(r * 2 * m_ + c)]; }
    const Quaternion& at(int r, int c) const { return q_[static_cast<size_t>(r * 2 * m_ + c)]; }

    SVMatrix block(int i, int j) const;
    void set_block(int i, int j, const SVMatrix& b);

    SVBlockMatrix& operator+=(const SVBlockMatrix& o);
    SVBlockMatrix& operator-=(const SVBlockMatrix& o);
    SVBlockMatrix& operator*=(double s);

private:
    int m_ = 0;
    std::vector<Quaternion> q_;
};

SVBlockMatrix operator+(SVBlockMatrix a, const SVBlockMatrix& b);
SVBlockMatrix operator-(SVBlockMatrix a, const SVBlockMatrix& b);
SVBlockMatrix operator*(SVBlockMatrix a, double s);
SVBlockMatrix operator*(const SVBlockMatrix& a, const SVBlockMatrix& b);

SVBlockMatrix adjoint(const SVBlockMatrix& a);
double frobenius_norm(const SVBlockMatrix& a);
double inner(const SVBlockMatrix& a, const SVBlockMatrix& b);
bool is_valid_sv(const SVBlockMatrix& a, double tol = 0);

// Per block: [[s1, v1], [v2, s2]] -> [[s1, -conj(c1)], [c2, conj(s2)]] with v = e1 c.
Eigen::MatrixXcd codify(const SVBlockMatrix& a);
SVBlockMatrix decodify(const Eigen::MatrixXcd& c);

// code of a single SV block and back
Eigen::Matrix2cd codify(const SVMatrix& a);
SVMatrix decodify_block(const Eigen::Matrix2cd& c);

// nearest unitary U V^* from the SVD of a column-major n x n complex array
void polar_unitary(int n, const cd* a, cd* out);

Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& c);

template <int N>
Eigen::Matrix<cd, N, N> polar_unitary(const Eigen::Matrix<cd, N, N>& c) {
    Eigen::Matrix<cd, N, N> r;
    polar_unitary(N, c.data(), r.data());
    return r;
}

SVBlockMatrix project_unitary(const SVBlockMatrix& a);
// nearest element of [1] (+) U^{(m-1)x(m-1)}
SVBlockMatrix project_corner_unitary(const SVBlockMatrix& a);

double unitarity_residual(const SVBlockMatrix& a);

}  // namespace qwave
