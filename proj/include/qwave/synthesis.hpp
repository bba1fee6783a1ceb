#pragma once

// Filter checks, cascade refinement of the scaling function and wavelets,
// orthonormality and separability measures.

#include <array>
#include <stdexcept>
#include <vector>

#include "qwave/filter_bank.hpp"
#include "qwave/sv_matrix.hpp"

namespace qwave {

struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// [m_eps(xi)]
SVMatrix filter_matrix(const FilterBank& fb, int eps, double xi1, double xi2);

// || sum_j [m_eps(xi + v_j/2)]^* [m_zeta(xi + v_j/2)] - delta I ||
double qqmf_pair_residual(const FilterBank& fb, int eps, int zeta, double xi1, double xi2);
double qqmf_residual(const FilterBank& fb, double xi1, double xi2);
// max over an n x n grid of [0, 1)^2
double qqmf_residual_grid(const FilterBank& fb, int n = 16);

// max of |m0(0) - 1|, |m0(v_j/2)|, |m_eps(0)|
double completeness_residual(const FilterBank& fb);

// |sum_k t(k) k2^{alpha1} k1^{alpha2} a^eps_k| with t the sign twist of corner `twist`
// ((-1)^{k2}, (-1)^{k1}, (-1)^{k1+k2} for twist 1, 2, 3; no twist for 0)
double moment_term(const FilterBank& fb, int eps, std::array<int, 2> alpha, int twist);
// max over 0 <= |alpha| <= mu of the wavelet moments and the twisted scaling moments
double vanishing_moment_residual(const FilterBank& fb, int mu);

// max_k |a^0_k - a^0_{2P-k}|
double symmetry_residual(const FilterBank& fb);

struct LambdaGrid {
    int n = 0;
    std::vector<double> xi1, xi2, lambda;  // row-major, xi1 slow
    double min = 0;
};

// smallest eigenvalue of [m0]^*[m0] over an n x n grid of [-1/4, 1/4]^2
LambdaGrid orthonormality_check(const FilterBank& fb, int n = 101);

// values on the dyadic grid p / 2^level, p in {0..(eta-1) 2^level}^2
struct SampledFunction {
    int level = 0;
    int n = 0;  // points per axis
    double h = 1;
    std::vector<Quaternion> v;

    SampledFunction() = default;
    SampledFunction(int eta, int level_);

    Quaternion& at(int p1, int p2) { return v[static_cast<size_t>(p1 * n + p2)]; }
    const Quaternion& at(int p1, int p2) const { return v[static_cast<size_t>(p1 * n + p2)]; }
    bool inside(int p1, int p2) const { return p1 >= 0 && p2 >= 0 && p1 < n && p2 < n; }
};

// phi at the integer points: v_m = sum_n v_n 4 a^0_{2m-n}, normalized so sum v = 1
std::vector<Quaternion> lattice_values(const FilterBank& fb, double tol = 1e-8);

// phi(x) = 4 sum_k phi(2x - k) a_k applied to a function sampled one level coarser
SampledFunction refine(const FilterBank& fb, int eps, const SampledFunction& coarse);

struct CascadeResult {
    SampledFunction phi;
    std::array<SampledFunction, 3> psi;
};

CascadeResult cascade(const FilterBank& fb, int level);

// max over the unit cell of |sum_k phi(x - k) - 1|
double partition_of_unity_residual(const SampledFunction& phi);
Quaternion integral(const SampledFunction& f);
// Riemann sum of |f - (int f(x1, s) ds)(int f(t, x2) dt)|^2
double separability(const SampledFunction& f);

}  // namespace qwave
