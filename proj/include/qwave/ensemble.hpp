#pragma once

// Ensembles: eta x eta grids of 4x4 SV block matrices. Entries are kept in
// complex codification (8x8), where the phase action diag(e, conj(e)) on an
// SV block becomes multiplication by the complex number of e.

#include <Eigen/Dense>
#include <array>
#include <random>
#include <vector>

#include "qwave/filter_bank.hpp"
#include "qwave/sv_matrix.hpp"

namespace qwave {

using Code8 = Eigen::Matrix<cd, 8, 8>;

class Ensemble {
public:
    Ensemble() = default;
    explicit Ensemble(int eta) : eta_(eta), e_(static_cast<size_t>(eta * eta), Code8::Zero()) {}

    int eta() const { return eta_; }
    size_t size() const { return e_.size(); }

    int index(int j1, int j2) const { return wrap(j1) * eta_ + wrap(j2); }
    Code8& operator()(int j1, int j2) { return e_[static_cast<size_t>(index(j1, j2))]; }
    const Code8& operator()(int j1, int j2) const { return e_[static_cast<size_t>(index(j1, j2))]; }
    Code8& operator[](size_t n) { return e_[n]; }
    const Code8& operator[](size_t n) const { return e_[n]; }

    // entries as the columns of a 64 x eta^2 matrix
    Eigen::Map<Eigen::MatrixXcd> flat() { return {e_.front().data(), 64, static_cast<Eigen::Index>(e_.size())}; }
    Eigen::Map<const Eigen::MatrixXcd> flat() const {
        return {e_.front().data(), 64, static_cast<Eigen::Index>(e_.size())};
    }

    SVBlockMatrix entry(int j1, int j2) const;
    void set_entry(int j1, int j2, const SVBlockMatrix& m);

    Ensemble& operator+=(const Ensemble& o);
    Ensemble& operator-=(const Ensemble& o);
    Ensemble& operator*=(double s);

private:
    int wrap(int j) const { return ((j % eta_) + eta_) % eta_; }
    int eta_ = 0;
    std::vector<Code8> e_;
};

Ensemble operator+(Ensemble a, const Ensemble& b);
Ensemble operator-(Ensemble a, const Ensemble& b);
Ensemble operator*(Ensemble a, double s);
Ensemble operator*(double s, Ensemble a);

// real inner product, summed over all quaternion components
double inner(const Ensemble& a, const Ensemble& b);
double norm(const Ensemble& a);

// (F B)_j = sum_k [e^{2 pi j^k / eta}] (*) B_k
Ensemble dft(const Ensemble& b);
Ensemble idft(const Ensemble& c);
// (chi_l B)_k = [e^{pi v_l ^ k / eta}] (*) B_k; inverse applies the conjugate phase
Ensemble modulate(const Ensemble& b, int l, bool inverse = false);
// samples of U at (j + v_l / 2) / eta
Ensemble dense_samples(const Ensemble& u, int l);

// v_0 = (0,0), v_1 = (1,0), v_2 = (0,1), v_3 = (1,1)
constexpr std::array<std::array<int, 2>, 4> kCorners{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

// sigma_k permutes block rows: k = 1 swaps 0<->1, 2<->3; k = 2 swaps 0<->2, 1<->3; k = 3 both
Code8 sigma(const Code8& u, int k);
// tau U tau with tau = diag(tau0, ..., tau0), tau0 = [[0,1],[1,0]]
Code8 tau(const Code8& u);

// orthogonal projection onto the consistent ensembles
Ensemble symmetrize(const Ensemble& b);
double consistency_residual(const Ensemble& u);

// uniform [-1, 1] in each component of every SV slot
Ensemble random_raw_ensemble(int eta, std::mt19937_64& rng);

// sample table m[eps][j] = m_eps(j / eta) read from top rows
std::array<std::vector<Quaternion>, 4> samples_of(const Ensemble& u);
Ensemble from_samples(int eta, const std::array<std::vector<Quaternion>, 4>& m);

// U_j evaluated directly from the trigonometric polynomials
Ensemble synthesize(const FilterBank& fb);
// F applied to the coefficient ensemble A_k
Ensemble from_coefficients(const FilterBank& fb);
FilterBank filters_from(const Ensemble& u);

}  // namespace qwave
