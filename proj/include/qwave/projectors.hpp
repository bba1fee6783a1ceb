#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwave/ensemble.hpp"

namespace qwave {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Constraint {
    UnitaryCorner,  // samples on the coarse grid, corner form at 0
    UnitaryShift1,
    UnitaryShift2,
    UnitaryShift3,
    VanishingMoments,
    Symmetry,
};

std::string to_string(Constraint c);

// multi-indices alpha with 1 <= |alpha| <= mu
std::vector<std::array<int, 2>> moment_indices(int mu);

// Projectors onto the constraint sets within the consistent ensembles.
class Projectors {
public:
    Projectors(int eta, int mu);

    int eta() const { return eta_; }
    int mu() const { return mu_; }

    Ensemble project(Constraint c, const Ensemble& u) const;
    // distance ||P_C(u) - u||
    double distance(Constraint c, const Ensemble& u) const;

    Ensemble unitary_corner(const Ensemble& u) const;
    Ensemble unitary_shift(const Ensemble& u, int l) const;
    Ensemble vanishing_moments(const Ensemble& u) const;
    Ensemble symmetry(const Ensemble& u) const;

    // null-space projectors acting on coefficient vectors indexed by k1 * eta + k2
    const Eigen::MatrixXd& wavelet_null_projector() const { return r_null_; }
    const Eigen::MatrixXd& scaling_null_projector() const { return s_null_; }

private:
    // nearest unitaries of samples shifted by v_l / 2, given and returned on the coarse
    // grid only (index f1 * eta/2 + f2); corner form at 0 when l == 0
    std::vector<Code8> unitary_coarse(const std::vector<Code8>& w, int l) const;
    // full grid from coarse entries via sigma
    Ensemble spread(const std::vector<Code8>& c) const;

    int eta_, mu_;
    Eigen::MatrixXd r_null_, s_null_;
    std::array<Eigen::MatrixXcd, 3> shift_fwd_, shift_back_;
};

// nearest pair with p1 = w p2 for a unit spinor w
std::pair<Quaternion, Quaternion> project_symmetry_pair(const Quaternion& z1, const Quaternion& z2,
                                                       const Quaternion& w);

// 2 P - 1 along both axes, P = ((eta-1)/2, (eta-1)/2)
inline std::array<int, 2> mirror_index(int eta, int k1, int k2) { return {eta - 1 - k1, eta - 1 - k2}; }

}  // namespace qwave
