#pragma once

#include <array>
#include <vector>

#include "qwave/quaternion.hpp"

namespace qwave {

// Four quaternion filters a^eps_k, k in {0..eta-1}^2; eps = 0 is the scaling filter.
struct FilterBank {
    int eta = 0;
    std::array<std::vector<Quaternion>, 4> a;

    FilterBank() = default;
    explicit FilterBank(int eta_) : eta(eta_) {
        for (auto& f : a) f.assign(static_cast<size_t>(eta_ * eta_), Quaternion{});
    }

    Quaternion& coeff(int eps, int k1, int k2) { return a[eps][static_cast<size_t>(k1 * eta + k2)]; }
    const Quaternion& coeff(int eps, int k1, int k2) const { return a[eps][static_cast<size_t>(k1 * eta + k2)]; }

    // m_eps(xi) = sum_k e^{2 pi xi ^ k} a_k
    Quaternion eval(int eps, double xi1, double xi2) const;
};

// Two-dimensional Haar: eta = 2, a^0_k = 1/4, the other filters zero.
FilterBank haar_bank();

}  // namespace qwave
