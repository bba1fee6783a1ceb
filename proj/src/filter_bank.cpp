#include "qwave/filter_bank.hpp"

#include <numbers>

namespace qwave {

Quaternion FilterBank::eval(int eps, double xi1, double xi2) const {
    Quaternion s;
    for (int k1 = 0; k1 < eta; ++k1)
        for (int k2 = 0; k2 < eta; ++k2)
            s += phase(2 * std::numbers::pi * wedge_coeff(xi1, xi2, k1, k2)) * coeff(eps, k1, k2);
    return s;
}

FilterBank haar_bank() {
    FilterBank fb(2);
    for (auto& q : fb.a[0]) q = Quaternion(0.25);
    return fb;
}

}  // namespace qwave
