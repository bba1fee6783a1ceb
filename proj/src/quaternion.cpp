#include "qwave/quaternion.hpp"

#include <ostream>

namespace qwave {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.x0 << ", " << q.x1 << " e1, " << q.x2 << " e2, " << q.x12 << " e12)";
}

}  // namespace qwave
