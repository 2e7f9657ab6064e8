#include "toruscount/angle.hpp"

#include <ostream>

namespace toruscount {

std::ostream& operator<<(std::ostream& os, const Angle& a) {
    return os << a.to_string();
}

Integer tuple_order(const std::vector<Angle>& angles) {
    Integer n = 1;
    for (const Angle& a : angles) n = lcm(n, a.order());
    return n;
}

}  // namespace toruscount
