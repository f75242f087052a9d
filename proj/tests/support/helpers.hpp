#pragma once

#include <string>

#include "pga/algebra.hpp"
#include "pga/text.hpp"

namespace testsupport {

inline pga::Multivector mv(const std::string& text, int n, pga::Side side = pga::Side::Dual) {
    return pga::parse_multivector(text, n, side);
}

inline bool close(const pga::Multivector& a, const pga::Multivector& b, double tol = 1e-9) {
    return a.n() == b.n() && a.side() == b.side() && pga::max_abs_diff(a, b) <= tol;
}

}  // namespace testsupport
