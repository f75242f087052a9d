#pragma once

#include <initializer_list>
#include <vector>

#include "pga/multivector.hpp"

namespace pga {

struct BladeProduct {
    int sign;     // -1, 0 or +1
    Mask result;  // S xor T
};

/// Sign of reordering e_S e_T into ascending order (metric not applied).
int reorder_sign(Mask s, Mask t);
BladeProduct blade_product(Mask s, Mask t, const Signature& sig);

/// Clifford product; dual side only.
Multivector geometric(const Multivector& a, const Multivector& b, const Signature& sig);
/// Metric-free outer product, valid on either side (on the target side this is the join of R^(n+1)).
Multivector outer(const Multivector& a, const Multivector& b);
/// Per homogeneous pair, the grade |k-l| part of the product.
Multivector inner(const Multivector& a, const Multivector& b, const Signature& sig);
/// (AB - BA) / 2
Multivector commutator(const Multivector& a, const Multivector& b, const Signature& sig);

/// Negate every grade listed in g.
Multivector grade_sign(const Multivector& m, const std::vector<int>& g);
Multivector reverse(const Multivector& m);
Multivector involute(const Multivector& m);
Multivector grade_select(const Multivector& m, int k);

/// Norm following the dimension-specific formula; throws when the inner
/// expression is not a scalar (Study number for n = 4).
double norm(const Multivector& m, const Signature& sig);
Multivector inverse(const Multivector& m, const Signature& sig);

Multivector exp(const Multivector& m, const Signature& sig);
Multivector sin(const Multivector& m, const Signature& sig);
Multivector cos(const Multivector& m, const Signature& sig);

/// Relative tolerance for "is this numerically a scalar" style checks.
constexpr double kShapeTol = 1e-9;
/// Closed forms in exp/sin/cos kick in when the square is scalar to this tolerance.
constexpr double kClosedFormTol = 1e-12;

}  // namespace pga
