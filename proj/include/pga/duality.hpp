#pragma once

#include <array>

#include "pga/multivector.hpp"

namespace pga {

struct TableEntry {
    int sign;
    Mask mask;
    bool operator==(const TableEntry& o) const { return sign == o.sign && mask == o.mask; }
};

struct DualityTable {
    int n;
    std::array<TableEntry, kMaxSize> forward;  // e_S -> sign * E_mask
    std::array<TableEntry, kMaxSize> inverse;  // E_S -> sign * e_mask
};

/// J_n(e_S) = E_{rev(S')} with S'S an even permutation of 0..n.
/// For n = 1 the rule leaves e0 undetermined; that entry comes from the orthogonality transform.
DualityTable generate_duality_table(int n);
const DualityTable& duality_table(int n);

Multivector dual_J(const Multivector& m);
Multivector dual_J_inv(const Multivector& y);
Multivector identity_Id(const Multivector& m);
Multivector identity_Id_inv(const Multivector& y);
/// O(M) = M reverse(I) under the elliptic metric; O^-1(M) = M I.
Multivector ortho_O(const Multivector& m);
Multivector ortho_O_inv(const Multivector& m);

/// A v B = J^-1(J(A) ^ J(B)).
Multivector join(const Multivector& a, const Multivector& b);

}  // namespace pga
