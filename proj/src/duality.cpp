#include "pga/duality.hpp"

#include <vector>

#include "pga/algebra.hpp"

namespace pga {

namespace {

int parity(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

int reverse_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }

// Even-permutation rule for one blade. Returns sign 0 when the rule gives no
// even arrangement (only e0 in n = 1, where S'S = "10" is forced).
TableEntry permutation_rule(int n, Mask s) {
    Mask full = (1u << (n + 1)) - 1;
    Mask c = full & ~s;
    std::vector<int> comp, idx, perm;
    for (int i = 0; i <= n; ++i) {
        if (c & (1u << i)) comp.push_back(i);
        if (s & (1u << i)) idx.push_back(i);
    }
    perm = comp;
    perm.insert(perm.end(), idx.begin(), idx.end());
    // An odd arrangement is fixed by swapping two entries of S' or S, which costs a
    // sign; when both have fewer than two entries there is nothing to swap.
    int sign = parity(perm);
    if (sign < 0 && comp.size() < 2 && idx.size() < 2) return {0, c};
    return {sign * reverse_sign(int(comp.size())), c};
}

}  // namespace

DualityTable generate_duality_table(int n) {
    if (n < 1 || n > kMaxN) throw Error("dimension must be in 1..4");
    DualityTable t{};
    t.n = n;
    int size = 1 << (n + 1);
    for (int s = 0; s < size; ++s) {
        TableEntry e = permutation_rule(n, s);
        if (e.sign == 0) {
            // n = 1, e0: O(e0) = e0 reverse(e01) = -e0 e0 e1 = -e1 (elliptic), then Id.
            e = {-1, 0b10};
        }
        t.forward[s] = e;
        t.inverse[e.mask] = {e.sign, Mask(s)};
    }
    return t;
}

const DualityTable& duality_table(int n) {
    static const std::array<DualityTable, 4> tables = {generate_duality_table(1), generate_duality_table(2),
                                                       generate_duality_table(3), generate_duality_table(4)};
    if (n < 1 || n > kMaxN) throw Error("dimension must be in 1..4");
    return tables[n - 1];
}

Multivector dual_J(const Multivector& m) {
    if (m.side() != Side::Dual) throw Error("J expects a dual-side multivector");
    const auto& t = duality_table(m.n());
    Multivector r(m.n(), Side::Target);
    for (int i = 0; i < m.size(); ++i) r[t.forward[i].mask] += t.forward[i].sign * m[i];
    return r;
}

Multivector dual_J_inv(const Multivector& y) {
    if (y.side() != Side::Target) throw Error("J^-1 expects a target-side multivector");
    const auto& t = duality_table(y.n());
    Multivector r(y.n(), Side::Dual);
    for (int i = 0; i < y.size(); ++i) r[t.inverse[i].mask] += t.inverse[i].sign * y[i];
    return r;
}

namespace {

Multivector flip_side(const Multivector& m, Side to) {
    Multivector r(m.n(), to);
    for (int i = 0; i < m.size(); ++i) r[i] = m[i];
    return r;
}

}  // namespace

Multivector identity_Id(const Multivector& m) {
    if (m.side() != Side::Dual) throw Error("Id expects a dual-side multivector");
    return flip_side(m, Side::Target);
}

Multivector identity_Id_inv(const Multivector& y) {
    if (y.side() != Side::Target) throw Error("Id^-1 expects a target-side multivector");
    return flip_side(y, Side::Dual);
}

Multivector ortho_O(const Multivector& m) {
    Signature ell = Signature::named("elliptic", m.n());
    return geometric(m, reverse(Multivector::pseudoscalar(m.n())), ell);
}

Multivector ortho_O_inv(const Multivector& m) {
    Signature ell = Signature::named("elliptic", m.n());
    return geometric(m, Multivector::pseudoscalar(m.n()), ell);
}

Multivector join(const Multivector& a, const Multivector& b) {
    a.require_compatible(b);
    return dual_J_inv(outer(dual_J(a), dual_J(b)));
}

}  // namespace pga
