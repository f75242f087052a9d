#include "pga/algebra.hpp"

#include <cmath>
#include <cstdlib>

namespace pga {

namespace {

void require_dual(const Multivector& m) {
    if (m.side() != Side::Dual) throw Error("metric undefined on target algebra");
}

// Closed-form coefficient helpers, stable near theta = 0.
double sinc(double t) { return std::abs(t) < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t; }
double sinhc(double t) { return std::abs(t) < 1e-8 ? 1.0 + t * t / 6.0 : std::sinh(t) / t; }

// Square of m if it is numerically a scalar, else nullopt-ish via flag.
bool scalar_square(const Multivector& m, const Signature& sig, double& s) {
    Multivector sq = geometric(m, m, sig);
    double ref = std::max(m.sum_abs() * m.sum_abs(), 1e-300);
    s = sq[0];
    sq[0] = 0.0;
    return sq.max_abs() <= kClosedFormTol * ref;
}

int halvings(const Multivector& m) {
    int k = 0;
    double a = m.sum_abs();
    while (a > 0.5 && k < 1000) a *= 0.5, ++k;
    return k;
}

// Taylor series of exp (which = 0), sin (1) or cos (2) for a small argument.
Multivector taylor(const Multivector& x, const Signature& sig, int which) {
    const int n = x.n();
    Multivector sum(n), term = Multivector::scalar(n, 1.0);
    Multivector xx = which == 0 ? x : geometric(x, x, sig);
    if (which == 1) term = x;
    sum = term;
    bool converged = false;
    for (int i = 1; i <= 64; ++i) {
        if (which == 0) {
            term = geometric(term, xx, sig) / double(i);
        } else {
            int a = which == 1 ? 2 * i : 2 * i - 1;  // denominators (2i)(2i+1) or (2i-1)(2i)
            term = geometric(term, xx, sig) * (-1.0 / (double(a) * double(a + 1)));
        }
        sum += term;
        if (term.max_abs() <= 1e-17 * std::max(sum.max_abs(), 1e-300)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw Error("series did not converge within 64 terms");
    return sum;
}

}  // namespace

int reorder_sign(Mask s, Mask t) {
    s >>= 1;
    int swaps = 0;
    while (s) {
        swaps += grade_of(s & t);
        s >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

BladeProduct blade_product(Mask s, Mask t, const Signature& sig) {
    int sign = reorder_sign(s, t);
    Mask common = s & t;
    for (int i = 0; common; ++i, common >>= 1)
        if (common & 1u) sign *= sig.diag[i];
    return {sign, s ^ t};
}

Multivector geometric(const Multivector& a, const Multivector& b, const Signature& sig) {
    a.require_compatible(b);
    require_dual(a);
    if (sig.n != a.n()) throw Error("signature dimension mismatch");
    Multivector r(a.n());
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j < b.size(); ++j) {
            if (b[j] == 0.0) continue;
            auto p = blade_product(i, j, sig);
            if (p.sign) r[p.result] += p.sign * a[i] * b[j];
        }
    }
    return r;
}

Multivector outer(const Multivector& a, const Multivector& b) {
    a.require_compatible(b);
    Multivector r(a.n(), a.side());
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j < b.size(); ++j) {
            if (b[j] == 0.0 || (i & j)) continue;
            r[i | j] += reorder_sign(i, j) * a[i] * b[j];
        }
    }
    return r;
}

Multivector inner(const Multivector& a, const Multivector& b, const Signature& sig) {
    a.require_compatible(b);
    require_dual(a);
    Multivector r(a.n());
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j < b.size(); ++j) {
            if (b[j] == 0.0) continue;
            auto p = blade_product(i, j, sig);
            if (p.sign && grade_of(p.result) == std::abs(grade_of(i) - grade_of(j)))
                r[p.result] += p.sign * a[i] * b[j];
        }
    }
    return r;
}

Multivector commutator(const Multivector& a, const Multivector& b, const Signature& sig) {
    return (geometric(a, b, sig) - geometric(b, a, sig)) * 0.5;
}

Multivector grade_sign(const Multivector& m, const std::vector<int>& g) {
    unsigned flip = 0;
    for (int k : g) {
        if (k < 0 || k > m.n() + 1) throw Error("invalid grade " + std::to_string(k));
        flip |= 1u << k;
    }
    Multivector r = m;
    for (int i = 0; i < m.size(); ++i)
        if (flip & (1u << grade_of(i))) r[i] = -r[i];
    return r;
}

Multivector reverse(const Multivector& m) {
    Multivector r = m;
    for (int i = 0; i < m.size(); ++i) {
        int k = grade_of(i);
        if ((k * (k - 1) / 2) & 1) r[i] = -r[i];
    }
    return r;
}

Multivector involute(const Multivector& m) {
    Multivector r = m;
    for (int i = 0; i < m.size(); ++i)
        if (grade_of(i) & 1) r[i] = -r[i];
    return r;
}

Multivector grade_select(const Multivector& m, int k) {
    Multivector r(m.n(), m.side());
    for (int i = 0; i < m.size(); ++i)
        if (grade_of(i) == k) r[i] = m[i];
    return r;
}

namespace {

struct NormParts {
    Multivector x;   // M reverse(M)
    Multivector xg;  // (M reverse(M))_G
    double value;    // scalar y (n<=3) or N Nbar (n=4)
    double alpha = 0, beta = 0, i2 = 0;
    double ref = 0;
};

NormParts norm_parts(const Multivector& m, const Signature& sig) {
    require_dual(m);
    const int n = m.n();
    std::vector<int> g = n <= 2 ? std::vector<int>{1} : std::vector<int>{1, 4};
    NormParts p{geometric(m, reverse(m), sig), Multivector(n), 0.0};
    p.xg = grade_sign(p.x, g);
    Multivector y = geometric(p.x, p.xg, sig);
    double s = m.sum_abs();
    p.ref = std::max(s * s * s * s, 1e-300);
    Mask full = m.full_mask();
    Multivector rest = y;
    rest[0] = 0.0;
    if (n == 4) rest[full] = 0.0;
    if (rest.max_abs() > kShapeTol * p.ref) throw Error("norm undefined for this multivector");
    if (n <= 3) {
        p.value = y[0];
    } else {
        p.alpha = y[0];
        p.beta = y[full];
        p.i2 = blade_product(full, full, sig).sign;
        p.value = p.alpha * p.alpha - p.beta * p.beta * p.i2;
        p.ref *= p.ref;
    }
    return p;
}

}  // namespace

double norm(const Multivector& m, const Signature& sig) {
    NormParts p = norm_parts(m, sig);
    return std::pow(std::abs(p.value), m.n() == 4 ? 0.125 : 0.25);
}

Multivector inverse(const Multivector& m, const Signature& sig) {
    NormParts p = norm_parts(m, sig);
    if (m.is_zero() || std::abs(p.value) <= 1e-14 * p.ref) throw Error("not invertible");
    Multivector num = geometric(reverse(m), p.xg, sig);
    if (m.n() == 4) {
        Multivector nbar = Multivector::scalar(4, p.alpha);
        nbar[m.full_mask()] = -p.beta;
        num = geometric(num, nbar, sig);
    }
    return num / p.value;
}

Multivector exp(const Multivector& m, const Signature& sig) {
    require_dual(m);
    double s;
    if (scalar_square(m, sig, s)) {
        double t = std::sqrt(std::abs(s));
        if (s < 0) return Multivector::scalar(m.n(), std::cos(t)) + m * sinc(t);
        return Multivector::scalar(m.n(), std::cosh(t)) + m * sinhc(t);
    }
    int k = halvings(m);
    Multivector r = taylor(m / std::ldexp(1.0, k), sig, 0);
    for (int i = 0; i < k; ++i) r = geometric(r, r, sig);
    return r;
}

namespace {

Multivector sin_cos(const Multivector& m, const Signature& sig, bool want_sin) {
    require_dual(m);
    double s;
    const int n = m.n();
    if (scalar_square(m, sig, s)) {
        double t = std::sqrt(std::abs(s));
        if (want_sin) return m * (s < 0 ? sinhc(t) : sinc(t));
        return Multivector::scalar(n, s < 0 ? std::cosh(t) : std::cos(t));
    }
    int k = halvings(m);
    Multivector x = m / std::ldexp(1.0, k);
    Multivector sn = taylor(x, sig, 1), cs = taylor(x, sig, 2);
    for (int i = 0; i < k; ++i) {
        Multivector s2 = geometric(sn, cs, sig) * 2.0;
        cs = geometric(cs, cs, sig) - geometric(sn, sn, sig);
        sn = s2;
    }
    return want_sin ? sn : cs;
}

}  // namespace

Multivector sin(const Multivector& m, const Signature& sig) { return sin_cos(m, sig, true); }
Multivector cos(const Multivector& m, const Signature& sig) { return sin_cos(m, sig, false); }

}  // namespace pga
