#include "pga/multivector.hpp"

#include <algorithm>
#include <cmath>

namespace pga {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxN) throw Error("dimension must be in 1..4, got " + std::to_string(n));
}

}  // namespace

const std::vector<std::string>& Signature::names() {
    static const std::vector<std::string> v = {"euclidean", "elliptic",  "hyperbolic",
                                               "minkowski", "de_sitter", "anti_de_sitter"};
    return v;
}

Signature Signature::named(std::string_view metric, int n) {
    check_n(n);
    Signature s;
    s.n = n;
    s.name = std::string(metric);
    for (int i = 1; i <= n; ++i) s.diag[i] = 1;
    int e0;
    bool lorentz = false;
    if (metric == "euclidean") {
        e0 = 0;
    } else if (metric == "elliptic") {
        e0 = 1;
    } else if (metric == "hyperbolic") {
        e0 = -1;
    } else if (metric == "minkowski") {
        e0 = 0, lorentz = true;
    } else if (metric == "de_sitter") {
        e0 = 1, lorentz = true;
    } else if (metric == "anti_de_sitter") {
        e0 = -1, lorentz = true;
    } else {
        throw Error("unknown metric '" + std::string(metric) + "'");
    }
    s.diag[0] = e0;
    if (lorentz) s.diag[n] = -1;
    return s;
}

Signature Signature::custom(int n, const std::vector<int>& diag) {
    check_n(n);
    if (int(diag.size()) != n + 1) throw Error("signature needs n+1 entries");
    Signature s;
    s.n = n;
    s.name = "custom";
    for (int i = 0; i <= n; ++i) {
        if (diag[i] < -1 || diag[i] > 1) throw Error("signature entries must be -1, 0 or 1");
        s.diag[i] = diag[i];
    }
    return s;
}

Multivector::Multivector(int n, Side side) : n_(n), side_(side) { check_n(n); }

Multivector Multivector::scalar(int n, double s, Side side) {
    Multivector m(n, side);
    m.c_[0] = s;
    return m;
}

Multivector Multivector::blade(int n, Mask mask, double c, Side side) {
    Multivector m(n, side);
    if (mask >= Mask(m.size())) throw Error("blade index out of range");
    m.c_[mask] = c;
    return m;
}

Multivector Multivector::pseudoscalar(int n, Side side) {
    Multivector m(n, side);
    m.c_[m.full_mask()] = 1.0;
    return m;
}

Multivector Multivector::vector(int n, const std::vector<double>& v, Side side) {
    Multivector m(n, side);
    if (int(v.size()) != n + 1) throw Error("vector needs n+1 coefficients");
    for (int i = 0; i <= n; ++i) m.c_[1u << i] = v[i];
    return m;
}

void Multivector::require_compatible(const Multivector& o) const {
    if (n_ != o.n_) throw Error("dimension mismatch");
    if (side_ != o.side_) throw Error("side mismatch (dual vs target)");
}

Multivector& Multivector::operator+=(const Multivector& o) {
    require_compatible(o);
    for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    require_compatible(o);
    for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Multivector& Multivector::operator*=(double s) {
    for (int i = 0; i < size(); ++i) c_[i] *= s;
    return *this;
}

Multivector& Multivector::operator/=(double s) {
    for (int i = 0; i < size(); ++i) c_[i] /= s;
    return *this;
}

double Multivector::max_abs() const {
    double m = 0;
    for (int i = 0; i < size(); ++i) m = std::max(m, std::abs(c_[i]));
    return m;
}

double Multivector::sum_abs() const {
    double m = 0;
    for (int i = 0; i < size(); ++i) m += std::abs(c_[i]);
    return m;
}

std::vector<int> Multivector::grades(double tol) const {
    std::vector<bool> seen(n_ + 2, false);
    for (int i = 0; i < size(); ++i)
        if (std::abs(c_[i]) > tol) seen[grade_of(i)] = true;
    std::vector<int> out;
    for (int k = 0; k <= n_ + 1; ++k)
        if (seen[k]) out.push_back(k);
    return out;
}

int Multivector::homogeneous_grade(double tol) const {
    auto g = grades(tol);
    if (g.empty()) return 0;
    return g.size() == 1 ? g[0] : -1;
}

Multivector Multivector::chopped(double tol) const {
    Multivector r = *this;
    for (int i = 0; i < size(); ++i)
        if (std::abs(r.c_[i]) <= tol) r.c_[i] = 0.0;
    return r;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator-(Multivector a) { return a *= -1.0; }
Multivector operator*(Multivector a, double s) { return a *= s; }
Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator/(Multivector a, double s) { return a /= s; }

double max_abs_diff(const Multivector& a, const Multivector& b) {
    a.require_compatible(b);
    double m = 0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

}  // namespace pga
