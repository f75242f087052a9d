#include "pga/euclid.hpp"

#include <algorithm>
#include <cmath>

#include "pga/algebra.hpp"
#include "pga/duality.hpp"
#include "pga/geometry.hpp"

namespace pga {

void require_euclidean(const Signature& sig, int n) {
    if (!(sig == Signature::named("euclidean", n))) throw Error("operation requires the Euclidean metric");
}

namespace {

enum class Shape { Point, Hyperplane, Line, Plane, Other };

bool is_finite_kind(Kind k) {
    return k == Kind::FinitePoint || k == Kind::FiniteLine || k == Kind::FinitePlane ||
           k == Kind::FiniteHyperplane;
}

Shape shape_of(const Multivector& m) {
    Kind k = classify(m);
    if (!is_finite_kind(k)) return Shape::Other;
    int n = m.n(), g = m.homogeneous_grade(1e-12 * m.max_abs());
    if (g == n) return Shape::Point;
    if (g == 1) return Shape::Hyperplane;
    if (g == n - 1) return Shape::Line;
    return Shape::Plane;
}

double scalar_of(const Multivector& m) {
    if (m.homogeneous_grade(1e-12 * std::max(1.0, m.max_abs())) > 0) throw Error("expected a scalar result");
    return m[0];
}

double clamp1(double c) { return std::clamp(c, -1.0, 1.0); }

[[noreturn]] void unsupported(const char* what) { throw Error(std::string("unsupported kind pair for ") + what); }

Multivector e0(int n) { return Multivector::blade(n, 1); }

}  // namespace

double distance(const Multivector& x0, const Multivector& y0, const Signature& sig) {
    x0.require_compatible(y0);
    const int n = x0.n();
    require_euclidean(sig, n);
    Shape sx = shape_of(x0), sy = shape_of(y0);
    Multivector x = x0, y = y0;
    if (sx == Shape::Point && sy != Shape::Point) std::swap(x, y), std::swap(sx, sy);
    // from here, a point (if any) is y
    x = normalize(x, sig);
    y = normalize(y, sig);
    if (sy == Shape::Point) {
        if (sx == Shape::Point) return norm(join(x, y), sig);
        if (sx == Shape::Hyperplane) return std::abs(scalar_of(join(x, y)));
        if (sx == Shape::Line || sx == Shape::Plane) return norm(join(x, y), sig);
        unsupported("distance");
    }
    if (sx == Shape::Hyperplane && sy == Shape::Hyperplane) {
        Multivector xn = x, yn = y;
        xn[1] = yn[1] = 0.0;
        double c = scalar_of(inner(xn, yn, sig));
        if (std::abs(1.0 - std::abs(c)) > 1e-12) return 0.0;  // intersecting
        return std::abs(x[1] - (c > 0 ? 1.0 : -1.0) * y[1]);
    }
    if (n == 3 && sx == Shape::Line && sy == Shape::Line) {
        double c = clamp1(-scalar_of(inner(x, y, sig)));
        double s = std::sqrt(1.0 - c * c);
        if (s <= 1e-9) {
            Multivector origin = Multivector::blade(n, 0b1110);
            return norm(join(origin, commutator(x, y, sig)), sig);
        }
        return std::abs(scalar_of(join(x, y))) / s;
    }
    unsupported("distance");
}

double angle(const Multivector& x0, const Multivector& y0, const Signature& sig) {
    x0.require_compatible(y0);
    const int n = x0.n();
    require_euclidean(sig, n);
    Shape sx = shape_of(x0), sy = shape_of(y0);
    Multivector x = x0, y = y0;
    // order: hyperplane, then line, then plane
    auto rank = [](Shape s) { return s == Shape::Hyperplane ? 0 : s == Shape::Line ? 1 : s == Shape::Plane ? 2 : 3; };
    if (rank(sx) > rank(sy)) std::swap(x, y), std::swap(sx, sy);
    x = normalize(x, sig);
    y = normalize(y, sig);
    if (sx == Shape::Hyperplane && sy == Shape::Hyperplane) return std::acos(clamp1(scalar_of(inner(x, y, sig))));
    if (n >= 3 && sx == Shape::Line && sy == Shape::Line) return std::acos(clamp1(-scalar_of(inner(x, y, sig))));
    if (n >= 3 && ((sx == Shape::Hyperplane && (sy == Shape::Line || sy == Shape::Plane)) ||
                   (n == 4 && sx == Shape::Line && sy == Shape::Plane)))
        return std::acos(clamp1(norm(inner(x, y, sig), sig)));
    unsupported("angle");
}

namespace {

ProjRej split_product(const Multivector& a, const Multivector& b, const Signature& sig) {
    a.require_compatible(b);
    int k = a.homogeneous_grade(1e-12 * a.max_abs()), l = b.homogeneous_grade(1e-12 * b.max_abs());
    if (k < 0 || l < 0) throw Error("projection expects homogeneous blades");
    Multivector binv = inverse(b, sig);
    Multivector ab = geometric(a, b, sig);
    Multivector p = grade_select(ab, std::abs(k - l));
    Multivector rest = (ab - p).chopped(1e-12 * std::max(1.0, ab.max_abs()));
    if (rest.homogeneous_grade() < 0) throw Error("product has three parts; use project_skew");
    return {geometric(p, binv, sig), geometric(rest, binv, sig)};
}

}  // namespace

Multivector project(const Multivector& a, const Multivector& b, const Signature& sig) {
    return split_product(a, b, sig).proj;
}

Multivector reject(const Multivector& a, const Multivector& b, const Signature& sig) {
    return split_product(a, b, sig).rej;
}

ProjRej project_skew(const Multivector& phi, const Multivector& lambda, SkewKind kind, const Signature& sig) {
    phi.require_compatible(lambda);
    if (phi.n() != 3) throw Error("project_skew is defined for n = 3");
    require_euclidean(sig, 3);
    if (classify(phi) != Kind::FiniteLine || classify(lambda) != Kind::FiniteLine)
        throw Error("project_skew expects two finite lines");
    Multivector linv = inverse(lambda, sig);
    Multivector c = commutator(phi, lambda, sig);
    SkewSplit ax = bivector_axes_E3(c, sig);
    Multivector dot = inner(phi, lambda, sig), wedge = outer(phi, lambda);
    Multivector p = dot, r = wedge;
    if (kind == SkewKind::Translational) {
        p += ax.finite_axis;
        r += ax.infinite_axis;
    } else {
        p += ax.infinite_axis;
        r += ax.finite_axis;
    }
    return {geometric(p, linv, sig), geometric(r, linv, sig)};
}

Multivector scale(const Multivector& a, const Multivector& b, double gamma, const Signature& sig) {
    ProjRej pr = split_product(a, b, sig);
    return pr.proj + gamma * pr.rej;
}

Multivector reflect(const Multivector& b, const Multivector& a, View view, const Signature& sig) {
    a.require_compatible(b);
    int k = a.homogeneous_grade(1e-12 * a.max_abs()), l = b.homogeneous_grade(1e-12 * b.max_abs());
    if (k < 0 || l < 0) throw Error("reflection expects homogeneous blades");
    int e = view == View::TopDown ? k * l : a.n() * k * (l - 1);
    double sign = (e % 2) ? -1.0 : 1.0;
    return sign * geometric(geometric(a, b, sig), inverse(a, sig), sig);
}

SkewSplit bivector_axes_E3(const Multivector& lambda, const Signature& sig) {
    if (lambda.n() != 3) throw Error("bivector axes are defined for n = 3");
    require_euclidean(sig, 3);
    if (lambda.homogeneous_grade(1e-12 * lambda.max_abs()) != 2 && !lambda.is_zero())
        throw Error("expected a bivector");
    double scale2 = lambda.sum_abs() * lambda.sum_abs();
    double vv = join(lambda, lambda)[0];
    double dd = inner(lambda, lambda, sig)[0];
    Multivector zero(3);
    if (std::abs(vv) <= kSimpleTol * scale2) {
        if (std::abs(dd) <= 1e-12 * scale2) return {zero, lambda, 0.0};
        return {lambda, zero, 0.0};
    }
    if (std::abs(dd) <= 1e-12 * scale2) {
        throw Error("no finite axis");
    }
    double a = vv / (2 * dd);
    Multivector inf = a * geometric(Multivector::pseudoscalar(3), lambda, sig);
    return {lambda - inf, inf, a};
}

namespace {

Multivector translator_by(const std::vector<double>& v) {
    const int n = int(v.size());
    Multivector d(n);
    for (int i = 0; i < n; ++i) d[1u << (i + 1)] = v[i];
    return Multivector::scalar(n, 1.0) - 0.5 * outer(e0(n), d);
}

Multivector sandwich(const Multivector& s, const Multivector& m, const Signature& sig) {
    return geometric(geometric(s, m, sig), reverse(s), sig);
}

// Isoclinic case: one of infinitely many complementary pairs.
PlanePair isoclinic_witness(const Multivector& pi, const Multivector& w, const Signature& sig) {
    std::vector<double> c(4, 0.0);
    if (std::abs(dual_J(w)[1]) > kSimpleTol * w.max_abs()) c = point_coords(w);
    std::vector<double> back = c, to0(4);
    for (int i = 0; i < 4; ++i) to0[i] = -c[i];
    Multivector p0 = sandwich(translator_by(to0), pi, sig);
    Multivector best(4);
    double bn = -1;
    for (int i = 1; i <= 4; ++i) {
        Multivector u = Multivector::blade(4, 1u << i);
        Multivector up = inner(u, p0, sig);
        double m = up.max_abs();
        if (m > bn) bn = m, best = outer(u, up);
    }
    double ss = inner(best, best, sig)[0];
    Multivector p1 = (inner(p0, best, sig)[0] / ss) * best;
    Multivector p2 = p0 - p1;
    Multivector t = translator_by(back);
    return {sandwich(t, p1, sig), sandwich(t, p2, sig), false};
}

}  // namespace

PlanePair decompose_bivector_E4(const Multivector& pi, const Signature& sig) {
    if (pi.n() != 4) throw Error("plane decomposition is defined for n = 4");
    require_euclidean(sig, 4);
    if (pi.homogeneous_grade(1e-12 * pi.max_abs()) != 2 && !pi.is_zero()) throw Error("expected a bivector");
    const Multivector zero(4);
    double scale = pi.sum_abs();
    Multivector w = outer(pi, pi);
    if (w.max_abs() <= kSimpleTol * scale * scale) return {pi, zero, true};
    double s = inner(pi, pi, sig)[0];
    double ww = geometric(w, w, sig)[0];
    double s4 = std::pow(scale, 4);
    if (std::abs(ww) <= 1e-12 * s4) {
        if (std::abs(s) <= 1e-12 * scale * scale) throw Error("bivector has no finite part");
        Multivector k = w / (2 * s);
        Multivector p2 = geometric(k, pi, sig);
        return {pi - p2, p2, true};
    }
    double disc = s * s - ww;
    if (std::abs(disc) <= 1e-9 * s * s) return isoclinic_witness(pi, w, sig);
    if (disc < 0) throw Error("bivector has no real complementary decomposition");
    double root = std::sqrt(disc);
    double r1 = 0.5 * (s + (s >= 0 ? root : -root));  // larger magnitude
    Multivector num = geometric(Multivector::scalar(4, 1.0) - w / (2 * r1), pi, sig);
    Multivector p1 = num / (1.0 - 0.25 * ww / (r1 * r1));
    return {p1, pi - p1, true};
}

TrivectorSplit decompose_trivector_E4(const Multivector& phi, const Signature& sig) {
    if (phi.n() != 4) throw Error("trivector decomposition is defined for n = 4");
    require_euclidean(sig, 4);
    if (phi.homogeneous_grade(1e-12 * phi.max_abs()) != 3 && !phi.is_zero()) throw Error("expected a trivector");
    const Multivector zero(4);
    double scale = phi.sum_abs();
    Multivector vv = join(phi, phi);
    if (vv.max_abs() <= kSimpleTol * scale * scale) return {phi, zero, true};
    double dd = inner(phi, phi, sig)[0];
    if (std::abs(dd) > 1e-12 * scale * scale) {
        Multivector k = geometric(vv, Multivector::pseudoscalar(4), sig) / (2 * dd);
        Multivector ic = geometric(k, phi, sig);
        return {phi - ic, ic, true};
    }
    // phi = e0 ^ pi with pi through the origin
    Multivector pi(4);
    for (int i = 0; i < phi.size(); ++i)
        if (i & 1) pi[i & ~1] += phi[i];
    PlanePair pp = decompose_bivector_E4(pi, sig);
    return {outer(e0(4), pp.pi1), outer(e0(4), pp.pi2), pp.unique};
}

}  // namespace pga
