#include "pga/geometry.hpp"

#include <cmath>

#include "pga/algebra.hpp"
#include "pga/duality.hpp"
#include "pga/text.hpp"

namespace pga {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::FinitePoint: return "FinitePoint";
        case Kind::PointAtInfinity: return "PointAtInfinity";
        case Kind::FiniteLine: return "FiniteLine";
        case Kind::LineAtInfinity: return "LineAtInfinity";
        case Kind::FinitePlane: return "FinitePlane";
        case Kind::PlaneAtInfinity: return "PlaneAtInfinity";
        case Kind::FiniteHyperplane: return "FiniteHyperplane";
        case Kind::HyperplaneAtInfinity: return "HyperplaneAtInfinity";
        case Kind::WholeSpace: return "WholeSpace";
        case Kind::OriginScalar: return "OriginScalar";
        case Kind::Zero: return "Zero";
    }
    return "?";
}

namespace {

void require_dual(const Multivector& m) {
    if (m.side() != Side::Dual) throw Error("expected a dual-side multivector");
}

double sq(double x) { return x * x; }

// The blade with index 0 stripped: B = e0 ^ X for blades at infinity.
Multivector strip_e0(const Multivector& b) {
    Multivector x(b.n());
    for (int i = 0; i < b.size(); ++i)
        if (i & 1) x[i & ~1] += b[i];
    return x;
}

Multivector without_e0(const Multivector& b) {
    Multivector x = b;
    for (int i = 0; i < b.size(); ++i)
        if (i & 1) x[i] = 0.0;
    return x;
}

Multivector e0(int n) { return Multivector::blade(n, 1); }

}  // namespace

bool is_simple(const Multivector& b) {
    require_dual(b);
    int k = b.homogeneous_grade(1e-12 * b.max_abs());
    if (k < 0) throw Error("is_simple expects a homogeneous multivector");
    const int n = b.n();
    double tol = kSimpleTol * sq(b.sum_abs());
    if (k <= 1 || k >= n) return true;
    if (k == 2) return outer(b, b).max_abs() <= tol;
    // n = 4 trivectors
    return join(b, b).max_abs() <= tol;
}

bool at_infinity(const Multivector& b) {
    return outer(e0(b.n()), b).max_abs() <= kSimpleTol * b.max_abs();
}

Kind classify(const Multivector& b) {
    require_dual(b);
    if (b.is_zero(1e-300)) return Kind::Zero;
    int k = b.homogeneous_grade(1e-12 * b.max_abs());
    if (k < 0 || !is_simple(b)) throw Error("not a blade");
    const int n = b.n();
    if (k == 0) return Kind::WholeSpace;
    if (k == n + 1) return Kind::OriginScalar;
    bool inf = at_infinity(b);
    if (k == n) return inf ? Kind::PointAtInfinity : Kind::FinitePoint;
    if (k == 1) return inf ? Kind::HyperplaneAtInfinity : Kind::FiniteHyperplane;
    if (n - k == 1) return inf ? Kind::LineAtInfinity : Kind::FiniteLine;
    return inf ? Kind::PlaneAtInfinity : Kind::FinitePlane;
}

Entity make_entity(const Multivector& b) { return Entity{b, classify(b)}; }

Entity point(const std::vector<double>& coords, int orientation, double weight) {
    const int n = int(coords.size());
    if (weight <= 0) throw Error("point weight must be positive");
    if (orientation != 1 && orientation != -1) throw Error("orientation must be +1 or -1");
    Multivector y(n, Side::Target);
    y[1] = 1.0;
    for (int i = 0; i < n; ++i) y[1u << (i + 1)] = coords[i];
    return make_entity(dual_J_inv(y) * (orientation * weight));
}

Entity hyperplane(double d, const std::vector<double>& normal) {
    const int n = int(normal.size());
    std::vector<double> v{d};
    v.insert(v.end(), normal.begin(), normal.end());
    Multivector m = Multivector::vector(n, v);
    if (m.is_zero()) throw Error("hyperplane needs a nonzero coefficient");
    return make_entity(m);
}

std::vector<double> point_coords(const Multivector& p) {
    require_dual(p);
    if (p.homogeneous_grade(1e-12 * p.max_abs()) != p.n() || p.is_zero()) throw Error("not a point");
    Multivector y = dual_J(p);
    double w = y[1];
    if (std::abs(w) <= kSimpleTol * y.max_abs()) throw Error("point at infinity has no coordinates");
    std::vector<double> x(p.n());
    for (int i = 0; i < p.n(); ++i) x[i] = y[1u << (i + 1)] / w;
    return x;
}

Entity join_all(const std::vector<Multivector>& items) {
    if (items.empty()) throw Error("nothing to join");
    Multivector r = items[0];
    double scale = items[0].max_abs();
    for (size_t i = 1; i < items.size(); ++i) {
        r = join(r, items[i]);
        scale *= items[i].max_abs();
    }
    if (r.max_abs() <= 1e-12 * scale) throw Error("degenerate join");
    return make_entity(r);
}

Entity line_from_points(const Multivector& p, const Multivector& q) { return join_all({p, q}); }

Entity plane_from_points(const Multivector& p, const Multivector& q, const Multivector& r) {
    return join_all({p, q, r});
}

Entity hyperplane_from_points(const Multivector& p, const Multivector& q, const Multivector& r,
                              const Multivector& s) {
    return join_all({p, q, r, s});
}

Entity meet(const std::vector<Multivector>& items) {
    if (items.empty()) throw Error("nothing to meet");
    Multivector r = items[0];
    double scale = items[0].max_abs();
    for (size_t i = 1; i < items.size(); ++i) {
        r = outer(r, items[i]);
        scale *= items[i].max_abs();
    }
    r = r.chopped(1e-12 * scale);
    return make_entity(r);
}

std::vector<double> central_point(const Multivector& e) {
    Kind k = classify(e);
    const int n = e.n();
    auto c = [&](const char* l) { return label_coef(e, l); };
    switch (k) {
        case Kind::FinitePoint:
            if (n > 1) return point_coords(e);
            [[fallthrough]];
        case Kind::FiniteHyperplane: {
            // n x + d = 0 closest to the origin at -d n / |n|^2
            double d = e[1], den = 0;
            for (int i = 1; i <= n; ++i) den += sq(e[1u << i]);
            std::vector<double> x(n);
            for (int i = 1; i <= n; ++i) x[i - 1] = -d * e[1u << i] / den;
            return x;
        }
        case Kind::FiniteLine:
            if (n == 3) {
                double p10 = c("10"), p20 = c("20"), p30 = c("30"), p23 = c("23"), p31 = c("31"), p12 = c("12");
                double den = sq(p23) + sq(p31) + sq(p12);
                return {(p20 * p12 - p30 * p31) / den, (p30 * p23 - p10 * p12) / den,
                        (p10 * p31 - p20 * p23) / den};
            } else {
                double s234 = c("234"), s314 = c("314"), s124 = c("124"), s321 = c("321");
                double s410 = c("410"), s420 = c("420"), s430 = c("430");
                double s230 = c("230"), s310 = c("310"), s120 = c("120");
                double den = sq(s234) + sq(s314) + sq(s124) + sq(s321);
                return {-(s314 * s430 - s124 * s420 - s321 * s230) / den,
                        -(s124 * s410 - s234 * s430 - s321 * s310) / den,
                        -(s234 * s420 - s314 * s410 - s321 * s120) / den,
                        -(s234 * s230 + s314 * s310 + s124 * s120) / den};
            }
        case Kind::FinitePlane: {
            double p10 = c("10"), p20 = c("20"), p30 = c("30"), p40 = c("40"), p23 = c("23"), p31 = c("31"),
                   p12 = c("12"), p41 = c("41"), p42 = c("42"), p43 = c("43");
            double den = sq(p23) + sq(p31) + sq(p12) + sq(p41) + sq(p42) + sq(p43);
            return {(p20 * p12 - p30 * p31 - p40 * p41) / den, (p30 * p23 - p10 * p12 - p40 * p42) / den,
                    (p10 * p31 - p20 * p23 - p40 * p43) / den, (p10 * p41 + p20 * p42 + p30 * p43) / den};
        }
        default:
            throw Error("central point needs a finite flat, got " + kind_name(k));
    }
}

std::vector<double> dual_central_point(const Multivector& e) {
    Kind k = classify(e);
    const int n = e.n();
    auto c = [&](const char* l) { return label_coef(e, l); };
    int grade = e.homogeneous_grade(1e-12 * e.max_abs());
    if (grade == 1) {
        // A vector directly represents the point (a, b, ...) / d of the dual space.
        if (std::abs(e[1]) <= kSimpleTol * e.max_abs()) throw Error("dual point at infinity");
        std::vector<double> a(n);
        for (int i = 1; i <= n; ++i) a[i - 1] = e[1u << i] / e[1];
        return a;
    }
    if (grade == n && k == Kind::FinitePoint) {
        // The hyperplane x . a + 1 = 0 of the dual space.
        auto x = point_coords(e);
        double den = 0;
        for (double v : x) den += v * v;
        if (den == 0) throw Error("dual flat at infinity");
        for (double& v : x) v = -v / den;
        return x;
    }
    if (n == 3 && grade == 2) {
        double p10 = c("10"), p20 = c("20"), p30 = c("30"), p23 = c("23"), p31 = c("31"), p12 = c("12");
        double den = sq(p10) + sq(p20) + sq(p30);
        if (den == 0) throw Error("dual flat at infinity");
        return {-(p20 * p12 - p30 * p31) / den, -(p30 * p23 - p10 * p12) / den, -(p10 * p31 - p20 * p23) / den};
    }
    if (n == 4 && grade == 2) {
        double p10 = c("10"), p20 = c("20"), p30 = c("30"), p40 = c("40"), p23 = c("23"), p31 = c("31"),
               p12 = c("12"), p41 = c("41"), p42 = c("42"), p43 = c("43");
        double den = sq(p10) + sq(p20) + sq(p30) + sq(p40);
        if (den == 0) throw Error("dual flat at infinity");
        return {-(p20 * p12 - p30 * p31 - p40 * p41) / den, -(p30 * p23 - p10 * p12 - p40 * p42) / den,
                -(p10 * p31 - p20 * p23 - p40 * p43) / den, -(p10 * p41 + p20 * p42 + p30 * p43) / den};
    }
    if (n == 4 && grade == 3) {
        double s234 = c("234"), s314 = c("314"), s124 = c("124"), s321 = c("321");
        double s410 = c("410"), s420 = c("420"), s430 = c("430");
        double s230 = c("230"), s310 = c("310"), s120 = c("120");
        double den = sq(s410) + sq(s420) + sq(s430) + sq(s230) + sq(s310) + sq(s120);
        if (den == 0) throw Error("dual flat at infinity");
        return {(s314 * s430 - s124 * s420 - s321 * s230) / den, (s124 * s410 - s234 * s430 - s321 * s310) / den,
                (s234 * s420 - s314 * s410 - s321 * s120) / den, (s234 * s230 + s314 * s310 + s124 * s120) / den};
    }
    throw Error("no dual central point for " + kind_name(k));
}

OrientationReport orientation(const Multivector& e) {
    Kind k = classify(e);
    const int n = e.n();
    OrientationReport r{Multivector(n, Side::Target), Multivector(n, Side::Target), 0};
    if (at_infinity(e)) {
        r.top_down = identity_Id(strip_e0(e));
        r.bottom_up = dual_J(e);
    } else {
        Multivector b0 = without_e0(e);
        r.top_down = identity_Id(b0);
        r.bottom_up = dual_J(outer(e0(n), b0));
    }
    if (k == Kind::FinitePoint) {
        double w = dual_J(e)[1];
        r.sign = w > 0 ? 1 : -1;
    } else if (k == Kind::HyperplaneAtInfinity) {
        // toward the origin when d > 0
        r.sign = e[1] > 0 ? 1 : -1;
    }
    return r;
}

double weight(const Multivector& e, const Multivector& ref) {
    e.require_compatible(ref);
    double num = 0, den = 0;
    for (int i = 0; i < e.size(); ++i) num += e[i] * ref[i], den += ref[i] * ref[i];
    if (den == 0) throw Error("reference blade is zero");
    double c = num / den;
    if (max_abs_diff(e, ref * c) > kSimpleTol * std::max(e.max_abs(), 1.0))
        throw Error("weight is only defined for blades of the same attitude");
    return c;
}

Multivector normalize(const Multivector& e, const Signature& sig) {
    double nm = norm(e, sig);
    if (nm <= 1e-12 * e.max_abs() || nm == 0.0) throw Error("cannot normalise: zero norm");
    return e / nm;
}

Multivector polar(const Multivector& e, const Signature& sig) {
    return geometric(e, Multivector::pseudoscalar(e.n()), sig);
}

}  // namespace pga
