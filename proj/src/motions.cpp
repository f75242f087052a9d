#include "pga/motions.hpp"

#include <cmath>

#include "pga/algebra.hpp"
#include "pga/euclid.hpp"
#include "pga/geometry.hpp"

namespace pga {

namespace {

constexpr double kUnitTol = 1e-9;

bool is_even(const Multivector& m) {
    double tol = 1e-12 * std::max(1.0, m.max_abs());
    for (int k : m.grades(tol))
        if (k % 2) return false;
    return true;
}

void require_unit(const Multivector& m, const Signature& sig, const char* what) {
    if (std::abs(norm(m, sig) - 1.0) > kUnitTol) throw Error(std::string(what) + " must be normalised");
}

}  // namespace

bool is_spinor(const Multivector& s, const Signature& sig) {
    if (s.side() != Side::Dual || !is_even(s)) return false;
    Multivector ss = geometric(s, reverse(s), sig);
    ss[0] -= 1.0;
    return ss.max_abs() <= kUnitTol;
}

Multivector rotor(const Multivector& axis, double alpha, const Signature& sig) {
    const int n = axis.n();
    if (n < 2) throw Error("no rotations for n = 1");
    Kind k = classify(axis);
    Kind want = n == 2 ? Kind::FinitePoint : n == 3 ? Kind::FiniteLine : Kind::FinitePlane;
    if (k != want) throw Error("rotation axis must be a finite " + std::string(n == 2 ? "point" : n == 3 ? "line" : "plane"));
    require_unit(axis, sig, "rotation axis");
    return exp(axis * (-alpha / 2), sig);
}

Multivector translator(const Multivector& a, double lambda, const Signature& sig) {
    const int n = a.n();
    if (a.homogeneous_grade(1e-12 * a.max_abs()) != 1) throw Error("translator needs a hyperplane");
    Multivector normal = a;
    normal[1] = 0.0;
    if (normal.is_zero(kSimpleTol * a.max_abs())) throw Error("translator needs a finite hyperplane");
    require_unit(a, sig, "hyperplane");
    return Multivector::scalar(n, 1.0) - (lambda / 2) * outer(Multivector::blade(n, 1), a);
}

Multivector screw_E3(const Multivector& line, double alpha, double lambda, const Signature& sig) {
    if (line.n() != 3) throw Error("screw_E3 needs n = 3");
    if (classify(line) != Kind::FiniteLine) throw Error("screw axis must be a finite line");
    require_unit(line, sig, "screw axis");
    Multivector il = geometric(Multivector::pseudoscalar(3), line, sig);
    return exp((alpha * line - lambda * il) * -0.5, sig);
}

Multivector motion_E4(const Multivector& s1, const Multivector& s2, double alpha, double beta, const Signature& sig) {
    s1.require_compatible(s2);
    if (s1.n() != 4) throw Error("motion_E4 needs n = 4");
    require_euclidean(sig, 4);
    if (classify(s1) != Kind::FinitePlane || classify(s2) != Kind::FinitePlane)
        throw Error("motion_E4 needs two finite planes");
    require_unit(s1, sig, "plane");
    require_unit(s2, sig, "plane");
    if (inner(s1, s2, sig).max_abs() > kUnitTol || commutator(s1, s2, sig).max_abs() > kUnitTol)
        throw Error("planes are not complementary");
    return exp((alpha * s1 + beta * s2) * -0.5, sig);
}

std::string motion_kind_name(MotionKind k) {
    switch (k) {
        case MotionKind::Translation: return "translation";
        case MotionKind::SimpleRotation: return "simple_rotation";
        case MotionKind::Screw: return "screw";
        case MotionKind::DoubleRotation: return "double_rotation";
        case MotionKind::Isoclinic: return "isoclinic";
    }
    return "?";
}

MotionKind classify_motion_E4(const Multivector& a, const Signature& sig) {
    if (a.n() != 4) throw Error("classify_motion_E4 needs n = 4");
    require_euclidean(sig, 4);
    if (a.homogeneous_grade(1e-12 * a.max_abs()) != 2 || a.is_zero()) throw Error("generator must be a nonzero bivector");
    double scale2 = a.sum_abs() * a.sum_abs();
    auto at_inf = [&](const Multivector& p) { return std::abs(inner(p, p, sig)[0]) <= 1e-12 * scale2; };
    PlanePair pp = decompose_bivector_E4(a, sig);
    if (!pp.unique) return MotionKind::Isoclinic;
    if (pp.pi2.is_zero(kSimpleTol * a.max_abs())) return at_inf(a) ? MotionKind::Translation : MotionKind::SimpleRotation;
    if (at_inf(pp.pi1) || at_inf(pp.pi2)) return MotionKind::Screw;
    return MotionKind::DoubleRotation;
}

Multivector apply_motion(const Multivector& s, const Multivector& m, const Signature& sig, bool permissive) {
    s.require_compatible(m);
    if (is_spinor(s, sig)) return geometric(geometric(s, m, sig), reverse(s), sig);
    if (!permissive) throw Error("invalid spinor");
    if (!is_even(s)) throw Error("invalid spinor");
    return geometric(geometric(s, m, sig), inverse(s, sig), sig);
}

}  // namespace pga
