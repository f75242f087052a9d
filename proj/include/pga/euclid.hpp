#pragma once

#include "pga/multivector.hpp"

namespace pga {

/// Throws unless sig is the Euclidean signature of dimension n.
void require_euclidean(const Signature& sig, int n);

/// Inputs are normalised internally. Supported pairs: point-point, point-hyperplane,
/// point-line (n = 3, 4), point-plane (n = 4), line-line (n = 3), hyperplane-hyperplane.
double distance(const Multivector& x, const Multivector& y, const Signature& sig);
/// Supported pairs: hyperplane-hyperplane, line-line (n = 3, 4), line-hyperplane and
/// plane-hyperplane (n = 3, 4), plane-line (n = 4).
double angle(const Multivector& x, const Multivector& y, const Signature& sig);

/// <AB>_{|k-l|} B^-1; throws when AB has more than two grade parts.
Multivector project(const Multivector& a, const Multivector& b, const Signature& sig);
Multivector reject(const Multivector& a, const Multivector& b, const Signature& sig);

enum class SkewKind { Translational, Rotational };
struct ProjRej {
    Multivector proj;
    Multivector rej;
};
/// Projection of line phi on line lambda for n = 3, splitting the commutator into its axes.
ProjRej project_skew(const Multivector& phi, const Multivector& lambda, SkewKind kind, const Signature& sig);

/// proj(A; B) + gamma rej(A; B)
Multivector scale(const Multivector& a, const Multivector& b, double gamma, const Signature& sig);

enum class View { TopDown, BottomUp };
/// Reflection of blade b in the invertible blade a.
Multivector reflect(const Multivector& b, const Multivector& a, View view, const Signature& sig);

struct SkewSplit {
    Multivector finite_axis;
    Multivector infinite_axis;
    double a = 0.0;
};
SkewSplit bivector_axes_E3(const Multivector& lambda, const Signature& sig);

struct PlanePair {
    Multivector pi1;
    Multivector pi2;
    bool unique = true;
};
PlanePair decompose_bivector_E4(const Multivector& pi, const Signature& sig);

struct TrivectorSplit {
    Multivector finite;    // e0 ^ pi1 when phi . phi = 0
    Multivector infinite;  // e0 ^ pi2 when phi . phi = 0
    bool unique = true;
};
TrivectorSplit decompose_trivector_E4(const Multivector& phi, const Signature& sig);

}  // namespace pga
