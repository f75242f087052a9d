#pragma once

#include <string>
#include <vector>

#include "pga/multivector.hpp"

namespace pga {

enum class Kind {
    FinitePoint,
    PointAtInfinity,
    FiniteLine,
    LineAtInfinity,
    FinitePlane,
    PlaneAtInfinity,
    FiniteHyperplane,
    HyperplaneAtInfinity,
    WholeSpace,    // scalars
    OriginScalar,  // pseudoscalar; J maps it to a target scalar
    Zero,          // vanishing meet/join
};

std::string kind_name(Kind k);

/// A dual-side blade with its derived kind.
struct Entity {
    Multivector mv;
    Kind kind;
    int n() const { return mv.n(); }
};

constexpr double kSimpleTol = 1e-9;

bool is_simple(const Multivector& b);
/// True when the blade's subspace contains e0 (e0 ^ B = 0).
bool at_infinity(const Multivector& b);
Kind classify(const Multivector& b);
Entity make_entity(const Multivector& b);

/// n coordinates; orientation +1 or -1; weight > 0.
Entity point(const std::vector<double>& coords, int orientation = 1, double weight = 1.0);
/// d e0 + sum normal[i] e_(i+1): the hyperplane normal . x + d = 0.
Entity hyperplane(double d, const std::vector<double>& normal);
/// Coordinates of a finite point (n entries); throws for points at infinity.
std::vector<double> point_coords(const Multivector& p);

Entity join_all(const std::vector<Multivector>& items);
Entity line_from_points(const Multivector& p, const Multivector& q);
Entity plane_from_points(const Multivector& p, const Multivector& q, const Multivector& r);
Entity hyperplane_from_points(const Multivector& p, const Multivector& q, const Multivector& r,
                              const Multivector& s);
Entity meet(const std::vector<Multivector>& items);

/// Closest point of the flat to the origin, from the closed-form formulas.
std::vector<double> central_point(const Multivector& e);
/// Central point of the same blade read as a flat of the dual space.
std::vector<double> dual_central_point(const Multivector& e);

struct OrientationReport {
    Multivector top_down;
    Multivector bottom_up;
    int sign = 0;  // finite points: +1/-1 by handedness; hyperplane at infinity: sign of d; else 0
};

OrientationReport orientation(const Multivector& e);
/// Scalar c with e = c * ref; rejects references of a different attitude.
double weight(const Multivector& e, const Multivector& ref);
Multivector normalize(const Multivector& e, const Signature& sig);
Multivector polar(const Multivector& e, const Signature& sig);

}  // namespace pga
