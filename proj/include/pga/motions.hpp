#pragma once

#include <string>

#include "pga/multivector.hpp"

namespace pga {

/// Even multivector with S reverse(S) = 1 (tolerance 1e-9).
bool is_spinor(const Multivector& s, const Signature& sig);

/// exp(-(alpha/2) axis); axis is a normalised finite point (n=2), line (n=3) or plane (n=4).
Multivector rotor(const Multivector& axis, double alpha, const Signature& sig);
/// 1 - (lambda/2) e0 ^ a for a normalised finite hyperplane a.
Multivector translator(const Multivector& a, double lambda, const Signature& sig);
/// exp(-(alpha - lambda I) lambda_line / 2)
Multivector screw_E3(const Multivector& line, double alpha, double lambda, const Signature& sig);
/// exp(-(alpha s1 + beta s2)/2) for normalised complementary planes.
Multivector motion_E4(const Multivector& s1, const Multivector& s2, double alpha, double beta, const Signature& sig);

enum class MotionKind { Translation, SimpleRotation, Screw, DoubleRotation, Isoclinic };
std::string motion_kind_name(MotionKind k);
/// Kind of the motion generated by exp(A) for an E4 bivector A.
MotionKind classify_motion_E4(const Multivector& a, const Signature& sig);

/// S M reverse(S). With permissive set, non-unit even S is accepted and S M S^-1 used.
Multivector apply_motion(const Multivector& s, const Multivector& m, const Signature& sig, bool permissive = false);

}  // namespace pga
