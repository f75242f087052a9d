#pragma once

#include <string>
#include <string_view>

#include "pga/multivector.hpp"

namespace pga {

/// Paper-style label of a canonical blade: e_label = sign * e_mask.
struct BladeLabel {
    std::string digits;
    int sign;
};

const BladeLabel& preferred_label(int n, Mask m);
/// Parse a digit string such as "320"; returns the canonical mask and the
/// reordering sign (e_digits = sign * e_mask). Throws on repeats or bad indices.
Mask parse_digits(int n, std::string_view digits, int& sign);

/// Coefficient of e_digits in m (sign-adjusted for non-ascending digit strings).
double label_coef(const Multivector& m, std::string_view digits);
/// m += c * e_digits
void add_label(Multivector& m, std::string_view digits, double c);

struct FormatOptions {
    /// true: shortest round-trip decimal (bit-exact re-parse).
    /// false: 12 significant digits with near-zero coefficients dropped.
    bool exact = false;
    double drop_tol = 1e-12;
};

/// e.g. "-3e0 + e1 - 2e2" or "-E20".
std::string to_text(const Multivector& m, const FormatOptions& opt = {});
std::string format_scalar(double v, bool exact = false);

/// Parse the term-list grammar `±c eDIGITS ...` / `E` for the target side.
/// Pure scalars default to `side`.
Multivector parse_multivector(std::string_view text, int n, Side side = Side::Dual);

}  // namespace pga
