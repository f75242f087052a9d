#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pga {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dual: the algebra of R^(n+1)* (carries the metric). Target: the algebra of R^(n+1).
enum class Side { Dual, Target };

using Mask = unsigned;

constexpr int kMaxN = 4;
constexpr int kMaxSize = 1 << (kMaxN + 1);

/// Diagonal signature of the model space, diag[i] = e_i . e_i.
struct Signature {
    int n = 2;
    std::array<int, kMaxN + 1> diag{};
    std::string name;

    /// One of euclidean, elliptic, hyperbolic, minkowski, de_sitter, anti_de_sitter.
    static Signature named(std::string_view metric, int n);
    static Signature custom(int n, const std::vector<int>& diag);
    static const std::vector<std::string>& names();

    bool operator==(const Signature& o) const { return n == o.n && diag == o.diag; }
};

inline int grade_of(Mask m) { return __builtin_popcount(m); }

/// Dense multivector over 2^(n+1) blades indexed by bitmask.
class Multivector {
public:
    Multivector() : Multivector(2) {}
    explicit Multivector(int n, Side side = Side::Dual);

    static Multivector scalar(int n, double s, Side side = Side::Dual);
    static Multivector blade(int n, Mask m, double c = 1.0, Side side = Side::Dual);
    static Multivector pseudoscalar(int n, Side side = Side::Dual);
    /// d e0 + sum v[i-1] e_i
    static Multivector vector(int n, const std::vector<double>& v, Side side = Side::Dual);

    int n() const { return n_; }
    Side side() const { return side_; }
    int size() const { return 1 << (n_ + 1); }
    Mask full_mask() const { return Mask(size() - 1); }

    double operator[](Mask m) const { return c_[m]; }
    double& operator[](Mask m) { return c_[m]; }
    double scalar_part() const { return c_[0]; }

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(double s);
    Multivector& operator/=(double s);

    double max_abs() const;
    double sum_abs() const;
    bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }
    /// Grades carrying a coefficient above tol.
    std::vector<int> grades(double tol = 0.0) const;
    /// The single grade present, or -1 if mixed (zero counts as grade 0).
    int homogeneous_grade(double tol = 0.0) const;
    /// Zero out coefficients with |c| <= tol.
    Multivector chopped(double tol) const;

    void require_compatible(const Multivector& o) const;

private:
    int n_;
    Side side_;
    std::array<double, kMaxSize> c_{};
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator-(Multivector a);
Multivector operator*(Multivector a, double s);
Multivector operator*(double s, Multivector a);
Multivector operator/(Multivector a, double s);

/// max |a_i - b_i| <= tol; sides and n must match.
bool approx_equal(const Multivector& a, const Multivector& b, double tol = 1e-9);
double max_abs_diff(const Multivector& a, const Multivector& b);

}  // namespace pga
