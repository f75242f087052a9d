#pragma once

#include <functional>
#include <vector>

#include "pga/multivector.hpp"

namespace pga {

using Matrix = std::vector<std::vector<double>>;

/// Linear function given by the images of the n+1 basis vectors, extended as an
/// outermorphism (over ^ on the dual side, over v on the target side).
struct LinFunc {
    int n = 2;
    Side side = Side::Dual;
    std::vector<Multivector> images;  // images[i] = f(e_i)
};

LinFunc from_images(const std::vector<Multivector>& images);
/// Build from a vector map, e.g. a -> a + a.P.
LinFunc from_vector_map(int n, const std::function<Multivector(const Multivector&)>& f);
/// Columns are images of the basis vectors; row-major input.
LinFunc from_matrix(const Matrix& m, Side side = Side::Dual);
Matrix matrix_repr(const LinFunc& f);

Multivector apply(const LinFunc& f, const Multivector& m);
double determinant(const LinFunc& f);
double trace(const LinFunc& f);
/// Target-side function with f(a)[x] = a[fbar(x)], i.e. the transposed matrix.
LinFunc adjoint(const LinFunc& f);
/// J^-1 fbar(J M) / det f
Multivector inverse_via_adjoint(const LinFunc& f, const Multivector& m);
LinFunc inverse(const LinFunc& f);
/// f o g
LinFunc compose(const LinFunc& f, const LinFunc& g);
/// Metric-free pairing a[x] = sum a_i x_i of a dual and a target vector.
double pairing(const Multivector& a, const Multivector& x);

}  // namespace pga
