#include "pga/linfunc.hpp"

#include <cmath>

#include "pga/algebra.hpp"
#include "pga/duality.hpp"

namespace pga {

LinFunc from_images(const std::vector<Multivector>& images) {
    if (images.empty()) throw Error("no images");
    const int n = images[0].n();
    if (int(images.size()) != n + 1) throw Error("need n+1 images");
    for (const auto& im : images) {
        images[0].require_compatible(im);
        if (im.homogeneous_grade() != 1 && !im.is_zero()) throw Error("images must be vectors");
    }
    return LinFunc{n, images[0].side(), images};
}

LinFunc from_vector_map(int n, const std::function<Multivector(const Multivector&)>& f) {
    std::vector<Multivector> im;
    for (int i = 0; i <= n; ++i) im.push_back(grade_select(f(Multivector::blade(n, 1u << i)), 1));
    return from_images(im);
}

LinFunc from_matrix(const Matrix& m, Side side) {
    const int dim = int(m.size());
    if (dim < 2 || dim > kMaxN + 1) throw Error("matrix must be (n+1)x(n+1) with n in 1..4");
    for (const auto& row : m)
        if (int(row.size()) != dim) throw Error("matrix must be square");
    const int n = dim - 1;
    std::vector<Multivector> im;
    for (int j = 0; j < dim; ++j) {
        Multivector v(n, side);
        for (int i = 0; i < dim; ++i) v[1u << i] = m[i][j];
        im.push_back(v);
    }
    return LinFunc{n, side, im};
}

Matrix matrix_repr(const LinFunc& f) {
    const int dim = f.n + 1;
    Matrix m(dim, std::vector<double>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m[i][j] = f.images[j][1u << i];
    return m;
}

Multivector apply(const LinFunc& f, const Multivector& m) {
    if (m.n() != f.n || m.side() != f.side) throw Error("linear function applied to incompatible multivector");
    Multivector r(f.n, f.side);
    for (int s = 0; s < m.size(); ++s) {
        if (m[s] == 0.0) continue;
        Multivector b = Multivector::scalar(f.n, m[s], f.side);
        for (int i = 0; i <= f.n; ++i)
            if (s & (1 << i)) b = outer(b, f.images[i]);
        r += b;
    }
    return r;
}

double determinant(const LinFunc& f) {
    Multivector i = Multivector::pseudoscalar(f.n, f.side);
    return apply(f, i)[i.full_mask()];
}

double trace(const LinFunc& f) {
    double t = 0;
    for (int i = 0; i <= f.n; ++i) t += f.images[i][1u << i];
    return t;
}

LinFunc adjoint(const LinFunc& f) {
    Matrix m = matrix_repr(f), t = m;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
    return from_matrix(t, f.side == Side::Dual ? Side::Target : Side::Dual);
}

Multivector inverse_via_adjoint(const LinFunc& f, const Multivector& m) {
    if (f.side != Side::Dual) throw Error("inverse_via_adjoint expects a dual-side function");
    double det = determinant(f);
    double scale = 1.0;
    for (const auto& im : f.images) scale *= std::max(im.max_abs(), 1e-300);
    if (std::abs(det) <= 1e-12 * scale) throw Error("not invertible");
    return dual_J_inv(apply(adjoint(f), dual_J(m))) / det;
}

LinFunc inverse(const LinFunc& f) {
    std::vector<Multivector> im;
    for (int i = 0; i <= f.n; ++i) im.push_back(inverse_via_adjoint(f, Multivector::blade(f.n, 1u << i)));
    return from_images(im);
}

LinFunc compose(const LinFunc& f, const LinFunc& g) {
    if (f.n != g.n || f.side != g.side) throw Error("cannot compose incompatible functions");
    std::vector<Multivector> im;
    for (const auto& v : g.images) im.push_back(apply(f, v));
    return LinFunc{f.n, f.side, im};
}

double pairing(const Multivector& a, const Multivector& x) {
    if (a.n() != x.n()) throw Error("dimension mismatch");
    double s = 0;
    for (int i = 0; i <= a.n(); ++i) s += a[1u << i] * x[1u << i];
    return s;
}

}  // namespace pga
