#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "../oracle/oracle.hpp"
#include "../support/random.hpp"
#include "pga/algebra.hpp"
#include "pga/duality.hpp"
#include "pga/euclid.hpp"
#include "pga/expr.hpp"
#include "pga/geometry.hpp"
#include "pga/linfunc.hpp"
#include "pga/motions.hpp"
#include "pga/text.hpp"

namespace checks {

using pga::Multivector;
using pga::Signature;
using testsupport::Rng;

namespace {

struct Tracker {
    Outcome out;
    explicit Tracker(std::string name) { out.name = std::move(name); }

    // err is compared against tol; the first failure is kept as the detail
    void error(double err, double tol, const std::string& what) {
        ++out.cases;
        out.worst = std::max(out.worst, err);
        if (!(err <= tol) && out.ok) {
            out.ok = false;
            std::ostringstream s;
            s << what << ": error " << err << " > " << tol;
            out.detail = s.str();
        }
    }
    void require(bool cond, const std::string& what) {
        ++out.cases;
        if (!cond && out.ok) {
            out.ok = false;
            out.detail = what;
        }
    }
    template <class F>
    void guard(const std::string& what, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            ++out.cases;
            if (out.ok) {
                out.ok = false;
                out.detail = what + ": " + e.what();
            }
        }
    }
    Outcome done() { return out; }
};

double rel(const Multivector& a, const Multivector& b, double scale = 0) {
    return pga::max_abs_diff(a, b) / std::max({1.0, scale, b.max_abs()});
}

std::string tag(const Signature& s) { return s.name.empty() ? "custom n=" + std::to_string(s.n) : s.name + " n=" + std::to_string(s.n); }

std::vector<Signature> named_configs(int lo = 1, int hi = 4) {
    std::vector<Signature> v;
    for (int n = lo; n <= hi; ++n)
        for (const auto& m : Signature::names()) v.push_back(Signature::named(m, n));
    return v;
}

std::vector<Signature> all_configs() {
    auto v = named_configs();
    v.push_back(Signature::custom(1, {-1, -1}));
    v.push_back(Signature::custom(2, {0, 0, 1}));
    v.push_back(Signature::custom(2, {-1, -1, -1}));
    v.push_back(Signature::custom(3, {1, 0, -1, 1}));
    v.push_back(Signature::custom(4, {0, 1, 1, -1, -1}));
    v.push_back(Signature::custom(4, {-1, 1, -1, 1, -1}));
    return v;
}

Multivector wedge(const Multivector& a, const Multivector& b) { return pga::outer(a, b); }

double vdist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

double vlen(const std::vector<double>& a) { return vdist(a, std::vector<double>(a.size(), 0.0)); }

void run_program_table(Tracker& t, const std::vector<std::array<std::string, 5>>& rows) {
    // {n, metric, program, expected, abs tolerance or ""}
    for (const auto& r : rows) {
        t.guard(r[2], [&] {
            pga::Evaluator ev(std::stoi(r[0]), r[1]);
            pga::Value got = ev.run(r[2]);
            pga::Value want = ev.run(r[3]);
            if (!r[4].empty()) {
                t.error(std::abs(got.scalar() - want.scalar()), std::stod(r[4]), r[2]);
            } else {
                bool ok = pga::values_match(got, want, 1e-9);
                t.require(ok, r[2] + " gave " + pga::format_value(got));
            }
        });
    }
}

void expect_error(Tracker& t, int n, const std::string& metric, const std::string& program, const std::string& what) {
    pga::Evaluator ev(n, metric);
    try {
        ev.run(program);
        t.require(false, program + " should fail");
    } catch (const pga::Error& e) {
        t.require(std::string(e.what()).find(what) != std::string::npos, program + " failed with " + e.what());
    }
}

}  // namespace

Outcome worked_examples() {
    Tracker t("worked examples");
    const std::string ab = "let a = (2e0 - 2e1 - e2)/sqrt(5); let b1 = (e0 + 2e1 - 2e2)/sqrt(8); let b2 = -b1; ";
    run_program_table(
        t, {{
               {"2", "euclidean", "(2e0 - 2e1 - e2)|(e12 - 3e20 - 3e01)", "-3e0 + e1 - 2e2", ""},
               {"2", "euclidean", ab + "a*b1", "-1/sqrt(10) + (3/sqrt(10))*(e12 + 0.5e20 + e01)", ""},
               {"2", "euclidean", ab + "a*b2", "1/sqrt(10) - (3/sqrt(10))*(e12 + 0.5e20 + e01)", ""},
               {"2", "euclidean", "(e12 + 0.5e20 + e01) & (e12 + 2e20 + 2e01)", "e0 + e1 - 1.5e2", ""},
               {"2", "euclidean", "distance(point(0.5, 1), point(2, 2))", "sqrt(13)/2", ""},
               {"3", "euclidean", "(e01 + e23)^(e01 + e23)", "2*I", ""},
               {"3", "euclidean", "(-e20 + e23)|(e123 + 2e320 + e130)", "2e0 - e1", ""},
               {"3", "euclidean", "(-e20 + e23)&(e123 + 2e320 + e130)", "-e0 + e2 + e3", ""},
               {"3", "euclidean", "distance(e123 + 2e320 + e130, -e20 + e23)", "sqrt(2)", ""},
               {"3", "euclidean", "distance(point(1, 0, 0), point(0, 1, 1/3))", "sqrt(19)/3", ""},
               {"3", "euclidean", "(2e20 + 2e30 + e23) x ((3e23 - 2e31)/sqrt(13))",
                "(-4e10 - 6e20 + 6e30 + 2e12)/sqrt(13)", ""},
               {"3", "euclidean", "axes_fin((2e20 + 2e30 + e23) x ((3e23 - 2e31)/sqrt(13)))",
                "(-4e10 - 6e20 + 2e12)/sqrt(13)", ""},
               {"3", "euclidean", "axes_inf((2e20 + 2e30 + e23) x ((3e23 - 2e31)/sqrt(13)))", "(6/sqrt(13))*e30", ""},
               {"3", "euclidean", "apply(rotor(-e10 + e12, pi/2), e123 - 2e320 + e130)", "e123 - e130", ""},
               {"3", "euclidean", "apply(translator(e3, 2), e123 - 2e320 + e130)", "e123 - 2e320 + e130 + 2e210", ""},
               {"3", "euclidean",
                "deg(angle((3/sqrt(34))*(-e0 + e1 + (4/3)*e2 - e3), (6/sqrt(70))*(-e0 + e1 + (5/6)*e2 + 0.5e3)))",
                "54", "0.5"},
               {"3", "euclidean", "deg(angle(2e30 + e23, (3e23 - 2e31)/sqrt(13)))", "34", "0.5"},
               {"2", "euclidean", "!(e0 + e1)", "e0 + e1", ""},
               {"2", "elliptic", "!(e0 + e1)", "0.5*(e0 + e1)", ""},
               {"2", "euclidean", "!(1 + e12)", "0.5*(1 - e12)", ""},
               {"2", "hyperbolic", "norm((e0 + e1) + (e0 - e1))", "2", ""},
               {"2", "euclidean", "central(e0 - e1 - 3e2)", "[0.1, 0.3]", ""},
               {"2", "euclidean", "dual_central(point(-1, -3))", "[0.1, 0.3]", ""},
               {"2", "euclidean", "sin(e0)", "e0", ""},
               {"2", "elliptic", "sin(e0)", "sin(1)*e0", ""},
           }});
    expect_error(t, 2, "minkowski", "!(e1 + e2)", "not invertible");
    return t.done();
}

Outcome duality_tables() {
    Tracker t("duality tables");
    t.guard("j-tables", [&] {
        for (const auto& r : pga::run_suite(pga::default_fixture_dir(), "j-tables"))
            t.require(r.ok, "j-tables line " + std::to_string(r.line) + ": " + r.expr + " gave " + r.actual);
    });
    for (int n = 1; n <= 4; ++n) {
        const auto& tab = pga::duality_table(n);
        for (int s = 0; s < (1 << (n + 1)); ++s) {
            auto f = tab.forward[s];
            auto g = tab.inverse[f.mask];
            t.require(g.mask == pga::Mask(s) && f.sign * g.sign == 1, "J^-1 J on blade " + std::to_string(s));
        }
    }
    return t.done();
}

Outcome duality_roundtrip(int per_n) {
    Tracker t("duality round trip");
    Rng rng(7);
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < per_n; ++i) {
            Multivector m = rng.mv(n);
            Multivector back = pga::dual_J_inv(pga::dual_J(m));
            t.require(pga::max_abs_diff(back, m) == 0, "J^-1 J not exact for n=" + std::to_string(n));
            t.require(pga::max_abs_diff(pga::identity_Id_inv(pga::identity_Id(m)), m) == 0, "Id round trip");
            t.require(pga::max_abs_diff(pga::ortho_O_inv(pga::ortho_O(m)), m) == 0, "O round trip");
        }
    return t.done();
}

Outcome linfunc_examples() {
    Tracker t("linear function examples");
    t.guard("linfunc suite", [&] {
        for (const auto& r : pga::run_suite(pga::default_fixture_dir(), "linfunc"))
            t.require(r.ok, "linfunc line " + std::to_string(r.line) + ": " + r.expr + " gave " + r.actual);
    });
    t.guard("example f", [&] {
        auto sig = Signature::named("euclidean", 2);
        Multivector P = pga::parse_multivector("e12 + 2e20 + 1.5e01", 2);
        auto f = pga::from_vector_map(2, [&](const Multivector& a) { return a + pga::inner(a, P, sig); });
        pga::Matrix want{{1, -1.5, 2}, {0, 1, -1}, {0, 1, 1}};
        pga::Matrix got = pga::matrix_repr(f);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.error(std::abs(got[i][j] - want[i][j]), 1e-9, "matrix entry");
        Multivector I = Multivector::pseudoscalar(2);
        t.error(rel(pga::apply(f, I), I * 2.0), 1e-9, "f(I)");
        t.error(std::abs(pga::determinant(f) - 2), 1e-9, "det");
        pga::Matrix adj = pga::matrix_repr(pga::adjoint(f));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.error(std::abs(adj[i][j] - want[j][i]), 1e-9, "adjoint entry");
        pga::Matrix inv = pga::matrix_repr(pga::inverse(f));
        pga::Matrix inv_want{{1, 1.75, -0.25}, {0, 0.5, 0.5}, {0, -0.5, 0.5}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.error(std::abs(inv[i][j] - inv_want[i][j]), 1e-9, "inverse entry");
        auto mink = Signature::named("minkowski", 2);
        auto h = pga::from_vector_map(2, [&](const Multivector& a) { return a + pga::inner(a, P, mink); });
        t.error(std::abs(pga::determinant(h)), 1e-9, "minkowski det");
    });
    return t.done();
}

namespace {

pga::LinFunc random_linfunc(Rng& rng, int n) {
    for (;;) {
        pga::Matrix m(n + 1, std::vector<double>(n + 1));
        for (auto& row : m)
            for (double& x : row) x = rng.uniform();
        for (int i = 0; i <= n; ++i) m[i][i] += 1.5;  // keep it away from singular
        auto f = pga::from_matrix(m);
        if (std::abs(pga::determinant(f)) > 0.2) return f;
    }
}

}  // namespace

Outcome linfunc_properties(int count) {
    Tracker t("linear function properties");
    Rng rng(11);
    auto E2 = Signature::named("euclidean", 2);
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % 4;
        auto f = random_linfunc(rng, n);
        auto g = random_linfunc(rng, n);
        t.guard("linfunc properties", [&] {
            Multivector A = rng.mv(n), B = rng.mv(n);
            Multivector lhs = pga::apply(f, wedge(A, B));
            t.error(rel(lhs, wedge(pga::apply(f, A), pga::apply(f, B))), 1e-10, "outermorphism");

            const double det = pga::determinant(f);
            Multivector X = rng.graded(n, std::min(2, n)), Y = rng.graded(n, std::min(2, n));
            Multivector jl = pga::apply(f, pga::join(X, Y));
            Multivector jr = pga::join(pga::apply(f, X), pga::apply(f, Y)) / det;
            t.error(rel(jl, jr), 1e-9, "join covariance");

            t.error(std::abs(pga::determinant(pga::compose(f, g)) - det * pga::determinant(g)) /
                        std::max(1.0, std::abs(det * pga::determinant(g))),
                    1e-9, "det of composition");

            Multivector a = rng.vec(n);
            Multivector x = pga::identity_Id(rng.vec(n));
            t.error(std::abs(pga::pairing(pga::apply(f, a), x) - pga::pairing(a, pga::apply(pga::adjoint(f), x))), 1e-9,
                    "adjoint pairing");

            t.error(rel(pga::inverse_via_adjoint(f, pga::apply(f, a)), a), 1e-9, "inverse");
        });
    }
    // area factor in the plane
    for (int i = 0; i < count; ++i) {
        auto f = random_linfunc(rng, 2);
        t.guard("det squared", [&] {
            Multivector P = rng.point(2), Q = rng.point(2), R = rng.point(2);
            double base = pga::join(pga::join(P, Q), R)[0];
            if (std::abs(base) < 1e-3) return;
            double img = pga::join(pga::join(pga::apply(f, P), pga::apply(f, Q)), pga::apply(f, R))[0];
            double d = pga::determinant(f);
            t.error(std::abs(img / base - d * d) / std::max(1.0, d * d), 1e-9, "(det f)^2");
        });
    }
    // a vector map built from a rotor keeps inner products
    for (int i = 0; i < count; ++i) {
        const int n = 2 + i % 3;
        auto sig = Signature::named("euclidean", n);
        t.guard("isometry", [&] {
            Multivector S = rng.motion(n);
            auto f = pga::from_vector_map(n, [&](const Multivector& a) { return pga::apply_motion(S, a, sig); });
            Multivector I = Multivector::pseudoscalar(n);
            for (int k = 0; k <= n; ++k) {
                Multivector e = Multivector::blade(n, 1u << k);
                t.error(rel(pga::apply(f, pga::geometric(e, I, sig)), pga::geometric(pga::apply(f, e), I, sig)), 1e-9,
                        "f(MI) = f(M)I");
            }
            Multivector a = rng.vec(n), b = rng.vec(n);
            double lhs = pga::inner(pga::apply(f, a), pga::apply(f, b), sig)[0];
            t.error(std::abs(lhs - pga::inner(a, b, sig)[0]), 1e-9, "f(a).f(b) = a.b");
        });
    }
    // example f rotates lines through its fixed point by 45 degrees and scales by sqrt 2
    Multivector Pf = pga::parse_multivector("e12 + 2e20 + 1.5e01", 2);
    auto f = pga::from_vector_map(2, [&](const Multivector& a) { return a + pga::inner(a, Pf, E2); });
    Multivector R = pga::rotor(pga::normalize(Pf, E2), M_PI / 4, E2);
    for (int i = 0; i < count; ++i) {
        t.guard("example f on lines", [&] {
            Multivector ap = pga::join(Pf, rng.point(2));
            Multivector want = pga::apply_motion(R, ap, E2) * std::sqrt(2.0);
            t.error(rel(pga::apply(f, ap), want, ap.max_abs()), 1e-9, "f(a_p) = sqrt2 R a_p R~");
        });
    }
    return t.done();
}

Outcome product_vs_oracle(int pairs_per_config) {
    Tracker t("geometric product vs oracle");
    Rng rng(21);
    int configs = 0;
    for (const auto& sig : all_configs()) {
        ++configs;
        double worst = 0;
        for (int i = 0; i < pairs_per_config; ++i) {
            Multivector a = rng.mv(sig.n), b = rng.mv(sig.n);
            worst = std::max(worst, pga::max_abs_diff(pga::geometric(a, b, sig), oracle::oracle_geometric(a, b, sig)));
        }
        t.error(worst, 1e-9, tag(sig));
        t.out.cases += pairs_per_config - 1;
    }
    t.out.detail = t.out.ok ? std::to_string(configs) + " configurations" : t.out.detail;
    return t.done();
}

Outcome join_vs_oracle(int pairs_per_n) {
    Tracker t("join vs oracle");
    Rng rng(31);
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < pairs_per_n; ++i) {
            int k = rng.integer(1, n + 1), l = rng.integer(1, n + 1);
            Multivector A = rng.blade(n, k), B = rng.blade(n, l);
            if (i % 10 == 0) B = A * rng.uniform(0.5, 2);                               // same flat
            if (i % 10 == 1 && k <= n) B = wedge(A, rng.vec(n));                          // B inside A
            t.guard("join n=" + std::to_string(n), [&] {
                Multivector K = pga::join(A, B);
                Multivector O = oracle::oracle_join(A, B);
                double scale = A.max_abs() * B.max_abs();
                if (O.is_zero()) {
                    t.error(K.max_abs() / std::max(scale, 1e-300), 1e-9, "join should vanish, n=" + std::to_string(n));
                } else {
                    t.require(oracle::proportionality(K, O, 1e-8) != 0,
                              "join not proportional to oracle, n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                  " l=" + std::to_string(l));
                }
            });
        }
    return t.done();
}

Outcome meet_and_incidence_vs_oracle(int count) {
    Tracker t("meet and incidence vs oracle");
    Rng rng(41);
    for (int i = 0; i < count; ++i) {
        const int n = 2 + i % 3;
        t.guard("meet", [&] {
            Multivector a = rng.vec(n), b = rng.vec(n);
            auto got = oracle::annihilator(oracle::span_of(wedge(a, b)), n + 1);
            t.require(oracle::same_subspace(got, oracle::oracle_meet(a, b)), "a ^ b subspace");
        });
        t.guard("incidence", [&] {
            Multivector P = rng.point(n);
            std::vector<Multivector> pts{P};
            for (int k = 1; k < n; ++k) pts.push_back(rng.point(n));
            Multivector on = pga::join_all(pts).mv;   // through P
            Multivector off = rng.vec(n);
            const double s = on.max_abs() * P.max_abs();
            bool k_on = pga::join(on, P).max_abs() <= 1e-9 * s;
            bool k_off = pga::join(off, P).max_abs() <= 1e-9 * off.max_abs() * P.max_abs();
            t.require(k_on == oracle::oracle_incidence(P, on), "incident point");
            t.require(k_off == oracle::oracle_incidence(P, off), "random hyperplane");
        });
    }
    return t.done();
}

Outcome central_points_vs_oracle(int count) {
    Tracker t("central points vs oracle");
    Rng rng(51);
    for (int i = 0; i < count; ++i) {
        const int n = 2 + i % 3;
        const int pts = 1 + (i / 3) % n;
        t.guard("central point", [&] {
            Multivector X = rng.flat(n, pts);
            auto want = oracle::oracle_closest_point(X);
            auto got = pga::central_point(X);
            t.error(vdist(got, want), 1e-8, "central point n=" + std::to_string(n) + " through " + std::to_string(pts));
        });
    }
    return t.done();
}

Outcome product_identities(int count) {
    Tracker t("dimension-independent identities");
    Rng rng(61);
    auto cfgs = named_configs();
    for (int i = 0; i < count; ++i) {
        const auto& sig = cfgs[i % cfgs.size()];
        const int n = sig.n;
        auto dot = [&](const Multivector& x, const Multivector& y) { return pga::inner(x, y, sig); };
        auto sdot = [&](const Multivector& x, const Multivector& y) { return pga::inner(x, y, sig)[0]; };
        Multivector a = rng.vec(n), b = rng.vec(n), c = rng.vec(n), d = rng.vec(n), g = rng.vec(n);
        t.guard(tag(sig), [&] {
            t.error(rel(dot(a, wedge(b, c)), c * sdot(a, b) - b * sdot(a, c)), 1e-10, "a.(b^c) " + tag(sig));
            t.error(rel(dot(a, wedge(wedge(b, c), d)),
                        wedge(c, d) * sdot(a, b) - wedge(b, d) * sdot(a, c) + wedge(b, c) * sdot(a, d)),
                    1e-10, "a.(b^c^d) " + tag(sig));
            Multivector ab = wedge(a, b);
            t.error(std::abs(dot(ab, wedge(c, d))[0] - (sdot(a, d) * sdot(b, c) - sdot(a, c) * sdot(b, d))), 1e-10,
                    "(a^b).(c^d) " + tag(sig));
            t.error(rel(dot(ab, wedge(wedge(c, d), g)),
                        g * dot(ab, wedge(c, d))[0] - d * dot(ab, wedge(c, g))[0] + c * dot(ab, wedge(d, g))[0]),
                    1e-10, "(a^b).(c^d^g) " + tag(sig));
            t.error(rel(pga::commutator(ab, wedge(c, d), sig), wedge(a, d) * sdot(b, c) + wedge(b, c) * sdot(a, d) -
                                                                    wedge(a, c) * sdot(b, d) - wedge(b, d) * sdot(a, c)),
                    1e-10, "(a^b)x(c^d) " + tag(sig));
        });
    }
    return t.done();
}

Outcome dot_to_vee(int count) {
    Tracker t("dot to vee");
    Rng rng(71);
    auto cfgs = named_configs(2, 4);
    for (int i = 0; i < count; ++i) {
        const auto& sig = cfgs[i % cfgs.size()];
        const int n = sig.n;
        int k = rng.integer(1, n + 1), l = rng.integer(k, n + 1);
        Multivector A = rng.blade(n, k), B = rng.blade(n, l);
        Multivector I = Multivector::pseudoscalar(n);
        t.guard(tag(sig), [&] {
            Multivector dot = pga::inner(A, B, sig);
            t.error(rel(dot, pga::join(pga::geometric(A, I, sig), B)), 1e-9, "A.B = (AI) v B " + tag(sig));
            t.error(rel(pga::geometric(dot, I, sig), wedge(A, pga::geometric(B, I, sig))), 1e-9,
                    "(A.B)I = A ^ (BI) " + tag(sig));
        });
    }
    return t.done();
}

Outcome grade_support(int count) {
    Tracker t("grade table support");
    Rng rng(81);
    auto cfgs = all_configs();
    for (int i = 0; i < count; ++i) {
        const auto& sig = cfgs[i % cfgs.size()];
        const int n = sig.n, top = n + 1;
        int k = rng.integer(0, top), l = rng.integer(0, top);
        Multivector A = rng.graded(n, k), B = rng.graded(n, l);
        Multivector P = pga::geometric(A, B, sig);
        const int lo = std::abs(k - l), hi = std::min(k + l, 2 * top - k - l);
        double stray = 0;
        for (int s = 0; s < P.size(); ++s) {
            int g = pga::grade_of(pga::Mask(s));
            bool listed = g >= lo && g <= hi && (g - lo) % 2 == 0;
            if (!listed) stray = std::max(stray, std::abs(P[pga::Mask(s)]));
        }
        t.error(stray, 1e-12, "grades " + std::to_string(k) + "x" + std::to_string(l) + " " + tag(sig));
    }
    return t.done();
}

Outcome jacobi(int count) {
    Tracker t("Jacobi identity");
    Rng rng(91);
    auto cfgs = all_configs();
    for (int i = 0; i < count; ++i) {
        const auto& sig = cfgs[i % cfgs.size()];
        Multivector A = rng.graded(sig.n, 2), B = rng.graded(sig.n, 2), C = rng.graded(sig.n, 2);
        auto x = [&](const Multivector& p, const Multivector& q) { return pga::commutator(p, q, sig); };
        Multivector J = x(x(A, B), C) + x(x(B, C), A) + x(x(C, A), B);
        t.error(J.max_abs(), 1e-9, tag(sig));
        t.require(x(A, B).homogeneous_grade(1e-12) == 2 || x(A, B).is_zero(1e-12), "commutator of bivectors " + tag(sig));
    }
    return t.done();
}

Outcome spinor_closure(int count) {
    Tracker t("spinor closure");
    Rng rng(101);
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % 4;
        auto sig = Signature::named("euclidean", n);
        t.guard("spinors", [&] {
            Multivector S1, S2;
            if (n == 1) {
                S1 = pga::translator(pga::parse_multivector("e1", 1), rng.uniform(-3, 3), sig);
                S2 = pga::translator(pga::parse_multivector("e1", 1), rng.uniform(-3, 3), sig);
            } else {
                S1 = rng.motion(n);
                S2 = rng.motion(n);
            }
            Multivector S = pga::geometric(S1, S2, sig);
            Multivector one = Multivector::scalar(n, 1.0);
            t.error(rel(pga::geometric(S, pga::reverse(S), sig), one), 1e-9, "S S~ = 1, n=" + std::to_string(n));
            t.require(pga::is_spinor(S, sig), "product of spinors, n=" + std::to_string(n));
        });
    }
    return t.done();
}

Outcome motion_invariance(int count) {
    Tracker t("motion invariance");
    Rng rng(111);
    for (int i = 0; i < count; ++i) {
        const int n = 2 + i % 3;
        auto sig = Signature::named("euclidean", n);
        t.guard("invariance", [&] {
            Multivector S = rng.motion(n);
            auto M = [&](const Multivector& x) { return pga::apply_motion(S, x, sig); };
            Multivector P = rng.point(n), Q = rng.point(n);
            t.error(std::abs(pga::distance(M(P), M(Q), sig) - pga::distance(P, Q, sig)), 1e-9, "distance");
            Multivector a = pga::normalize(rng.vec(n), sig), b = pga::normalize(rng.vec(n), sig);
            t.error(std::abs(pga::angle(M(a), M(b), sig) - pga::angle(a, b, sig)), 1e-9, "angle");
            std::vector<Multivector> pts{P};
            for (int k = 1; k < n; ++k) pts.push_back(rng.point(n));
            Multivector h = pga::join_all(pts).mv;
            t.error(pga::join(M(h), M(P)).max_abs() / std::max(1.0, h.max_abs()), 1e-9, "incidence");
        });
    }
    return t.done();
}

Outcome simplicity_preserved(int count) {
    Tracker t("simplicity under motions");
    Rng rng(121);
    for (int i = 0; i < count; ++i) {
        const int n = 3 + i % 2;
        auto sig = Signature::named("euclidean", n);
        t.guard("simplicity", [&] {
            Multivector S = rng.motion(n);
            int pts = n == 3 ? 2 : 2 + (i / 2) % 2;  // lines; planes too in n = 4
            Multivector X = rng.flat(n, pts);
            Multivector Y = pga::apply_motion(S, X, sig);
            t.require(pga::is_simple(Y), "kernel simplicity n=" + std::to_string(n));
            t.require(oracle::is_simple(Y), "oracle simplicity n=" + std::to_string(n));
            if (Y.homogeneous_grade(1e-12) == 2)
                t.error(wedge(Y, Y).max_abs() / std::max(1.0, Y.max_abs() * Y.max_abs()), 1e-9, "Pluecker condition");
        });
    }
    return t.done();
}

Outcome reciprocity(int count) {
    Tracker t("central point reciprocity");
    Rng rng(131);
    for (int i = 0; i < count; ++i) {
        const int n = 2 + i % 3;
        const int pts = 1 + (i / 3) % n;
        t.guard("reciprocity", [&] {
            Multivector X = rng.flat(n, pts);
            double dc = vlen(pga::central_point(X));
            if (dc < 1e-3) return;
            double di = vlen(pga::dual_central_point(X));
            t.error(std::abs(dc * di - 1), 1e-9, "d_C d_I n=" + std::to_string(n) + " points=" + std::to_string(pts));
        });
    }
    return t.done();
}

Outcome decompositions(int count) {
    Tracker t("bivector and trivector splits");
    Rng rng(141);
    auto E4 = Signature::named("euclidean", 4);
    auto E3 = Signature::named("euclidean", 3);
    for (int i = 0; i < count; ++i) {
        t.guard("E4 bivector", [&] {
            Multivector pi = rng.graded(4, 2);
            auto pp = pga::decompose_bivector_E4(pi, E4);
            double sc = std::max(1.0, pi.max_abs() * pi.max_abs());
            t.error(rel(pp.pi1 + pp.pi2, pi), 1e-9, "pi1 + pi2");
            t.error(pga::max_abs_diff(pga::geometric(pp.pi1, pp.pi2, E4), wedge(pi, pi) * 0.5) / sc, 1e-9, "pi1 pi2");
            Multivector sq = pga::geometric(pp.pi1, pp.pi1, E4) + pga::geometric(pp.pi2, pp.pi2, E4);
            t.error(pga::max_abs_diff(sq, pga::inner(pi, pi, E4)) / sc, 1e-9, "pi1^2 + pi2^2");
            t.error(wedge(pp.pi1, pp.pi1).max_abs() / sc, 1e-9, "pi1 simple");
            t.error(wedge(pp.pi2, pp.pi2).max_abs() / sc, 1e-9, "pi2 simple");
        });
        t.guard("E4 trivector", [&] {
            Multivector phi = rng.graded(4, 3);
            auto ts = pga::decompose_trivector_E4(phi, E4);
            t.error(rel(ts.finite + ts.infinite, phi), 1e-9, "finite + infinite");
            t.require(pga::is_simple(ts.finite) && pga::is_simple(ts.infinite), "trivector parts simple");
            t.require(pga::at_infinity(ts.infinite), "infinite part at infinity");
        });
        t.guard("E3 bivector", [&] {
            Multivector L = rng.graded(3, 2);
            auto s = pga::bivector_axes_E3(L, E3);
            t.error(rel(s.finite_axis + s.infinite_axis, L), 1e-9, "axes sum");
            t.require(pga::is_simple(s.finite_axis) && pga::at_infinity(s.infinite_axis), "axes shape");
        });
    }
    return t.done();
}

Outcome isoclinic(int count) {
    Tracker t("isoclinic classification");
    Rng rng(151);
    auto E4 = Signature::named("euclidean", 4);
    Multivector e12 = pga::parse_multivector("e12", 4), e34 = pga::parse_multivector("e34", 4);
    for (int i = 0; i < count; ++i) {
        t.guard("isoclinic", [&] {
            Multivector S = rng.motion(4);
            Multivector s1 = pga::apply_motion(S, e12, E4), s2 = pga::apply_motion(S, e34, E4);
            double alpha = rng.uniform(0.2, 3), beta = alpha + (rng.integer(0, 1) ? 1 : -1) * rng.uniform(0.1, 1);
            t.require(pga::classify_motion_E4((s1 + s2) * alpha, E4) == pga::MotionKind::Isoclinic, "equal angles");
            t.require(!pga::decompose_bivector_E4((s1 + s2) * alpha, E4).unique, "equal angles not unique");
            t.require(pga::classify_motion_E4(s1 * alpha + s2 * beta, E4) == pga::MotionKind::DoubleRotation,
                      "unequal angles");
            Multivector R = pga::motion_E4(s1, s2, alpha, alpha, E4);
            Multivector C = wedge(s1, s2);
            t.error(rel(pga::apply_motion(R, C, E4), C), 1e-8, "fixed point");
        });
    }
    return t.done();
}

Outcome one_dimensional(int count) {
    Tracker t("one-dimensional identities");
    Rng rng(161);
    auto E1 = Signature::named("euclidean", 1);
    auto xof = [](const Multivector& a) { return -a[1] / a[2]; };
    Multivector e1 = pga::parse_multivector("e1", 1);
    for (int i = 0; i < count; ++i) {
        double x = rng.uniform(-5, 5), xb = rng.uniform(-5, 5), lam = rng.uniform(-5, 5), gam = rng.uniform(-3, 3);
        Multivector a = pga::point({x}).mv * rng.uniform(0.5, 2), b = pga::point({xb}).mv * rng.uniform(0.5, 2);
        t.guard("1D", [&] {
            Multivector T = pga::translator(e1, lam, E1);
            double want = x + lam;
            t.error(std::abs(xof(pga::apply_motion(T, a, E1)) - want) / std::max(1.0, std::abs(want)), 1e-12,
                    "translation");
            Multivector r = -pga::geometric(pga::geometric(b, a, E1), pga::inverse(b, E1), E1);
            want = xb - (x - xb);
            t.error(std::abs(xof(r) - want) / std::max(1.0, std::abs(want)), 1e-12, "reflection");
            t.error(rel(pga::reflect(a, b, pga::View::TopDown, E1), r), 1e-12, "reflect top-down");
            want = xb + gam * (x - xb);
            t.error(std::abs(xof(pga::scale(a, b, gam, E1)) - want) / std::max(1.0, std::abs(want)), 1e-12, "scaling");
        });
    }
    return t.done();
}

Outcome fixtures_all() {
    Tracker t("fixtures");
    t.guard("check all", [&] {
        for (const auto& s : pga::suite_names())
            for (const auto& r : pga::run_suite(pga::default_fixture_dir(), s))
                t.require(r.ok, s + ":" + std::to_string(r.line) + " " + r.expr + " gave " + r.actual);
    });
    return t.done();
}

Outcome text_roundtrip(int count) {
    Tracker t("text round trip");
    Rng rng(171);
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % 4;
        pga::Side side = i % 2 ? pga::Side::Target : pga::Side::Dual;
        Multivector m(n, side);
        for (int s = 0; s < m.size(); ++s) {
            int kind = rng.integer(0, 4);
            double v = kind == 0 ? 0.0 : rng.uniform() * std::pow(10.0, rng.integer(-12, 12));
            if (kind == 1) v = std::round(v);
            m[pga::Mask(s)] = v;
        }
        if (m.is_zero()) m[0] = 1.5;
        t.guard("round trip", [&] {
            std::string text = pga::to_text(m, {true, 0.0});
            Multivector back = pga::parse_multivector(text, n, side);
            bool same = back.side() == m.side();
            for (int s = 0; s < m.size(); ++s) same = same && back[pga::Mask(s)] == m[pga::Mask(s)];
            t.require(same, "not bit-exact: " + text);
        });
    }
    return t.done();
}

}  // namespace checks
