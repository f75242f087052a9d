#include "pga/expr.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "pga/algebra.hpp"
#include "pga/duality.hpp"
#include "pga/euclid.hpp"
#include "pga/geometry.hpp"
#include "pga/motions.hpp"
#include "pga/text.hpp"

#ifndef PGA_FIXTURE_DIR
#define PGA_FIXTURE_DIR "tests/fixtures"
#endif

namespace pga {

Value Value::of(const Multivector& m) {
    Value v;
    v.type = Type::MV;
    v.mv = m;
    return v;
}

Value Value::of_list(std::vector<double> l) {
    Value v;
    v.type = Type::List;
    v.list = std::move(l);
    return v;
}

Value Value::of_text(std::string s) {
    Value v;
    v.type = Type::Text;
    v.text = std::move(s);
    return v;
}

Value Value::of_func(const LinFunc& f) {
    Value v;
    v.type = Type::Func;
    v.func = f;
    return v;
}

bool Value::is_scalar() const {
    if (type != Type::MV) return false;
    for (int i = 1; i < mv.size(); ++i)
        if (mv[i] != 0.0) return false;
    return true;
}

double Value::scalar() const {
    if (!is_scalar()) throw Error("expected a scalar");
    return mv[0];
}

namespace {

// ---- lexer ----------------------------------------------------------------

enum class Tok { Num, Blade, Ident, Str, Op, End };

struct Token {
    Tok kind;
    std::string text;
    double num = 0.0;
    size_t pos = 0;
    bool glued = false;  // no whitespace before this token
};

[[noreturn]] void fail_at(std::string_view src, size_t pos, const std::string& msg) {
    throw Error("parse error at position " + std::to_string(pos) + ": " + msg + " in '" + std::string(src) + "'");
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    bool space = true;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            space = true;
            continue;
        }
        Token t;
        t.pos = i;
        t.glued = !space;
        space = false;
        if (std::isdigit(c) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
            t.kind = Tok::Num;
            t.text = std::string(s.substr(i, j - i));
            char* end = nullptr;
            t.num = std::strtod(t.text.c_str(), &end);
            if (*end != '\0') fail_at(s, i, "bad number");
            i = j;
        } else if ((c == 'e' || c == 'E') && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                fail_at(s, i, "bad blade name");
            t.kind = Tok::Blade;
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            t.kind = Tok::Ident;
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else if (c == '"') {
            size_t j = s.find('"', i + 1);
            if (j == std::string_view::npos) fail_at(s, i, "unterminated string");
            t.kind = Tok::Str;
            t.text = std::string(s.substr(i + 1, j - i - 1));
            i = j + 1;
        } else if (std::string_view("+-*/^|&~!(),[]=").find(char(c)) != std::string_view::npos) {
            t.kind = Tok::Op;
            t.text = std::string(1, char(c));
            ++i;
        } else {
            fail_at(s, i, std::string("unexpected character '") + char(c) + "'");
        }
        out.push_back(t);
    }
    Token end;
    end.kind = Tok::End;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

// ---- value helpers ----------------------------------------------------------

const Multivector& mv_of(const Value& v) {
    if (v.type != Value::Type::MV) throw Error("expected a multivector");
    return v.mv;
}

double num_of(const Value& v) { return v.scalar(); }

// Bring a pure scalar onto the side of the other operand.
void align_sides(Multivector& a, Multivector& b) {
    if (a.n() != b.n()) throw Error("dimension mismatch");
    if (a.side() == b.side()) return;
    auto retag = [](const Multivector& m, Side s) {
        Multivector r(m.n(), s);
        r[0] = m[0];
        return r;
    };
    if (Value::of(a).is_scalar())
        a = retag(a, b.side());
    else if (Value::of(b).is_scalar())
        b = retag(b, a.side());
    else
        throw Error("side mismatch: cannot combine dual and target multivectors");
}

// Scalar literals are dual-side; let them stand for target scalars where one is required.
Multivector as_target(const Multivector& m) {
    if (m.side() == Side::Target || !Value::of(m).is_scalar()) return m;
    return Multivector::scalar(m.n(), m[0], Side::Target);
}

Value boolean(bool b, int n) { return Value::of(Multivector::scalar(n, b ? 1.0 : 0.0)); }

}  // namespace

// ---- parser / evaluator -------------------------------------------------------

class Parser {
public:
    Parser(Evaluator& ev, std::string_view src) : ev_(ev), src_(src), toks_(lex(src)) {}

    Value statement() {
        if (peek().kind == Tok::Ident && peek().text == "let") {
            ++p_;
            if (peek().kind != Tok::Ident) fail("expected a name after let");
            std::string name = peek().text;
            ++p_;
            expect("=");
            Value v = sum();
            end();
            ev_.vars_[name] = v;
            return v;
        }
        Value v = sum();
        end();
        return v;
    }

private:
    Evaluator& ev_;
    std::string_view src_;
    std::vector<Token> toks_;
    size_t p_ = 0;

    int n() const { return ev_.sig_.n; }
    const Signature& sig() const { return ev_.sig_; }
    const Token& peek(size_t k = 0) const { return toks_[std::min(p_ + k, toks_.size() - 1)]; }
    bool is_op(const char* o) const { return peek().kind == Tok::Op && peek().text == o; }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(src_, peek().pos, msg); }
    void expect(const char* o) {
        if (!is_op(o)) fail(std::string("expected '") + o + "'");
        ++p_;
    }
    void end() {
        if (peek().kind != Tok::End) fail("unexpected trailing input");
    }

    Value sum() {
        Value a = amp();
        while (is_op("+") || is_op("-")) {
            bool plus = peek().text == "+";
            ++p_;
            Value b = amp();
            if (a.type == Value::Type::List && b.type == Value::Type::List) {
                if (a.list.size() != b.list.size()) fail("list length mismatch");
                for (size_t i = 0; i < a.list.size(); ++i) a.list[i] += plus ? b.list[i] : -b.list[i];
                continue;
            }
            Multivector x = mv_of(a), y = mv_of(b);
            align_sides(x, y);
            a = Value::of(plus ? x + y : x - y);
        }
        return a;
    }

    Value amp() {
        Value a = wedge();
        while (is_op("&")) {
            ++p_;
            Value b = wedge();
            a = Value::of(join(mv_of(a), mv_of(b)));
        }
        return a;
    }

    Value wedge() {
        Value a = prod();
        while (true) {
            if (is_op("^")) {
                ++p_;
                Value b = prod();
                Multivector x = mv_of(a), y = mv_of(b);
                align_sides(x, y);
                a = Value::of(outer(x, y));
            } else if (is_op("|")) {
                ++p_;
                Value b = prod();
                a = Value::of(inner(mv_of(a), mv_of(b), sig()));
            } else if (peek().kind == Tok::Ident && peek().text == "x") {
                ++p_;
                Value b = prod();
                a = Value::of(commutator(mv_of(a), mv_of(b), sig()));
            } else {
                return a;
            }
        }
    }

    Value times(const Value& a, const Value& b) {
        if (a.type == Value::Type::List && b.is_scalar()) {
            Value r = a;
            for (double& x : r.list) x *= b.scalar();
            return r;
        }
        if (b.type == Value::Type::List && a.is_scalar()) return times(b, a);
        if (a.is_scalar()) return Value::of(mv_of(b) * a.scalar());
        if (b.is_scalar()) return Value::of(mv_of(a) * b.scalar());
        return Value::of(geometric(mv_of(a), mv_of(b), sig()));
    }

    Value prod() {
        Value a = unary();
        while (is_op("*") || is_op("/")) {
            bool mul = peek().text == "*";
            ++p_;
            Value b = unary();
            if (mul) {
                a = times(a, b);
            } else if (b.is_scalar()) {
                if (b.scalar() == 0.0) fail("division by zero");
                a = times(a, Value::of(Multivector::scalar(n(), 1.0 / b.scalar())));
            } else {
                a = Value::of(geometric(mv_of(a), inverse(mv_of(b), sig()), sig()));
            }
        }
        return a;
    }

    Value unary() {
        if (is_op("-")) {
            ++p_;
            Value v = unary();
            if (v.type == Value::Type::List) {
                for (double& x : v.list) x = -x;
                return v;
            }
            return Value::of(-mv_of(v));
        }
        if (is_op("+")) {
            ++p_;
            return unary();
        }
        if (is_op("~")) {
            ++p_;
            return Value::of(reverse(mv_of(unary())));
        }
        if (is_op("!")) {
            ++p_;
            return Value::of(inverse(mv_of(unary()), sig()));
        }
        return primary();
    }

    Multivector blade_literal(const Token& t, double c) {
        Side side = t.text[0] == 'e' ? Side::Dual : Side::Target;
        int sign = 1;
        Mask m = parse_digits(n(), std::string_view(t.text).substr(1), sign);
        return Multivector::blade(n(), m, c * sign, side);
    }

    Value primary() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::Num:
                ++p_;
                if (peek().kind == Tok::Blade && peek().glued) {
                    Token b = peek();
                    ++p_;
                    return Value::of(blade_literal(b, t.num));
                }
                return Value::of(Multivector::scalar(n(), t.num));
            case Tok::Blade:
                ++p_;
                return Value::of(blade_literal(t, 1.0));
            case Tok::Str:
                ++p_;
                return Value::of_text(t.text);
            case Tok::Ident: {
                ++p_;
                if (is_op("(")) {
                    ++p_;
                    std::vector<Value> args;
                    if (!is_op(")")) {
                        args.push_back(sum());
                        while (is_op(",")) {
                            ++p_;
                            args.push_back(sum());
                        }
                    }
                    expect(")");
                    try {
                        return call(t.text, args);
                    } catch (const Error& e) {
                        std::string msg = e.what();
                        if (msg.rfind("parse error", 0) == 0) throw;
                        throw Error(t.text + ": " + msg);
                    }
                }
                if (t.text == "pi") return Value::of(Multivector::scalar(n(), std::numbers::pi));
                if (t.text == "I") return Value::of(Multivector::pseudoscalar(n()));
                auto it = ev_.vars_.find(t.text);
                if (it == ev_.vars_.end()) fail_at(src_, t.pos, "unknown name '" + t.text + "'");
                return it->second;
            }
            case Tok::Op:
                if (t.text == "(") {
                    ++p_;
                    Value v = sum();
                    expect(")");
                    return v;
                }
                if (t.text == "[") {
                    ++p_;
                    std::vector<double> xs;
                    if (!is_op("]")) {
                        xs.push_back(num_of(sum()));
                        while (is_op(",")) {
                            ++p_;
                            xs.push_back(num_of(sum()));
                        }
                    }
                    expect("]");
                    return Value::of_list(xs);
                }
                fail("unexpected '" + t.text + "'");
            case Tok::End:
                fail("unexpected end of input");
        }
        fail("unexpected token");
    }

    // ---- functions ----

    static void arity(const std::vector<Value>& a, size_t lo, size_t hi = 0) {
        if (hi == 0) hi = lo;
        if (a.size() < lo || a.size() > hi) throw Error("wrong number of arguments");
    }

    std::vector<double> nums(const std::vector<Value>& a, size_t from) {
        std::vector<double> v;
        for (size_t i = from; i < a.size(); ++i) {
            if (a[i].type == Value::Type::List)
                v.insert(v.end(), a[i].list.begin(), a[i].list.end());
            else
                v.push_back(num_of(a[i]));
        }
        return v;
    }

    Value call(const std::string& f, const std::vector<Value>& a) {
        const Signature& s = sig();
        auto M = [&](size_t i) -> const Multivector& { return mv_of(a.at(i)); };
        auto N = [&](size_t i) { return num_of(a.at(i)); };
        auto mv1 = [&](auto fn) {
            arity(a, 1);
            return Value::of(fn(M(0)));
        };
        auto real1 = [&](double (*fn)(double)) {
            arity(a, 1);
            return Value::of(Multivector::scalar(n(), fn(N(0))));
        };

        // algebra
        if (f == "geometric") return arity(a, 2), Value::of(geometric(M(0), M(1), s));
        if (f == "outer") return arity(a, 2), Value::of(outer(M(0), M(1)));
        if (f == "inner") return arity(a, 2), Value::of(inner(M(0), M(1), s));
        if (f == "comm") return arity(a, 2), Value::of(commutator(M(0), M(1), s));
        if (f == "reverse") return mv1([](const Multivector& m) { return reverse(m); });
        if (f == "involute") return mv1([](const Multivector& m) { return involute(m); });
        if (f == "grade") return arity(a, 2), Value::of(grade_select(M(0), int(N(1))));
        if (f == "gsign") {
            arity(a, 2);
            std::vector<int> g;
            for (double x : a.at(1).list) g.push_back(int(x));
            return Value::of(grade_sign(M(0), g));
        }
        if (f == "scalar") return arity(a, 1), Value::of(Multivector::scalar(n(), M(0)[0]));
        if (f == "coef") {
            arity(a, 2);
            if (a[1].type != Value::Type::Text) throw Error("coef needs a label string");
            return Value::of(Multivector::scalar(n(), label_coef(M(0), a[1].text)));
        }
        if (f == "norm") return arity(a, 1), Value::of(Multivector::scalar(n(), norm(M(0), s)));
        if (f == "inverse") {
            arity(a, 1);
            if (a[0].type == Value::Type::Func) return Value::of_func(pga::inverse(a[0].func));
            return Value::of(pga::inverse(M(0), s));
        }
        if (f == "exp") return arity(a, 1), Value::of(pga::exp(M(0), s));
        if (f == "sin") return arity(a, 1), Value::of(pga::sin(M(0), s));
        if (f == "cos") return arity(a, 1), Value::of(pga::cos(M(0), s));
        if (f == "sqrt") return real1(std::sqrt);
        if (f == "acos") return real1(std::acos);
        if (f == "asin") return real1(std::asin);
        if (f == "abs") return real1(std::fabs);
        if (f == "atan2") return arity(a, 2), Value::of(Multivector::scalar(n(), std::atan2(N(0), N(1))));
        if (f == "deg") return arity(a, 1), Value::of(Multivector::scalar(n(), N(0) * 180.0 / std::numbers::pi));
        if (f == "rad") return arity(a, 1), Value::of(Multivector::scalar(n(), N(0) * std::numbers::pi / 180.0));

        // duality
        if (f == "dual") return mv1([](const Multivector& m) { return dual_J(m); });
        if (f == "undual") return mv1([](const Multivector& m) { return dual_J_inv(as_target(m)); });
        if (f == "Id") return mv1([](const Multivector& m) { return identity_Id(m); });
        if (f == "Id_inv") return mv1([](const Multivector& m) { return identity_Id_inv(as_target(m)); });
        if (f == "ortho") return mv1([](const Multivector& m) { return ortho_O(m); });
        if (f == "ortho_inv") return mv1([](const Multivector& m) { return ortho_O_inv(m); });
        if (f == "join" || f == "line") {
            if (a.size() < 2) throw Error("join needs at least two arguments");
            std::vector<Multivector> v;
            for (const auto& x : a) v.push_back(mv_of(x));
            return Value::of(join_all(v).mv);
        }
        if (f == "meet") {
            if (a.size() < 2) throw Error("meet needs at least two arguments");
            std::vector<Multivector> v;
            for (const auto& x : a) v.push_back(mv_of(x));
            return Value::of(meet(v).mv);
        }

        // geometry
        if (f == "point") {
            auto x = nums(a, 0);
            if (int(x.size()) != n()) throw Error("point needs " + std::to_string(n()) + " coordinates");
            return Value::of(point(x).mv);
        }
        if (f == "point_ow") {
            auto x = nums(a, 2);
            if (a.size() < 2 || int(x.size()) != n()) throw Error("point_ow needs orientation, weight and coordinates");
            return Value::of(point(x, int(N(0)), N(1)).mv);
        }
        if (f == "hyperplane" || f == "plane") {
            auto x = nums(a, 0);
            if (int(x.size()) != n() + 1) throw Error("hyperplane needs d and " + std::to_string(n()) + " normal entries");
            return Value::of(hyperplane(x[0], std::vector<double>(x.begin() + 1, x.end())).mv);
        }
        if (f == "classify") return arity(a, 1), Value::of_text(kind_name(classify(M(0))));
        if (f == "is_simple") return arity(a, 1), boolean(is_simple(M(0)), n());
        if (f == "at_infinity") return arity(a, 1), boolean(at_infinity(M(0)), n());
        if (f == "coords") return arity(a, 1), Value::of_list(point_coords(M(0)));
        if (f == "central") return arity(a, 1), Value::of_list(central_point(M(0)));
        if (f == "dual_central") return arity(a, 1), Value::of_list(dual_central_point(M(0)));
        if (f == "orient_td") return arity(a, 1), Value::of(orientation(M(0)).top_down);
        if (f == "orient_bu") return arity(a, 1), Value::of(orientation(M(0)).bottom_up);
        if (f == "orient_sign") return arity(a, 1), Value::of(Multivector::scalar(n(), orientation(M(0)).sign));
        if (f == "weight") return arity(a, 2), Value::of(Multivector::scalar(n(), weight(M(0), M(1))));
        if (f == "normalize") return arity(a, 1), Value::of(normalize(M(0), s));
        if (f == "polar") return arity(a, 1), Value::of(polar(M(0), s));

        // euclid-ops
        if (f == "distance") return arity(a, 2), Value::of(Multivector::scalar(n(), distance(M(0), M(1), s)));
        if (f == "angle") return arity(a, 2), Value::of(Multivector::scalar(n(), angle(M(0), M(1), s)));
        if (f == "project") return arity(a, 2), Value::of(project(M(0), M(1), s));
        if (f == "reject") return arity(a, 2), Value::of(reject(M(0), M(1), s));
        if (f == "proj_t" || f == "rej_t" || f == "proj_r" || f == "rej_r") {
            arity(a, 2);
            SkewKind k = f.back() == 't' ? SkewKind::Translational : SkewKind::Rotational;
            ProjRej pr = project_skew(M(0), M(1), k, s);
            return Value::of(f[0] == 'p' ? pr.proj : pr.rej);
        }
        if (f == "scale") return arity(a, 3), Value::of(pga::scale(M(0), M(1), N(2), s));
        if (f == "reflect_td") return arity(a, 2), Value::of(reflect(M(0), M(1), View::TopDown, s));
        if (f == "reflect_bu") return arity(a, 2), Value::of(reflect(M(0), M(1), View::BottomUp, s));
        if (f == "axes_fin") return arity(a, 1), Value::of(bivector_axes_E3(M(0), s).finite_axis);
        if (f == "axes_inf") return arity(a, 1), Value::of(bivector_axes_E3(M(0), s).infinite_axis);
        if (f == "axes_a") return arity(a, 1), Value::of(Multivector::scalar(n(), bivector_axes_E3(M(0), s).a));
        if (f == "planes1") return arity(a, 1), Value::of(decompose_bivector_E4(M(0), s).pi1);
        if (f == "planes2") return arity(a, 1), Value::of(decompose_bivector_E4(M(0), s).pi2);
        if (f == "planes_unique") return arity(a, 1), boolean(decompose_bivector_E4(M(0), s).unique, n());
        if (f == "tri_fin") return arity(a, 1), Value::of(decompose_trivector_E4(M(0), s).finite);
        if (f == "tri_inf") return arity(a, 1), Value::of(decompose_trivector_E4(M(0), s).infinite);

        // motions
        if (f == "rotor") return arity(a, 2), Value::of(rotor(M(0), N(1), s));
        if (f == "translator") return arity(a, 2), Value::of(translator(M(0), N(1), s));
        if (f == "screw") return arity(a, 3), Value::of(screw_E3(M(0), N(1), N(2), s));
        if (f == "motion") return arity(a, 4), Value::of(motion_E4(M(0), M(1), N(2), N(3), s));
        if (f == "motion_kind") return arity(a, 1), Value::of_text(motion_kind_name(classify_motion_E4(M(0), s)));
        if (f == "is_spinor") return arity(a, 1), boolean(is_spinor(M(0), s), n());
        if (f == "apply") {
            arity(a, 2);
            if (a[0].type == Value::Type::Func) return Value::of(pga::apply(a[0].func, M(1)));
            return Value::of(apply_motion(M(0), M(1), s));
        }
        if (f == "apply_p") return arity(a, 2), Value::of(apply_motion(M(0), M(1), s, true));

        // linear functions
        if (f == "lin_dot") {
            arity(a, 1);
            Multivector p = M(0);
            return Value::of_func(from_vector_map(n(), [&](const Multivector& v) { return v + inner(v, p, s); }));
        }
        if (f == "matrix") {
            Matrix m;
            for (const auto& r : a) {
                if (r.type != Value::Type::List) throw Error("matrix rows must be lists");
                m.push_back(r.list);
            }
            if (int(m.size()) != n() + 1) throw Error("matrix must have n+1 rows");
            return Value::of_func(from_matrix(m));
        }
        auto F = [&](size_t i) -> const LinFunc& {
            if (a.at(i).type != Value::Type::Func) throw Error("expected a linear function");
            return a[i].func;
        };
        if (f == "mat") {
            arity(a, 3);
            Matrix m = matrix_repr(F(0));
            int i = int(N(1)), j = int(N(2));
            if (i < 0 || j < 0 || i >= int(m.size()) || j >= int(m.size())) throw Error("matrix index out of range");
            return Value::of(Multivector::scalar(n(), m[i][j]));
        }
        if (f == "det") return arity(a, 1), Value::of(Multivector::scalar(n(), determinant(F(0))));
        if (f == "trace") return arity(a, 1), Value::of(Multivector::scalar(n(), pga::trace(F(0))));
        if (f == "adjoint") return arity(a, 1), Value::of_func(adjoint(F(0)));
        if (f == "finv") return arity(a, 2), Value::of(inverse_via_adjoint(F(0), M(1)));
        if (f == "compose") return arity(a, 2), Value::of_func(compose(F(0), F(1)));

        throw Error("unknown function");
    }
};

Evaluator::Evaluator(int n, const std::string& metric) : sig_(Signature::named(metric, n)) {}

Value Evaluator::eval(std::string_view expr) {
    Parser p(*this, expr);
    return p.statement();
}

Value Evaluator::run(std::string_view program) {
    Value last;
    bool any = false;
    size_t start = 0;
    for (size_t i = 0; i <= program.size(); ++i) {
        if (i == program.size() || program[i] == ';' || program[i] == '\n') {
            std::string_view stmt = program.substr(start, i - start);
            start = i + 1;
            if (stmt.find_first_not_of(" \t\r") == std::string_view::npos) continue;
            last = eval(stmt);
            any = true;
        }
    }
    if (!any) throw Error("empty program");
    return last;
}

std::string format_value(const Value& v, bool exact) {
    switch (v.type) {
        case Value::Type::MV: {
            FormatOptions o;
            o.exact = exact;
            return to_text(v.mv, o);
        }
        case Value::Type::List: {
            std::string s = "[";
            for (size_t i = 0; i < v.list.size(); ++i) {
                if (i) s += ", ";
                s += (v.list[i] < 0 ? "-" : "") + format_scalar(std::abs(v.list[i]), exact);
            }
            return s + "]";
        }
        case Value::Type::Text:
            return v.text;
        case Value::Type::Func: {
            Matrix m = matrix_repr(v.func);
            std::string s = "matrix(";
            for (size_t i = 0; i < m.size(); ++i) {
                if (i) s += ", ";
                s += format_value(Value::of_list(m[i]), exact);
            }
            return s + ")";
        }
    }
    return "";
}

namespace {

nlohmann::json entity_json(const Multivector& m, const Signature& sig) {
    nlohmann::json j;
    Kind k = classify(m);
    j["kind"] = kind_name(k);
    j["n"] = m.n();
    nlohmann::json coeffs = nlohmann::json::object();
    for (int i = 0; i < m.size(); ++i) {
        if (m[i] == 0.0) continue;
        const BladeLabel& l = preferred_label(m.n(), i);
        coeffs[i == 0 ? std::string("1") : "e" + l.digits] = m[i] * l.sign;
    }
    j["coeffs"] = coeffs;
    try {
        j["center"] = central_point(m);
    } catch (const Error&) {
    }
    try {
        OrientationReport o = orientation(m);
        j["top_down"] = to_text(o.top_down);
        j["bottom_up"] = to_text(o.bottom_up);
        if (o.sign != 0) j["sign"] = o.sign;
    } catch (const Error&) {
    }
    try {
        j["norm"] = norm(m, sig);
    } catch (const Error&) {
    }
    return j;
}

}  // namespace

std::string value_json(const Value& v, const Signature& sig) {
    nlohmann::json j;
    j["text"] = format_value(v);
    switch (v.type) {
        case Value::Type::MV:
            j["side"] = v.mv.side() == Side::Dual ? "dual" : "target";
            if (v.is_scalar()) j["scalar"] = v.mv[0];
            if (v.mv.side() == Side::Dual && !v.is_scalar()) {
                try {
                    j["entity"] = entity_json(v.mv, sig);
                } catch (const Error&) {
                    // not a blade
                }
            }
            break;
        case Value::Type::List:
            j["coords"] = v.list;
            break;
        case Value::Type::Text:
            break;
        case Value::Type::Func:
            j["matrix"] = matrix_repr(v.func);
            break;
    }
    return j.dump();
}

bool values_match(const Value& actual, const Value& expected, double tol) {
    auto close = [&](double x, double y) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); };
    if (actual.type != expected.type) return false;
    switch (actual.type) {
        case Value::Type::MV: {
            const Multivector &x = actual.mv, &y = expected.mv;
            if (x.n() != y.n()) return false;
            if (x.side() != y.side() && !(actual.is_scalar() && expected.is_scalar())) return false;
            double scale = std::max(1.0, y.max_abs());
            for (int i = 0; i < x.size(); ++i)
                if (std::abs(x[i] - y[i]) > tol * scale) return false;
            return true;
        }
        case Value::Type::List:
            if (actual.list.size() != expected.list.size()) return false;
            for (size_t i = 0; i < actual.list.size(); ++i)
                if (!close(actual.list[i], expected.list[i])) return false;
            return true;
        case Value::Type::Text:
            return actual.text == expected.text;
        case Value::Type::Func: {
            Matrix x = matrix_repr(actual.func), y = matrix_repr(expected.func);
            if (x.size() != y.size()) return false;
            for (size_t i = 0; i < x.size(); ++i)
                for (size_t j = 0; j < x.size(); ++j)
                    if (!close(x[i][j], y[i][j])) return false;
            return true;
        }
    }
    return false;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> v = {"algebra-examples", "j-tables",    "e1-examples", "e2-worked-examples",
                                               "e3-worked-examples", "e4-examples", "linfunc"};
    return v;
}

std::string default_fixture_dir() { return PGA_FIXTURE_DIR; }

namespace {

std::string trim(std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& dir, const std::string& suite, double tol) {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) throw Error("unknown suite '" + suite + "'");
    std::string path = dir + "/" + suite + ".txt";
    std::ifstream in(path);
    if (!in) throw Error("cannot read fixture file " + path);

    std::vector<CheckResult> out;
    Evaluator ev(2, "euclidean");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '@') {
            int n = ev.n();
            std::string metric = "euclidean";
            std::istringstream ss(line.substr(1));
            std::string kv;
            while (ss >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw Error(path + ":" + std::to_string(lineno) + ": bad directive");
                std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
                if (k == "n")
                    n = std::stoi(v);
                else if (k == "metric")
                    metric = v;
                else
                    throw Error(path + ":" + std::to_string(lineno) + ": unknown directive key " + k);
            }
            ev = Evaluator(n, metric);
            continue;
        }
        CheckResult r;
        r.suite = suite;
        r.line = lineno;
        auto sep = line.find("::");
        if (sep == std::string::npos) {
            // plain statement, e.g. a let binding
            r.expr = line;
            try {
                ev.eval(line);
            } catch (const Error& e) {
                r.actual = std::string("error: ") + e.what();
                r.ok = false;
                out.push_back(r);
            }
            continue;
        }
        r.expr = trim(line.substr(0, sep));
        std::string rhs = trim(line.substr(sep + 2));
        double line_tol = tol;
        auto pm = rhs.find("±");
        if (pm != std::string::npos) {
            line_tol = std::stod(trim(rhs.substr(pm + std::string("±").size())));
            rhs = trim(rhs.substr(0, pm));
        }
        r.expected = rhs;
        bool want_error = rhs.rfind("ERROR", 0) == 0;
        try {
            Value actual = ev.eval(r.expr);
            r.actual = format_value(actual);
            if (!want_error) {
                Value expected = ev.eval(rhs);
                r.expected = format_value(expected);
                // absolute tolerance when one is given explicitly
                if (pm != std::string::npos && actual.is_scalar() && expected.is_scalar())
                    r.ok = std::abs(actual.scalar() - expected.scalar()) <= line_tol;
                else
                    r.ok = values_match(actual, expected, line_tol);
            }
        } catch (const Error& e) {
            r.actual = std::string("error: ") + e.what();
            if (want_error) {
                std::string needle = trim(rhs.substr(5));
                if (!needle.empty() && needle[0] == ':') needle = trim(needle.substr(1));
                r.ok = needle.empty() || r.actual.find(needle) != std::string::npos;
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace pga
