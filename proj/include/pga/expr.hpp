#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pga/linfunc.hpp"
#include "pga/multivector.hpp"

namespace pga {

/// Result of evaluating an expression.
struct Value {
    enum class Type { MV, List, Text, Func };
    Type type = Type::MV;
    Multivector mv;
    std::vector<double> list;
    std::string text;
    LinFunc func;

    static Value of(const Multivector& m);
    static Value of_list(std::vector<double> v);
    static Value of_text(std::string s);
    static Value of_func(const LinFunc& f);

    bool is_scalar() const;
    double scalar() const;  // throws unless is_scalar()
};

class Evaluator {
public:
    Evaluator(int n, const std::string& metric);
    int n() const { return sig_.n; }
    const Signature& signature() const { return sig_; }
    /// Statements separated by ';' or newlines; `let x = expr` binds x.
    /// Returns the value of the last expression statement.
    Value run(std::string_view program);
    Value eval(std::string_view expr);
    void bind(const std::string& name, const Value& v) { vars_[name] = v; }

private:
    Signature sig_;
    std::map<std::string, Value> vars_;
    friend class Parser;
};

std::string format_value(const Value& v, bool exact = false);
/// JSON record {text, scalar?, entity?, coords?, matrix?} as a string.
std::string value_json(const Value& v, const Signature& sig);
/// Coefficients within tol * max(1, |expected|); lists elementwise; text exact.
bool values_match(const Value& actual, const Value& expected, double tol);

struct CheckResult {
    std::string suite;
    int line = 0;
    std::string expr;
    std::string expected;
    std::string actual;
    bool ok = false;
};

const std::vector<std::string>& suite_names();
/// Runs tests/fixtures/<suite>.txt. Throws on unknown suites or unreadable files.
std::vector<CheckResult> run_suite(const std::string& fixture_dir, const std::string& suite, double tol = 1e-9);
/// Compiled-in location of the fixtures.
std::string default_fixture_dir();

}  // namespace pga
