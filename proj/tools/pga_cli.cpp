// pga: evaluate expressions, run the example fixtures, and convert linear functions.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pga/expr.hpp"
#include "pga/linfunc.hpp"
#include "pga/text.hpp"

namespace {

int run_eval(int n, const std::string& metric, bool json, double tol, bool from_stdin, const std::string& expr) {
    pga::Evaluator ev(n, metric);
    auto emit = [&](pga::Value v) {
        if (v.type == pga::Value::Type::MV) v.mv = v.mv.chopped(tol * std::max(1.0, v.mv.max_abs()));
        if (json)
            std::cout << pga::value_json(v, ev.signature()) << "\n";
        else
            std::cout << pga::format_value(v) << "\n";
    };
    if (!from_stdin) {
        emit(ev.run(expr));
        return 0;
    }
    // line mode: one program per line, `let` bindings carry over
    std::string line;
    int status = 0;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            emit(ev.run(line));
        } catch (const pga::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            status = 1;
        }
    }
    return status;
}

int run_check(const std::string& suite, const std::string& dir, double tol, bool verbose) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = pga::suite_names();
    else
        suites = {suite};
    int pass = 0, fail = 0;
    for (const auto& s : suites) {
        for (const auto& r : pga::run_suite(dir, s, tol)) {
            if (r.ok) {
                ++pass;
                if (verbose) std::cout << "PASS " << s << ":" << r.line << "  " << r.expr << "\n";
            } else {
                ++fail;
                std::cout << "FAIL " << s << ":" << r.line << "  " << r.expr << "\n"
                          << "     expected: " << r.expected << "\n"
                          << "     actual:   " << r.actual << "\n";
            }
        }
    }
    std::cout << pass << " passed, " << fail << " failed\n";
    return fail == 0 ? 0 : 1;
}

// Matrix JSON ({"matrix": [[...]]} or a bare array) from stdin or --file.
int run_linfunc(const std::string& file, const std::string& op) {
    nlohmann::json in;
    if (file.empty() || file == "-")
        std::cin >> in;
    else {
        std::ifstream f(file);
        if (!f) throw pga::Error("cannot read " + file);
        f >> in;
    }
    pga::Matrix m = in.is_array() ? in.get<pga::Matrix>() : in.at("matrix").get<pga::Matrix>();
    pga::LinFunc f = pga::from_matrix(m);
    nlohmann::json out;
    out["det"] = pga::determinant(f);
    out["trace"] = pga::trace(f);
    if (op == "inverse")
        out["matrix"] = pga::matrix_repr(pga::inverse(f));
    else if (op == "adjoint")
        out["matrix"] = pga::matrix_repr(pga::adjoint(f));
    else if (op == "identity")
        out["matrix"] = pga::matrix_repr(f);
    else if (op != "det" && op != "trace")
        throw pga::Error("unknown linfunc op '" + op + "'");
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective geometric algebra kernel for n = 1..4"};
    app.require_subcommand(1);

    int n = 2;
    std::string metric = "euclidean";
    bool json = false, from_stdin = false;
    double tol = 1e-12;
    std::string expr;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression");
    eval->add_option("-n,--n", n, "Space dimension")->check(CLI::Range(1, 4));
    eval->add_option("-m,--metric", metric, "Metric")
        ->check(CLI::IsMember({"euclidean", "elliptic", "hyperbolic", "minkowski", "de_sitter", "anti_de_sitter"}));
    eval->add_flag("--json", json, "Emit JSON");
    eval->add_option("--tol", tol, "Relative size below which printed coefficients are dropped");
    eval->add_flag("--stdin", from_stdin, "Read one program per line from stdin");
    eval->add_option("expr", expr, "Expression");

    std::string suite, fixtures = pga::default_fixture_dir();
    bool verbose = false;
    double check_tol = 1e-9;
    auto* check = app.add_subcommand("check", "Run example fixtures");
    check->add_option("suite", suite, "Suite name or 'all'")->required();
    check->add_option("--fixtures", fixtures, "Fixture directory");
    check->add_option("--tol", check_tol, "Comparison tolerance");
    check->add_flag("-v,--verbose", verbose, "List passing fixtures too");

    std::string file, op = "identity";
    auto* lin = app.add_subcommand("linfunc", "Matrix JSON in, function data out");
    lin->add_option("--file", file, "JSON file (default stdin)");
    lin->add_option("--op", op, "identity|inverse|adjoint|det|trace");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*eval) {
            if (!from_stdin && expr.empty()) throw pga::Error("no expression given");
            return run_eval(n, metric, json, tol, from_stdin, expr);
        }
        if (*check) return run_check(suite, fixtures, check_tol, verbose);
        if (*lin) return run_linfunc(file, op);
    } catch (const pga::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
