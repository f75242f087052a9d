#include "pga/text.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace pga {

namespace {

const char* const kLabels1[] = {"", "0", "1", "01"};
const char* const kLabels2[] = {"", "0", "1", "2", "12", "20", "01", "012"};
const char* const kLabels3[] = {"",    "0",   "1",   "2",   "3",   "10",  "20",  "30",
                                "23",  "31",  "12",  "123", "320", "130", "210", "0123"};
const char* const kLabels4[] = {"",     "0",    "1",    "2",    "3",    "4",    "10",   "20",
                                "30",   "40",   "23",   "31",   "12",   "41",   "42",   "43",
                                "234",  "314",  "124",  "321",  "410",  "420",  "430",  "230",
                                "310",  "120",  "1234", "2340", "3140", "1240", "3210", "01234"};

using Table = std::array<BladeLabel, kMaxSize>;

Table build(int n, const char* const* labels) {
    Table t{};
    int count = 1 << (n + 1);
    for (int i = 0; i < count; ++i) {
        int sign;
        Mask m = parse_digits(n, labels[i], sign);
        t[m] = BladeLabel{labels[i], sign};
    }
    return t;
}

const Table& table(int n) {
    static const std::array<Table, 4> tables = {build(1, kLabels1), build(2, kLabels2),
                                                build(3, kLabels3), build(4, kLabels4)};
    if (n < 1 || n > kMaxN) throw Error("dimension must be in 1..4");
    return tables[n - 1];
}

[[noreturn]] void parse_fail(std::string_view text, size_t pos, const std::string& what) {
    throw Error("parse error at position " + std::to_string(pos) + ": " + what + " in '" +
                std::string(text) + "'");
}

}  // namespace

Mask parse_digits(int n, std::string_view digits, int& sign) {
    std::vector<int> idx;
    for (char ch : digits) {
        if (ch < '0' || ch > '9') throw Error("bad blade index '" + std::string(1, ch) + "'");
        int i = ch - '0';
        if (i > n) throw Error("blade index " + std::to_string(i) + " exceeds n=" + std::to_string(n));
        idx.push_back(i);
    }
    Mask m = 0;
    int inversions = 0;
    for (size_t a = 0; a < idx.size(); ++a) {
        if (m & (1u << idx[a])) throw Error("repeated blade index in '" + std::string(digits) + "'");
        m |= 1u << idx[a];
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] > idx[b]) ++inversions;
    }
    sign = (inversions & 1) ? -1 : 1;
    return m;
}

const BladeLabel& preferred_label(int n, Mask m) {
    const Table& t = table(n);
    if (m >= Mask(1 << (n + 1))) throw Error("blade index out of range");
    return t[m];
}

double label_coef(const Multivector& m, std::string_view digits) {
    int s;
    Mask k = parse_digits(m.n(), digits, s);
    return s * m[k];
}

void add_label(Multivector& m, std::string_view digits, double c) {
    int s;
    Mask k = parse_digits(m.n(), digits, s);
    m[k] += s * c;
}

std::string format_scalar(double v, bool exact) {
    if (v == 0.0) return "0";
    char buf[512];
    if (exact) {
        auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
        return std::string(buf, res.ptr);
    }
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s(buf);
    if (s.find('e') != std::string::npos) {
        // Keep the grammar free of exponent notation: re-emit the rounded value in fixed form.
        double r = std::strtod(buf, nullptr);
        auto res = std::to_chars(buf, buf + sizeof buf, r, std::chars_format::fixed);
        s.assign(buf, res.ptr);
    }
    return s;
}

std::string to_text(const Multivector& m, const FormatOptions& opt) {
    const Table& t = table(m.n());
    const char letter = m.side() == Side::Dual ? 'e' : 'E';
    double tol = opt.exact ? 0.0 : opt.drop_tol * std::max(1.0, m.max_abs());
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        double c = m[i];
        if (c == 0.0 || std::abs(c) <= tol) continue;
        c *= t[i].sign;
        bool neg = std::signbit(c);
        std::string mag = format_scalar(std::abs(c), opt.exact);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag;
            out += letter;
            out += t[i].digits;
        }
    }
    return out.empty() ? "0" : out;
}

Multivector parse_multivector(std::string_view text, int n, Side side) {
    Multivector dual(n, Side::Dual), target(n, Side::Target);
    bool saw_dual = false, saw_target = false;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) parse_fail(text, i, "empty multivector");
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        double sgn = 1.0;
        if (text[i] == '+' || text[i] == '-') {
            sgn = text[i] == '-' ? -1.0 : 1.0;
            ++i;
            skip();
        } else if (!first) {
            parse_fail(text, i, "expected '+' or '-'");
        }
        first = false;
        size_t start = i;
        double coef = 1.0;
        bool has_num = false;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
        if (i > start) {
            auto res = std::from_chars(text.data() + start, text.data() + i, coef);
            if (res.ec != std::errc() || res.ptr != text.data() + i) parse_fail(text, start, "bad number");
            has_num = true;
        }
        skip();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip();
        }
        if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
            bool tgt = text[i] == 'E';
            size_t ds = ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == ds) parse_fail(text, ds, "blade needs index digits");
            int s;
            Mask m;
            try {
                m = parse_digits(n, text.substr(ds, i - ds), s);
            } catch (const Error& e) {
                parse_fail(text, ds, e.what());
            }
            (tgt ? target : dual)[m] += sgn * s * coef;
            (tgt ? saw_target : saw_dual) = true;
        } else {
            if (!has_num) parse_fail(text, i, "expected number or blade");
            dual[0] += sgn * coef;
            target[0] += sgn * coef;
        }
    }
    if (saw_dual && saw_target) throw Error("cannot mix e (dual) and E (target) blades");
    if (saw_target) return target;
    if (saw_dual) return dual;
    return side == Side::Dual ? dual : target;
}

}  // namespace pga
