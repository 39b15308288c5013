#include "literal.hpp"

#include "l2a/errors.hpp"

#include <algorithm>
#include <cctype>

namespace l2a {
namespace detail {
namespace {

std::string clean(std::string_view in) {
    std::string out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in.compare(i, 3, "\xE2\x88\x92") == 0) {
            out.push_back('-');
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(in[i]))) {
            out.push_back(in[i]);
        }
    }
    return out;
}

struct Product {
    ExpPoly coeff;
    bool has_blade = false;
    Blade blade;  // unsorted as written
};

class Parser {
public:
    Parser(int m, std::string_view text, BladeToken kind) : m_(m), s_(clean(text)), kind_(kind) {}

    std::map<Blade, ExpPoly> run(int& degree) {
        if (s_.empty()) fail("empty expression");
        std::map<Blade, ExpPoly> out;
        int deg = -1;
        bool first = true;
        while (pos_ < s_.size() || first) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Product p = term();
            int d = p.has_blade ? static_cast<int>(p.blade.size()) : 0;
            if (p.has_blade || kind_ == BladeToken::None) {
                if (deg == -1) deg = d;
                else if (deg != d) fail("terms of different degree");
            } else if (!p.coeff.is_zero()) {
                if (deg == -1) deg = 0;
                else if (deg != 0) fail("terms of different degree");
            }
            ExpPoly c = sign < 0 ? -p.coeff : p.coeff;
            int bsign = sort_blade(p.blade);
            if (bsign == 0) continue;
            if (bsign < 0) c = -c;
            auto it = out.find(p.blade);
            if (it == out.end()) {
                if (!c.is_zero()) out.emplace(p.blade, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        degree = deg;
        return out;
    }

    ExpPoly scalar_expr() {
        ExpPoly acc(m_);
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
            else if (!first) break;
            first = false;
            Product p = term();
            if (p.has_blade) fail("basis element inside parentheses");
            acc += sign < 0 ? -p.coeff : p.coeff;
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at offset " + std::to_string(pos_) + " in '" + s_ + "': " + msg);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() {
        if (pos_ >= s_.size()) fail("unexpected end of input");
        return s_[pos_++];
    }
    bool starts(std::string_view t) const { return s_.compare(pos_, t.size(), t) == 0; }

    unsigned long integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(get() - '0');
            if (v > 1000000000UL) fail("integer too large");
        }
        return v;
    }

    Rational rational() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return parse_rational(std::string_view(s_).substr(start, pos_ - start));
    }

    int coord_index() {
        unsigned long i = integer();
        if (i < 1 || static_cast<int>(i) > m_) fail("coordinate index " + std::to_string(i) + " outside chart of dimension " + std::to_string(m_));
        return static_cast<int>(i) - 1;
    }

    bool at_vector_blade() const {
        return kind_ == BladeToken::Vector && peek() == 'e' && pos_ + 1 < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
    }
    bool at_form_blade() const { return kind_ == BladeToken::Form && starts("dq"); }

    Blade blade() {
        Blade b;
        const char* tok = kind_ == BladeToken::Vector ? "e" : "dq";
        while (true) {
            if (!starts(tok)) fail(std::string("expected '") + tok + "'");
            pos_ += std::string_view(tok).size();
            b.push_back(coord_index());
            if (peek() == '^' && s_.compare(pos_ + 1, std::string_view(tok).size(), tok) == 0) {
                ++pos_;
                continue;
            }
            break;
        }
        return b;
    }

    RVec linform() {
        RVec l = zeros(m_);
        bool first = true;
        bool any = false;
        while (peek() != ')') {
            int sign = 1;
            if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
            else if (!first) fail("expected '+' or '-' in exponent");
            first = false;
            Rational c = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = rational();
                if (peek() == '*') ++pos_;
            }
            if (peek() != 'q') fail("expected coordinate in exponent");
            ++pos_;
            int i = coord_index();
            l[i] += sign * c;
            any = true;
        }
        if (!any) fail("empty exponent");
        return l;
    }

    ExpPoly scalar_factor() {
        if (peek() == '(') {
            ++pos_;
            ExpPoly e = scalar_expr();
            if (get() != ')') fail("expected ')'");
            return e;
        }
        if (starts("exp(")) {
            pos_ += 4;
            RVec l = linform();
            if (get() != ')') fail("expected ')'");
            return ExpPoly::monomial(m_, Rational(1), std::vector<unsigned>(m_, 0), l);
        }
        if (peek() == 'q') {
            ++pos_;
            int i = coord_index();
            unsigned long e = 1;
            if (peek() == '^') {
                ++pos_;
                e = integer();
            }
            std::vector<unsigned> mono(m_, 0);
            mono[i] = static_cast<unsigned>(e);
            return ExpPoly::monomial(m_, Rational(1), mono, zeros(m_));
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return ExpPoly::constant(m_, rational());
        fail("unexpected character");
    }

    Product term() {
        Product p;
        p.coeff = ExpPoly::constant(m_, Rational(1));
        while (true) {
            if (at_vector_blade() || at_form_blade()) {
                if (p.has_blade) fail("more than one basis element in a term");
                p.has_blade = true;
                p.blade = blade();
            } else {
                p.coeff = p.coeff * scalar_factor();
            }
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return p;
    }

    // Sorts the blade in place; returns the permutation sign or 0 on repeats.
    static int sort_blade(Blade& b) {
        int sign = 1;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j + 1 < b.size() - i; ++j)
                if (b[j] > b[j + 1]) {
                    std::swap(b[j], b[j + 1]);
                    sign = -sign;
                }
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i] == b[i + 1]) return 0;
        return sign;
    }

    int m_;
    std::string s_;
    BladeToken kind_;
    std::size_t pos_ = 0;
};

}  // namespace

std::map<Blade, ExpPoly> parse_blade_sum(int m, std::string_view text, BladeToken kind, int& degree) {
    Parser p(m, text, kind);
    return p.run(degree);
}

}  // namespace detail

ExpPoly parse_exppoly(int m, std::string_view text) {
    if (m < 1) throw InputError("chart dimension must be positive");
    int deg = 0;
    auto r = detail::parse_blade_sum(m, text, detail::BladeToken::None, deg);
    auto it = r.find(Blade{});
    if (it == r.end()) return ExpPoly(m);
    return it->second;
}

}  // namespace l2a
