#include "l2a/rational.hpp"

#include "l2a/errors.hpp"

#include <cctype>

namespace l2a {

Rational parse_rational(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    // accept the unicode minus used in hand-written files
    std::string u;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.compare(i, 3, "\xE2\x88\x92") == 0) {
            u.push_back('-');
            i += 2;
        } else {
            u.push_back(t[i]);
        }
    }
    if (u.empty()) throw InputError("empty rational");
    std::size_t i = 0;
    if (u[0] == '+' || u[0] == '-') i = 1;
    bool slash = false, digit = false;
    for (std::size_t k = i; k < u.size(); ++k) {
        if (std::isdigit(static_cast<unsigned char>(u[k]))) {
            digit = true;
        } else if (u[k] == '/' && !slash && digit && k + 1 < u.size()) {
            slash = true;
            digit = false;
        } else {
            throw InputError("malformed rational '" + std::string(s) + "'");
        }
    }
    if (!digit) throw InputError("malformed rational '" + std::string(s) + "'");
    if (u[0] == '+') u.erase(0, 1);
    Rational r;
    if (r.set_str(u, 10) != 0) throw InputError("malformed rational '" + std::string(s) + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool is_zero(const RVec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

RVec zeros(std::size_t n) { return RVec(n, Rational(0)); }

RVec unit(std::size_t n, std::size_t i) {
    RVec v(n, Rational(0));
    v[i] = 1;
    return v;
}

RVec add(const RVec& a, const RVec& b) {
    RVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

RVec sub(const RVec& a, const RVec& b) {
    RVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

RVec scale(const Rational& c, const RVec& v) {
    RVec r(v);
    for (auto& x : r) x *= c;
    return r;
}

void axpy(RVec& y, const Rational& c, const RVec& x) {
    if (sgn(c) == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

}  // namespace l2a
