#include "l2a/exppoly.hpp"

#include "l2a/errors.hpp"

#include <sstream>

namespace l2a {

EvalValue EvalValue::constant(const Rational& c) {
    EvalValue v;
    v.add_term(Rational(0), c);
    return v;
}

void EvalValue::add_term(const Rational& exponent, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
        return;
    }
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
}

EvalValue EvalValue::operator+(const EvalValue& o) const {
    EvalValue r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

EvalValue EvalValue::operator*(const EvalValue& o) const {
    EvalValue r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(Rational(e1 + e2), Rational(c1 * c2));
    return r;
}

bool ExpKey::operator<(const ExpKey& o) const {
    if (form != o.form) return std::lexicographical_compare(form.begin(), form.end(), o.form.begin(), o.form.end());
    return mono < o.mono;
}

namespace {

void check_dims(int a, int b) {
    if (a != b) throw InputError("chart dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// A default-constructed ExpPoly (m = 0) acts as a dimensionless zero.
int join_dims(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    check_dims(a, b);
    return a;
}

}  // namespace

ExpPoly ExpPoly::constant(int m, const Rational& c) {
    ExpPoly p(m);
    p.add_raw(ExpKey{zeros(m), std::vector<unsigned>(m, 0)}, c);
    return p;
}

ExpPoly ExpPoly::variable(int m, int i) {
    if (i < 0 || i >= m) throw InputError("coordinate index out of range: q" + std::to_string(i + 1));
    std::vector<unsigned> mono(m, 0);
    mono[i] = 1;
    ExpPoly p(m);
    p.add_raw(ExpKey{zeros(m), mono}, Rational(1));
    return p;
}

ExpPoly ExpPoly::monomial(int m, const Rational& c, std::vector<unsigned> mono, RVec form) {
    if (static_cast<int>(mono.size()) != m || static_cast<int>(form.size()) != m)
        throw InputError("term dimension does not match chart dimension");
    ExpPoly p(m);
    p.add_raw(ExpKey{std::move(form), std::move(mono)}, c);
    return p;
}

ExpPoly ExpPoly::normalize(int m, const std::vector<RawTerm>& raw) {
    ExpPoly p(m);
    for (const auto& t : raw) {
        if (static_cast<int>(t.mono.size()) != m || static_cast<int>(t.form.size()) != m)
            throw InputError("term dimension does not match chart dimension");
        p.add_raw(ExpKey{t.form, t.mono}, t.coeff);
    }
    return p;
}

void ExpPoly::add_raw(const ExpKey& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

bool ExpPoly::is_polynomial() const {
    for (const auto& [k, c] : terms_)
        if (!l2a::is_zero(k.form)) return false;
    return true;
}

std::optional<Rational> ExpPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    if (!l2a::is_zero(k.form)) return std::nullopt;
    for (unsigned e : k.mono)
        if (e != 0) return std::nullopt;
    return c;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    m_ = join_dims(m_, o.m_);
    for (const auto& [k, c] : o.terms_) add_raw(k, c);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
    m_ = join_dims(m_, o.m_);
    for (const auto& [k, c] : o.terms_) add_raw(k, Rational(-c));
    return *this;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly r = *this;
    r += o;
    return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const {
    ExpPoly r = *this;
    r -= o;
    return r;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    ExpPoly r(join_dims(m_, o.m_));
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            ExpKey k{add(k1.form, k2.form), k1.mono};
            for (std::size_t i = 0; i < k.mono.size(); ++i) k.mono[i] += k2.mono[i];
            r.add_raw(k, Rational(c1 * c2));
        }
    }
    return r;
}

ExpPoly ExpPoly::scaled(const Rational& c) const {
    if (sgn(c) == 0) return ExpPoly(m_);
    ExpPoly r = *this;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

ExpPoly operator*(const Rational& c, const ExpPoly& p) { return p.scaled(c); }

bool ExpPoly::operator==(const ExpPoly& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return m_ == o.m_ && terms_ == o.terms_;
}

ExpPoly ExpPoly::partial(int i) const {
    if (i < 0 || i >= m_) {
        if (m_ == 0 && terms_.empty()) return ExpPoly();
        throw InputError("partial derivative index out of range: " + std::to_string(i + 1));
    }
    ExpPoly r(m_);
    for (const auto& [k, c] : terms_) {
        if (k.mono[i] > 0) {
            ExpKey d = k;
            d.mono[i] -= 1;
            r.add_raw(d, Rational(c * k.mono[i]));
        }
        if (sgn(k.form[i]) != 0) r.add_raw(k, Rational(c * k.form[i]));
    }
    return r;
}

EvalValue ExpPoly::evaluate(const RVec& point) const {
    if (static_cast<int>(point.size()) != m_ && !(terms_.empty()))
        throw InputError("evaluation point has wrong dimension");
    EvalValue v;
    for (const auto& [k, c] : terms_) {
        Rational val = c;
        Rational expo = 0;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (unsigned e = 0; e < k.mono[i]; ++e) val *= point[i];
            expo += k.form[i] * point[i];
        }
        v.add_term(expo, val);
    }
    return v;
}

namespace {

std::string term_body(const ExpKey& k) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < k.mono.size(); ++i) {
        if (k.mono[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'q' << (i + 1);
        if (k.mono[i] > 1) os << '^' << k.mono[i];
    }
    if (!is_zero(k.form)) {
        if (!first) os << '*';
        first = false;
        os << "exp(";
        bool lf = true;
        for (std::size_t i = 0; i < k.form.size(); ++i) {
            const Rational& l = k.form[i];
            if (sgn(l) == 0) continue;
            if (sgn(l) < 0) os << '-';
            else if (!lf) os << '+';
            Rational a = abs(l);
            if (a != 1) os << to_string(a) << '*';
            os << 'q' << (i + 1);
            lf = false;
        }
        os << ')';
    }
    return os.str();
}

}  // namespace

std::string ExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string body = term_body(k);
        if (sgn(c) < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        Rational a = abs(c);
        if (body.empty()) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << '*';
            os << body;
        }
        first = false;
    }
    return os.str();
}

}  // namespace l2a
