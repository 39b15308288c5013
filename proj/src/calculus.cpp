#include "l2a/calculus.hpp"

#include "l2a/errors.hpp"
#include "literal.hpp"

#include <algorithm>
#include <sstream>

namespace l2a {

namespace {

// Sorts b; returns the sign of the sorting permutation, 0 if an index repeats.
int sort_with_sign(Blade& b) {
    int sign = 1;
    for (std::size_t i = 1; i < b.size(); ++i) {
        for (std::size_t j = i; j > 0 && b[j - 1] > b[j]; --j) {
            std::swap(b[j - 1], b[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] == b[i]) return 0;
    return sign;
}

}  // namespace

template <GradedKind K>
Graded<K> Graded<K>::scalar(const ExpPoly& f) {
    Graded g(f.chart_dim(), 0);
    if (!f.is_zero()) g.c_.emplace(Blade{}, f);
    return g;
}

template <GradedKind K>
Graded<K> Graded<K>::basis(int m, Blade idx, const ExpPoly& c) {
    Graded g(m, static_cast<int>(idx.size()));
    g.add(std::move(idx), c);
    return g;
}

template <GradedKind K>
ExpPoly Graded<K>::coeff(const Blade& idx) const {
    auto it = c_.find(idx);
    return it == c_.end() ? ExpPoly(m_) : it->second;
}

template <GradedKind K>
ExpPoly Graded<K>::as_scalar() const {
    if (deg_ != 0 && !c_.empty()) throw PreconditionError("not a degree 0 element");
    return coeff(Blade{});
}

template <GradedKind K>
void Graded<K>::add(Blade idx, const ExpPoly& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(idx.size()) != deg_) throw InputError("blade degree does not match element degree");
    for (int i : idx)
        if (i < 0 || i >= m_) throw InputError("basis index outside the chart");
    int s = sort_with_sign(idx);
    if (s == 0) return;
    auto it = c_.find(idx);
    if (it == c_.end()) {
        c_.emplace(std::move(idx), s > 0 ? c : -c);
        return;
    }
    if (s > 0) it->second += c;
    else it->second -= c;
    if (it->second.is_zero()) c_.erase(it);
}

template <GradedKind K>
void Graded<K>::check_compatible(const Graded& o) const {
    if (m_ != o.m_) throw InputError("chart mismatch");
    if (deg_ != o.deg_ && !c_.empty() && !o.c_.empty()) throw InputError("degree mismatch");
}

template <GradedKind K>
Graded<K>& Graded<K>::operator+=(const Graded& o) {
    check_compatible(o);
    if (c_.empty()) deg_ = o.deg_;
    for (const auto& [b, c] : o.c_) {
        auto it = c_.find(b);
        if (it == c_.end()) {
            c_.emplace(b, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

template <GradedKind K>
Graded<K>& Graded<K>::operator-=(const Graded& o) {
    return *this += -o;
}

template <GradedKind K>
Graded<K> Graded<K>::operator+(const Graded& o) const {
    Graded r = *this;
    r += o;
    return r;
}

template <GradedKind K>
Graded<K> Graded<K>::operator-(const Graded& o) const {
    Graded r = *this;
    r += -o;
    return r;
}

template <GradedKind K>
Graded<K> Graded<K>::operator-() const {
    Graded r = *this;
    for (auto& [b, c] : r.c_) c = -c;
    return r;
}

template <GradedKind K>
Graded<K> Graded<K>::times(const ExpPoly& f) const {
    Graded r(m_, deg_);
    for (const auto& [b, c] : c_) {
        ExpPoly p = c * f;
        if (!p.is_zero()) r.c_.emplace(b, std::move(p));
    }
    return r;
}

template <GradedKind K>
Graded<K> Graded<K>::scaled(const Rational& s) const {
    Graded r(m_, deg_);
    if (sgn(s) == 0) return r;
    for (const auto& [b, c] : c_) r.c_.emplace(b, c.scaled(s));
    return r;
}

template <GradedKind K>
bool Graded<K>::operator==(const Graded& o) const {
    if (c_.empty() && o.c_.empty()) return true;
    return m_ == o.m_ && deg_ == o.deg_ && c_ == o.c_;
}

template <GradedKind K>
std::string Graded<K>::str() const {
    if (c_.empty()) return "0";
    if (deg_ == 0) return c_.begin()->second.str();
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : c_) {
        std::string blade;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) blade += '^';
            blade += (K == GradedKind::Vector ? "e" : "dq") + std::to_string(b[i] + 1);
        }
        std::string coef;
        bool neg = false;
        if (c.size() == 1) {
            coef = c.str();
            if (!coef.empty() && coef[0] == '-') {
                neg = true;
                coef.erase(0, 1);
            }
            if (coef == "1") coef.clear();
        } else {
            coef = "(" + c.str() + ")";
        }
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        if (!coef.empty()) os << coef << " * ";
        os << blade;
        first = false;
    }
    return os.str();
}

template class Graded<GradedKind::Vector>;
template class Graded<GradedKind::Form>;

namespace {

template <GradedKind K>
Graded<K> wedge_impl(const Graded<K>& a, const Graded<K>& b) {
    if (a.chart_dim() != b.chart_dim()) throw InputError("chart mismatch in wedge");
    Graded<K> r(a.chart_dim(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.coeffs()) {
        for (const auto& [ib, cb] : b.coeffs()) {
            Blade idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add(idx, ca * cb);
        }
    }
    return r;
}

}  // namespace

MultiVector wedge(const MultiVector& a, const MultiVector& b) { return wedge_impl(a, b); }
Form wedge(const Form& a, const Form& b) { return wedge_impl(a, b); }

Form contract(const MultiVector& v, const Form& a) {
    if (v.chart_dim() != a.chart_dim()) throw InputError("chart mismatch in contraction");
    const int m = a.chart_dim();
    const int n = v.degree(), p = a.degree();
    Form r(m, p - n);
    if (p < n) return r;
    for (const auto& [iv, cv] : v.coeffs()) {
        for (const auto& [ja, ca] : a.coeffs()) {
            // a = c dq_J; write dq_J = sign * dq_I ^ dq_{J\I}, then a(e_I, ...) = sign * c dq_{J\I}
            if (!std::includes(ja.begin(), ja.end(), iv.begin(), iv.end())) continue;
            Blade rest;
            std::set_difference(ja.begin(), ja.end(), iv.begin(), iv.end(), std::back_inserter(rest));
            int inv = 0;
            for (int i : iv)
                for (int k : rest)
                    if (k < i) ++inv;
            ExpPoly c = cv * ca;
            r.add(rest, inv % 2 ? -c : c);
        }
    }
    return r;
}

Form contract_mutated(const MultiVector& v, const Form& a) {
    if (v.degree() != 2) return contract(v, a);
    MultiVector flipped = v;
    ExpPoly c12 = v.coeff(Blade{0, 1});
    if (!c12.is_zero()) flipped.add(Blade{0, 1}, c12.scaled(Rational(-2)));
    return contract(flipped, a);
}

Form exterior_derivative(const Form& a) {
    const int m = a.chart_dim();
    Form r(m, a.degree() + 1);
    if (a.degree() < 0) return r;
    for (const auto& [j, c] : a.coeffs()) {
        for (int i = 0; i < m; ++i) {
            if (std::binary_search(j.begin(), j.end(), i)) continue;
            ExpPoly dc = c.partial(i);
            if (dc.is_zero()) continue;
            Blade idx{i};
            idx.insert(idx.end(), j.begin(), j.end());
            r.add(idx, dc);
        }
    }
    return r;
}

Form lie_derivative_with(const ContractFn& iota, const MultiVector& v, const Form& a) {
    Form first = exterior_derivative(iota(v, a));
    Form second = iota(v, exterior_derivative(a));
    if (v.degree() % 2 == 0) return first - second;
    return first + second;
}

Form lie_derivative(const MultiVector& v, const Form& a) { return lie_derivative_with(contract, v, a); }

ExpPoly apply(const MultiVector& x, const ExpPoly& f) {
    if (x.degree() != 1 && !x.is_zero()) throw PreconditionError("apply expects a vector field");
    ExpPoly r(f.chart_dim() ? f.chart_dim() : x.chart_dim());
    for (const auto& [b, c] : x.coeffs()) r += c * f.partial(b[0]);
    return r;
}

namespace {

// [X, W] for a vector field X and a multivector W of any degree.
MultiVector bracket_vector_with(const MultiVector& x, const MultiVector& w) {
    const int m = x.chart_dim();
    MultiVector r(m, w.degree());
    for (const auto& [idx, c] : w.coeffs()) {
        r.add(idx, apply(x, c));
        // c * e_{i1} ^ ... ^ [X, e_{ir}] ^ ... with [X, e_i] = -sum_k d_i(X^k) e_k
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            for (const auto& [xb, xc] : x.coeffs()) {
                ExpPoly d = xc.partial(idx[pos]);
                if (d.is_zero()) continue;
                Blade nb = idx;
                nb[pos] = xb[0];
                r.add(nb, -(c * d));
            }
        }
    }
    return r;
}

}  // namespace

MultiVector schouten(const MultiVector& u, const MultiVector& w) {
    if (u.chart_dim() != w.chart_dim()) throw InputError("chart mismatch in Schouten bracket");
    if (u.degree() == 1) return bracket_vector_with(u, w);
    if (w.degree() == 1) return -bracket_vector_with(w, u);
    if (u.is_zero() || w.is_zero()) return MultiVector(u.chart_dim(), u.degree() + w.degree() - 1);
    throw Unsupported("Schouten bracket of degrees (" + std::to_string(u.degree()) + "," +
                      std::to_string(w.degree()) + ") is not supported");
}

MultiVector parse_multivector(int m, std::string_view text, int degree) {
    int deg = -1;
    auto coeffs = detail::parse_blade_sum(m, text, detail::BladeToken::Vector, deg);
    if (deg == -1) deg = degree < 0 ? 0 : degree;
    if (degree >= 0 && deg != degree)
        throw InputError("expected a multivector of degree " + std::to_string(degree) + ": '" + std::string(text) + "'");
    MultiVector v(m, deg);
    for (const auto& [b, c] : coeffs) v.add(b, c);
    return v;
}

Form parse_form(int m, std::string_view text, int degree) {
    int deg = -1;
    auto coeffs = detail::parse_blade_sum(m, text, detail::BladeToken::Form, deg);
    if (deg == -1) deg = degree < 0 ? 0 : degree;
    if (degree >= 0 && deg != degree)
        throw InputError("expected a form of degree " + std::to_string(degree) + ": '" + std::string(text) + "'");
    Form f(m, deg);
    for (const auto& [b, c] : coeffs) f.add(b, c);
    return f;
}

}  // namespace l2a
