#pragma once

#include "l2a/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l2a {

// Exact value of an ExpPoly at a rational point: sum of c_r * e^r.
class EvalValue {
public:
    EvalValue() = default;
    static EvalValue constant(const Rational& c);

    void add_term(const Rational& exponent, const Rational& coeff);
    bool is_zero() const { return terms_.empty(); }
    const std::map<Rational, Rational>& terms() const { return terms_; }

    EvalValue operator+(const EvalValue& o) const;
    EvalValue operator*(const EvalValue& o) const;
    bool operator==(const EvalValue& o) const { return terms_ == o.terms_; }

private:
    std::map<Rational, Rational> terms_;
};

struct ExpKey {
    RVec form;                    // l in exp(l.q)
    std::vector<unsigned> mono;   // alpha in q^alpha

    bool operator==(const ExpKey& o) const { return form == o.form && mono == o.mono; }
    bool operator<(const ExpKey& o) const;
};

struct RawTerm {
    Rational coeff;
    std::vector<unsigned> mono;
    RVec form;
};

// sum_k c_k q^{alpha_k} exp(l_k . q) on a chart of dimension m, canonical.
class ExpPoly {
public:
    using TermMap = std::map<ExpKey, Rational>;

    ExpPoly() = default;
    explicit ExpPoly(int m) : m_(m) {}

    static ExpPoly constant(int m, const Rational& c);
    static ExpPoly variable(int m, int i);                // q_{i+1}
    static ExpPoly monomial(int m, const Rational& c, std::vector<unsigned> mono, RVec form);
    static ExpPoly normalize(int m, const std::vector<RawTerm>& raw);

    int chart_dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;
    std::optional<Rational> as_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator-() const;
    ExpPoly operator*(const ExpPoly& o) const;
    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    ExpPoly scaled(const Rational& c) const;
    bool operator==(const ExpPoly& o) const;
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    ExpPoly partial(int i) const;  // d/dq_{i+1}
    EvalValue evaluate(const RVec& point) const;

    std::string str() const;

private:
    void add_raw(const ExpKey& k, const Rational& c);
    int m_ = 0;
    TermMap terms_;
};

ExpPoly operator*(const Rational& c, const ExpPoly& p);

// Grammar:
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := rational | 'q'INT ('^'INT)? | 'exp(' linform ')' | '(' expr ')'
ExpPoly parse_exppoly(int m, std::string_view text);

}  // namespace l2a
