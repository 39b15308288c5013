#pragma once

#include "l2a/exppoly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace l2a {

using Blade = std::vector<int>;  // strictly increasing, 0-based coordinate indices

enum class GradedKind { Vector, Form };

// Sum of c_I * e_I (multivectors) or c_I * dq_I (forms) of a fixed degree.
template <GradedKind K>
class Graded {
public:
    using CoeffMap = std::map<Blade, ExpPoly>;

    Graded() = default;
    Graded(int m, int degree) : m_(m), deg_(degree) {}

    static Graded scalar(const ExpPoly& f);
    static Graded basis(int m, Blade idx, const ExpPoly& c);
    static Graded basis(int m, Blade idx) { return basis(m, std::move(idx), ExpPoly::constant(m, Rational(1))); }

    int chart_dim() const { return m_; }
    int degree() const { return deg_; }
    bool is_zero() const { return c_.empty(); }
    const CoeffMap& coeffs() const { return c_; }
    ExpPoly coeff(const Blade& idx) const;
    ExpPoly as_scalar() const;  // degree 0 only

    // Adds c to the coefficient of the (possibly unsorted) blade idx.
    void add(Blade idx, const ExpPoly& c);

    Graded operator+(const Graded& o) const;
    Graded operator-(const Graded& o) const;
    Graded operator-() const;
    Graded& operator+=(const Graded& o);
    Graded& operator-=(const Graded& o);
    Graded times(const ExpPoly& f) const;
    Graded scaled(const Rational& r) const;
    bool operator==(const Graded& o) const;
    bool operator!=(const Graded& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_compatible(const Graded& o) const;
    int m_ = 0;
    int deg_ = 0;
    CoeffMap c_;
};

using MultiVector = Graded<GradedKind::Vector>;
using Form = Graded<GradedKind::Form>;

// Insertion convention: iota_{X1^...^Xn} a = a(X1, ..., Xn, ...).
constexpr bool kFirstVectorIntoFirstSlot = true;

MultiVector wedge(const MultiVector& a, const MultiVector& b);
Form wedge(const Form& a, const Form& b);
Form contract(const MultiVector& v, const Form& a);
Form exterior_derivative(const Form& a);
Form lie_derivative(const MultiVector& v, const Form& a);
MultiVector schouten(const MultiVector& u, const MultiVector& w);

// Vector field applied to a function.
ExpPoly apply(const MultiVector& x, const ExpPoly& f);

MultiVector parse_multivector(int m, std::string_view text, int degree = -1);
Form parse_form(int m, std::string_view text, int degree = -1);

using ContractFn = std::function<Form(const MultiVector&, const Form&)>;
Form lie_derivative_with(const ContractFn& iota, const MultiVector& v, const Form& a);

struct IdentityFailure {
    int trial = 0;
    std::string identity;
    std::string witness;
};

struct SelfcheckReport {
    int trials = 0;
    std::vector<std::string> identities;  // names, in check order
    std::vector<IdentityFailure> failures;
    bool passed() const { return failures.empty(); }
};

// The seven multi Cartan commutation rules on seeded random data.
SelfcheckReport cartan_selfcheck(int m, std::uint64_t seed, int trials, const ContractFn& iota = contract);

// Contraction whose d1^d2 component of bivector insertion has its sign flipped.
Form contract_mutated(const MultiVector& v, const Form& a);

struct ObservablePair {
    ExpPoly f;
    Form alpha;
};

struct EndoValue {
    int degree = 0;          // 0: endomorphism pair, -1: Hom(Omega^1, C^inf)
    ExpPoly f;               // degree 0: L_X f ; degree -1: L_w alpha
    Form alpha;              // degree 0 only
};

EndoValue endo_action(const MultiVector& v, const ObservablePair& obs);

SelfcheckReport verify_endo_morphism(int m, std::uint64_t seed, int trials, int tau2m_sign = 1);

}  // namespace l2a
