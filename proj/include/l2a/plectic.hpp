#pragma once

#include "l2a/calculus.hpp"
#include "l2a/linalg.hpp"
#include "l2a/report.hpp"

#include <functional>

namespace l2a {

struct NotHamiltonian : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Constant-coefficient 3-form on a chart.
class PlecticForm {
public:
    PlecticForm() = default;
    explicit PlecticForm(Form omega);  // throws Unsupported for non-constant coefficients

    int chart_dim() const { return omega_.chart_dim(); }
    const Form& omega() const { return omega_; }
    // Matrix of X -> iota_X omega (rows: increasing pairs, cols: coordinates).
    const Matrix& vector_map() const { return vmap_; }
    // Matrix of u -> iota_u omega (rows: coordinates, cols: increasing pairs).
    const Matrix& bivector_map() const { return bmap_; }
    bool nondegenerate() const { return rank(vmap_) == chart_dim(); }

private:
    Form omega_;
    Matrix vmap_, bmap_;
};

struct PlecticCheck {
    bool closed = true;
    bool nondegenerate = false;
    int rank = 0;
    std::vector<MultiVector> kernel;  // vectors X with iota_X omega = 0
};

PlecticCheck check_2plectic(const PlecticForm& omega);
std::vector<MultiVector> kernel2(const PlecticForm& omega);

struct HamiltonianForm {
    Form alpha;
    MultiVector X;
};

struct HamiltonianPair {
    ExpPoly f;
    MultiVector v;
};

// d alpha = -iota_X omega and df = -iota_v omega.
bool is_hamiltonian(const HamiltonianForm& h, const PlecticForm& omega);
bool is_hamiltonian(const HamiltonianPair& h, const PlecticForm& omega);

HamiltonianForm solve_hamiltonian_vector(const Form& alpha, const PlecticForm& omega);
HamiltonianPair solve_hamiltonian_pair(const ExpPoly& f, const PlecticForm& omega);

// Degree -1 element (ftilde, (f, v)) of the extended observable algebra.
struct PairObservable {
    ExpPoly ftilde;
    ExpPoly f;
    MultiVector v;

    static PairObservable zero(int m);
    PairObservable operator+(const PairObservable& o) const;
    PairObservable operator-(const PairObservable& o) const;
    PairObservable scaled(const Rational& c) const;
    bool operator==(const PairObservable& o) const { return ftilde == o.ftilde && f == o.f && v == o.v; }
    bool is_zero() const { return ftilde.is_zero() && f.is_zero() && v.is_zero(); }
    std::string str() const;
};

// "(ft, (f, v))", with "0" and "(ft, 0)" as shorthands.
PairObservable parse_pair(int m, std::string_view text);

HamiltonianForm zero_form_observable(int m);
HamiltonianForm operator+(const HamiltonianForm& a, const HamiltonianForm& b);
HamiltonianForm scaled(const HamiltonianForm& a, const Rational& c);
bool same_form(const HamiltonianForm& a, const HamiltonianForm& b);

// Rogers observables: functions in degree -1, Hamiltonian 1-forms in degree 0.
HamiltonianForm l1_rogers(const ExpPoly& f);
HamiltonianForm l2_rogers(const HamiltonianForm& a, const HamiltonianForm& b, const PlecticForm& omega);
ExpPoly l3_rogers(const HamiltonianForm& a, const HamiltonianForm& b, const HamiltonianForm& c,
                  const PlecticForm& omega);

// Extended observable algebra brackets.
HamiltonianForm l1_obs(const PairObservable& p);
HamiltonianForm l2p_obs(const HamiltonianForm& a, const HamiltonianForm& b, const PlecticForm& omega);
PairObservable l2m_obs(const PairObservable& p, const HamiltonianForm& a, const PlecticForm& omega);
PairObservable l3_obs(const HamiltonianForm& a, const HamiltonianForm& b, const HamiltonianForm& c,
                      const PlecticForm& omega);

PairObservable morphism_I(const ExpPoly& ftilde);
ExpPoly morphism_Phi(const PairObservable& p);

using Psi2Fn = std::function<MultiVector(const HamiltonianForm&, const HamiltonianForm&)>;

// 2-plectic gradient; strict unless a psi2 is supplied.
class Gradient {
public:
    Gradient() = default;
    // Checks psi2(d ftilde, alpha) = 0 and the cyclic condition on the samples;
    // throws PreconditionError with the failing condition otherwise.
    Gradient(Psi2Fn psi2, const std::vector<HamiltonianForm>& samples, const std::vector<ExpPoly>& ftilde_samples,
             const PlecticForm& omega);

    bool is_strict() const { return !psi2_; }
    MultiVector psi1(const PairObservable& p) const { return p.v; }
    MultiVector psi1(const HamiltonianForm& a) const { return a.X; }
    MultiVector psi2(const HamiltonianForm& a, const HamiltonianForm& b) const;

private:
    Psi2Fn psi2_;
};

bool is_multisymplectic(const MultiVector& v, const PlecticForm& omega);

}  // namespace l2a
