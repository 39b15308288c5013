#include "l2a/plectic.hpp"

#include "l2a/alt_tensor.hpp"
#include "l2a/errors.hpp"

#include <cctype>

namespace l2a {

namespace {

std::vector<Blade> pairs(int m) {
    std::vector<Blade> out;
    for (const auto& t : increasing_tuples(m, 2)) out.push_back(t);
    return out;
}

Rational constant_of(const ExpPoly& p) {
    auto c = p.as_constant();
    if (!c) throw Unsupported("only constant-coefficient 3-forms are supported");
    return *c;
}

ExpPoly scalar_of(const Form& f) { return f.degree() == 0 ? f.as_scalar() : ExpPoly(f.chart_dim()); }

}  // namespace

PlecticForm::PlecticForm(Form omega) : omega_(std::move(omega)) {
    if (omega_.degree() != 3) throw InputError("a 2-plectic form has degree 3");
    for (const auto& [b, c] : omega_.coeffs()) constant_of(c);
    const int m = chart_dim();
    auto pr = pairs(m);
    vmap_ = Matrix(static_cast<int>(pr.size()), m);
    for (int i = 0; i < m; ++i) {
        Form img = contract(MultiVector::basis(m, {i}), omega_);
        for (std::size_t r = 0; r < pr.size(); ++r) vmap_(static_cast<int>(r), i) = constant_of(img.coeff(pr[r]));
    }
    bmap_ = Matrix(m, static_cast<int>(pr.size()));
    for (std::size_t c = 0; c < pr.size(); ++c) {
        Form img = contract(MultiVector::basis(m, pr[c]), omega_);
        for (int i = 0; i < m; ++i) bmap_(i, static_cast<int>(c)) = constant_of(img.coeff({i}));
    }
}

PlecticCheck check_2plectic(const PlecticForm& omega) {
    PlecticCheck out;
    const int m = omega.chart_dim();
    out.closed = exterior_derivative(omega.omega()).is_zero();
    out.rank = rank(omega.vector_map());
    out.nondegenerate = out.rank == m;
    for (const auto& k : nullspace(omega.vector_map())) {
        MultiVector X(m, 1);
        for (int i = 0; i < m; ++i)
            if (sgn(k[i]) != 0) X.add({i}, ExpPoly::constant(m, k[i]));
        out.kernel.push_back(X);
    }
    return out;
}

std::vector<MultiVector> kernel2(const PlecticForm& omega) {
    const int m = omega.chart_dim();
    auto pr = pairs(m);
    std::vector<MultiVector> out;
    for (const auto& k : nullspace(omega.bivector_map())) {
        MultiVector u(m, 2);
        for (std::size_t c = 0; c < pr.size(); ++c)
            if (sgn(k[c]) != 0) u.add(pr[c], ExpPoly::constant(m, k[c]));
        out.push_back(u);
    }
    return out;
}

bool is_hamiltonian(const HamiltonianForm& h, const PlecticForm& omega) {
    return h.alpha.degree() == 1 && h.X.degree() == 1 &&
           exterior_derivative(h.alpha) == -contract(h.X, omega.omega());
}

bool is_hamiltonian(const HamiltonianPair& h, const PlecticForm& omega) {
    const int m = omega.chart_dim();
    Form df = exterior_derivative(Form::scalar(h.f.chart_dim() ? h.f : ExpPoly(m)));
    return h.v.degree() == 2 && df == -contract(h.v, omega.omega());
}

HamiltonianForm solve_hamiltonian_vector(const Form& alpha, const PlecticForm& omega) {
    if (!omega.nondegenerate()) throw PreconditionError("omega is degenerate");
    if (alpha.degree() != 1) throw InputError("Hamiltonian forms have degree 1");
    const int m = omega.chart_dim();
    Form rhs = -exterior_derivative(alpha);
    auto pr = pairs(m);
    std::vector<ExpPoly> b;
    for (const auto& p : pr) b.push_back(rhs.coeff(p));
    auto x = solve_reduced(rref(omega.vector_map()), b, ExpPoly(m));
    if (!x) throw NotHamiltonian("1-form is not Hamiltonian: " + alpha.str());
    MultiVector X(m, 1);
    for (int i = 0; i < m; ++i)
        if (!(*x)[i].is_zero()) X.add({i}, (*x)[i]);
    return {alpha, X};
}

HamiltonianPair solve_hamiltonian_pair(const ExpPoly& f, const PlecticForm& omega) {
    if (!omega.nondegenerate()) throw PreconditionError("omega is degenerate");
    const int m = omega.chart_dim();
    std::vector<ExpPoly> b;
    for (int i = 0; i < m; ++i) b.push_back(-f.partial(i));
    auto x = solve_reduced(rref(omega.bivector_map()), b, ExpPoly(m));
    if (!x) throw NotHamiltonian("function is not Hamiltonian: " + f.str());
    auto pr = pairs(m);
    MultiVector v(m, 2);
    for (std::size_t c = 0; c < pr.size(); ++c)
        if (!(*x)[c].is_zero()) v.add(pr[c], (*x)[c]);
    return {f, v};
}

PairObservable PairObservable::zero(int m) { return {ExpPoly(m), ExpPoly(m), MultiVector(m, 2)}; }

PairObservable PairObservable::operator+(const PairObservable& o) const {
    return {ftilde + o.ftilde, f + o.f, v + o.v};
}

PairObservable PairObservable::operator-(const PairObservable& o) const {
    return {ftilde - o.ftilde, f - o.f, v - o.v};
}

PairObservable PairObservable::scaled(const Rational& c) const { return {ftilde.scaled(c), f.scaled(c), v.scaled(c)}; }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Strips one pair of enclosing parentheses and splits at the top-level comma.
std::pair<std::string_view, std::string_view> split_tuple(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw InputError("expected a parenthesised pair");
    s = s.substr(1, s.size() - 2);
    int depth = 0;
    std::size_t cut = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            if (cut != std::string_view::npos) throw InputError("pair has more than two components");
            cut = i;
        }
    }
    if (cut == std::string_view::npos) throw InputError("pair needs two components");
    return {trim(s.substr(0, cut)), trim(s.substr(cut + 1))};
}

}  // namespace

PairObservable parse_pair(int m, std::string_view text) {
    if (trim(text) == "0") return PairObservable::zero(m);
    auto [ft, rest] = split_tuple(text);
    PairObservable p = PairObservable::zero(m);
    p.ftilde = parse_exppoly(m, ft);
    if (rest == "0") return p;
    auto [f, v] = split_tuple(rest);
    p.f = parse_exppoly(m, f);
    p.v = parse_multivector(m, v, 2);
    return p;
}

std::string PairObservable::str() const {
    return "(" + ftilde.str() + ", (" + f.str() + ", " + v.str() + "))";
}

HamiltonianForm zero_form_observable(int m) { return {Form(m, 1), MultiVector(m, 1)}; }

HamiltonianForm operator+(const HamiltonianForm& a, const HamiltonianForm& b) { return {a.alpha + b.alpha, a.X + b.X}; }

HamiltonianForm scaled(const HamiltonianForm& a, const Rational& c) { return {a.alpha.scaled(c), a.X.scaled(c)}; }

bool same_form(const HamiltonianForm& a, const HamiltonianForm& b) { return a.alpha == b.alpha && a.X == b.X; }

HamiltonianForm l1_rogers(const ExpPoly& f) {
    const int m = f.chart_dim();
    return {exterior_derivative(Form::scalar(f)), MultiVector(m, 1)};
}

HamiltonianForm l2_rogers(const HamiltonianForm& a, const HamiltonianForm& b, const PlecticForm& omega) {
    // d iota_{Xa ^ Xb} omega = -iota_{[Xa, Xb]} omega
    return {contract(wedge(a.X, b.X), omega.omega()), schouten(a.X, b.X)};
}

ExpPoly l3_rogers(const HamiltonianForm& a, const HamiltonianForm& b, const HamiltonianForm& c,
                  const PlecticForm& omega) {
    return -scalar_of(contract(wedge(wedge(a.X, b.X), c.X), omega.omega()));
}

HamiltonianForm l1_obs(const PairObservable& p) { return l1_rogers(p.ftilde); }

HamiltonianForm l2p_obs(const HamiltonianForm& a, const HamiltonianForm& b, const PlecticForm& omega) {
    return l2_rogers(a, b, omega);
}

PairObservable l2m_obs(const PairObservable& p, const HamiltonianForm& a, const PlecticForm& omega) {
    const int m = omega.chart_dim();
    PairObservable out{ExpPoly(m), scalar_of(contract(wedge(p.v, a.X), omega.omega())), schouten(p.v, a.X)};
    if (!is_hamiltonian(HamiltonianPair{out.f, out.v}, omega))
        throw PreconditionError("mixed bracket left the Hamiltonian pairs; inputs violate their invariants");
    return out;
}

PairObservable l3_obs(const HamiltonianForm& a, const HamiltonianForm& b, const HamiltonianForm& c,
                      const PlecticForm& omega) {
    const int m = omega.chart_dim();
    return {l3_rogers(a, b, c, omega), ExpPoly(m), MultiVector(m, 2)};
}

PairObservable morphism_I(const ExpPoly& ftilde) {
    const int m = ftilde.chart_dim();
    return {ftilde, ExpPoly(m), MultiVector(m, 2)};
}

ExpPoly morphism_Phi(const PairObservable& p) { return p.ftilde; }

Gradient::Gradient(Psi2Fn psi2, const std::vector<HamiltonianForm>& samples,
                   const std::vector<ExpPoly>& ftilde_samples, const PlecticForm& omega)
    : psi2_(std::move(psi2)) {
    for (const auto& f : ftilde_samples)
        for (const auto& a : samples)
            if (!psi2_(l1_rogers(f), a).is_zero())
                throw PreconditionError("psi2(d ftilde, alpha) != 0 for ftilde = " + f.str());
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto &a = samples[i], &b = samples[j], &c = samples[k];
                MultiVector lhs = psi2_(l2_rogers(a, b, omega), c) + psi2_(l2_rogers(b, c, omega), a) +
                                  psi2_(l2_rogers(c, a, omega), b);
                MultiVector rhs = schouten(a.X, psi2_(b, c)) + schouten(b.X, psi2_(c, a)) + schouten(c.X, psi2_(a, b));
                if (lhs != rhs)
                    throw PreconditionError("psi2 violates the cyclic morphism condition on samples " +
                                            std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                                            std::to_string(k + 1));
            }
}

MultiVector Gradient::psi2(const HamiltonianForm& a, const HamiltonianForm& b) const {
    if (!psi2_) return MultiVector(a.X.chart_dim(), 2);
    return psi2_(a, b);
}

bool is_multisymplectic(const MultiVector& v, const PlecticForm& omega) {
    return lie_derivative(v, omega.omega()).is_zero();
}

}  // namespace l2a
