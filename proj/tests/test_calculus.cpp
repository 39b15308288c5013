#include "doctest.h"

#include "l2a/calculus.hpp"
#include "l2a/errors.hpp"
#include "l2a/random.hpp"

#include <algorithm>
#include <numeric>

using namespace l2a;

namespace {

MultiVector V(const char* s, int m = 3) { return parse_multivector(m, s); }
Form W(const char* s, int m = 3) { return parse_form(m, s); }
ExpPoly P(const char* s, int m = 3) { return parse_exppoly(m, s); }

// Leibniz determinant: dq_J(V_1, ..., V_p) = sum over permutations.
ExpPoly eval_basis_form(const Blade& J, const std::vector<MultiVector>& vs) {
    const int m = vs.front().chart_dim();
    std::vector<int> perm(J.size());
    std::iota(perm.begin(), perm.end(), 0);
    ExpPoly total(m);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        ExpPoly prod = ExpPoly::constant(m, inv % 2 ? -1 : 1);
        for (std::size_t s = 0; s < J.size(); ++s) prod = prod * vs[s].coeff({J[perm[s]]});
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

ExpPoly eval_form(const Form& a, const std::vector<MultiVector>& vs) {
    ExpPoly total(a.chart_dim());
    for (const auto& [J, c] : a.coeffs()) total += c * eval_basis_form(J, vs);
    return total;
}

// iota_{X1^...^Xn} a, reconstructed from its values on basis vectors.
Form contract_oracle(const std::vector<MultiVector>& xs, const Form& a) {
    const int m = a.chart_dim();
    const int k = a.degree() - static_cast<int>(xs.size());
    Form out(m, k);
    if (k < 0) return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<MultiVector> args = xs;
        for (int i : idx) args.push_back(MultiVector::basis(m, {i}));
        out.add(idx, eval_form(a, args));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("wedge") {
    CHECK(wedge(V("e1"), V("e2")) == V("e1^e2"));
    CHECK(wedge(V("e1"), V("e1")).is_zero());
    CHECK(wedge(W("q1*dq2"), W("dq1")) == W("-q1*dq1^dq2"));
    CHECK(wedge(W("dq1^dq2"), W("dq3^dq1")).is_zero());
    CHECK_THROWS_AS(wedge(V("e1"), V("e1", 4)), InputError);
}

TEST_CASE("literal parsing") {
    CHECK(V("e2^e1") == V("-e1^e2"));
    CHECK(W("q2 * dq3 - 1/2*exp(-q1)*dq1") .degree() == 1);
    CHECK(V("3").degree() == 0);
    CHECK_THROWS_AS(V("e1 + e1^e2"), InputError);
    CHECK_THROWS_AS(W("dq4"), InputError);
    CHECK_THROWS_AS(V("e1*e2"), InputError);
    CHECK(parse_multivector(3, "0", 2).degree() == 2);
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        MultiVector v = random_multivector(3, 2, rng);
        CHECK(parse_multivector(3, v.str(), 2) == v);
        Form a = random_form(3, 1, rng);
        CHECK(parse_form(3, a.str(), 1) == a);
    }
}

TEST_CASE("contraction") {
    CHECK(contract(V("e1"), W("dq1^dq2^dq3")) == W("dq2^dq3"));
    CHECK(contract(V("e1^e2"), W("dq1^dq2^dq3")) == W("dq3"));
    CHECK(contract(V("e2"), W("dq1^dq2^dq3")) == W("-dq1^dq3"));
    CHECK(contract(V("e1^e2"), W("dq1")).is_zero());
    CHECK(contract(V("e1^e2"), W("dq1")).degree() == -1);
    // the oracle agrees on the determinant expansion
    CHECK(contract_oracle({V("e1"), V("e2")}, W("dq1^dq2^dq3")) == W("dq3"));
}

TEST_CASE("contraction matches the determinant oracle") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        MultiVector x = random_multivector(4, 1, rng), y = random_multivector(4, 1, rng);
        Form a = random_form(4, rng.uniform(1, 4), rng);
        CHECK(contract(x, a) == contract_oracle({x}, a));
        CHECK(contract(wedge(x, y), a) == contract_oracle({x, y}, a));
    }
}

TEST_CASE("contraction is ExpPoly-linear in the multivector") {
    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        MultiVector u = random_multivector(3, 2, rng), v = random_multivector(3, 2, rng);
        ExpPoly f = random_exppoly(3, rng), g = random_exppoly(3, rng);
        Form a = random_form(3, rng.uniform(2, 3), rng);
        CHECK(contract(u.times(f) + v.times(g), a) == contract(u, a).times(f) + contract(v, a).times(g));
    }
}

TEST_CASE("exterior derivative") {
    CHECK(exterior_derivative(W("q2*dq3")) == W("dq2^dq3"));
    CHECK(exterior_derivative(W("exp(q1)*dq2")) == W("exp(q1)*dq1^dq2"));
    CHECK(exterior_derivative(W("dq1")).is_zero());
    Rng rng(1);
    for (int t = 0; t < 40; ++t) {
        Form a = random_form(4, rng.uniform(0, 3), rng);
        CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
    }
}

TEST_CASE("Lie derivative") {
    CHECK(lie_derivative(V("e1"), W("q1*dq2")) == W("dq2"));
    CHECK(lie_derivative(V("e1^e2"), W("q1*q2*dq1^dq2")) == W("q2*dq1 + q1*dq2"));
    CHECK(lie_derivative(V("e1^e2"), Form(3, 2)).is_zero());
    // degree one agrees with the derivation on functions
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        MultiVector x = random_multivector(3, 1, rng);
        ExpPoly f = random_exppoly(3, rng);
        CHECK(lie_derivative(x, Form::scalar(f)).as_scalar() == apply(x, f));
    }
}

TEST_CASE("Schouten bracket") {
    CHECK(schouten(V("e1"), V("e2")).is_zero());
    CHECK(schouten(V("q1*e2"), V("e1^e3")) == V("-e2^e3"));
    CHECK(schouten(V("e1"), V("q1*e1^e2")) == V("e1^e2"));
    CHECK(schouten(V("e1^e3"), V("q1*e2")) == V("e2^e3"));
    CHECK_THROWS_AS(schouten(V("e1^e2"), V("e1^e3")), Unsupported);
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        MultiVector x = random_multivector(3, 1, rng), y = random_multivector(3, 1, rng), z = random_multivector(3, 1, rng);
        MultiVector v = random_multivector(3, 2, rng);
        ExpPoly f = random_exppoly(3, rng);
        // commutator of derivations
        CHECK(apply(schouten(x, y), f) == apply(x, apply(y, f)) - apply(y, apply(x, f)));
        // Leibniz rule over wedge
        CHECK(schouten(z, wedge(x, y)) == wedge(schouten(z, x), y) + wedge(x, schouten(z, y)));
        // Jacobi among vector fields
        CHECK(schouten(schouten(x, y), z) + schouten(schouten(y, z), x) + schouten(schouten(z, x), y) ==
              MultiVector(3, 1));
        // mixed Jacobi: [[X,Y],v] = [X,[Y,v]] - [Y,[X,v]]
        CHECK(schouten(schouten(x, y), v) == schouten(x, schouten(y, v)) - schouten(y, schouten(x, v)));
    }
}

TEST_CASE("Cartan identities on seeded samples") {
    SelfcheckReport rep = cartan_selfcheck(3, 42, 100);
    CHECK(rep.identities.size() == 7);
    CHECK(rep.passed());
    for (const auto& f : rep.failures) MESSAGE(f.identity << ": " << f.witness);
    SelfcheckReport empty = cartan_selfcheck(3, 42, 0);
    CHECK(empty.passed());
    CHECK(empty.trials == 0);
    CHECK_THROWS_AS(cartan_selfcheck(2, 1, 1), PreconditionError);
}

TEST_CASE("mutated contraction is caught") {
    SelfcheckReport rep = cartan_selfcheck(3, 42, 20, contract_mutated);
    REQUIRE_FALSE(rep.passed());
    bool hit = std::any_of(rep.failures.begin(), rep.failures.end(),
                           [&](const IdentityFailure& f) { return f.identity == rep.identities[3]; });
    CHECK(hit);
    CHECK_FALSE(rep.failures.front().witness.empty());
}

TEST_CASE("endomorphism action") {
    EndoValue a = endo_action(V("e1"), {P("q1"), W("q2*dq3")});
    CHECK(a.degree == 0);
    CHECK(a.f == P("1"));
    CHECK(a.alpha.is_zero());
    EndoValue b = endo_action(V("e1^e2"), {ExpPoly(3), W("q1*dq2")});
    CHECK(b.degree == -1);
    CHECK(b.f == P("-1"));
    EndoValue c = endo_action(V("q2*e3"), {ExpPoly(3), Form(3, 1)});
    CHECK(c.f.is_zero());
    CHECK(c.alpha.is_zero());
    CHECK_THROWS_AS(endo_action(V("e1^e2^e3"), {P("q1"), W("dq1")}), Unsupported);
}

TEST_CASE("endomorphism representation is a morphism") {
    SelfcheckReport rep = verify_endo_morphism(3, 7, 50);
    CHECK(rep.passed());
    for (const auto& f : rep.failures) MESSAGE(f.identity << ": " << f.witness);
    SelfcheckReport bad = verify_endo_morphism(3, 7, 10, -1);
    REQUIRE_FALSE(bad.passed());
    CHECK(bad.failures.front().identity == bad.identities[2]);
}
