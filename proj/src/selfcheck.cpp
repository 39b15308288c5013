#include "l2a/calculus.hpp"
#include "l2a/errors.hpp"
#include "l2a/random.hpp"

namespace l2a {

namespace {

struct Checker {
    SelfcheckReport& rep;
    int trial = 0;
    std::string context;

    void expect(const std::string& name, const Form& lhs, const Form& rhs) {
        if (lhs == rhs) return;
        rep.failures.push_back({trial, name, context + "; lhs - rhs = " + (lhs - rhs).str()});
    }
    void expect(const std::string& name, const ExpPoly& lhs, const ExpPoly& rhs) {
        if (lhs == rhs) return;
        rep.failures.push_back({trial, name, context + "; lhs - rhs = " + (lhs - rhs).str()});
    }
};

}  // namespace

SelfcheckReport cartan_selfcheck(int m, std::uint64_t seed, int trials, const ContractFn& iota) {
    if (m < 3) throw PreconditionError("cartan selfcheck needs a chart of dimension at least 3");
    SelfcheckReport rep;
    rep.trials = trials;
    rep.identities = {
        "iota_X iota_Y + iota_Y iota_X = 0",
        "iota_X iota_v - iota_v iota_X = 0",
        "L_X iota_Y - iota_Y L_X = iota_[X,Y]",
        "L_X iota_v - iota_v L_X = iota_[X,v]",
        "L_X L_Y - L_Y L_X = L_[X,Y]",
        "L_v L_X - L_X L_v = L_[v,X]",
        "L_(X^Y) = L_Y iota_X - iota_Y L_X = iota_X L_Y - iota_Y L_X - iota_[X,Y] = L_Y iota_X - L_X iota_Y + iota_[X,Y]",
    };
    Rng rng(seed);
    auto L = [&](const MultiVector& v, const Form& a) { return lie_derivative_with(iota, v, a); };
    for (int t = 0; t < trials; ++t) {
        MultiVector X = random_multivector(m, 1, rng);
        MultiVector Y = random_multivector(m, 1, rng);
        MultiVector v = random_multivector(m, 2, rng);
        int p = rng.uniform(1, m);
        Form a = random_form(m, p, rng);
        Checker c{rep, t, "X = " + X.str() + ", Y = " + Y.str() + ", v = " + v.str() + ", alpha = " + a.str()};

        MultiVector XY = schouten(X, Y);
        MultiVector Xv = schouten(X, v);
        MultiVector vX = schouten(v, X);
        MultiVector XwY = wedge(X, Y);
        const auto& n = rep.identities;

        c.expect(n[0], iota(X, iota(Y, a)) + iota(Y, iota(X, a)), Form(m, p - 2));
        c.expect(n[1], iota(X, iota(v, a)) - iota(v, iota(X, a)), Form(m, p - 3));
        c.expect(n[2], L(X, iota(Y, a)) - iota(Y, L(X, a)), iota(XY, a));
        c.expect(n[3], L(X, iota(v, a)) - iota(v, L(X, a)), iota(Xv, a));
        c.expect(n[4], L(X, L(Y, a)) - L(Y, L(X, a)), L(XY, a));
        c.expect(n[5], L(v, L(X, a)) - L(X, L(v, a)), L(vX, a));
        Form lxy = L(XwY, a);
        c.expect(n[6], lxy, L(Y, iota(X, a)) - iota(Y, L(X, a)));
        c.expect(n[6], lxy, iota(X, L(Y, a)) - iota(Y, L(X, a)) - iota(XY, a));
        c.expect(n[6], lxy, L(Y, iota(X, a)) - L(X, iota(Y, a)) + iota(XY, a));
    }
    return rep;
}

EndoValue endo_action(const MultiVector& v, const ObservablePair& obs) {
    if (obs.alpha.degree() != 1 && !obs.alpha.is_zero())
        throw PreconditionError("observable pair needs a 1-form");
    const int m = v.chart_dim();
    Form alpha = obs.alpha.is_zero() ? Form(m, 1) : obs.alpha;
    EndoValue out;
    if (v.degree() == 1) {
        out.degree = 0;
        out.f = obs.f.is_zero() ? ExpPoly(m) : apply(v, obs.f);
        out.alpha = lie_derivative(v, alpha);
        return out;
    }
    if (v.degree() == 2) {
        out.degree = -1;
        out.f = lie_derivative(v, alpha).as_scalar();
        return out;
    }
    throw Unsupported("endomorphism action is defined for degrees 1 and 2 only");
}

SelfcheckReport verify_endo_morphism(int m, std::uint64_t seed, int trials, int tau2m_sign) {
    if (m < 3) throw PreconditionError("endomorphism check needs a chart of dimension at least 3");
    SelfcheckReport rep;
    rep.trials = trials;
    rep.identities = {
        "A1: tau1(F1m1 w) = F10(nu1 w)",
        "A2: F10([X,Y]) = [F10 X, F10 Y]",
        "A3: F1m1([w,Z]) = tau2m(F1m1 w, F10 Z)",
        "A4: tau2m(F2, F10) + F1m1(nu3) = F2(nu2p, .) + tau3(F10, F10, F10)",
    };
    Rng rng(seed);
    const ExpPoly zero(m);
    for (int t = 0; t < trials; ++t) {
        MultiVector X = random_multivector(m, 1, rng);
        MultiVector Y = random_multivector(m, 1, rng);
        MultiVector Z = random_multivector(m, 1, rng);
        MultiVector w = random_multivector(m, 2, rng);
        ObservablePair obs{random_exppoly(m, rng), random_form(m, 1, rng)};
        Checker c{rep, t, "X = " + X.str() + ", Y = " + Y.str() + ", Z = " + Z.str() + ", w = " + w.str() +
                              ", f = " + obs.f.str() + ", alpha = " + obs.alpha.str()};

        // source and target both have vanishing unary and ternary brackets, and F2 = 0
        c.expect(rep.identities[0], zero, zero);

        EndoValue xy = endo_action(schouten(X, Y), obs);
        EndoValue y = endo_action(Y, obs);
        EndoValue x = endo_action(X, obs);
        ExpPoly comm_f = apply(X, y.f) - apply(Y, x.f);
        Form comm_a = lie_derivative(X, y.alpha) - lie_derivative(Y, x.alpha);
        c.expect(rep.identities[1], xy.f, comm_f);
        c.expect(rep.identities[1], xy.alpha, comm_a);

        // tau2m(phi, (s_-1, s_0)) = phi o s_0 - s_-1 o phi, with phi = L_w : Omega^1 -> C^inf
        EndoValue wz = endo_action(schouten(w, Z), obs);
        EndoValue z = endo_action(Z, obs);
        ExpPoly phi_s0 = endo_action(w, ObservablePair{zero, z.alpha}).f;
        ExpPoly s_phi = apply(Z, endo_action(w, obs).f);
        ExpPoly rhs = phi_s0 - s_phi;
        c.expect(rep.identities[2], wz.f, tau2m_sign < 0 ? -rhs : rhs);

        c.expect(rep.identities[3], zero, zero);
    }
    return rep;
}

}  // namespace l2a
