#include "l2a/action.hpp"

#include "l2a/errors.hpp"

namespace l2a {

namespace {

std::vector<RVec> basis(int n) {
    std::vector<RVec> out;
    for (int i = 0; i < n; ++i) out.push_back(unit(n, i));
    return out;
}

std::string tuple_label(std::initializer_list<const std::string*> parts) {
    std::string s = "(";
    bool first = true;
    for (const auto* p : parts) {
        if (!first) s += ",";
        s += *p;
        first = false;
    }
    return s + ")";
}

MultiVector combine(const std::vector<MultiVector>& table, const RVec& c, int m, int degree) {
    MultiVector out(m, degree);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) out += table[i].scaled(c[i]);
    return out;
}

void check_field(const MultiVector& v, int m, int degree, const std::string& what) {
    if (v.chart_dim() != m) throw InputError(what + ": chart dimension mismatch");
    if (v.degree() != degree && !v.is_zero())
        throw InputError(what + ": expected a multivector of degree " + std::to_string(degree));
}

}  // namespace

TwoAction::TwoAction(Lie2Algebra algebra, int chart_dim) : algebra_(std::move(algebra)), m_(chart_dim) {
    if (m_ < 1) throw InputError("chart dimension must be positive");
    rho10_.assign(algebra_.dim0(), MultiVector(m_, 1));
    rho1m1_.assign(algebra_.dim_m1(), MultiVector(m_, 2));
    rho2_.assign(algebra_.dim0(), std::vector<MultiVector>(algebra_.dim0(), MultiVector(m_, 2)));
}

void TwoAction::set_rho10(int x, MultiVector v) {
    check_field(v, m_, 1, "rho10");
    rho10_.at(x) = v.is_zero() ? MultiVector(m_, 1) : std::move(v);
}

void TwoAction::set_rho1m1(int a, MultiVector v) {
    check_field(v, m_, 2, "rho1m1");
    rho1m1_.at(a) = v.is_zero() ? MultiVector(m_, 2) : std::move(v);
}

void TwoAction::set_rho2(int x, int y, MultiVector v) {
    check_field(v, m_, 2, "rho2");
    if (v.is_zero()) v = MultiVector(m_, 2);
    if (x == y) {
        if (!v.is_zero()) throw InputError("rho2 must vanish on equal arguments");
        return;
    }
    if (x > y) {
        std::swap(x, y);
        v = -v;
    }
    rho2_.at(x).at(y) = std::move(v);
}

MultiVector TwoAction::rho2_basis(int x, int y) const {
    if (x == y) return MultiVector(m_, 2);
    return x < y ? rho2_[x][y] : -rho2_[y][x];
}

MultiVector TwoAction::rho10(const RVec& x) const { return combine(rho10_, x, m_, 1); }

MultiVector TwoAction::rho1m1(const RVec& a) const { return combine(rho1m1_, a, m_, 2); }

MultiVector TwoAction::rho2(const RVec& x, const RVec& y) const {
    MultiVector out(m_, 2);
    const int n = algebra_.dim0();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational c = x[i] * y[j] - x[j] * y[i];
            if (sgn(c) != 0 && !rho2_[i][j].is_zero()) out += rho2_[i][j].scaled(c);
        }
    return out;
}

bool TwoAction::operator==(const TwoAction& o) const {
    return algebra_ == o.algebra_ && m_ == o.m_ && rho10_ == o.rho10_ && rho1m1_ == o.rho1m1_ && rho2_ == o.rho2_;
}

Report verify_action(const TwoAction& rho) {
    const Lie2Algebra& L = rho.algebra();
    const int n1 = L.dim_m1(), n0 = L.dim0();
    const auto& lm = L.labels_m1();
    const auto& l0 = L.labels_0();
    auto A = basis(n1);
    auto X = basis(n0);
    Check a1{"A1"}, a2{"A2"}, a3{"A3"}, a4{"A4"};

    for (int a = 0; a < n1; ++a) {
        MultiVector d = rho.rho10(L.l1(A[a]));
        a1.record(d.is_zero(), tuple_label({&lm[a]}), d.str());
    }
    for (const auto& t : increasing_tuples(n0, 2)) {
        MultiVector d = rho.rho10(L.l2p(X[t[0]], X[t[1]])) - schouten(rho.rho10_basis(t[0]), rho.rho10_basis(t[1]));
        a2.record(d.is_zero(), tuple_label({&l0[t[0]], &l0[t[1]]}), d.str());
    }
    for (int a = 0; a < n1; ++a)
        for (int x = 0; x < n0; ++x) {
            MultiVector rhs = schouten(rho.rho1m1_basis(a), rho.rho10_basis(x)) + rho.rho2(L.l1(A[a]), X[x]);
            MultiVector d = rho.rho1m1(L.l2m(A[a], X[x])) - rhs;
            a3.record(d.is_zero(), tuple_label({&lm[a], &l0[x]}), d.str());
        }
    for (const auto& t : increasing_tuples(n0, 3)) {
        const RVec &x = X[t[0]], &y = X[t[1]], &z = X[t[2]];
        MultiVector lhs = rho.rho2(L.l2p(x, y), z) + rho.rho2(L.l2p(y, z), x) + rho.rho2(L.l2p(z, x), y) +
                          rho.rho1m1(L.l3(x, y, z));
        MultiVector rhs = schouten(rho.rho10(x), rho.rho2(y, z)) + schouten(rho.rho10(y), rho.rho2(z, x)) +
                          schouten(rho.rho10(z), rho.rho2(x, y));
        MultiVector d = lhs - rhs;
        a4.record(d.is_zero(), tuple_label({&l0[t[0]], &l0[t[1]], &l0[t[2]]}), d.str());
    }
    return Report{{a1, a2, a3, a4}};
}

ActionFlags classify_action(const TwoAction& rho) {
    ActionFlags f;
    const Lie2Algebra& L = rho.algebra();
    for (int x = 0; x < L.dim0(); ++x)
        if (!rho.rho10_basis(x).is_zero()) f.rho10_nonzero = true;
    for (int a = 0; a < L.dim_m1(); ++a)
        if (!rho.rho1m1_basis(a).is_zero()) f.rho1m1_nonzero = true;
    for (const auto& t : increasing_tuples(L.dim0(), 2))
        if (!rho.rho2_basis(t[0], t[1]).is_zero()) f.rho2_nonzero = true;
    return f;
}

std::string t_code(const ActionFlags& f) {
    std::string s = "T";
    s += f.rho10_nonzero ? '1' : '2';
    s += f.rho1m1_nonzero ? '3' : '4';
    s += f.rho2_nonzero ? '5' : '6';
    return s;
}

std::string to_string(PlecticClass c) {
    switch (c) {
    case PlecticClass::TwoPlectic: return "two_plectic";
    case PlecticClass::QuasiTwoPlectic: return "quasi_two_plectic";
    case PlecticClass::Neither: return "neither";
    }
    return "neither";
}

PlecticClassification plectic_class(const TwoAction& rho, const PlecticForm& omega) {
    if (omega.chart_dim() != rho.chart_dim()) throw InputError("omega and action live on different charts");
    const Lie2Algebra& L = rho.algebra();
    PlecticClassification out;
    bool quasi_ok = true, two_ok = true;
    auto probe = [&](const MultiVector& v, const std::string& name, bool& flag) {
        Form d = exterior_derivative(contract(v, omega.omega()));
        if (d.is_zero()) return;
        flag = false;
        out.witnesses.push_back({name, d});
    };
    for (int x = 0; x < L.dim0(); ++x) probe(rho.rho10_basis(x), "rho10(" + L.labels_0()[x] + ")", quasi_ok);
    for (int a = 0; a < L.dim_m1(); ++a) probe(rho.rho1m1_basis(a), "rho1m1(" + L.labels_m1()[a] + ")", quasi_ok);
    for (const auto& t : increasing_tuples(L.dim0(), 2))
        probe(rho.rho2_basis(t[0], t[1]), "rho2(" + L.labels_0()[t[0]] + "," + L.labels_0()[t[1]] + ")", two_ok);
    out.cls = !quasi_ok ? PlecticClass::Neither : two_ok ? PlecticClass::TwoPlectic : PlecticClass::QuasiTwoPlectic;
    return out;
}

PushforwardResult pushforward_along_skeletal(const TwoAction& rho, const SkeletalizationResult& skel) {
    const Lie2Algebra& L = rho.algebra();
    if (!(skel.F.source == L)) throw PreconditionError("skeletalization belongs to a different algebra");
    const Lie2Algebra& S = skel.skeletal;
    const int m = rho.chart_dim();
    const int n1 = L.dim_m1(), n0 = L.dim0();
    const auto& lm = L.labels_m1();
    const auto& l0 = L.labels_0();

    TwoAction bar(S, m);
    for (int j = 0; j < S.dim0(); ++j) bar.set_rho10(j, rho.rho10(skel.section.column(j)));
    for (int k = 0; k < S.dim_m1(); ++k) bar.set_rho1m1(k, rho.rho1m1(skel.kernel_inclusion.column(k)));
    for (const auto& t : increasing_tuples(S.dim0(), 2)) {
        RVec sx = skel.section.column(t[0]), sy = skel.section.column(t[1]);
        MultiVector v = rho.rho2(sx, sy) - bar.rho1m1(skel.F.F2.eval({sx, sy}));
        bar.set_rho2(t[0], t[1], v);
    }

    PushforwardResult out;
    Check c1{"C1"}, c2{"C2"}, c3{"C3"};
    for (int x = 0; x < n0; ++x) {
        MultiVector d = rho.rho10_basis(x) - bar.rho10(skel.F.F10 * unit(n0, x));
        c1.record(d.is_zero(), "(" + l0[x] + ")", d.str());
    }
    for (int a = 0; a < n1; ++a) {
        RVec image = skel.F.F1m1 * unit(n1, a);
        MultiVector d = rho.rho1m1_basis(a) - bar.rho1m1(image);
        c2.record(d.is_zero(), "(" + lm[a] + ")", d.str());
        if (!out.witness && is_zero(image) && !rho.rho1m1_basis(a).is_zero()) out.witness = a;
    }
    for (const auto& t : increasing_tuples(n0, 2)) {
        RVec x = unit(n0, t[0]), y = unit(n0, t[1]);
        MultiVector rhs = bar.rho2(skel.F.F10 * x, skel.F.F10 * y) + bar.rho1m1(skel.F.F2.eval({x, y}));
        MultiVector d = rho.rho2(x, y) - rhs;
        c3.record(d.is_zero(), "(" + l0[t[0]] + "," + l0[t[1]] + ")", d.str());
    }
    out.report.checks = {c1, c2, c3};
    if (out.report.passed()) {
        Report inner = verify_action(bar);
        for (auto c : inner.checks) {
            c.name = "skeletal_" + c.name;
            out.report.checks.push_back(c);
        }
        if (inner.passed()) out.skeletal_action = bar;
    }
    return out;
}

}  // namespace l2a
