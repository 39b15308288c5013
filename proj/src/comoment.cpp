#include "l2a/comoment.hpp"

#include "l2a/alt_tensor.hpp"
#include "l2a/errors.hpp"

#include <map>

namespace l2a {

namespace {

std::vector<RVec> basis(int n) {
    std::vector<RVec> out;
    for (int i = 0; i < n; ++i) out.push_back(unit(n, i));
    return out;
}

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

Form zero_form(int m, int deg) { return Form(m, deg); }

Form df(const ExpPoly& f) { return exterior_derivative(Form::scalar(f)); }

ExpPoly scalar_part(const Form& f) { return f.degree() == 0 ? f.as_scalar() : ExpPoly(f.chart_dim()); }

// (0, (iota_{v ^ X} omega, [v, X])) without the Hamiltonian check of l2m_obs.
PairObservable mixed(const PairObservable& p, const MultiVector& X, const PlecticForm& omega) {
    const int m = omega.chart_dim();
    return {ExpPoly(m), scalar_part(contract(wedge(p.v, X), omega.omega())), schouten(p.v, X)};
}

std::string pair_defect(const PairObservable& d) { return d.str(); }

// Hamiltonian vector fields of the lambda10 table; ok[x] is false where alpha is not Hamiltonian.
struct Fields {
    std::vector<MultiVector> X;
    std::vector<bool> ok;
    bool has(int x) const { return ok[x]; }
};

Fields hamiltonian_fields(const Comomentum& lam) {
    Fields out;
    const int m = lam.omega().chart_dim();
    for (int x = 0; x < lam.algebra().dim0(); ++x) {
        try {
            out.X.push_back(solve_hamiltonian_vector(lam.lambda10_basis(x), lam.omega()).X);
            out.ok.push_back(true);
        } catch (const NotHamiltonian&) {
            out.X.push_back(MultiVector(m, 1));
            out.ok.push_back(false);
        }
    }
    return out;
}

bool c1_holds(const Comomentum& lam, int x) {
    return contract(lam.action().rho10_basis(x), lam.omega().omega()) == -exterior_derivative(lam.lambda10_basis(x));
}

// Bivector the pair must carry and whether f matches it.
bool pair_condition(const PairObservable& p, const MultiVector& target, const PlecticForm& omega, std::string* defect) {
    Form lhs = contract(target, omega.omega());
    Form rhs = -df(p.f);
    bool ok_f = lhs == rhs;
    bool ok_v = p.v == target;
    if (defect) {
        defect->clear();
        if (!ok_f) *defect += "iota omega + d f = " + (lhs - rhs).str();
        if (!ok_v) *defect += std::string(defect->empty() ? "" : "; ") + "v - rho = " + (p.v - target).str();
    }
    return ok_f && ok_v;
}

MultiVector c3_target(const Comomentum& lam, int x, int y, const Fields& fields) {
    MultiVector target = lam.action().rho2_basis(x, y);
    if (!lam.psi().is_strict()) {
        HamiltonianForm hx{lam.lambda10_basis(x), fields.X[x]};
        HamiltonianForm hy{lam.lambda10_basis(y), fields.X[y]};
        target -= lam.psi().psi2(hx, hy);
    }
    return target;
}

}  // namespace

Comomentum::Comomentum(TwoAction action, PlecticForm omega) : action_(std::move(action)), omega_(std::move(omega)) {
    if (omega_.chart_dim() != action_.chart_dim()) throw InputError("omega and action live on different charts");
    const int m = omega_.chart_dim();
    const int n0 = algebra().dim0(), n1 = algebra().dim_m1();
    lambda10_.assign(n0, zero_form(m, 1));
    lambda1m1_.assign(n1, PairObservable::zero(m));
    lambda2_.assign(n0, std::vector<PairObservable>(n0, PairObservable::zero(m)));
}

void Comomentum::set_lambda10(int x, Form alpha) {
    if (alpha.is_zero()) alpha = zero_form(omega_.chart_dim(), 1);
    if (alpha.degree() != 1 || alpha.chart_dim() != omega_.chart_dim()) throw InputError("lambda10 values are 1-forms");
    lambda10_.at(x) = std::move(alpha);
}

void Comomentum::set_lambda1m1(int a, PairObservable p) { lambda1m1_.at(a) = std::move(p); }

void Comomentum::set_lambda2(int x, int y, PairObservable p) {
    if (x == y) {
        if (!p.is_zero()) throw InputError("lambda2 must vanish on equal arguments");
        return;
    }
    if (x > y) {
        std::swap(x, y);
        p = p.scaled(Rational(-1));
    }
    lambda2_.at(x).at(y) = std::move(p);
}

PairObservable Comomentum::lambda2_basis(int x, int y) const {
    if (x == y) return PairObservable::zero(omega_.chart_dim());
    return x < y ? lambda2_[x][y] : lambda2_[y][x].scaled(Rational(-1));
}

Form Comomentum::lambda10(const RVec& x) const {
    Form out = zero_form(omega_.chart_dim(), 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) out += lambda10_[i].scaled(x[i]);
    return out;
}

PairObservable Comomentum::lambda1m1(const RVec& a) const {
    PairObservable out = PairObservable::zero(omega_.chart_dim());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) out = out + lambda1m1_[i].scaled(a[i]);
    return out;
}

PairObservable Comomentum::lambda2(const RVec& x, const RVec& y) const {
    PairObservable out = PairObservable::zero(omega_.chart_dim());
    const int n = algebra().dim0();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational c = x[i] * y[j] - x[j] * y[i];
            if (sgn(c) != 0) out = out + lambda2_[i][j].scaled(c);
        }
    return out;
}

bool Comomentum::operator==(const Comomentum& o) const {
    return action_ == o.action_ && omega_.omega() == o.omega_.omega() && lambda10_ == o.lambda10_ &&
           lambda1m1_ == o.lambda1m1_ && lambda2_ == o.lambda2_ && psi_.is_strict() == o.psi_.is_strict();
}

Report verify_comoment(const Comomentum& lam) {
    const PlecticForm& w = lam.omega();
    if (!w.nondegenerate()) throw PreconditionError("comomentum verification needs a nondegenerate omega");
    const Lie2Algebra& L = lam.algebra();
    const TwoAction& rho = lam.action();
    const int m = w.chart_dim();
    const int n1 = L.dim_m1(), n0 = L.dim0();
    const auto& lm = L.labels_m1();
    const auto& l0 = L.labels_0();
    auto A = basis(n1);
    auto X = basis(n0);
    auto fields = hamiltonian_fields(lam);

    Check ham{"hamiltonian"};
    for (int x = 0; x < n0; ++x) ham.record(fields.has(x), "lambda10(" + l0[x] + ")", "not Hamiltonian");
    ham.note = "lambda10 values admit Hamiltonian vector fields";

    Check a1{"A1"}, a2{"A2"}, a3{"A3"}, a4{"A4"}, c1{"C1"}, c2{"C2"}, c3{"C3"};
    for (int a = 0; a < n1; ++a) {
        Form d = lam.lambda10(L.l1(A[a])) - df(lam.lambda1m1_basis(a).ftilde);
        a1.record(d.is_zero(), "(" + lm[a] + ")", d.str());
    }
    for (const auto& t : increasing_tuples(n0, 2)) {
        const std::string at = pair_label(l0[t[0]], l0[t[1]]);
        if (!fields.has(t[0]) || !fields.has(t[1])) {
            a2.record(false, at, "no Hamiltonian vector field");
            continue;
        }
        Form rhs = contract(wedge(fields.X[t[0]], fields.X[t[1]]), w.omega()) + df(lam.lambda2_basis(t[0], t[1]).ftilde);
        Form d = lam.lambda10(L.l2p(X[t[0]], X[t[1]])) - rhs;
        a2.record(d.is_zero(), at, d.str());
    }
    for (int a = 0; a < n1; ++a)
        for (int x = 0; x < n0; ++x) {
            const std::string at = pair_label(lm[a], l0[x]);
            if (!fields.has(x)) {
                a3.record(false, at, "no Hamiltonian vector field");
                continue;
            }
            PairObservable rhs = mixed(lam.lambda1m1_basis(a), fields.X[x], w) + lam.lambda2(L.l1(A[a]), X[x]);
            PairObservable d = lam.lambda1m1(L.l2m(A[a], X[x])) - rhs;
            a3.record(d.is_zero(), at, pair_defect(d));
        }
    for (const auto& t : increasing_tuples(n0, 3)) {
        const RVec &x = X[t[0]], &y = X[t[1]], &z = X[t[2]];
        const std::string at = "(" + l0[t[0]] + "," + l0[t[1]] + "," + l0[t[2]] + ")";
        if (!fields.has(t[0]) || !fields.has(t[1]) || !fields.has(t[2])) {
            a4.record(false, at, "no Hamiltonian vector field");
            continue;
        }
        const MultiVector &Xx = fields.X[t[0]], &Xy = fields.X[t[1]], &Xz = fields.X[t[2]];
        PairObservable lhs = lam.lambda2(L.l2p(x, y), z) + lam.lambda2(L.l2p(y, z), x) + lam.lambda2(L.l2p(z, x), y) +
                             lam.lambda1m1(L.l3(x, y, z));
        PairObservable rhs = PairObservable::zero(m);
        rhs.ftilde = -scalar_part(contract(wedge(wedge(Xx, Xy), Xz), w.omega()));
        // l2m(alpha, p) = -l2m(p, alpha)
        rhs = rhs - mixed(lam.lambda2(y, z), Xx, w) - mixed(lam.lambda2(z, x), Xy, w) - mixed(lam.lambda2(x, y), Xz, w);
        PairObservable d = lhs - rhs;
        a4.record(d.is_zero(), at, pair_defect(d));
    }
    for (int x = 0; x < n0; ++x) {
        Form d = contract(rho.rho10_basis(x), w.omega()) + exterior_derivative(lam.lambda10_basis(x));
        c1.record(d.is_zero(), "(" + l0[x] + ")", d.str());
    }
    for (int a = 0; a < n1; ++a) {
        std::string defect;
        bool ok = pair_condition(lam.lambda1m1_basis(a), rho.rho1m1_basis(a), w, &defect);
        c2.record(ok, "(" + lm[a] + ")", defect);
    }
    for (const auto& t : increasing_tuples(n0, 2)) {
        std::string defect;
        bool ok = pair_condition(lam.lambda2_basis(t[0], t[1]), c3_target(lam, t[0], t[1], fields), w, &defect);
        c3.record(ok, pair_label(l0[t[0]], l0[t[1]]), defect);
    }
    return Report{{ham, a1, a2, a3, a4, c1, c2, c3}};
}

ComomentClass classify_comoment(const Report& r, const Comomentum& lam) {
    ComomentClass c;
    c.fundamental = lam.psi().is_strict();
    c.weak = r.passed("C1") && r.passed("C2") && r.passed("C3");
    c.strong = c.weak && r.passed("A1") && r.passed("A2") && r.passed("A3") && r.passed("A4") &&
               r.passed("hamiltonian");
    c.weak_only = c.weak && !c.strong;
    return c;
}

ComomentClass classify_comoment(const Comomentum& lam) { return classify_comoment(verify_comoment(lam), lam); }

Form homotopy_primitive(const Form& beta) {
    const int m = beta.chart_dim();
    const int k = beta.degree();
    if (k == 0) throw PreconditionError("functions have no primitive");
    Form out(m, k - 1);
    for (const auto& [I, c] : beta.coeffs()) {
        if (!c.is_polynomial()) throw Unsupported("homotopy operator needs polynomial coefficients");
        for (const auto& [key, coef] : c.terms()) {
            unsigned deg = 0;
            for (unsigned e : key.mono) deg += e;
            Rational scale = coef / Rational(static_cast<long>(deg) + k);
            for (std::size_t r = 0; r < I.size(); ++r) {
                std::vector<unsigned> mono = key.mono;
                ++mono[I[r]];
                Blade rest;
                for (std::size_t s = 0; s < I.size(); ++s)
                    if (s != r) rest.push_back(I[s]);
                Rational sgn_r = r % 2 ? Rational(-1) : Rational(1);
                out.add(rest, ExpPoly::monomial(m, sgn_r * scale, mono, key.form));
            }
        }
    }
    return out;
}

WeakLiftResult find_weak_lift(const TwoAction& rho, const PlecticForm& omega) {
    if (!omega.nondegenerate()) throw PreconditionError("weak lifts need a nondegenerate omega");
    WeakLiftResult out;
    auto pc = plectic_class(rho, omega);
    if (!pc.witnesses.empty()) {
        out.obstructions = pc.witnesses;
        return out;
    }
    const Lie2Algebra& L = rho.algebra();
    const int m = omega.chart_dim();
    Comomentum lam(rho, omega);
    auto primitive = [&](const MultiVector& v) { return -homotopy_primitive(contract(v, omega.omega())); };
    for (int x = 0; x < L.dim0(); ++x) lam.set_lambda10(x, primitive(rho.rho10_basis(x)));
    for (int a = 0; a < L.dim_m1(); ++a) {
        const MultiVector& v = rho.rho1m1_basis(a);
        lam.set_lambda1m1(a, {ExpPoly(m), scalar_part(primitive(v)), v});
    }
    for (const auto& t : increasing_tuples(L.dim0(), 2)) {
        MultiVector v = rho.rho2_basis(t[0], t[1]);
        lam.set_lambda2(t[0], t[1], {ExpPoly(m), scalar_part(primitive(v)), v});
    }
    out.lift = lam;
    return out;
}

HomotopyMomentMap::HomotopyMomentMap(TwoAction action, PlecticForm omega)
    : action_(std::move(action)), omega_(std::move(omega)) {
    const int m = omega_.chart_dim();
    const int n0 = action_.algebra().dim0(), n1 = action_.algebra().dim_m1();
    lambda10_.assign(n0, Form(m, 1));
    lambda1m1_.assign(n1, ExpPoly(m));
    lambda2_.assign(n0, std::vector<ExpPoly>(n0, ExpPoly(m)));
}

void HomotopyMomentMap::set_lambda10(int x, Form alpha) {
    if (alpha.is_zero()) alpha = Form(omega_.chart_dim(), 1);
    lambda10_.at(x) = std::move(alpha);
}

void HomotopyMomentMap::set_lambda1m1(int a, ExpPoly f) { lambda1m1_.at(a) = std::move(f); }

void HomotopyMomentMap::set_lambda2(int x, int y, ExpPoly f) {
    if (x == y) return;
    if (x > y) {
        std::swap(x, y);
        f = -f;
    }
    lambda2_.at(x).at(y) = std::move(f);
}

ExpPoly HomotopyMomentMap::lambda2_basis(int x, int y) const {
    if (x == y) return ExpPoly(omega_.chart_dim());
    return x < y ? lambda2_[x][y] : -lambda2_[y][x];
}

bool HomotopyMomentMap::operator==(const HomotopyMomentMap& o) const {
    return action_ == o.action_ && lambda10_ == o.lambda10_ && lambda1m1_ == o.lambda1m1_ && lambda2_ == o.lambda2_;
}

Report verify_homotopy(const HomotopyMomentMap& lg) {
    const PlecticForm& w = lg.omega();
    if (!w.nondegenerate()) throw PreconditionError("needs a nondegenerate omega");
    const Lie2Algebra& L = lg.action().algebra();
    const int m = w.chart_dim();
    const int n1 = L.dim_m1(), n0 = L.dim0();
    const auto& lm = L.labels_m1();
    const auto& l0 = L.labels_0();
    auto A = basis(n1);
    auto X = basis(n0);
    auto form_of = [&](const RVec& x) {
        Form out(m, 1);
        for (int i = 0; i < n0; ++i)
            if (sgn(x[i]) != 0) out += lg.lambda10_basis(i).scaled(x[i]);
        return out;
    };
    auto fn1 = [&](const RVec& a) {
        ExpPoly out(m);
        for (int i = 0; i < n1; ++i)
            if (sgn(a[i]) != 0) out += lg.lambda1m1_basis(i).scaled(a[i]);
        return out;
    };
    auto fn2 = [&](const RVec& x, const RVec& y) {
        ExpPoly out(m);
        for (int i = 0; i < n0; ++i)
            for (int j = i + 1; j < n0; ++j) {
                Rational c = x[i] * y[j] - x[j] * y[i];
                if (sgn(c) != 0) out += lg.lambda2_basis(i, j).scaled(c);
            }
        return out;
    };
    std::vector<MultiVector> fields;
    for (int x = 0; x < n0; ++x) fields.push_back(lg.action().rho10_basis(x));

    Check a1{"A1"}, a2{"A2"}, a3{"A3"}, a4{"A4"}, c1{"C1"};
    for (int a = 0; a < n1; ++a) {
        Form d = form_of(L.l1(A[a])) - df(lg.lambda1m1_basis(a));
        a1.record(d.is_zero(), "(" + lm[a] + ")", d.str());
    }
    for (const auto& t : increasing_tuples(n0, 2)) {
        Form rhs = contract(wedge(fields[t[0]], fields[t[1]]), w.omega()) + df(lg.lambda2_basis(t[0], t[1]));
        Form d = form_of(L.l2p(X[t[0]], X[t[1]])) - rhs;
        a2.record(d.is_zero(), pair_label(l0[t[0]], l0[t[1]]), d.str());
    }
    for (int a = 0; a < n1; ++a)
        for (int x = 0; x < n0; ++x) {
            ExpPoly d = fn1(L.l2m(A[a], X[x])) - fn2(L.l1(A[a]), X[x]);
            a3.record(d.is_zero(), pair_label(lm[a], l0[x]), d.str());
        }
    for (const auto& t : increasing_tuples(n0, 3)) {
        const RVec &x = X[t[0]], &y = X[t[1]], &z = X[t[2]];
        ExpPoly lhs = fn2(L.l2p(x, y), z) + fn2(L.l2p(y, z), x) + fn2(L.l2p(z, x), y) + fn1(L.l3(x, y, z));
        ExpPoly rhs = -scalar_part(contract(wedge(wedge(fields[t[0]], fields[t[1]]), fields[t[2]]), w.omega()));
        ExpPoly d = lhs - rhs;
        a4.record(d.is_zero(), "(" + l0[t[0]] + "," + l0[t[1]] + "," + l0[t[2]] + ")", d.str());
    }
    for (int x = 0; x < n0; ++x) {
        Form d = contract(fields[x], w.omega()) + exterior_derivative(lg.lambda10_basis(x));
        c1.record(d.is_zero(), "(" + l0[x] + ")", d.str());
    }
    return Report{{a1, a2, a3, a4, c1}};
}

Comomentum bridge_from_homotopy(const HomotopyMomentMap& lg) {
    const TwoAction& rho = lg.action();
    const Lie2Algebra& L = rho.algebra();
    auto f = classify_action(rho);
    if (f.rho1m1_nonzero || f.rho2_nonzero) throw PreconditionError("bridge needs rho1m1 = 0 and rho2 = 0");
    Comomentum lam(rho, lg.omega());
    for (int x = 0; x < L.dim0(); ++x) lam.set_lambda10(x, lg.lambda10_basis(x));
    for (int a = 0; a < L.dim_m1(); ++a) lam.set_lambda1m1(a, morphism_I(lg.lambda1m1_basis(a)));
    for (const auto& t : increasing_tuples(L.dim0(), 2))
        lam.set_lambda2(t[0], t[1], morphism_I(lg.lambda2_basis(t[0], t[1])));
    return lam;
}

HomotopyMomentMap bridge_to_homotopy(const Comomentum& lam) {
    const Lie2Algebra& L = lam.algebra();
    HomotopyMomentMap lg(lam.action(), lam.omega());
    for (int x = 0; x < L.dim0(); ++x) lg.set_lambda10(x, lam.lambda10_basis(x));
    for (int a = 0; a < L.dim_m1(); ++a) lg.set_lambda1m1(a, morphism_Phi(lam.lambda1m1_basis(a)));
    for (const auto& t : increasing_tuples(L.dim0(), 2))
        lg.set_lambda2(t[0], t[1], morphism_Phi(lam.lambda2_basis(t[0], t[1])));
    return lg;
}

namespace {

enum class EntryKind { L10, L1m1, L2 };

struct Entry {
    EntryKind kind;
    int i = 0, j = 0;
    std::string name;
};

std::vector<Entry> entries(const Lie2Algebra& L) {
    std::vector<Entry> out;
    for (int x = 0; x < L.dim0(); ++x) out.push_back({EntryKind::L10, x, 0, "lambda10(" + L.labels_0()[x] + ")"});
    for (int a = 0; a < L.dim_m1(); ++a)
        out.push_back({EntryKind::L1m1, a, 0, "lambda1m1(" + L.labels_m1()[a] + ")"});
    for (const auto& t : increasing_tuples(L.dim0(), 2))
        out.push_back({EntryKind::L2, t[0], t[1],
                       "lambda2(" + L.labels_0()[t[0]] + "," + L.labels_0()[t[1]] + ")"});
    return out;
}

const Entry& find_entry(const std::vector<Entry>& es, const std::string& name) {
    for (const auto& e : es)
        if (e.name == name) return e;
    throw InputError("unknown comomentum entry: " + name);
}

bool holds(const Comomentum& lam, const Entry& e) {
    switch (e.kind) {
    case EntryKind::L10: return c1_holds(lam, e.i);
    case EntryKind::L1m1:
        return pair_condition(lam.lambda1m1_basis(e.i), lam.action().rho1m1_basis(e.i), lam.omega(), nullptr);
    case EntryKind::L2: {
        auto fields = hamiltonian_fields(lam);
        return pair_condition(lam.lambda2_basis(e.i, e.j), c3_target(lam, e.i, e.j, fields), lam.omega(), nullptr);
    }
    }
    return false;
}

std::string value_of(const Comomentum& lam, const Entry& e) {
    switch (e.kind) {
    case EntryKind::L10: return lam.lambda10_basis(e.i).str();
    case EntryKind::L1m1: return lam.lambda1m1_basis(e.i).str();
    case EntryKind::L2: return lam.lambda2_basis(e.i, e.j).str();
    }
    return "";
}

const char* condition_of(EntryKind k) {
    switch (k) {
    case EntryKind::L10: return "C1";
    case EntryKind::L1m1: return "C2";
    case EntryKind::L2: return "C3";
    }
    return "";
}

void set_entry(Comomentum& lam, const Entry& e, const Form* alpha, const PairObservable* p) {
    if (e.kind == EntryKind::L10) lam.set_lambda10(e.i, *alpha);
    else if (e.kind == EntryKind::L1m1) lam.set_lambda1m1(e.i, *p);
    else lam.set_lambda2(e.i, e.j, *p);
}

PairObservable pair_value(const Comomentum& lam, const Entry& e) {
    return e.kind == EntryKind::L1m1 ? lam.lambda1m1_basis(e.i) : lam.lambda2_basis(e.i, e.j);
}

}  // namespace

bool entry_condition_holds(const Comomentum& lam, const std::string& entry) {
    auto es = entries(lam.algebra());
    return holds(lam, find_entry(es, entry));
}

Reconciliation reconcile(const std::string& example, const Comomentum& source) {
    Reconciliation out{source, {}, {}};
    Comomentum& cur = out.corrected;
    const PlecticForm& w = source.omega();
    const int m = w.chart_dim();
    for (const auto& e : entries(source.algebra())) {
        if (holds(cur, e)) continue;
        const std::string before = value_of(cur, e);
        Comomentum trial = cur;
        std::string kind;
        if (e.kind == EntryKind::L10) {
            Form flipped = -cur.lambda10_basis(e.i);
            set_entry(trial, e, &flipped, nullptr);
            if (holds(trial, e)) kind = "sign flip";
            else {
                try {
                    Form prim = -homotopy_primitive(contract(cur.action().rho10_basis(e.i), w.omega()));
                    set_entry(trial, e, &prim, nullptr);
                    if (holds(trial, e)) kind = "replacement";
                } catch (const Unsupported&) {
                }
            }
        } else {
            PairObservable p = pair_value(cur, e);
            PairObservable flipped{p.ftilde, -p.f, p.v};
            set_entry(trial, e, nullptr, &flipped);
            if (holds(trial, e)) kind = "sign flip";
            else {
                MultiVector target = e.kind == EntryKind::L1m1 ? cur.action().rho1m1_basis(e.i)
                                                               : cur.action().rho2_basis(e.i, e.j);
                try {
                    Form prim = -homotopy_primitive(contract(target, w.omega()));
                    PairObservable q{p.ftilde, scalar_part(prim), target};
                    if (q.f.chart_dim() == 0) q.f = ExpPoly(m);
                    set_entry(trial, e, nullptr, &q);
                    if (holds(trial, e)) kind = "replacement";
                } catch (const Unsupported&) {
                }
            }
        }
        if (kind.empty()) {
            out.unresolved.push_back(e.name);
            continue;
        }
        cur = trial;
        out.records.push_back({example, e.name, condition_of(e.kind), before, value_of(cur, e), kind});
    }
    return out;
}

Comomentum apply_records(const Comomentum& source, const std::vector<DiscrepancyRecord>& records) {
    Comomentum cur = source;
    const int m = source.omega().chart_dim();
    auto es = entries(source.algebra());
    for (const auto& r : records) {
        const Entry& e = find_entry(es, r.entry);
        if (value_of(cur, e) != r.paper_value)
            throw InputError("record for " + r.entry + " does not match the stored source value");
        if (e.kind == EntryKind::L10) {
            Form v = parse_form(m, r.derived_value, 1);
            set_entry(cur, e, &v, nullptr);
        } else {
            PairObservable p = parse_pair(m, r.derived_value);
            set_entry(cur, e, nullptr, &p);
        }
        if (value_of(cur, e) != r.derived_value) throw InputError("record for " + r.entry + " does not round-trip");
    }
    return cur;
}

}  // namespace l2a
