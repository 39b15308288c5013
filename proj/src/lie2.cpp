#include "l2a/lie2.hpp"

#include "l2a/errors.hpp"

#include <algorithm>

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

void require_len(const RVec& v, int n, const char* what) {
    if (static_cast<int>(v.size()) != n) throw InputError(std::string(what) + " has wrong dimension");
}

}  // namespace

std::string format_vector(const RVec& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Rational c = v[i];
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (c != 1) out += to_string(c) + "*";
        out += i < labels.size() ? labels[i] : "#" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

Lie2Algebra::Lie2Algebra(std::vector<std::string> labels_m1, std::vector<std::string> labels_0)
    : labels_m1_(std::move(labels_m1)), labels_0_(std::move(labels_0)) {
    const int n1 = dim_m1(), n0 = dim0();
    l1_ = Matrix(n0, n1);
    l2p_ = AltTensor(2, n0, n0);
    l2m_.assign(n1, std::vector<RVec>(n0, zeros(n1)));
    l3_ = AltTensor(3, n0, n1);
}

int Lie2Algebra::index_m1(const std::string& label) const {
    auto it = std::find(labels_m1_.begin(), labels_m1_.end(), label);
    return it == labels_m1_.end() ? -1 : static_cast<int>(it - labels_m1_.begin());
}

int Lie2Algebra::index0(const std::string& label) const {
    auto it = std::find(labels_0_.begin(), labels_0_.end(), label);
    return it == labels_0_.end() ? -1 : static_cast<int>(it - labels_0_.begin());
}

void Lie2Algebra::set_l1(int a, const RVec& value) {
    require_len(value, dim0(), "l1 value");
    for (int i = 0; i < dim0(); ++i) l1_(i, a) = value[i];
}

void Lie2Algebra::set_l2p(int x, int y, const RVec& value) {
    require_len(value, dim0(), "l2p value");
    l2p_.set({x, y}, value);
}

void Lie2Algebra::set_l2m(int a, int x, const RVec& value) {
    require_len(value, dim_m1(), "l2m value");
    l2m_.at(a).at(x) = value;
}

void Lie2Algebra::set_l3(int x, int y, int z, const RVec& value) {
    require_len(value, dim_m1(), "l3 value");
    l3_.set({x, y, z}, value);
}

void Lie2Algebra::set_l1(const Matrix& m) {
    if (m.rows() != dim0() || m.cols() != dim_m1()) throw InputError("l1 matrix has wrong shape");
    l1_ = m;
}

void Lie2Algebra::set_l2p(const AltTensor& t) {
    if (t.arity() != 2 || t.in_dim() != dim0() || t.out_dim() != dim0()) throw InputError("l2p tensor has wrong shape");
    l2p_ = t;
}

void Lie2Algebra::set_l3(const AltTensor& t) {
    if (t.arity() != 3 || t.in_dim() != dim0() || t.out_dim() != dim_m1()) throw InputError("l3 tensor has wrong shape");
    l3_ = t;
}

RVec Lie2Algebra::l1(const RVec& a) const { return l1_ * a; }

RVec Lie2Algebra::l2p(const RVec& x, const RVec& y) const { return l2p_.eval({x, y}); }

RVec Lie2Algebra::l2m(const RVec& a, const RVec& x) const {
    RVec out = zeros(dim_m1());
    for (int i = 0; i < dim_m1(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; j < dim0(); ++j)
            if (sgn(x[j]) != 0) axpy(out, a[i] * x[j], l2m_[i][j]);
    }
    return out;
}

RVec Lie2Algebra::l3(const RVec& x, const RVec& y, const RVec& z) const { return l3_.eval({x, y, z}); }

bool Lie2Algebra::operator==(const Lie2Algebra& o) const {
    return labels_m1_ == o.labels_m1_ && labels_0_ == o.labels_0_ && l1_ == o.l1_ && l2p_ == o.l2p_ &&
           l2m_ == o.l2m_ && l3_ == o.l3_;
}

Report verify_axioms(const Lie2Algebra& L) {
    const int n1 = L.dim_m1(), n0 = L.dim0();
    const auto& lm = L.labels_m1();
    const auto& l0 = L.labels_0();
    auto A = basis(n1);
    auto X = basis(n0);
    Check r1{"R1"}, r2{"R2"}, r3{"R3"}, r4{"R4"}, r5{"R5"}, r6{"R6"};
    r1.note = "l1 vanishes on g_0 by degree";

    for (int a = 0; a < n1; ++a)
        for (int x = 0; x < n0; ++x) {
            RVec d = sub(L.l1(scale(Rational(-1), L.l2m(A[a], X[x]))), L.l2p(X[x], L.l1(A[a])));
            r2.record(is_zero(d), tuple_label({&l0[x], &lm[a]}), format_vector(d, l0));
        }
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) {
            RVec d = sub(scale(Rational(-1), L.l2m(A[b], L.l1(A[a]))), L.l2m(A[a], L.l1(A[b])));
            r3.record(is_zero(d), tuple_label({&lm[a], &lm[b]}), format_vector(d, lm));
        }
    for (const auto& t : increasing_tuples(n0, 3)) {
        const RVec &x = X[t[0]], &y = X[t[1]], &z = X[t[2]];
        RVec rhs = zeros(n0);
        rhs = sub(rhs, L.l2p(L.l2p(x, y), z));
        rhs = sub(rhs, L.l2p(L.l2p(y, z), x));
        rhs = sub(rhs, L.l2p(L.l2p(z, x), y));
        RVec d = sub(L.l1(L.l3(x, y, z)), rhs);
        r4.record(is_zero(d), tuple_label({&l0[t[0]], &l0[t[1]], &l0[t[2]]}), format_vector(d, l0));
    }
    for (int a = 0; a < n1; ++a)
        for (const auto& t : increasing_tuples(n0, 2)) {
            const RVec &x = X[t[0]], &y = X[t[1]];
            RVec rhs = L.l2m(A[a], L.l2p(x, y));
            rhs = add(rhs, L.l2m(L.l2m(A[a], y), x));
            rhs = sub(rhs, L.l2m(L.l2m(A[a], x), y));
            RVec d = sub(L.l3(L.l1(A[a]), x, y), rhs);
            r5.record(is_zero(d), tuple_label({&lm[a], &l0[t[0]], &l0[t[1]]}), format_vector(d, lm));
        }
    for (const auto& t : increasing_tuples(n0, 4)) {
        const RVec &x = X[t[0]], &y = X[t[1]], &z = X[t[2]], &w = X[t[3]];
        RVec lhs = L.l3(L.l2p(x, y), z, w);
        lhs = sub(lhs, L.l3(L.l2p(x, z), y, w));
        lhs = add(lhs, L.l3(L.l2p(x, w), y, z));
        lhs = add(lhs, L.l3(L.l2p(y, z), x, w));
        lhs = sub(lhs, L.l3(L.l2p(y, w), x, z));
        lhs = add(lhs, L.l3(L.l2p(z, w), x, y));
        RVec rhs = L.l2m(L.l3(x, y, z), w);
        rhs = sub(rhs, L.l2m(L.l3(x, y, w), z));
        rhs = add(rhs, L.l2m(L.l3(x, z, w), y));
        rhs = sub(rhs, L.l2m(L.l3(y, z, w), x));
        RVec d = sub(lhs, rhs);
        r6.record(is_zero(d), tuple_label({&l0[t[0]], &l0[t[1]], &l0[t[2]], &l0[t[3]]}), format_vector(d, lm));
    }
    return Report{{r1, r2, r3, r4, r5, r6}};
}

AltTensor jacobiator(const Lie2Algebra& L) {
    const int n0 = L.dim0();
    auto X = basis(n0);
    AltTensor J(3, n0, n0);
    for (const auto& t : increasing_tuples(n0, 3)) {
        const RVec &x = X[t[0]], &y = X[t[1]], &z = X[t[2]];
        RVec v = add(add(L.l2p(L.l2p(x, y), z), L.l2p(L.l2p(y, z), x)), L.l2p(L.l2p(z, x), y));
        J.set(t, v);
    }
    return J;
}

Lie2Flags classify_flags(const Lie2Algebra& L) {
    Lie2Flags f;
    f.skeletal = L.l1().is_zero();
    f.strict = L.l3().is_zero();
    f.g0_is_lie = true;
    for (const auto& [t, v] : L.l3().entries())
        if (!is_zero(L.l1(v))) f.g0_is_lie = false;
    f.l3_vanishes_on_im_l1 = true;
    auto X = basis(L.dim0());
    for (int a = 0; a < L.dim_m1(); ++a) {
        RVec la = L.l1().column(a);
        for (const auto& t : increasing_tuples(L.dim0(), 2))
            if (!is_zero(L.l3(la, X[t[0]], X[t[1]]))) f.l3_vanishes_on_im_l1 = false;
    }
    return f;
}

std::string s_code(const Lie2Algebra& L) {
    Lie2Flags f = classify_flags(L);
    if (!f.g0_is_lie) return "S0";
    bool l2_zero = L.l2p().is_zero();
    for (int a = 0; a < L.dim_m1() && l2_zero; ++a)
        for (int x = 0; x < L.dim0(); ++x)
            if (!is_zero(L.l2m_basis(a, x))) l2_zero = false;
    std::string s = "S";
    s += f.skeletal ? '2' : '1';
    s += l2_zero ? '4' : '3';
    s += f.strict ? '6' : '5';
    return s;
}

Lie2Morphism identity_morphism(const Lie2Algebra& L) {
    return Lie2Morphism{L, L, Matrix::identity(L.dim0()), Matrix::identity(L.dim_m1()), AltTensor(2, L.dim0(), L.dim_m1())};
}

void check_shapes(const Lie2Morphism& F) {
    const auto &S = F.source, &T = F.target;
    if (F.F10.rows() != T.dim0() || F.F10.cols() != S.dim0()) throw InputError("F10 has wrong shape");
    if (F.F1m1.rows() != T.dim_m1() || F.F1m1.cols() != S.dim_m1()) throw InputError("F1m1 has wrong shape");
    if (F.F2.arity() != 2 || F.F2.in_dim() != S.dim0() || F.F2.out_dim() != T.dim_m1())
        throw InputError("F2 has wrong shape");
}

Report verify_morphism(const Lie2Morphism& F) {
    check_shapes(F);
    const auto &S = F.source, &T = F.target;
    const auto& lm = S.labels_m1();
    const auto& l0 = S.labels_0();
    auto A = basis(S.dim_m1());
    auto X = basis(S.dim0());
    auto F2 = [&](const RVec& x, const RVec& y) { return F.F2.eval({x, y}); };
    // l2'(x', c) for x' in g'_0, c in g'_-1
    auto l2mix = [&](const RVec& xp, const RVec& c) { return scale(Rational(-1), T.l2m(c, xp)); };
    Check a1{"A1"}, a2{"A2"}, a3{"A3"}, a4{"A4"};

    for (int a = 0; a < S.dim_m1(); ++a) {
        RVec d = sub(T.l1(F.F1m1 * A[a]), F.F10 * S.l1(A[a]));
        a1.record(is_zero(d), tuple_label({&lm[a]}), format_vector(d, T.labels_0()));
    }
    for (const auto& t : increasing_tuples(S.dim0(), 2)) {
        const RVec &x = X[t[0]], &y = X[t[1]];
        RVec d = sub(T.l1(F2(x, y)), sub(F.F10 * S.l2p(x, y), T.l2p(F.F10 * x, F.F10 * y)));
        a2.record(is_zero(d), tuple_label({&l0[t[0]], &l0[t[1]]}), format_vector(d, T.labels_0()));
    }
    for (int a = 0; a < S.dim_m1(); ++a)
        for (int x = 0; x < S.dim0(); ++x) {
            RVec lhs = F.F1m1 * S.l2m(A[a], X[x]);
            RVec rhs = add(F2(S.l1(A[a]), X[x]), T.l2m(F.F1m1 * A[a], F.F10 * X[x]));
            RVec d = sub(lhs, rhs);
            a3.record(is_zero(d), tuple_label({&lm[a], &l0[x]}), format_vector(d, T.labels_m1()));
        }
    for (const auto& t : increasing_tuples(S.dim0(), 3)) {
        const RVec &x = X[t[0]], &y = X[t[1]], &z = X[t[2]];
        RVec lhs = F.F1m1 * S.l3(x, y, z);
        lhs = add(lhs, F2(S.l2p(x, y), z));
        lhs = add(lhs, F2(S.l2p(y, z), x));
        lhs = add(lhs, F2(S.l2p(z, x), y));
        RVec fx = F.F10 * x, fy = F.F10 * y, fz = F.F10 * z;
        RVec rhs = T.l3(fx, fy, fz);
        rhs = add(rhs, l2mix(fx, F2(y, z)));
        rhs = add(rhs, l2mix(fy, F2(z, x)));
        rhs = add(rhs, l2mix(fz, F2(x, y)));
        RVec d = sub(lhs, rhs);
        a4.record(is_zero(d), tuple_label({&l0[t[0]], &l0[t[1]], &l0[t[2]]}), format_vector(d, T.labels_m1()));
    }
    return Report{{a1, a2, a3, a4}};
}

Lie2Morphism compose(const Lie2Morphism& Fp, const Lie2Morphism& F) {
    check_shapes(F);
    check_shapes(Fp);
    if (!(F.target == Fp.source)) throw PreconditionError("morphisms do not form a chain");
    Lie2Morphism out{F.source, Fp.target, Fp.F10 * F.F10, Fp.F1m1 * F.F1m1,
                     AltTensor(2, F.source.dim0(), Fp.target.dim_m1())};
    auto X = basis(F.source.dim0());
    for (const auto& t : increasing_tuples(F.source.dim0(), 2)) {
        RVec v = Fp.F2.eval({F.F10 * X[t[0]], F.F10 * X[t[1]]});
        v = add(v, Fp.F1m1 * F.F2.at(t));
        out.F2.set(t, v);
    }
    return out;
}

RVec CrossedModule::act(const RVec& x, const RVec& a) const {
    RVec out = zeros(dim_h());
    for (int i = 0; i < dim_g(); ++i)
        if (sgn(x[i]) != 0) axpy(out, x[i], r[i] * a);
    return out;
}

Report verify_crossed_module(const CrossedModule& cm) {
    const int ng = cm.dim_g(), nh = cm.dim_h();
    auto G = basis(ng);
    auto H = basis(nh);
    Check jg{"g_jacobi"}, jh{"h_jacobi"}, tm{"tau_morphism"}, rd{"r_derivation"}, rm{"r_morphism"},
        c1{"tau_equivariance"}, c2{"peiffer"};
    auto gb = [&](const RVec& x, const RVec& y) { return cm.g_bracket.eval({x, y}); };
    auto hb = [&](const RVec& a, const RVec& b) { return cm.h_bracket.eval({a, b}); };
    for (const auto& t : increasing_tuples(ng, 3)) {
        const RVec &x = G[t[0]], &y = G[t[1]], &z = G[t[2]];
        RVec d = add(add(gb(gb(x, y), z), gb(gb(y, z), x)), gb(gb(z, x), y));
        jg.record(is_zero(d), tuple_label({&cm.g_labels[t[0]], &cm.g_labels[t[1]], &cm.g_labels[t[2]]}),
                  format_vector(d, cm.g_labels));
    }
    for (const auto& t : increasing_tuples(nh, 3)) {
        const RVec &a = H[t[0]], &b = H[t[1]], &c = H[t[2]];
        RVec d = add(add(hb(hb(a, b), c), hb(hb(b, c), a)), hb(hb(c, a), b));
        jh.record(is_zero(d), tuple_label({&cm.h_labels[t[0]], &cm.h_labels[t[1]], &cm.h_labels[t[2]]}),
                  format_vector(d, cm.h_labels));
    }
    for (const auto& t : increasing_tuples(nh, 2)) {
        const RVec &a = H[t[0]], &b = H[t[1]];
        RVec d = sub(cm.tau * hb(a, b), gb(cm.tau * a, cm.tau * b));
        tm.record(is_zero(d), tuple_label({&cm.h_labels[t[0]], &cm.h_labels[t[1]]}), format_vector(d, cm.g_labels));
    }
    for (int x = 0; x < ng; ++x)
        for (const auto& t : increasing_tuples(nh, 2)) {
            const RVec &a = H[t[0]], &b = H[t[1]];
            RVec d = sub(cm.act(G[x], hb(a, b)), add(hb(cm.act(G[x], a), b), hb(a, cm.act(G[x], b))));
            rd.record(is_zero(d), tuple_label({&cm.g_labels[x], &cm.h_labels[t[0]], &cm.h_labels[t[1]]}),
                      format_vector(d, cm.h_labels));
        }
    for (const auto& t : increasing_tuples(ng, 2))
        for (int a = 0; a < nh; ++a) {
            const RVec &x = G[t[0]], &y = G[t[1]];
            RVec d = sub(cm.act(gb(x, y), H[a]), sub(cm.act(x, cm.act(y, H[a])), cm.act(y, cm.act(x, H[a]))));
            rm.record(is_zero(d), tuple_label({&cm.g_labels[t[0]], &cm.g_labels[t[1]], &cm.h_labels[a]}),
                      format_vector(d, cm.h_labels));
        }
    for (int x = 0; x < ng; ++x)
        for (int a = 0; a < nh; ++a) {
            RVec d = sub(cm.tau * cm.act(G[x], H[a]), gb(G[x], cm.tau * H[a]));
            c1.record(is_zero(d), tuple_label({&cm.g_labels[x], &cm.h_labels[a]}), format_vector(d, cm.g_labels));
        }
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b) {
            RVec d = sub(cm.act(cm.tau * H[a], H[b]), hb(H[a], H[b]));
            c2.record(is_zero(d), tuple_label({&cm.h_labels[a], &cm.h_labels[b]}), format_vector(d, cm.h_labels));
        }
    return Report{{jg, jh, tm, rd, rm, c1, c2}};
}

CrossedModule to_crossed_module(const Lie2Algebra& L) {
    if (!L.l3().is_zero()) throw PreconditionError("crossed modules correspond to strict Lie 2-algebras only");
    CrossedModule cm;
    cm.g_labels = L.labels_0();
    cm.h_labels = L.labels_m1();
    cm.g_bracket = L.l2p();
    cm.tau = L.l1();
    const int ng = L.dim0(), nh = L.dim_m1();
    cm.h_bracket = AltTensor(2, nh, nh);
    auto H = basis(nh);
    for (const auto& t : increasing_tuples(nh, 2)) cm.h_bracket.set(t, L.l2m(H[t[0]], L.l1(H[t[1]])));
    cm.r.assign(ng, Matrix(nh, nh));
    // r(x)(a) = l2m(x, a) = -l2m(a, x)
    for (int x = 0; x < ng; ++x)
        for (int a = 0; a < nh; ++a) {
            RVec v = L.l2m_basis(a, x);
            for (int i = 0; i < nh; ++i) cm.r[x](i, a) = -v[i];
        }
    return cm;
}

Lie2Algebra from_crossed_module(const CrossedModule& cm) {
    Report rep = verify_crossed_module(cm);
    for (const auto& c : rep.checks)
        if (!c.passed)
            throw PreconditionError("crossed module axiom " + c.name + " fails at " + c.where + ": " + c.defect);
    Lie2Algebra L(cm.h_labels, cm.g_labels);
    L.set_l1(cm.tau);
    L.set_l2p(cm.g_bracket);
    for (int a = 0; a < cm.dim_h(); ++a)
        for (int x = 0; x < cm.dim_g(); ++x) L.set_l2m(a, x, scale(Rational(-1), cm.r[x].column(a)));
    return L;
}

Report verify_crossed_module_morphism(const Matrix& Phi, const Matrix& psi, const CrossedModule& cm,
                                      const CrossedModule& cmp) {
    if (Phi.rows() != cmp.dim_h() || Phi.cols() != cm.dim_h()) throw InputError("Phi has wrong shape");
    if (psi.rows() != cmp.dim_g() || psi.cols() != cm.dim_g()) throw InputError("psi has wrong shape");
    auto G = basis(cm.dim_g());
    auto H = basis(cm.dim_h());
    Check tc{"tau_compat"}, eq{"equivariance"}, pb{"psi_bracket"}, fb{"phi_bracket"};
    for (int a = 0; a < cm.dim_h(); ++a) {
        RVec d = sub(cmp.tau * (Phi * H[a]), psi * (cm.tau * H[a]));
        tc.record(is_zero(d), tuple_label({&cm.h_labels[a]}), format_vector(d, cmp.g_labels));
    }
    for (int x = 0; x < cm.dim_g(); ++x)
        for (int a = 0; a < cm.dim_h(); ++a) {
            RVec d = sub(Phi * cm.act(G[x], H[a]), cmp.act(psi * G[x], Phi * H[a]));
            eq.record(is_zero(d), tuple_label({&cm.g_labels[x], &cm.h_labels[a]}), format_vector(d, cmp.h_labels));
        }
    for (const auto& t : increasing_tuples(cm.dim_g(), 2)) {
        RVec d = sub(psi * cm.g_bracket.at(t), cmp.g_bracket.eval({psi * G[t[0]], psi * G[t[1]]}));
        pb.record(is_zero(d), tuple_label({&cm.g_labels[t[0]], &cm.g_labels[t[1]]}), format_vector(d, cmp.g_labels));
    }
    for (const auto& t : increasing_tuples(cm.dim_h(), 2)) {
        RVec d = sub(Phi * cm.h_bracket.at(t), cmp.h_bracket.eval({Phi * H[t[0]], Phi * H[t[1]]}));
        fb.record(is_zero(d), tuple_label({&cm.h_labels[t[0]], &cm.h_labels[t[1]]}), format_vector(d, cmp.h_labels));
    }
    return Report{{tc, eq, pb, fb}};
}

Lie2Morphism strict_morphism_from(const Matrix& Phi, const Matrix& psi, const CrossedModule& cm,
                                  const CrossedModule& cmp) {
    Lie2Algebra S = from_crossed_module(cm);
    Lie2Algebra T = from_crossed_module(cmp);
    return Lie2Morphism{S, T, psi, Phi, AltTensor(2, S.dim0(), T.dim_m1())};
}

}  // namespace l2a
