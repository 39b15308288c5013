#include "l2a/cohomology.hpp"

#include "l2a/errors.hpp"

namespace l2a {

RVec CEComplex::act(const RVec& x, const RVec& a) const {
    RVec out = zeros(dim_module);
    for (int i = 0; i < dim_g; ++i)
        if (sgn(x[i]) != 0) axpy(out, x[i], action[i] * a);
    return out;
}

CEComplex make_complex(const AltTensor& bracket, std::vector<Matrix> action, int module_dim) {
    CEComplex cx;
    cx.dim_g = bracket.in_dim();
    cx.dim_module = module_dim >= 0 ? module_dim : action.empty() ? 0 : action[0].rows();
    if (static_cast<int>(action.size()) != cx.dim_g) throw InputError("one action matrix per generator required");
    for (const auto& m : action)
        if (m.rows() != cx.dim_module || m.cols() != cx.dim_module) throw InputError("action matrix has wrong shape");
    cx.bracket = bracket;
    cx.action = std::move(action);
    for (const auto& t : increasing_tuples(cx.dim_g, 2)) {
        RVec x = unit(cx.dim_g, t[0]), y = unit(cx.dim_g, t[1]);
        Matrix lhs(cx.dim_module, cx.dim_module);
        RVec xy = bracket.at(t);
        for (int i = 0; i < cx.dim_g; ++i)
            if (sgn(xy[i]) != 0) {
                Matrix s = cx.action[i];
                for (int r = 0; r < s.rows(); ++r)
                    for (int c = 0; c < s.cols(); ++c) s(r, c) *= xy[i];
                lhs = lhs + s;
            }
        Matrix rhs = cx.action[t[0]] * cx.action[t[1]] - cx.action[t[1]] * cx.action[t[0]];
        if (!(lhs == rhs))
            throw PreconditionError("module action is not a Lie algebra morphism on generators " +
                                    std::to_string(t[0] + 1) + ", " + std::to_string(t[1] + 1));
    }
    return cx;
}

CEComplex ce_complex(const Lie2Algebra& L) {
    if (!classify_flags(L).g0_is_lie) throw PreconditionError("g_0 is not a Lie algebra (l1 o l3 != 0)");
    std::vector<Matrix> action(L.dim0(), Matrix(L.dim_m1(), L.dim_m1()));
    for (int x = 0; x < L.dim0(); ++x)
        for (int a = 0; a < L.dim_m1(); ++a) {
            RVec col = L.l2m_basis(a, x);
            for (int i = 0; i < L.dim_m1(); ++i) action[x](i, a) = -col[i];
        }
    return make_complex(L.l2p(), std::move(action), L.dim_m1());
}

Cochain zero_cochain(const CEComplex& cx, int k) { return Cochain(k, cx.dim_g, cx.dim_module); }

Cochain ce_differential(const CEComplex& cx, const Cochain& c) {
    const int k = c.arity();
    // above dim g the cochain spaces are zero
    if (k < 0) throw PreconditionError("cochain degree out of range");
    if (c.in_dim() != cx.dim_g || c.out_dim() != cx.dim_module) throw InputError("cochain has wrong shape");
    Cochain out = zero_cochain(cx, k + 1);
    for (const auto& t : increasing_tuples(cx.dim_g, k + 1)) {
        RVec val = zeros(cx.dim_module);
        for (int i = 0; i <= k; ++i) {
            Tuple rest;
            for (int j = 0; j <= k; ++j)
                if (j != i) rest.push_back(t[j]);
            RVec term = cx.action[t[i]] * c.at(rest);
            axpy(val, i % 2 == 0 ? Rational(1) : Rational(-1), term);
        }
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                RVec xy = cx.bracket.at({t[i], t[j]});
                if (is_zero(xy)) continue;
                std::vector<RVec> args{xy};
                for (int l = 0; l <= k; ++l)
                    if (l != i && l != j) args.push_back(unit(cx.dim_g, t[l]));
                axpy(val, (i + j) % 2 == 0 ? Rational(1) : Rational(-1), c.eval(args));
            }
        out.set(t, val);
    }
    return out;
}

Matrix differential_matrix(const CEComplex& cx, int k) {
    const int src = static_cast<int>(increasing_tuples(cx.dim_g, k).size()) * cx.dim_module;
    const int dst = static_cast<int>(increasing_tuples(cx.dim_g, k + 1).size()) * cx.dim_module;
    Matrix d(dst, src);
    for (int j = 0; j < src; ++j) {
        RVec col = ce_differential(cx, Cochain::unflatten(k, cx.dim_g, cx.dim_module, unit(src, j))).flatten();
        for (int i = 0; i < dst; ++i) d(i, j) = col[i];
    }
    return d;
}

bool is_cocycle(const CEComplex& cx, const Cochain& c) { return ce_differential(cx, c).is_zero(); }

std::optional<Cochain> is_coboundary(const CEComplex& cx, const Cochain& c) {
    const int k = c.arity();
    if (k == 0) {
        if (c.is_zero()) return zero_cochain(cx, 0);
        return std::nullopt;
    }
    auto b = solve(differential_matrix(cx, k - 1), c.flatten());
    if (!b) return std::nullopt;
    return Cochain::unflatten(k - 1, cx.dim_g, cx.dim_module, *b);
}

int cohomology_dim(const CEComplex& cx, int k) {
    if (k < 0 || k > cx.dim_g) throw PreconditionError("cohomology degree out of range");
    const int dim_k = static_cast<int>(increasing_tuples(cx.dim_g, k).size()) * cx.dim_module;
    int rk = dim_k == 0 ? 0 : rank(differential_matrix(cx, k));
    int rprev = (k == 0 || dim_k == 0) ? 0 : rank(differential_matrix(cx, k - 1));
    return dim_k - rk - rprev;
}

WagemannResult wagemann_compare(const Lie2Algebra& L) {
    if (!L.l3().is_zero()) throw PreconditionError("Wagemann comparison needs a strict Lie 2-algebra");
    WagemannResult w;
    w.skel = skeletalize(L);
    const Lie2Algebra& S = w.skel.skeletal;
    const Matrix& sigma = w.skel.section;
    const Matrix& incl = w.skel.kernel_inclusion;
    const int nb = S.dim0(), n1 = L.dim_m1();

    // l1(Phi2(x, y)) = sigma(l2p_bar(x, y)) - l2p(sigma x, sigma y)
    w.Phi2 = AltTensor(2, nb, n1);
    Rref red = rref(L.l1());
    for (const auto& t : increasing_tuples(nb, 2)) {
        RVec sx = sigma.column(t[0]), sy = sigma.column(t[1]);
        RVec rhs = sub(sigma * S.l2p().at(t), L.l2p(sx, sy));
        RVec tb = red.transform * rhs;
        for (int i = red.rank(); i < static_cast<int>(tb.size()); ++i)
            if (sgn(tb[i]) != 0) throw PreconditionError("Phi2 system is inconsistent");
        RVec u = zeros(n1);
        for (int i = 0; i < red.rank(); ++i) u[red.pivots[i]] = tb[i];
        w.Phi2.set(t, u);
    }

    // gamma = d Phi2 for the formal action x.a = -l2m(a, sigma x); values lie in ker l1
    const int kd = S.dim_m1();
    w.gamma = Cochain(3, nb, kd);
    for (const auto& t : increasing_tuples(nb, 3)) {
        RVec x = unit(nb, t[0]), y = unit(nb, t[1]), z = unit(nb, t[2]);
        RVec g = zeros(n1);
        const RVec* cyc[3][3] = {{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}};
        for (auto& c : cyc) {
            const RVec &p = *c[0], &q = *c[1], &r = *c[2];
            g = sub(g, L.l2m(w.Phi2.eval({q, r}), sigma * p));
            g = sub(g, w.Phi2.eval({S.l2p(p, q), r}));
        }
        // coordinates in the kernel basis
        RVec coords = w.skel.F.F1m1 * g;
        if (!(incl * coords == g)) throw PreconditionError("gamma leaves ker l1");
        w.gamma.set(t, coords);
    }

    w.l3bar = S.l3();
    CEComplex cx = ce_complex(S);
    auto wit = is_coboundary(cx, w.l3bar - w.gamma);
    w.class_equal = wit.has_value();
    w.witness = wit ? *wit : Cochain(2, nb, kd);
    return w;
}

}  // namespace l2a
