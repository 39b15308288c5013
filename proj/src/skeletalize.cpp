#include "l2a/skeletalize.hpp"

#include "l2a/errors.hpp"

namespace l2a {

namespace {

std::string kernel_label(const RVec& k, const std::vector<std::string>& labels) {
    int nonzero = 0, at = -1;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (sgn(k[i]) != 0) {
            ++nonzero;
            at = static_cast<int>(i);
        }
    if (nonzero == 1 && k[at] == 1) return labels[at];
    std::string s = format_vector(k, labels);
    std::erase(s, ' ');
    return s;
}

}  // namespace

SkeletalizationResult skeletalize(const Lie2Algebra& L) {
    const int n1 = L.dim_m1(), n0 = L.dim0();
    const Matrix& l1 = L.l1();

    std::vector<RVec> kernel = nullspace(l1);
    std::vector<int> comp_m1 = complement_coordinates(n1, kernel);
    std::vector<RVec> image;
    for (int j : comp_m1) image.push_back(l1.column(j));
    std::vector<int> comp_0 = complement_coordinates(n0, image);
    const int k = static_cast<int>(kernel.size());
    const int nb = static_cast<int>(comp_0.size());

    // g_-1 = ker l1 (+) C ; F1m1 is the projection onto the first summand.
    std::vector<RVec> cols1 = kernel;
    for (int j : comp_m1) cols1.push_back(unit(n1, j));
    auto inv1 = inverse(Matrix::from_columns(n1, cols1));
    // g_0 = im l1 (+) C' ; l1 restricted to C is an isomorphism onto im l1.
    std::vector<RVec> cols0 = image;
    for (int j : comp_0) cols0.push_back(unit(n0, j));
    auto inv0 = inverse(Matrix::from_columns(n0, cols0));
    if (!inv1 || !inv0) throw PreconditionError("complement construction failed");

    const int r = static_cast<int>(image.size());
    Matrix F1m1(k, n1), F10(nb, n0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n1; ++j) F1m1(i, j) = (*inv1)(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < n0; ++j) F10(i, j) = (*inv0)(r + i, j);

    SkeletalizationResult res;
    res.complement_m1 = comp_m1;
    res.complement_0 = comp_0;
    res.kernel_inclusion = Matrix::from_columns(n1, kernel);
    res.section = Matrix(n0, nb);
    for (int i = 0; i < nb; ++i) res.section(comp_0[i], i) = 1;

    std::vector<std::string> lm, l0;
    for (const auto& v : kernel) lm.push_back(kernel_label(v, L.labels_m1()));
    for (int j : comp_0) l0.push_back(L.labels_0()[j]);
    Lie2Algebra S(lm, l0);

    auto sigma = [&](int i) { return unit(n0, comp_0[i]); };
    for (const auto& t : increasing_tuples(nb, 2)) S.set_l2p(t[0], t[1], F10 * L.l2p(sigma(t[0]), sigma(t[1])));
    for (int a = 0; a < k; ++a)
        for (int x = 0; x < nb; ++x) S.set_l2m(a, x, F1m1 * L.l2m(kernel[a], sigma(x)));

    // F2(u, l1 c) = -F1m1(l2m(c, u)) for u in g_0, c in C ; F2 = 0 on C' x C'.
    // In the basis (l1 c_1, ..., l1 c_r, C') of g_0 this fixes every value.
    AltTensor F2basis(2, n0, k);
    std::vector<RVec> adapted = cols0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n0; ++j) {
            if (j < r && j <= i) continue;
            RVec val = scale(Rational(-1), F1m1 * L.l2m(unit(n1, comp_m1[i]), adapted[j]));
            // value at (adapted j, l1 c_i), stored as (i, j) with a sign flip
            F2basis.set({i, j}, scale(Rational(-1), val));
        }
    // Change of basis: F2(e_p, e_q) = F2basis(inv0 e_p, inv0 e_q).
    AltTensor F2(2, n0, k);
    for (const auto& t : increasing_tuples(n0, 2))
        F2.set(t, F2basis.eval({inv0->column(t[0]), inv0->column(t[1])}));

    for (const auto& t : increasing_tuples(nb, 3)) {
        RVec x = sigma(t[0]), y = sigma(t[1]), z = sigma(t[2]);
        RVec v = F1m1 * L.l3(x, y, z);
        v = add(v, F2.eval({L.l2p(x, y), z}));
        v = add(v, F2.eval({L.l2p(y, z), x}));
        v = add(v, F2.eval({L.l2p(z, x), y}));
        S.set_l3(t[0], t[1], t[2], v);
    }

    res.skeletal = S;
    res.F = Lie2Morphism{L, S, F10, F1m1, F2};
    return res;
}

Report check_quasi_iso(const SkeletalizationResult& res) {
    const Lie2Algebra& L = res.F.source;
    const Lie2Algebra& S = res.skeletal;
    const int r = rank(L.l1());
    Check km{"ker_l1_dim"}, ck{"coker_l1_dim"}, inj{"F1m1_injective_on_ker"}, sk{"target_skeletal"};
    int kdim = L.dim_m1() - r;
    km.record(kdim == S.dim_m1(), "dim", std::to_string(kdim) + " vs " + std::to_string(S.dim_m1()));
    int cdim = L.dim0() - r;
    ck.record(cdim == S.dim0(), "dim", std::to_string(cdim) + " vs " + std::to_string(S.dim0()));
    Matrix K = Matrix::from_columns(L.dim_m1(), nullspace(L.l1()));
    int ir = kdim == 0 ? 0 : rank(res.F.F1m1 * K);
    inj.record(ir == kdim, "ker l1", "rank " + std::to_string(ir) + " of " + std::to_string(kdim));
    sk.record(S.l1().is_zero(), "l1", "nonzero");
    Report rep{{km, ck, inj, sk}};
    for (auto& c : verify_morphism(res.F).checks) rep.checks.push_back(c);
    return rep;
}

}  // namespace l2a
