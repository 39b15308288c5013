#include "l2a/basic.hpp"

#include "l2a/errors.hpp"

namespace l2a {

namespace {

std::string c_label(const BasicParams& p, int i, int j) {
    if (p.k == 1) return "c" + std::to_string(j + 1);
    return "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

Lie2Algebra basic_algebra(const BasicParams& p) {
    if (p.l < 1 || p.k < 0) throw InputError("basic algebra needs l >= 1 and k >= 0");
    const int n = 3 * p.l;
    std::vector<std::string> m1, g0;
    for (int i = 0; i < p.l; ++i) m1.push_back("a" + std::to_string(i + 1));
    for (int i = 0; i < p.k; ++i) m1.push_back("b" + std::to_string(i + 1));
    if (p.with_x)
        for (int i = 0; i < p.k; ++i)
            for (int j = 0; j < n; ++j) m1.push_back(c_label(p, i, j));
    for (int j = 0; j < n; ++j) g0.push_back("y" + std::to_string(j + 1));
    if (p.with_x)
        for (int j = 0; j < n; ++j) g0.push_back("x" + std::to_string(j + 1));
    if (p.l1_on_b)
        for (int i = 0; i < p.k; ++i) g0.push_back("y" + std::to_string(n + i + 1));

    Lie2Algebra L(m1, g0);
    const int d1 = L.dim_m1(), d0 = L.dim0();
    if (p.with_l3)
        for (int i = 0; i < p.l; ++i) L.set_l3(3 * i, 3 * i + 1, 3 * i + 2, unit(d1, i));
    if (p.l1_on_b)
        for (int i = 0; i < p.k; ++i) L.set_l1(p.l + i, unit(d0, L.index0("y" + std::to_string(n + i + 1))));
    if (p.with_x) {
        for (int j = 0; j < n; ++j) L.set_l2p(n + j, j, unit(d0, n + j));
        for (int i = 0; i < p.k; ++i)
            for (int j = 0; j < n; ++j) L.set_l2m(p.l + i, j, unit(d1, L.index_m1(c_label(p, i, j))));
    }
    return L;
}

TwoAction basic_action(const BasicParams& p, BasicActionParts parts) {
    Lie2Algebra L = basic_algebra(p);
    const int m = 3 * p.l;
    TwoAction rho(L, m);
    if (parts.rho10)
        for (int j = 0; j < m - 2; ++j) {
            rho.set_rho10(j, MultiVector::basis(m, {j}));
            if (p.with_x) {
                RVec form = zeros(m);
                form[j] = -1;
                rho.set_rho10(m + j, MultiVector::basis(m, {j}, ExpPoly::monomial(m, 1, std::vector<unsigned>(m, 0), form)));
            }
        }
    MultiVector pi = MultiVector::basis(m, {m - 2, m - 1});
    if (parts.rho2) rho.set_rho2(m - 2, m - 1, pi);
    if (parts.rho1m1) {
        for (int i = 0; i < p.k; ++i) rho.set_rho1m1(p.l + i, pi);
        if (!p.with_l3)
            for (int i = 0; i < p.l; ++i) rho.set_rho1m1(i, pi);
    }
    return rho;
}

}  // namespace l2a
