#include "doctest.h"

#include "l2a/lie2.hpp"
#include "l2a/random.hpp"

#include "fixtures.hpp"

using namespace l2a;
using namespace fx;

namespace {

AltTensor random_tensor(Rng& rng, int k, int n, int d) {
    AltTensor t(k, n, d);
    for (const auto& idx : increasing_tuples(n, k)) {
        RVec val(d);
        for (auto& c : val) c = rng.uniform(-2, 2);
        t.set(idx, val);
    }
    return t;
}

Matrix random_matrix(Rng& rng, int r, int c) {
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rng.uniform(-2, 2);
    return m;
}

}  // namespace

TEST_CASE("alternating tensor storage") {
    AltTensor t(2, 3, 1);
    t.set({2, 0}, v({5}));
    CHECK(t.at({0, 2}) == v({-5}));
    CHECK(t.at({2, 0}) == v({5}));
    CHECK(t.at({1, 1}) == v({0}));
    CHECK_THROWS_AS(t.set({1, 1}, v({1})), InputError);
    CHECK(t.eval({v({1, 0, 0}), v({0, 0, 1})}) == v({-5}));
    CHECK(AltTensor::unflatten(2, 3, 1, t.flatten()) == t);
    CHECK(increasing_tuples(4, 2).size() == 6);
    CHECK(increasing_tuples(2, 3).empty());
}

TEST_CASE("example 1a passes R1-R6") {
    Report r = verify_axioms(ex1a());
    CHECK(r.passed());
    CHECK(r.checks.size() == 6);
}

TEST_CASE("zero brackets pass") { CHECK(verify_axioms(abelian(2, 3, "")).passed()); }

TEST_CASE("mutated l2(x1,x3) = x3 breaks R4 at (x1,x2,x3)") {
    Lie2Algebra L = ex1a();
    L.set_l2p(0, 2, v({0, 0, 1}));
    Report r = verify_axioms(L);
    const Check* r4 = r.find("R4");
    REQUIRE(r4);
    CHECK_FALSE(r4->passed);
    CHECK(r4->where == "(x1,x2,x3)");
    CHECK(r4->defect == "-x2");
}

TEST_CASE("flags") {
    Lie2Flags f = classify_flags(ex1a());
    CHECK_FALSE(f.skeletal);
    CHECK_FALSE(f.strict);
    CHECK_FALSE(f.g0_is_lie);
    CHECK(s_code(ex1a()) == "S0");

    Lie2Flags z = classify_flags(abelian(1, 2, ""));
    CHECK(z.skeletal);
    CHECK(z.strict);
    CHECK(z.g0_is_lie);
    CHECK(z.l3_vanishes_on_im_l1);

    Lie2Flags g = classify_flags(ex3a());
    CHECK(g.skeletal);
    CHECK_FALSE(g.strict);
    CHECK(s_code(ex3a()) == "S235");
    CHECK(s_code(ex3b()) == "S136");
}

TEST_CASE("g0 is Lie iff the jacobiator vanishes") {
    for (const auto& L : {ex1a(), ex3a(), ex3b(), abelian(1, 3, "")})
        CHECK(classify_flags(L).g0_is_lie == jacobiator(L).is_zero());
    // l1(l3(x1,x2,x3)) = -x2 for 1a
    CHECK(jacobiator(ex1a()).at({0, 1, 2}) == v({0, 1, 0}));
}

TEST_CASE("identity morphism and A2 perturbation") {
    Lie2Algebra L = ex1a();
    CHECK(verify_morphism(identity_morphism(L)).passed());
    Lie2Morphism F = identity_morphism(L);
    F.F10(0, 0) = 2;
    Report r = verify_morphism(F);
    CHECK_FALSE(r.passed("A2"));
    CHECK(r.find("A2")->where == "(x1,x2)");
    Lie2Morphism bad = identity_morphism(L);
    bad.F10 = Matrix(2, 2);
    CHECK_THROWS_AS(verify_morphism(bad), InputError);
}

TEST_CASE("composition") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Lie2Algebra A = abelian(2, 3, "p"), B = abelian(2, 3, "q"), C = abelian(1, 2, "r"), D = abelian(2, 2, "s");
        Lie2Morphism F{A, B, random_matrix(rng, 3, 3), random_matrix(rng, 2, 2), random_tensor(rng, 2, 3, 2)};
        Lie2Morphism G{B, C, random_matrix(rng, 2, 3), random_matrix(rng, 1, 2), random_tensor(rng, 2, 3, 1)};
        Lie2Morphism H{C, D, random_matrix(rng, 2, 2), random_matrix(rng, 2, 1), random_tensor(rng, 2, 2, 2)};
        Lie2Morphism GF = compose(G, F);
        CHECK(verify_morphism(GF).passed());
        // componentwise F2'' on every ordered basis pair
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                RVec xi = unit(3, i), xj = unit(3, j);
                RVec expect = add(G.F2.eval({F.F10 * xi, F.F10 * xj}), G.F1m1 * F.F2.eval({xi, xj}));
                CHECK(GF.F2.eval({xi, xj}) == expect);
            }
        Lie2Morphism l = compose(H, compose(G, F));
        Lie2Morphism r = compose(compose(H, G), F);
        CHECK(l.F10 == r.F10);
        CHECK(l.F1m1 == r.F1m1);
        CHECK(l.F2 == r.F2);
    }
    Lie2Morphism id = identity_morphism(ex1a());
    Lie2Morphism F = identity_morphism(ex1a());
    Lie2Morphism c = compose(id, F);
    CHECK(c.F10 == F.F10);
    CHECK(c.F2 == F.F2);
    CHECK_THROWS_AS(compose(identity_morphism(ex3a()), F), PreconditionError);
}

TEST_CASE("crossed module of example 3b") {
    Lie2Algebra L = ex3b();
    REQUIRE(verify_axioms(L).passed());
    CrossedModule cm = to_crossed_module(L);
    CHECK(verify_crossed_module(cm).passed());
    CHECK(cm.tau.column(0) == v({0, 0, 1}));
    CHECK(cm.act(v({1, 0, 0}), v({1, 0})) == v({0, -1}));
    CHECK(from_crossed_module(cm) == L);
    CHECK_THROWS_AS(to_crossed_module(ex1a()), PreconditionError);
}

TEST_CASE("trivial crossed modules") {
    Lie2Algebra L = abelian(2, 2, "");
    CrossedModule cm = to_crossed_module(L);
    CHECK(cm.h_bracket.is_zero());
    CHECK(cm.tau.is_zero());
    Lie2Algebra back = from_crossed_module(cm);
    CHECK(back.l1().is_zero());
    CHECK(verify_axioms(back).passed());
}

TEST_CASE("inner crossed module of the 2-dim nonabelian algebra") {
    CrossedModule cm;
    cm.g_labels = {"e1", "e2"};
    cm.h_labels = {"f1", "f2"};
    cm.g_bracket = AltTensor(2, 2, 2);
    cm.g_bracket.set({0, 1}, v({0, 1}));
    cm.h_bracket = cm.g_bracket;
    cm.tau = Matrix::identity(2);
    cm.r.assign(2, Matrix(2, 2));
    for (int x = 0; x < 2; ++x)
        for (int a = 0; a < 2; ++a) {
            RVec col = cm.g_bracket.eval({unit(2, x), unit(2, a)});
            for (int i = 0; i < 2; ++i) cm.r[x](i, a) = col[i];
        }
    CHECK(verify_crossed_module(cm).passed());
    Lie2Algebra L = from_crossed_module(cm);
    CHECK(verify_axioms(L).passed());
    CHECK(to_crossed_module(L).r == cm.r);

    CrossedModule broken = cm;
    broken.r[0](1, 1) = 0;
    CHECK_THROWS_AS(from_crossed_module(broken), PreconditionError);
}

TEST_CASE("crossed module morphisms") {
    CrossedModule cm = to_crossed_module(ex3b());
    Matrix I2 = Matrix::identity(2), I3 = Matrix::identity(3);
    Report id = verify_crossed_module_morphism(I2, I3, cm, cm);
    CHECK(id.passed());
    CHECK(verify_morphism(strict_morphism_from(I2, I3, cm, cm)).passed());

    Matrix Phi = Matrix::identity(2);
    Phi(1, 1) = 2;
    Report r = verify_crossed_module_morphism(Phi, I3, cm, cm);
    CHECK(r.passed("tau_compat"));
    CHECK_FALSE(r.passed("equivariance"));
    CHECK(r.find("equivariance")->where == "(y,b)");
    CHECK_FALSE(verify_morphism(strict_morphism_from(Phi, I3, cm, cm)).passed());

    // scaling by a constant on both degrees is a strict automorphism of a
    // crossed module with abelian brackets on the scaled part
    Lie2Morphism F = identity_morphism(ex3b());
    CrossedModule back = to_crossed_module(F.source);
    CHECK(verify_crossed_module_morphism(F.F1m1, F.F10, back, to_crossed_module(F.target)).passed());
}
