#include "doctest.h"

#include "l2a/skeletalize.hpp"

#include "fixtures.hpp"

using namespace l2a;
using namespace fx;

TEST_CASE("skeletalization of example 1a") {
    SkeletalizationResult r = skeletalize(ex1a());
    const Lie2Algebra& S = r.skeletal;
    CHECK(S.dim_m1() == 0);
    CHECK(S.dim0() == 2);
    CHECK(S.labels_0() == std::vector<std::string>{"x1", "x3"});
    CHECK(S.l2p().at({0, 1}) == v({1, 0}));
    CHECK(S.l3().is_zero());
    CHECK(r.F.F2.is_zero());
    // x2 spans im l1 and is killed, x1 and x3 map to their classes
    CHECK(r.F.F10.column(0) == v({1, 0}));
    CHECK(r.F.F10.column(1) == v({0, 0}));
    CHECK(r.F.F10.column(2) == v({0, 1}));
    CHECK(verify_axioms(S).passed());
    CHECK(verify_morphism(r.F).passed());
    CHECK(check_quasi_iso(r).passed());
    CHECK(classify_flags(S).skeletal);

    SkeletalizationResult again = skeletalize(ex1a());
    CHECK(again.skeletal == S);
    CHECK(again.F.F10 == r.F.F10);
    CHECK(again.F.F2 == r.F.F2);
}

TEST_CASE("skeletal input is left unchanged") {
    for (const auto& L : {ex3a(), abelian(2, 3, "")}) {
        SkeletalizationResult r = skeletalize(L);
        CHECK(r.skeletal == L);
        CHECK(r.F.F10 == Matrix::identity(L.dim0()));
        CHECK(r.F.F1m1 == Matrix::identity(L.dim_m1()));
        CHECK(r.F.F2.is_zero());
        CHECK(check_quasi_iso(r).passed());
    }
}

TEST_CASE("basic algebra: b1 is annihilated") {
    Lie2Algebra L = ex2b_small();
    REQUIRE(verify_axioms(L).passed());
    SkeletalizationResult r = skeletalize(L);
    CHECK(is_zero(r.F.F1m1 * unit(5, 1)));
    CHECK(r.skeletal.dim_m1() == 4);
    CHECK(r.skeletal.dim0() == 6);
    CHECK(verify_axioms(r.skeletal).passed());
    CHECK(check_quasi_iso(r).passed());
}

TEST_CASE("example 3b: nonzero F2, wrong F2 breaks A3") {
    SkeletalizationResult r = skeletalize(ex3b());
    CHECK(r.skeletal.labels_m1() == std::vector<std::string>{"c"});
    CHECK(r.skeletal.labels_0() == std::vector<std::string>{"y", "x"});
    // F2(y, z) = -F1m1(l2m(b, y)) = -c
    CHECK(r.F.F2.at({0, 2}) == v({-1}));
    CHECK(check_quasi_iso(r).passed());
    CHECK(verify_axioms(r.skeletal).passed());

    SkeletalizationResult bad = r;
    bad.F.F2 = AltTensor(2, 3, 1);
    Report rep = check_quasi_iso(bad);
    CHECK_FALSE(rep.passed("A3"));
    CHECK(rep.passed("ker_l1_dim"));
}

TEST_CASE("skeletalization is idempotent") {
    for (const auto& L : {ex1a(), ex3a(), ex3b(), ex2b_small()}) {
        Lie2Algebra S = skeletalize(L).skeletal;
        CHECK(skeletalize(S).skeletal == S);
    }
}
