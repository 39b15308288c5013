#include "doctest.h"

#include "fixtures.hpp"
#include "l2a/io.hpp"

#include <fstream>
#include <functional>

using namespace l2a;
using namespace fx;
using io::Json;

namespace {

const io::fs::path kDefs = io::fs::path(L2A_TEST_DATA_DIR) / "defs";

std::string field_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const io::SchemaError& e) {
        return e.field;
    }
    return "<no error>";
}

io::fs::path write_tmp(const std::string& name, const std::string& text) {
    auto p = io::fs::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("combinations parse over labels") {
    std::vector<std::string> labels{"x1", "x2", "x3"};
    CHECK(io::parse_combination(labels, "2*x1 - x3", "$") == v({2, 0, -1}));
    CHECK(io::parse_combination(labels, "0", "$") == v({0, 0, 0}));
    CHECK(io::parse_combination(labels, "-1/2*x2 + x2", "$") ==
          RVec{Rational(0), Rational(1, 2), Rational(0)});
    CHECK(field_of([&] { io::parse_combination(labels, "x4", "$.l1.a"); }) == "$.l1.a");
    CHECK(field_of([&] { io::parse_combination(labels, "q1*x1", "$.l1.a"); }) == "$.l1.a");
}

TEST_CASE("shipped definitions agree with hand-built fixtures") {
    CHECK(io::algebra_from_json(io::load_file(kDefs / "1a.algebra.json")) == ex1a());
    CHECK(io::algebra_from_json(io::load_file(kDefs / "3a.algebra.json")) == ex3a());
    CHECK(io::algebra_from_json(io::load_file(kDefs / "3b.algebra.json")) == ex3b());
}

TEST_CASE("algebra json round trip") {
    for (const auto& L : {ex1a(), ex3a(), ex3b(), ex2b_small()}) {
        Json j = io::algebra_to_json(L);
        CHECK(io::algebra_from_json(j) == L);
        CHECK(io::detect_kind(j) == "algebra");
    }
}

TEST_CASE("l2 keys in either order") {
    Json a = Json::parse(R"({"g_m1":["a"],"g0":["x"],"l2":{"a,x":"a"}})");
    Json b = Json::parse(R"({"g_m1":["a"],"g0":["x"],"l2":{"x,a":"-a"}})");
    CHECK(io::algebra_from_json(a) == io::algebra_from_json(b));
    CHECK(io::algebra_from_json(a).l2m_basis(0, 0) == v({1}));

    Json dup = Json::parse(R"({"g_m1":["a"],"g0":["x"],"l2":{"a,x":"a","x,a":"a"}})");
    CHECK(field_of([&] { io::algebra_from_json(dup); }) == R"($.l2["x,a"])");
}

TEST_CASE("schema errors carry the field path") {
    CHECK(field_of([] { io::algebra_from_json(Json::parse(R"({"g0":["x","x"]})")); }).rfind("$.g0", 0) == 0);
    CHECK(field_of([] { io::algebra_from_json(Json::parse(R"({"g0":["x","y"],"l2":{"x":"y"}})")); }) ==
          R"($.l2["x"])");
    Json act = Json::parse(R"({"algebra":{"g0":["x"]},"chart_dim":3,"rho10":{"x":"e4"}})");
    CHECK(field_of([&] { io::action_from_json(act); }) == R"($.rho10["x"])");
    Json act2 = Json::parse(R"({"algebra":{"g0":["x"]},"chart_dim":0})");
    CHECK(field_of([&] { io::action_from_json(act2); }) == "$.chart_dim");
}

TEST_CASE("malformed files report line and column") {
    auto p = write_tmp("l2a_bad.json", "{\n  \"g0\": [\"x\",\n}\n");
    try {
        io::load_file(p);
        FAIL("expected a parse error");
    } catch (const InputError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(io::load_file("/nonexistent/l2a.json"), InputError);
}

TEST_CASE("kind detection") {
    CHECK(io::detect_kind(Json::parse(R"({"g0":[]})")) == "algebra");
    CHECK(io::detect_kind(Json::parse(R"({"algebra":"x.json","chart_dim":3})")) == "action");
    CHECK(io::detect_kind(Json::parse(R"({"action":{},"omega":"dq1^dq2^dq3"})")) == "comoment");
    CHECK(io::detect_kind(Json::parse(R"({"source":{},"target":{}})")) == "morphism");
    CHECK(io::detect_kind(Json::parse(R"({"kind":"action"})")) == "action");
    CHECK_THROWS_AS(io::detect_kind(Json::parse(R"({"foo":1})")), io::SchemaError);
}

TEST_CASE("action and comomentum round trip") {
    TwoAction rho(ex3a(), 3);
    rho.set_rho10(1, parse_multivector(3, "-e1"));
    rho.set_rho10(2, parse_multivector(3, "e1"));
    rho.set_rho2(0, 1, parse_multivector(3, "e1^e3"));
    rho.set_rho1m1(0, parse_multivector(3, "-e1^e3"));
    Json j = io::action_to_json(rho);
    CHECK(io::action_from_json(j) == rho);

    Comomentum lam(rho, PlecticForm(parse_form(3, "dq1^dq2^dq3")));
    lam.set_lambda10(1, parse_form(3, "q2*dq3"));
    lam.set_lambda2(0, 1, parse_pair(3, "(0, (q2, e1^e3))"));
    Json c = io::comoment_to_json(lam);
    CHECK(io::detect_kind(c) == "comoment");
    CHECK(io::comoment_from_json(c) == lam);
}

TEST_CASE("morphism round trip") {
    Lie2Algebra L = ex1a();
    Lie2Morphism F = identity_morphism(L);
    Json j = io::morphism_to_json(F);
    Lie2Morphism G = io::morphism_from_json(j);
    CHECK(G.F10 == F.F10);
    CHECK(G.F1m1 == F.F1m1);
    CHECK(G.source == L);
}

TEST_CASE("discrepancy records round trip") {
    DiscrepancyRecord r{"3a", "lambda10(x2)", "C1", "-q2 * dq3", "q2 * dq3", "sign flip"};
    CHECK(io::record_from_json(io::record_to_json(r), "$") == r);
    Json bad = io::record_to_json(r);
    bad["condition"] = "C9";
    CHECK(field_of([&] { io::record_from_json(bad, "$.records[0]"); }) == "$.records[0].condition");
}

TEST_CASE("relative algebra references resolve against the file") {
    auto dir = io::fs::temp_directory_path() / "l2a_rel";
    io::fs::create_directories(dir);
    io::save_file(dir / "alg.json", io::algebra_to_json(ex3a()));
    std::ofstream(dir / "act.json") << R"({"algebra":"alg.json","chart_dim":3,"rho10":{"x2":"-e1","x3":"e1"}})";
    TwoAction rho = io::action_from_json(io::load_file(dir / "act.json"), dir);
    CHECK(rho.algebra() == ex3a());
    CHECK(rho.rho10_basis(2) == parse_multivector(3, "e1"));
}
