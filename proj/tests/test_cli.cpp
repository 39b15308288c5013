#include "doctest.h"

#include "l2a/io.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace l2a;
using io::Json;

namespace {

const io::fs::path kData = L2A_TEST_DATA_DIR;
const io::fs::path kTmp = io::fs::temp_directory_path() / "l2a_cli_test";

struct Result {
    int code;
    Json report;
};

Result run(const std::string& args) {
    io::fs::create_directories(kTmp);
    const auto rep = kTmp / "report.json";
    io::fs::remove(rep);
    std::string cmd = std::string(L2A_CLI_PATH) + " " + args + " --quiet --report " + rep.string() + " > " +
                      (kTmp / "stdout.txt").string() + " 2>&1";
    int status = std::system(cmd.c_str());
    Result r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, Json()};
    if (io::fs::exists(rep)) r.report = io::load_file(rep);
    return r;
}

std::string defs(const char* name) { return (kData / "defs" / name).string(); }

const Json* check_named(const Json& report, const std::string& name) {
    for (const auto& c : report["checks"])
        if (c["name"] == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("verify dispatches and passes on catalog definitions") {
    for (const char* f : {"1a.algebra.json", "1b.algebra.json", "3a.algebra.json", "3b.algebra.json"}) {
        CAPTURE(f);
        Result r = run("verify " + defs(f));
        CHECK(r.code == 0);
        CHECK(r.report["status"] == "pass");
        CHECK(r.report["details"]["kind"] == "algebra");
        CHECK(r.report["inputs"][0]["sha256"].get<std::string>().size() == 64);
    }
}

TEST_CASE("malformed input exits 2 with the field path") {
    io::fs::create_directories(kTmp);
    const auto bad = kTmp / "bad.json";
    std::ofstream(bad) << R"({"kind":"algebra","g0":["x1","x2"],"l2":{"x1,x2":"x9"}})";
    Result r = run("verify " + bad.string());
    CHECK(r.code == 2);
    CHECK(r.report["status"] == "error");
    CHECK(r.report["error"].get<std::string>().rfind(R"($.l2["x1,x2"])", 0) == 0);

    std::ofstream(bad) << "{ not json";
    CHECK(run("verify " + bad.string()).code == 2);
    CHECK(run("verify " + (kTmp / "missing.json").string()).code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("a mutated algebra exits 1 with an R4 witness") {
    Json j = io::load_file(defs("1a.algebra.json"));
    j["l2"]["x1,x3"] = "2*x1";
    const auto p = kTmp / "mutated.json";
    io::save_file(p, j);
    Result r = run("verify " + p.string());
    CHECK(r.code == 1);
    const Json* r4 = check_named(r.report, "R4");
    REQUIRE(r4);
    CHECK((*r4)["passed"] == false);
    CHECK((*r4)["where"] == "(x1,x2,x3)");
    CHECK_FALSE((*r4)["defect"].get<std::string>().empty());
}

TEST_CASE("skeletalize reproduces the two-dimensional skeletal algebra") {
    const auto out = kTmp / "skel.json";
    Result r = run("skeletalize " + defs("1a.algebra.json") + " -o " + out.string());
    REQUIRE(r.code == 0);
    Json s = io::load_file(out);
    CHECK(s["g_m1"] == Json::array());
    CHECK(s["g0"] == Json::array({"x1", "x3"}));
    CHECK(s["l2"] == Json::parse(R"({"x1,x3":"x1"})"));
    CHECK(s["l3"] == Json::object());
    CHECK(s["morphism"]["F2"] == Json::object());
    CHECK(io::algebra_from_json(s).dim_m1() == 0);

    std::ifstream a(out);
    std::stringstream first;
    first << a.rdbuf();
    run("skeletalize " + defs("1a.algebra.json") + " -o " + out.string());
    std::ifstream b(out);
    std::stringstream second;
    second << b.rdbuf();
    CHECK(first.str() == second.str());
}

TEST_CASE("cohomology of the Heisenberg algebra") {
    Result r = run("cohomology " + defs("heisenberg.json") + " --degree 3");
    CHECK(r.code == 0);
    CHECK(r.report["details"]["dimension"] == 1);
    CHECK(r.report["details"]["dimensions"] == Json::parse(R"({"0":1,"1":2,"2":2,"3":1})"));
    CHECK(run("cohomology " + defs("heisenberg.json") + " --degree 7").code == 2);
}

TEST_CASE("selftest kinds") {
    Result r = run("selftest cartan --dim 3 --seed 42 --trials 20");
    CHECK(r.code == 0);
    CHECK(r.report["checks"].size() == 7);
    CHECK(run("selftest endo --dim 3 --seed 7 --trials 5").code == 0);
    CHECK(run("selftest nonsense").code == 2);
}

TEST_CASE("examples list and run") {
    Result l = run("examples list");
    CHECK(l.code == 0);
    CHECK(l.report["details"]["examples"].size() == 10);

    Result one = run("examples run --id 2b");
    CHECK(one.code == 0);
    const Json* pf = check_named(one.report, "2b/pushforward:main");
    REQUIRE(pf);
    CHECK((*pf)["note"].get<std::string>().find("F1m1(b1) = 0") != std::string::npos);
    const Json* pl = check_named(one.report, "2b/plectic:main");
    REQUIRE(pl);
    CHECK((*pl)["note"].get<std::string>().rfind("neither", 0) == 0);

    CHECK(run("examples run --id 9z").code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
    auto read = [](const io::fs::path& p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    run("examples run");
    std::string a = read(kTmp / "report.json");
    run("examples run");
    CHECK(read(kTmp / "report.json") == a);
    CHECK(Json::parse(a)["exit_code"] == 0);
}
