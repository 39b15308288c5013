#include "l2a/catalog.hpp"
#include "l2a/cohomology.hpp"
#include "l2a/io.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace l2a;
using io::Json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInputError = 2 };

struct Run {
    std::string command;
    Json inputs = Json::array();
    Report report;
    Json details = Json::object();
};

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string data = ss.str();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int n = 0;
    EVP_Digest(data.data(), data.size(), md, &n, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

void add_input(Run& run, const std::string& path) {
    Json in;
    in["path"] = path;
    in["sha256"] = sha256_file(path);
    run.inputs.push_back(in);
}

Check& info(Report& r, const std::string& name, const std::string& note) {
    Check& c = r.add(name);
    c.record(true, "", "");
    c.note = note;
    return c;
}

void merge(Report& into, const Report& from, const std::string& prefix = {}) {
    for (auto c : from.checks) {
        c.name = prefix + c.name;
        into.checks.push_back(std::move(c));
    }
}

void cmd_verify(Run& run, const std::string& path) {
    add_input(run, path);
    Json j = io::load_file(path);
    const std::string kind = io::detect_kind(j);
    const auto dir = io::fs::path(path).parent_path();
    run.details["kind"] = kind;
    if (kind == "algebra") {
        Lie2Algebra L = io::algebra_from_json(j, dir);
        merge(run.report, verify_axioms(L));
        info(run.report, "flags", s_code(L));
        run.details["s_code"] = s_code(L);
    } else if (kind == "morphism") {
        Lie2Morphism F = io::morphism_from_json(j, dir);
        merge(run.report, verify_morphism(F));
        info(run.report, "strict", F.is_strict() ? "yes" : "no");
    } else if (kind == "action") {
        TwoAction rho = io::action_from_json(j, dir);
        merge(run.report, verify_axioms(rho.algebra()), "algebra.");
        merge(run.report, verify_action(rho));
        std::string t = t_code(classify_action(rho));
        info(run.report, "flags", t);
        run.details["t_code"] = t;
    } else {
        Comomentum lam = io::comoment_from_json(j, dir);
        merge(run.report, verify_action(lam.action()), "action.");
        Report r = verify_comoment(lam);
        merge(run.report, r);
        auto c = classify_comoment(r, lam);
        run.details["fundamental"] = c.fundamental;
        run.details["strong"] = c.strong;
        run.details["weak"] = c.weak;
        run.details["weak_only"] = c.weak_only;
    }
}

void cmd_skeletalize(Run& run, const std::string& path, const std::string& out, const std::string& morphism_out) {
    add_input(run, path);
    Json j = io::load_file(path);
    if (io::detect_kind(j) != "algebra") throw io::SchemaError("$", "skeletalize needs an algebra file");
    Lie2Algebra L = io::algebra_from_json(j, io::fs::path(path).parent_path());
    Report ax = verify_axioms(L);
    merge(run.report, ax, "input.");
    if (!ax.passed()) return;
    auto res = skeletalize(L);
    merge(run.report, check_quasi_iso(res), "quasi_iso.");
    merge(run.report, verify_axioms(res.skeletal), "skeletal.");
    Json skel = io::algebra_to_json(res.skeletal);
    Json F = io::morphism_to_json(res.F);
    skel["morphism"] = {{"F10", F["F10"]}, {"F1m1", F["F1m1"]}, {"F2", F["F2"]}};
    io::save_file(out, skel);
    run.details["output"] = out;
    run.details["skeletal"] = skel;
    if (!morphism_out.empty()) {
        io::save_file(morphism_out, io::morphism_to_json(res.F));
        run.details["morphism_output"] = morphism_out;
    }
}

void cmd_cohomology(Run& run, const std::string& path, int degree, bool trivial) {
    add_input(run, path);
    Json j = io::load_file(path);
    if (io::detect_kind(j) != "algebra") throw io::SchemaError("$", "cohomology needs an algebra file");
    Lie2Algebra L = io::algebra_from_json(j, io::fs::path(path).parent_path());
    Report ax = verify_axioms(L);
    merge(run.report, ax, "input.");
    if (!ax.passed()) return;
    if (degree < 0 || degree > L.dim0())
        throw InputError("degree must lie in 0.." + std::to_string(L.dim0()));
    // a zero module has zero cohomology, so g_-1 = 0 means trivial rational coefficients
    const bool use_trivial = trivial || L.dim_m1() == 0;
    CEComplex cx = use_trivial
                       ? make_complex(L.l2p(), std::vector<Matrix>(L.dim0(), Matrix(1, 1)), 1)
                       : ce_complex(L);
    Json table = Json::object();
    std::string line;
    for (int k = 0; k <= L.dim0(); ++k) {
        int d = cohomology_dim(cx, k);
        table[std::to_string(k)] = d;
        line += (line.empty() ? "" : ", ") + std::to_string(k) + ": " + std::to_string(d);
    }
    const int dim = table[std::to_string(degree)].get<int>();
    info(run.report, "cohomology", "dim H^" + std::to_string(degree) + " = " + std::to_string(dim) +
                                       (use_trivial ? " (trivial coefficients)" : " (coefficients g_-1)"));
    info(run.report, "dimensions", "{" + line + "}");
    run.details["degree"] = degree;
    run.details["dimension"] = dim;
    run.details["dimensions"] = table;
    run.details["coefficients"] = use_trivial ? "trivial" : "g_-1";
}

void cmd_selftest(Run& run, const std::string& kind, int dim, std::uint64_t seed, int trials) {
    SelfcheckReport r = kind == "cartan" ? cartan_selfcheck(dim, seed, trials) : verify_endo_morphism(dim, seed, trials);
    for (const auto& id : r.identities) {
        Check& c = run.report.add(id);
        c.evaluated = r.trials;
        for (const auto& f : r.failures)
            if (f.identity == id) {
                if (c.passed) {
                    c.where = "trial " + std::to_string(f.trial);
                    c.defect = f.witness;
                }
                c.passed = false;
                ++c.failures;
            }
    }
    run.details["kind"] = kind;
    run.details["dim"] = dim;
    run.details["seed"] = seed;
    run.details["trials"] = r.trials;
}

void cmd_examples(Run& run, const std::string& mode, const std::string& id, const std::string& data_dir) {
    const io::fs::path dir = data_dir.empty() ? default_data_dir() : io::fs::path(data_dir);
    auto ids = catalog_ids(dir);
    if (mode == "list") {
        Json list = Json::array();
        for (const auto& i : ids) {
            CatalogEntry e = load_catalog_entry(dir, i);
            info(run.report, i, e.title);
            Json x;
            x["id"] = i;
            x["title"] = e.title;
            list.push_back(x);
        }
        run.details["examples"] = list;
        return;
    }
    if (!id.empty()) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InputError("unknown example id '" + id + "'");
        ids = {id};
    }
    SituationTable table = load_table(dir);
    add_input(run, (dir / "table.json").string());
    Json cells = Json::array();
    for (const auto& i : ids) {
        add_input(run, (dir / "catalog" / (i + ".json")).string());
        CatalogEntry e = load_catalog_entry(dir, i);
        merge(run.report, replay(e, table), i + "/");
        for (const auto& [s, t] : exercised_cells(e)) cells.push_back(Json::array({i, s, t}));
    }
    run.details["cells"] = cells;
}

Json run_json(const Run& run, int code) {
    Json j;
    j["command"] = run.command;
    j["inputs"] = run.inputs;
    j["status"] = code == kPass ? "pass" : code == kFail ? "fail" : "error";
    j["exit_code"] = code;
    Json r = io::report_to_json(run.report);
    j["checks"] = r["checks"];
    j["details"] = run.details;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie 2-algebras, 2-actions and comomentum maps: exact verification"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string report_path;
    bool quiet = false;
    app.add_option("--report", report_path, "write a JSON report to this path");
    app.add_flag("--quiet", quiet, "print only the final status line");

    std::string file, out, morphism_out, kind, mode, id, data_dir;
    int degree = 0, dim = 3, trials = 100;
    std::uint64_t seed = 42;
    bool trivial = false;

    auto* verify = app.add_subcommand("verify", "verify an algebra, morphism, action or comomentum file");
    verify->add_option("file", file)->required();
    auto* skel = app.add_subcommand("skeletalize", "write a quasi-isomorphic skeletal algebra");
    skel->add_option("file", file)->required();
    skel->add_option("-o,--output", out)->required();
    skel->add_option("--morphism", morphism_out, "also write the quasi-isomorphism");
    auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology of g_0 with values in g_-1");
    coh->add_option("file", file)->required();
    coh->add_option("--degree", degree)->required();
    coh->add_flag("--trivial", trivial, "use trivial rational coefficients");
    auto* self = app.add_subcommand("selftest", "seeded identity checks");
    self->add_option("kind", kind)->required()->check(CLI::IsMember({"cartan", "endo"}));
    self->add_option("--dim", dim);
    self->add_option("--seed", seed);
    self->add_option("--trials", trials);
    auto* ex = app.add_subcommand("examples", "list or replay the example catalog");
    ex->add_option("mode", mode)->required()->check(CLI::IsMember({"list", "run"}));
    ex->add_option("--id", id);
    ex->add_option("--data", data_dir, "catalog data directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    Run run;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--report") {
            ++i;
            continue;
        }
        if (a.rfind("--report=", 0) == 0) continue;
        run.command += (run.command.empty() ? "" : " ") + a;
    }

    int code = kPass;
    std::string error;
    try {
        if (*verify) cmd_verify(run, file);
        else if (*skel) cmd_skeletalize(run, file, out, morphism_out);
        else if (*coh) cmd_cohomology(run, file, degree, trivial);
        else if (*self) cmd_selftest(run, kind, dim, seed, trials);
        else cmd_examples(run, mode, id, data_dir);
        code = run.report.passed() ? kPass : kFail;
    } catch (const std::exception& e) {
        // InputError, Unsupported, PreconditionError and IO failures all mean the input was unusable
        error = e.what();
        code = kInputError;
    }

    if (!quiet) std::cout << run.report.summary();
    if (code == kInputError) std::cerr << "error: " << error << "\n";
    std::cout << (code == kPass ? "PASS" : code == kFail ? "FAIL" : "ERROR") << "\n";

    if (!report_path.empty()) {
        Json j = run_json(run, code);
        if (code == kInputError) j["error"] = error;
        std::ofstream f(report_path);
        if (!f) {
            std::cerr << "error: cannot write " << report_path << "\n";
            return kInputError;
        }
        f << j.dump(2) << "\n";
    }
    return code;
}
