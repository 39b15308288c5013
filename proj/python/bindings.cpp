#include "l2a/catalog.hpp"
#include "l2a/cohomology.hpp"
#include "l2a/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace l2a;
using io::Json;

namespace {

// Everything crosses the boundary as JSON text; the Python side decodes it.
std::string verify_json(const std::string& text, const std::string& base_dir) {
    Json j = Json::parse(text);
    const std::string kind = io::detect_kind(j);
    Report r;
    Json out;
    out["kind"] = kind;
    auto take = [&](const Report& from, const std::string& prefix) {
        for (auto c : from.checks) {
            c.name = prefix + c.name;
            r.checks.push_back(std::move(c));
        }
    };
    if (kind == "algebra") {
        Lie2Algebra L = io::algebra_from_json(j, base_dir);
        take(verify_axioms(L), "");
        out["s_code"] = s_code(L);
    } else if (kind == "morphism") {
        take(verify_morphism(io::morphism_from_json(j, base_dir)), "");
    } else if (kind == "action") {
        TwoAction rho = io::action_from_json(j, base_dir);
        take(verify_axioms(rho.algebra()), "algebra.");
        take(verify_action(rho), "");
        out["t_code"] = t_code(classify_action(rho));
    } else {
        Comomentum lam = io::comoment_from_json(j, base_dir);
        take(verify_action(lam.action()), "action.");
        Report v = verify_comoment(lam);
        take(v, "");
        auto c = classify_comoment(v, lam);
        out["fundamental"] = c.fundamental;
        out["strong"] = c.strong;
    }
    out["passed"] = r.passed();
    out["checks"] = io::report_to_json(r)["checks"];
    return out.dump();
}

std::string skeletalize_json(const std::string& text, const std::string& base_dir) {
    Lie2Algebra L = io::algebra_from_json(Json::parse(text), base_dir);
    auto res = skeletalize(L);
    Json out;
    out["algebra"] = io::algebra_to_json(res.skeletal);
    out["morphism"] = io::morphism_to_json(res.F);
    out["quasi_iso"] = check_quasi_iso(res).passed();
    return out.dump();
}

std::vector<int> cohomology_dims(const std::string& text, const std::string& base_dir, bool trivial) {
    Lie2Algebra L = io::algebra_from_json(Json::parse(text), base_dir);
    // a zero module has zero cohomology, so g_-1 = 0 falls back to trivial coefficients as in the CLI
    if (L.dim_m1() == 0) trivial = true;
    CEComplex cx = trivial ? make_complex(L.l2p(), std::vector<Matrix>(L.dim0(), Matrix(1, 1)), 1) : ce_complex(L);
    std::vector<int> dims;
    for (int k = 0; k <= L.dim0(); ++k) dims.push_back(cohomology_dim(cx, k));
    return dims;
}

std::string run_example(const std::string& id, const std::string& data_dir) {
    const io::fs::path dir = data_dir.empty() ? default_data_dir() : io::fs::path(data_dir);
    Report r = replay(load_catalog_entry(dir, id), load_table(dir));
    Json out;
    out["id"] = id;
    out["passed"] = r.passed();
    out["checks"] = io::report_to_json(r)["checks"];
    return out.dump();
}

py::dict selfcheck(const SelfcheckReport& r) {
    py::dict d;
    d["identities"] = r.identities;
    d["trials"] = r.trials;
    py::list fails;
    for (const auto& f : r.failures) fails.append(py::make_tuple(f.identity, f.trial, f.witness));
    d["failures"] = fails;
    d["passed"] = r.passed();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Lie 2-algebra, multivector calculus and comomentum checks";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def("verify_json", &verify_json, py::arg("text"), py::arg("base_dir") = "");
    m.def("skeletalize_json", &skeletalize_json, py::arg("text"), py::arg("base_dir") = "");
    m.def("cohomology_dims", &cohomology_dims, py::arg("text"), py::arg("base_dir") = "",
          py::arg("trivial") = false);
    m.def("example_ids", [](const std::string& data_dir) {
        return catalog_ids(data_dir.empty() ? default_data_dir() : io::fs::path(data_dir));
    }, py::arg("data_dir") = "");
    m.def("run_example_json", &run_example, py::arg("id"), py::arg("data_dir") = "");
    m.def("cartan_selfcheck", [](int dim, std::uint64_t seed, int trials) {
        return selfcheck(cartan_selfcheck(dim, seed, trials));
    }, py::arg("dim") = 3, py::arg("seed") = 42, py::arg("trials") = 100);
    m.def("endo_selfcheck", [](int dim, std::uint64_t seed, int trials) {
        return selfcheck(verify_endo_morphism(dim, seed, trials));
    }, py::arg("dim") = 3, py::arg("seed") = 7, py::arg("trials") = 50);

    // multivector calculus on R^m, using the text syntax of the data files
    m.def("contract", [](int dim, const std::string& v, const std::string& a) {
        return contract(parse_multivector(dim, v), parse_form(dim, a)).str();
    });
    m.def("d", [](int dim, const std::string& a) { return exterior_derivative(parse_form(dim, a)).str(); });
    m.def("lie_derivative", [](int dim, const std::string& v, const std::string& a) {
        return lie_derivative(parse_multivector(dim, v), parse_form(dim, a)).str();
    });
    m.def("schouten", [](int dim, const std::string& u, const std::string& w) {
        return schouten(parse_multivector(dim, u), parse_multivector(dim, w)).str();
    });
    m.def("kernel2", [](const std::string& omega, int dim) {
        std::vector<std::string> out;
        for (const auto& u : kernel2(PlecticForm(parse_form(dim, omega)))) out.push_back(u.str());
        return out;
    });
}
