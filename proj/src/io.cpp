#include "l2a/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace l2a::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : key) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
    return out;
}

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + "." + key, "missing field");
    return *it;
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where, "expected a string");
    return j.get<std::string>();
}

// Iterates an optional object field; values must be strings.
template <class F>
void for_each_entry(const Json& j, const char* key, const std::string& where, F&& f) {
    if (!j.contains(key)) return;
    const Json& m = j.at(key);
    const std::string base = where + "." + key;
    if (!m.is_object()) throw SchemaError(base, "expected an object");
    for (auto it = m.begin(); it != m.end(); ++it) {
        const std::string path = base + "[\"" + it.key() + "\"]";
        f(it.key(), as_string(it.value(), path), path);
    }
}

std::vector<std::string> labels_of(const Json& j, const char* key, const std::string& where) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    const Json& a = j.at(key);
    const std::string path = where + "." + key;
    if (!a.is_array()) throw SchemaError(path, "expected an array of labels");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::string s = as_string(a[i], path + "[" + std::to_string(i) + "]");
        if (s.empty() || !seen.insert(s).second) throw SchemaError(path, "empty or repeated label '" + s + "'");
        out.push_back(s);
    }
    return out;
}

int index_in(const std::vector<std::string>& labels, const std::string& s, const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return static_cast<int>(i);
    throw SchemaError(where, "unknown label '" + s + "'");
}

// Runs f and prefixes any InputError from the expression parsers with the field path.
template <class F>
auto at_path(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const InputError& e) {
        throw SchemaError(where, e.what());
    }
}

fs::path resolve(const fs::path& base, const std::string& ref) {
    fs::path p(ref);
    return p.is_absolute() || base.empty() ? p : base / p;
}

// Inline object, or a string naming a file relative to base_dir; returns the object and its directory.
std::pair<Json, fs::path> deref(const Json& j, const fs::path& base_dir, const std::string& where) {
    if (j.is_string()) {
        fs::path p = resolve(base_dir, j.get<std::string>());
        try {
            return {load_file(p), p.parent_path()};
        } catch (const SchemaError&) {
            throw;
        } catch (const InputError& e) {
            throw SchemaError(where, e.what());
        }
    }
    if (!j.is_object()) throw SchemaError(where, "expected an object or a file reference");
    return {j, base_dir};
}

Json vector_map_json(const std::vector<std::string>& keys, const std::vector<std::string>& values_labels,
                     const std::vector<RVec>& columns) {
    Json out = Json::object();
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (!is_zero(columns[i])) out[keys[i]] = format_vector(columns[i], values_labels);
    return out;
}

Json tensor_json(const AltTensor& t, const std::vector<std::string>& in, const std::vector<std::string>& out) {
    Json j = Json::object();
    for (const auto& idx : increasing_tuples(t.in_dim(), t.arity())) {
        RVec v = t.at(idx);
        if (is_zero(v)) continue;
        std::vector<std::string> names;
        for (int i : idx) names.push_back(in[i]);
        j[join(names)] = format_vector(v, out);
    }
    return j;
}

AltTensor tensor_from(const Json& j, const char* key, const std::string& where, int arity,
                      const std::vector<std::string>& in, const std::vector<std::string>& out) {
    AltTensor t(arity, static_cast<int>(in.size()), static_cast<int>(out.size()));
    std::set<Tuple> seen;
    for_each_entry(j, key, where, [&](const std::string& k, const std::string& v, const std::string& path) {
        auto names = split_key(k);
        if (static_cast<int>(names.size()) != arity)
            throw SchemaError(path, "expected " + std::to_string(arity) + " comma-separated labels");
        Tuple idx;
        for (const auto& n : names) idx.push_back(index_in(in, n, path));
        Tuple sorted = idx;
        if (sort_sign(sorted) == 0) throw SchemaError(path, "repeated argument");
        if (!seen.insert(sorted).second) throw SchemaError(path, "entry given twice");
        t.set(idx, parse_combination(out, v, path));
    });
    return t;
}

Json multivector_table(const std::vector<std::string>& keys, const std::vector<MultiVector>& values) {
    Json out = Json::object();
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (!values[i].is_zero()) out[keys[i]] = values[i].str();
    return out;
}

// psi2 given as a finite table on pairs of 1-forms; zero elsewhere.
struct Psi2Row {
    Form alpha, beta;
    MultiVector value;
};

Gradient gradient_from(const Json& j, const PlecticForm& omega, const std::string& where) {
    const int m = omega.chart_dim();
    const Json& t = j.at("psi2");
    const std::string base = where + ".psi2";
    if (!t.is_array()) throw SchemaError(base, "expected an array of {alpha, beta, value}");
    std::vector<Psi2Row> rows;
    std::vector<HamiltonianForm> samples;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string p = base + "[" + std::to_string(i) + "]";
        Psi2Row r;
        r.alpha = at_path(p + ".alpha", [&] { return parse_form(m, as_string(require(t[i], "alpha", p), p + ".alpha"), 1); });
        r.beta = at_path(p + ".beta", [&] { return parse_form(m, as_string(require(t[i], "beta", p), p + ".beta"), 1); });
        r.value = at_path(p + ".value", [&] { return parse_multivector(m, as_string(require(t[i], "value", p), p + ".value"), 2); });
        for (const Form* f : {&r.alpha, &r.beta}) {
            try {
                samples.push_back(solve_hamiltonian_vector(*f, omega));
            } catch (const PreconditionError& e) {
                throw SchemaError(p, e.what());
            }
        }
        rows.push_back(std::move(r));
    }
    std::vector<ExpPoly> ft;
    if (j.contains("ftilde_samples")) {
        const Json& s = j.at("ftilde_samples");
        if (!s.is_array()) throw SchemaError(where + ".ftilde_samples", "expected an array");
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::string p = where + ".ftilde_samples[" + std::to_string(i) + "]";
            ft.push_back(at_path(p, [&] { return parse_exppoly(m, as_string(s[i], p)); }));
        }
    }
    Psi2Fn fn = [rows, m](const HamiltonianForm& a, const HamiltonianForm& b) {
        for (const auto& r : rows) {
            if (a.alpha == r.alpha && b.alpha == r.beta) return r.value;
            if (a.alpha == r.beta && b.alpha == r.alpha) return -r.value;
        }
        return MultiVector(m, 2);
    };
    try {
        return Gradient(fn, samples, ft, omega);
    } catch (const PreconditionError& e) {
        throw SchemaError(base, e.what());
    }
}

}  // namespace

Json load_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void save_file(const fs::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

RVec parse_combination(const std::vector<std::string>& labels, const std::string& text, const std::string& where) {
    RVec out = zeros(static_cast<int>(labels.size()));
    std::string s = trim(text);
    if (s == "0") return out;
    std::size_t i = 0;
    bool first = true;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    while (true) {
        skip();
        if (i >= s.size()) break;
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (!first) {
            throw SchemaError(where, "expected '+' or '-' in '" + s + "'");
        }
        Rational coef = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t b = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
            coef = at_path(where, [&] { return parse_rational(s.substr(b, i - b)); });
            skip();
            if (i >= s.size() || s[i] != '*') throw SchemaError(where, "expected '*' after coefficient in '" + s + "'");
            ++i;
            skip();
        }
        std::size_t b = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
        if (b == i) throw SchemaError(where, "expected a label in '" + s + "'");
        out[index_in(labels, s.substr(b, i - b), where)] += sign * coef;
        first = false;
    }
    if (first) throw SchemaError(where, "empty combination");
    return out;
}

std::string detect_kind(const Json& j) {
    if (!j.is_object()) throw SchemaError("$", "expected an object");
    if (j.contains("kind")) {
        std::string k = as_string(j.at("kind"), "$.kind");
        if (k != "algebra" && k != "morphism" && k != "action" && k != "comoment")
            throw SchemaError("$.kind", "unknown kind '" + k + "'");
        return k;
    }
    if (j.contains("omega") && j.contains("action")) return "comoment";
    if (j.contains("chart_dim")) return "action";
    if (j.contains("source") && j.contains("target")) return "morphism";
    if (j.contains("g0") || j.contains("g_m1")) return "algebra";
    throw SchemaError("$", "cannot tell the file kind; add a \"kind\" field");
}

Lie2Algebra algebra_from_json(const Json& input, const fs::path& base_dir, const std::string& where) {
    auto [j, dir] = deref(input, base_dir, where);
    (void)dir;
    auto m1 = labels_of(j, "g_m1", where);
    auto g0 = labels_of(j, "g0", where);
    for (const auto& a : m1)
        for (const auto& x : g0)
            if (a == x) throw SchemaError(where, "label '" + a + "' used in both degrees");
    Lie2Algebra L(m1, g0);

    std::set<int> l1_seen;
    for_each_entry(j, "l1", where, [&](const std::string& k, const std::string& v, const std::string& path) {
        int a = index_in(m1, trim(k), path);
        if (!l1_seen.insert(a).second) throw SchemaError(path, "entry given twice");
        L.set_l1(a, parse_combination(g0, v, path));
    });

    // l2 keys: "x,y" in g0 x g0, "a,x" for l2m(a, x), "x,a" for l2(x, a) = -l2m(a, x)
    std::set<Tuple> p_seen;
    std::set<std::pair<int, int>> m_seen;
    for_each_entry(j, "l2", where, [&](const std::string& k, const std::string& v, const std::string& path) {
        auto names = split_key(k);
        if (names.size() != 2) throw SchemaError(path, "expected two comma-separated labels");
        int x0 = L.index0(names[0]), y0 = L.index0(names[1]);
        int xa = L.index_m1(names[0]), ya = L.index_m1(names[1]);
        if (x0 >= 0 && y0 >= 0) {
            if (x0 == y0) throw SchemaError(path, "repeated argument");
            Tuple t{std::min(x0, y0), std::max(x0, y0)};
            if (!p_seen.insert(t).second) throw SchemaError(path, "entry given twice");
            L.set_l2p(x0, y0, parse_combination(g0, v, path));
        } else if (xa >= 0 && y0 >= 0) {
            if (!m_seen.insert({xa, y0}).second) throw SchemaError(path, "entry given twice");
            L.set_l2m(xa, y0, parse_combination(m1, v, path));
        } else if (x0 >= 0 && ya >= 0) {
            if (!m_seen.insert({ya, x0}).second) throw SchemaError(path, "entry given twice");
            L.set_l2m(ya, x0, scale(Rational(-1), parse_combination(m1, v, path)));
        } else if (xa >= 0 && ya >= 0) {
            throw SchemaError(path, "l2 vanishes on g_-1 x g_-1");
        } else {
            throw SchemaError(path, "unknown label in '" + k + "'");
        }
    });
    L.set_l3(tensor_from(j, "l3", where, 3, g0, m1));
    return L;
}

Json algebra_to_json(const Lie2Algebra& L) {
    Json j;
    j["kind"] = "algebra";
    j["g_m1"] = L.labels_m1();
    j["g0"] = L.labels_0();
    std::vector<RVec> cols;
    for (int a = 0; a < L.dim_m1(); ++a) cols.push_back(L.l1().column(a));
    j["l1"] = vector_map_json(L.labels_m1(), L.labels_0(), cols);
    Json l2 = tensor_json(L.l2p(), L.labels_0(), L.labels_0());
    for (int a = 0; a < L.dim_m1(); ++a)
        for (int x = 0; x < L.dim0(); ++x) {
            RVec v = L.l2m_basis(a, x);
            if (!is_zero(v)) l2[L.labels_m1()[a] + "," + L.labels_0()[x]] = format_vector(v, L.labels_m1());
        }
    j["l2"] = l2;
    j["l3"] = tensor_json(L.l3(), L.labels_0(), L.labels_m1());
    return j;
}

Lie2Morphism morphism_from_json(const Json& input, const fs::path& base_dir, const std::string& where) {
    auto [j, dir] = deref(input, base_dir, where);
    Lie2Morphism F;
    F.source = algebra_from_json(require(j, "source", where), dir, where + ".source");
    F.target = algebra_from_json(require(j, "target", where), dir, where + ".target");
    const auto& S = F.source;
    const auto& T = F.target;
    F.F10 = Matrix(T.dim0(), S.dim0());
    F.F1m1 = Matrix(T.dim_m1(), S.dim_m1());
    auto fill = [&](const char* key, Matrix& M, const std::vector<std::string>& in,
                    const std::vector<std::string>& out) {
        std::set<int> seen;
        for_each_entry(j, key, where, [&](const std::string& k, const std::string& v, const std::string& path) {
            int c = index_in(in, trim(k), path);
            if (!seen.insert(c).second) throw SchemaError(path, "entry given twice");
            RVec col = parse_combination(out, v, path);
            for (int r = 0; r < M.rows(); ++r) M(r, c) = col[r];
        });
    };
    fill("F10", F.F10, S.labels_0(), T.labels_0());
    fill("F1m1", F.F1m1, S.labels_m1(), T.labels_m1());
    F.F2 = tensor_from(j, "F2", where, 2, S.labels_0(), T.labels_m1());
    return F;
}

Json morphism_to_json(const Lie2Morphism& F) {
    Json j;
    j["kind"] = "morphism";
    j["source"] = algebra_to_json(F.source);
    j["target"] = algebra_to_json(F.target);
    std::vector<RVec> c0, c1;
    for (int x = 0; x < F.source.dim0(); ++x) c0.push_back(F.F10.column(x));
    for (int a = 0; a < F.source.dim_m1(); ++a) c1.push_back(F.F1m1.column(a));
    j["F10"] = vector_map_json(F.source.labels_0(), F.target.labels_0(), c0);
    j["F1m1"] = vector_map_json(F.source.labels_m1(), F.target.labels_m1(), c1);
    j["F2"] = tensor_json(F.F2, F.source.labels_0(), F.target.labels_m1());
    return j;
}

TwoAction action_tables_from_json(const Json& j, const Lie2Algebra& L, int m, const std::string& where) {
    TwoAction rho(L, m);
    std::set<int> s10, s1m1;
    for_each_entry(j, "rho10", where, [&](const std::string& k, const std::string& v, const std::string& path) {
        int x = index_in(L.labels_0(), trim(k), path);
        if (!s10.insert(x).second) throw SchemaError(path, "entry given twice");
        rho.set_rho10(x, at_path(path, [&] { return parse_multivector(m, v, 1); }));
    });
    for_each_entry(j, "rho1m1", where, [&](const std::string& k, const std::string& v, const std::string& path) {
        int a = index_in(L.labels_m1(), trim(k), path);
        if (!s1m1.insert(a).second) throw SchemaError(path, "entry given twice");
        rho.set_rho1m1(a, at_path(path, [&] { return parse_multivector(m, v, 2); }));
    });
    std::set<Tuple> s2;
    for_each_entry(j, "rho2", where, [&](const std::string& k, const std::string& v, const std::string& path) {
        auto names = split_key(k);
        if (names.size() != 2) throw SchemaError(path, "expected two comma-separated labels");
        int x = index_in(L.labels_0(), names[0], path), y = index_in(L.labels_0(), names[1], path);
        if (x == y) throw SchemaError(path, "repeated argument");
        if (!s2.insert({std::min(x, y), std::max(x, y)}).second) throw SchemaError(path, "entry given twice");
        rho.set_rho2(x, y, at_path(path, [&] { return parse_multivector(m, v, 2); }));
    });
    return rho;
}

TwoAction action_from_json(const Json& input, const fs::path& base_dir, const std::string& where) {
    auto [j, dir] = deref(input, base_dir, where);
    Lie2Algebra L = algebra_from_json(require(j, "algebra", where), dir, where + ".algebra");
    const Json& cd = require(j, "chart_dim", where);
    if (!cd.is_number_integer() || cd.get<int>() < 1) throw SchemaError(where + ".chart_dim", "expected a positive integer");
    return action_tables_from_json(j, L, cd.get<int>(), where);
}

Json action_to_json(const TwoAction& rho, bool inline_algebra) {
    const Lie2Algebra& L = rho.algebra();
    Json j;
    j["kind"] = "action";
    if (inline_algebra) j["algebra"] = algebra_to_json(L);
    j["chart_dim"] = rho.chart_dim();
    std::vector<MultiVector> r10, r1m1;
    for (int x = 0; x < L.dim0(); ++x) r10.push_back(rho.rho10_basis(x));
    for (int a = 0; a < L.dim_m1(); ++a) r1m1.push_back(rho.rho1m1_basis(a));
    j["rho10"] = multivector_table(L.labels_0(), r10);
    j["rho1m1"] = multivector_table(L.labels_m1(), r1m1);
    Json r2 = Json::object();
    for (int x = 0; x < L.dim0(); ++x)
        for (int y = x + 1; y < L.dim0(); ++y) {
            MultiVector v = rho.rho2_basis(x, y);
            if (!v.is_zero()) r2[L.labels_0()[x] + "," + L.labels_0()[y]] = v.str();
        }
    j["rho2"] = r2;
    return j;
}

Comomentum comoment_tables_from_json(const Json& j, const TwoAction& rho, const PlecticForm& omega,
                                     const std::string& where) {
    const Lie2Algebra& L = rho.algebra();
    const int m = rho.chart_dim();
    Comomentum lam(rho, omega);
    if (j.contains("psi2")) lam.set_psi(gradient_from(j, omega, where));
    std::set<int> s10, s1m1;
    for_each_entry(j, "lambda10", where, [&](const std::string& k, const std::string& v, const std::string& path) {
        int x = index_in(L.labels_0(), trim(k), path);
        if (!s10.insert(x).second) throw SchemaError(path, "entry given twice");
        lam.set_lambda10(x, at_path(path, [&] { return parse_form(m, v, 1); }));
    });
    for_each_entry(j, "lambda1m1", where, [&](const std::string& k, const std::string& v, const std::string& path) {
        int a = index_in(L.labels_m1(), trim(k), path);
        if (!s1m1.insert(a).second) throw SchemaError(path, "entry given twice");
        lam.set_lambda1m1(a, at_path(path, [&] { return parse_pair(m, v); }));
    });
    std::set<Tuple> s2;
    for_each_entry(j, "lambda2", where, [&](const std::string& k, const std::string& v, const std::string& path) {
        auto names = split_key(k);
        if (names.size() != 2) throw SchemaError(path, "expected two comma-separated labels");
        int x = index_in(L.labels_0(), names[0], path), y = index_in(L.labels_0(), names[1], path);
        if (x == y) throw SchemaError(path, "repeated argument");
        if (!s2.insert({std::min(x, y), std::max(x, y)}).second) throw SchemaError(path, "entry given twice");
        lam.set_lambda2(x, y, at_path(path, [&] { return parse_pair(m, v); }));
    });
    return lam;
}

Comomentum comoment_from_json(const Json& input, const fs::path& base_dir, const std::string& where) {
    auto [j, dir] = deref(input, base_dir, where);
    TwoAction rho = action_from_json(require(j, "action", where), dir, where + ".action");
    const std::string wpath = where + ".omega";
    std::string w = as_string(require(j, "omega", where), wpath);
    PlecticForm omega = at_path(wpath, [&] { return PlecticForm(parse_form(rho.chart_dim(), w, 3)); });
    return comoment_tables_from_json(j, rho, omega, where);
}

Json comoment_to_json(const Comomentum& lam, bool inline_action) {
    const Lie2Algebra& L = lam.algebra();
    Json j;
    j["kind"] = "comoment";
    if (inline_action) j["action"] = action_to_json(lam.action());
    j["omega"] = lam.omega().omega().str();
    Json l10 = Json::object(), l1m1 = Json::object(), l2 = Json::object();
    for (int x = 0; x < L.dim0(); ++x)
        if (!lam.lambda10_basis(x).is_zero()) l10[L.labels_0()[x]] = lam.lambda10_basis(x).str();
    for (int a = 0; a < L.dim_m1(); ++a)
        if (!lam.lambda1m1_basis(a).is_zero()) l1m1[L.labels_m1()[a]] = lam.lambda1m1_basis(a).str();
    for (int x = 0; x < L.dim0(); ++x)
        for (int y = x + 1; y < L.dim0(); ++y) {
            PairObservable p = lam.lambda2_basis(x, y);
            if (!p.is_zero()) l2[L.labels_0()[x] + "," + L.labels_0()[y]] = p.str();
        }
    j["lambda10"] = l10;
    j["lambda1m1"] = l1m1;
    j["lambda2"] = l2;
    return j;
}

DiscrepancyRecord record_from_json(const Json& j, const std::string& where) {
    DiscrepancyRecord r;
    r.example = as_string(require(j, "example", where), where + ".example");
    r.entry = as_string(require(j, "entry", where), where + ".entry");
    r.condition = as_string(require(j, "condition", where), where + ".condition");
    if (r.condition != "C1" && r.condition != "C2" && r.condition != "C3")
        throw SchemaError(where + ".condition", "expected C1, C2 or C3");
    r.paper_value = as_string(require(j, "paper_value", where), where + ".paper_value");
    r.derived_value = as_string(require(j, "derived_value", where), where + ".derived_value");
    r.kind = as_string(require(j, "kind", where), where + ".kind");
    if (r.kind != "sign flip" && r.kind != "replacement")
        throw SchemaError(where + ".kind", "expected 'sign flip' or 'replacement'");
    return r;
}

Json record_to_json(const DiscrepancyRecord& r) {
    Json j;
    j["example"] = r.example;
    j["entry"] = r.entry;
    j["condition"] = r.condition;
    j["paper_value"] = r.paper_value;
    j["derived_value"] = r.derived_value;
    j["kind"] = r.kind;
    return j;
}

Json report_to_json(const Report& r) {
    Json j;
    j["passed"] = r.passed();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["evaluated"] = c.evaluated;
        e["failures"] = c.failures;
        if (!c.where.empty()) e["where"] = c.where;
        if (!c.defect.empty()) e["defect"] = c.defect;
        if (!c.note.empty()) e["note"] = c.note;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

}  // namespace l2a::io
