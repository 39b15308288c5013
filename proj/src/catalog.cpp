#include "l2a/catalog.hpp"

#include <algorithm>
#include <cctype>

#ifndef L2A_DATA_DIR
#define L2A_DATA_DIR "data"
#endif

namespace l2a {

namespace {

using io::Json;
using io::SchemaError;

std::string str_field(const Json& j, const char* key, const std::string& where, const std::string& dflt = {}) {
    if (!j.contains(key)) return dflt;
    if (!j.at(key).is_string()) throw SchemaError(where + "." + key, "expected a string");
    return j.at(key).get<std::string>();
}

bool bool_field(const Json& j, const char* key, const std::string& where, bool dflt) {
    if (!j.contains(key)) return dflt;
    if (!j.at(key).is_boolean()) throw SchemaError(where + "." + key, "expected true or false");
    return j.at(key).get<bool>();
}

std::vector<std::string> list_field(const Json& j, const char* key, const std::string& where) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    const Json& a = j.at(key);
    if (!a.is_array()) throw SchemaError(where + "." + key, "expected an array of strings");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_string()) throw SchemaError(where + "." + key + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(a[i].get<std::string>());
    }
    return out;
}

BasicParams basic_from(const Json& j, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where, "expected an object");
    BasicParams p;
    auto num = [&](const char* key, int dflt) {
        if (!j.contains(key)) return dflt;
        if (!j.at(key).is_number_integer()) throw SchemaError(where + "." + key, "expected an integer");
        return j.at(key).get<int>();
    };
    p.l = num("l", p.l);
    p.k = num("k", p.k);
    p.with_x = bool_field(j, "with_x", where, p.with_x);
    p.with_l3 = bool_field(j, "with_l3", where, p.with_l3);
    p.l1_on_b = bool_field(j, "l1_on_b", where, p.l1_on_b);
    return p;
}

PlecticForm omega_from(const Json& j, int m, const std::string& where) {
    const std::string path = where + ".omega";
    if (!j.at("omega").is_string()) throw SchemaError(path, "expected a string");
    try {
        return PlecticForm(parse_form(m, j.at("omega").get<std::string>(), 3));
    } catch (const InputError& e) {
        throw SchemaError(path, e.what());
    }
}

std::vector<std::string> failed_names(const Report& r) {
    std::vector<std::string> out;
    for (const auto& c : r.checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
    return out.empty() ? "none" : out;
}

std::string first_witness(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.passed) return c.name + " at " + c.where;
    return {};
}

}  // namespace

const CatalogAlgebra& CatalogEntry::algebra(const std::string& key) const {
    for (const auto& a : algebras)
        if (a.key == key) return a;
    throw InputError("catalog entry " + id + " has no algebra '" + key + "'");
}

const CatalogAction& CatalogEntry::action(const std::string& name) const {
    for (const auto& a : actions)
        if (a.name == name) return a;
    throw InputError("catalog entry " + id + " has no action '" + name + "'");
}

io::fs::path default_data_dir() { return io::fs::path(L2A_DATA_DIR); }

std::vector<std::string> catalog_ids(const io::fs::path& data_dir) {
    std::vector<std::string> ids;
    const auto dir = data_dir / "catalog";
    if (!io::fs::is_directory(dir)) throw InputError("no catalog directory at " + dir.string());
    for (const auto& f : io::fs::directory_iterator(dir))
        if (f.path().extension() == ".json") ids.push_back(f.path().stem().string());
    std::sort(ids.begin(), ids.end());
    return ids;
}

CatalogEntry load_catalog_entry(const io::fs::path& data_dir, const std::string& id) {
    const auto dir = data_dir / "catalog";
    const auto path = dir / (id + ".json");
    if (!io::fs::exists(path)) throw InputError("unknown example id '" + id + "'");
    const Json j = io::load_file(path);
    const std::string w = "$";
    CatalogEntry e;
    e.id = str_field(j, "id", w);
    if (e.id != id) throw SchemaError("$.id", "does not match the file name");
    e.title = str_field(j, "title", w);

    if (!j.contains("algebras") || !j.at("algebras").is_object()) throw SchemaError("$.algebras", "expected an object");
    std::map<std::string, Json> algebra_json;
    for (auto it = j.at("algebras").begin(); it != j.at("algebras").end(); ++it) {
        const std::string p = "$.algebras." + it.key();
        CatalogAlgebra a;
        a.key = it.key();
        const Json& v = it.value();
        if (v.contains("basic")) {
            a.basic = basic_from(v.at("basic"), p + ".basic");
            a.algebra = basic_algebra(*a.basic);
        } else if (v.contains("def")) {
            a.algebra = io::algebra_from_json(v.at("def"), dir, p + ".def");
        } else {
            throw SchemaError(p, "needs \"def\" or \"basic\"");
        }
        a.expected_s = str_field(v, "expected_s", p);
        algebra_json[a.key] = io::algebra_to_json(a.algebra);
        e.algebras.push_back(std::move(a));
    }

    if (j.contains("mutations")) {
        const Json& ms = j.at("mutations");
        if (!ms.is_array()) throw SchemaError("$.mutations", "expected an array");
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const std::string p = "$.mutations[" + std::to_string(i) + "]";
            CatalogMutation m;
            m.algebra_key = str_field(ms[i], "algebra", p, "main");
            m.bracket = str_field(ms[i], "bracket", p);
            m.entry = str_field(ms[i], "entry", p);
            m.value = str_field(ms[i], "value", p);
            if (m.bracket != "l1" && m.bracket != "l2" && m.bracket != "l3")
                throw SchemaError(p + ".bracket", "expected l1, l2 or l3");
            auto it = algebra_json.find(m.algebra_key);
            if (it == algebra_json.end()) throw SchemaError(p + ".algebra", "unknown algebra key");
            Json def = it->second;
            def[m.bracket][m.entry] = m.value;
            m.mutated = io::algebra_from_json(def, dir, p);
            e.mutations.push_back(std::move(m));
        }
    }

    if (j.contains("actions")) {
        const Json& as = j.at("actions");
        if (!as.is_array()) throw SchemaError("$.actions", "expected an array");
        for (std::size_t i = 0; i < as.size(); ++i) {
            const Json& v = as[i];
            const std::string p = "$.actions[" + std::to_string(i) + "]";
            CatalogAction a;
            a.name = str_field(v, "name", p);
            a.algebra_key = str_field(v, "algebra", p, "main");
            const CatalogAlgebra& alg = e.algebra(a.algebra_key);
            if (v.contains("basic_parts")) {
                if (!alg.basic) throw SchemaError(p + ".basic_parts", "algebra is not generated");
                const Json& bp = v.at("basic_parts");
                const std::string q = p + ".basic_parts";
                BasicActionParts parts{bool_field(bp, "rho10", q, true), bool_field(bp, "rho1m1", q, true),
                                       bool_field(bp, "rho2", q, true)};
                a.action = basic_action(*alg.basic, parts);
            } else {
                const Json& cd = v.contains("chart_dim") ? v.at("chart_dim") : Json();
                if (!cd.is_number_integer() || cd.get<int>() < 1)
                    throw SchemaError(p + ".chart_dim", "expected a positive integer");
                a.action = io::action_tables_from_json(v, alg.algebra, cd.get<int>(), p);
            }
            a.expected_t = str_field(v, "expected_t", p);
            a.in_table = bool_field(v, "in_table", p, true);
            a.failing = list_field(v, "failing", p);
            if (v.contains("omega")) a.omega = omega_from(v, a.action.chart_dim(), p);
            a.expected_plectic = str_field(v, "expected_plectic", p);
            a.expect_obstruction = bool_field(v, "expect_obstruction", p, false);
            if (v.contains("pushforward_witness")) a.pushforward_witness = str_field(v, "pushforward_witness", p);
            if ((!a.expected_plectic.empty() || a.expect_obstruction) && !a.omega)
                throw SchemaError(p, "plectic checks need an omega");
            e.actions.push_back(std::move(a));
        }
    }

    if (j.contains("comomenta")) {
        const Json& cs = j.at("comomenta");
        if (!cs.is_array()) throw SchemaError("$.comomenta", "expected an array");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const Json& v = cs[i];
            const std::string p = "$.comomenta[" + std::to_string(i) + "]";
            CatalogComoment c;
            c.name = str_field(v, "name", p);
            c.action = str_field(v, "action", p);
            const CatalogAction* act = nullptr;
            for (const auto& a : e.actions)
                if (a.name == c.action) act = &a;
            if (!act) throw SchemaError(p + ".action", "unknown action '" + c.action + "'");
            if (!v.contains("omega")) throw SchemaError(p + ".omega", "missing field");
            PlecticForm omega = omega_from(v, act->action.chart_dim(), p);
            c.source = io::comoment_tables_from_json(v, act->action, omega, p);
            if (v.contains("records")) {
                const Json& rs = v.at("records");
                if (!rs.is_array()) throw SchemaError(p + ".records", "expected an array");
                for (std::size_t r = 0; r < rs.size(); ++r)
                    c.records.push_back(io::record_from_json(rs[r], p + ".records[" + std::to_string(r) + "]"));
            }
            c.failing = list_field(v, "failing", p);
            e.comomenta.push_back(std::move(c));
        }
    }
    return e;
}

SituationTable load_table(const io::fs::path& data_dir) {
    const Json j = io::load_file(data_dir / "table.json");
    SituationTable t;
    if (!j.is_object()) throw SchemaError("$", "expected an object");
    for (auto s = j.begin(); s != j.end(); ++s) {
        if (!s.value().is_object()) throw SchemaError("$." + s.key(), "expected an object");
        for (auto r = s.value().begin(); r != s.value().end(); ++r)
            t[s.key()][r.key()] = list_field(s.value(), r.key().c_str(), "$." + s.key());
    }
    return t;
}

bool table_lists(const SituationTable& table, const std::string& s, const std::string& t, const std::string& id) {
    auto col = table.find(s);
    if (col == table.end()) return false;
    auto cell = col->second.find(t);
    if (cell == col->second.end()) return false;
    for (const auto& token : cell->second) {
        if (token.rfind("Ex.", 0) != 0) continue;
        std::string ref = token.substr(3);
        bool has_letter = !ref.empty() && std::isalpha(static_cast<unsigned char>(ref.back()));
        if (has_letter ? id == ref : id.rfind(ref, 0) == 0) return true;
    }
    return false;
}

std::vector<std::pair<std::string, std::string>> exercised_cells(const CatalogEntry& e) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& a : e.actions) {
        if (!a.in_table) continue;
        std::pair<std::string, std::string> cell{s_code(e.algebra(a.algebra_key).algebra),
                                                 t_code(classify_action(a.action))};
        if (std::find(out.begin(), out.end(), cell) == out.end()) out.push_back(cell);
    }
    return out;
}

Report replay(const CatalogEntry& e, const SituationTable& table) {
    Report rep;
    for (const auto& a : e.algebras) {
        Report ax = verify_axioms(a.algebra);
        Check& c = rep.add("axioms:" + a.key);
        c.record(ax.passed(), a.key, first_witness(ax));
        std::string s = s_code(a.algebra);
        Check& cs = rep.add("s_code:" + a.key);
        cs.record(s == a.expected_s, a.key, "computed " + s + ", expected " + a.expected_s);
        cs.note = s;
    }
    for (std::size_t i = 0; i < e.mutations.size(); ++i) {
        const auto& m = e.mutations[i];
        Report ax = verify_axioms(m.mutated);
        Check& c = rep.add("mutation:" + std::to_string(i + 1));
        std::string w = first_witness(ax);
        c.record(!ax.passed() && !w.empty(), m.bracket + "[" + m.entry + "]", "mutant satisfies all relations");
        c.note = m.bracket + "[" + m.entry + "] = " + m.value + " fails " + w;
    }
    for (const auto& a : e.actions) {
        const std::string tag = a.name;
        Report ar = verify_action(a.action);
        auto failed = failed_names(ar);
        Check& c = rep.add("action:" + tag);
        c.record(failed == a.failing, tag, "failing " + join(failed) + ", expected " + join(a.failing));
        c.note = ar.passed() ? "A1-A4 hold" : first_witness(ar);

        std::string t = t_code(classify_action(a.action));
        if (!a.expected_t.empty()) {
            Check& ct = rep.add("t_code:" + tag);
            ct.record(t == a.expected_t, tag, "computed " + t + ", expected " + a.expected_t);
            ct.note = t;
        }
        if (a.in_table && a.failing.empty()) {
            std::string s = s_code(e.algebra(a.algebra_key).algebra);
            Check& cc = rep.add("table:" + tag);
            cc.record(table_lists(table, s, t, e.id), tag, "cell " + s + "/" + t + " does not list Ex." + e.id);
            cc.note = s + "/" + t;
        }
        if (!a.expected_plectic.empty()) {
            auto pc = plectic_class(a.action, *a.omega);
            Check& cp = rep.add("plectic:" + tag);
            cp.record(to_string(pc.cls) == a.expected_plectic, tag,
                      "computed " + to_string(pc.cls) + ", expected " + a.expected_plectic);
            std::string ws;
            for (const auto& w : pc.witnesses) ws += (ws.empty() ? "" : ", ") + w.component;
            cp.note = to_string(pc.cls) + (ws.empty() ? "" : "; not closed: " + ws);
        }
        if (a.expect_obstruction) {
            Check& cl = rep.add("lift:" + tag);
            auto res = find_weak_lift(a.action, *a.omega);
            cl.record(!res.lift && !res.obstructions.empty(), tag, "a weak lift exists");
            std::string ws;
            for (const auto& w : res.obstructions) ws += (ws.empty() ? "" : ", ") + w.component;
            cl.note = "non-liftable; d(iota omega) != 0 for " + ws;
        }
        if (a.pushforward_witness) {
            Check& cw = rep.add("pushforward:" + tag);
            auto skel = skeletalize(a.action.algebra());
            auto pf = pushforward_along_skeletal(a.action, skel);
            if (a.pushforward_witness->empty()) {
                cw.record(pf.skeletal_action.has_value(), tag, "pushforward failed: " + first_witness(pf.report));
                cw.note = "skeletal action defined";
            } else {
                std::string got = pf.witness ? a.action.algebra().labels_m1()[*pf.witness] : "none";
                cw.record(got == *a.pushforward_witness, tag, "witness " + got + ", expected " + *a.pushforward_witness);
                if (pf.witness)
                    cw.note = "F1m1(" + got + ") = 0 but rho1m1(" + got + ") = " +
                              a.action.rho1m1_basis(*pf.witness).str();
            }
        }
    }
    for (const auto& c : e.comomenta) {
        const std::string tag = c.name;
        Check& cr = rep.add("records:" + tag);
        Comomentum corrected = c.source;
        try {
            corrected = apply_records(c.source, c.records);
            for (const auto& r : c.records) {
                cr.record(!entry_condition_holds(c.source, r.entry), r.entry, "source value satisfies " + r.condition);
                cr.record(entry_condition_holds(corrected, r.entry), r.entry, "derived value fails " + r.condition);
            }
            auto rec = reconcile(e.id, c.source);
            Json fresh = Json::array();
            for (const auto& r : rec.records) fresh.push_back(io::record_to_json(r));
            cr.record(rec.records == c.records && rec.unresolved.empty(), tag,
                      "stored records differ from a fresh reconciliation " + fresh.dump() +
                          (rec.unresolved.empty() ? "" : "; unresolved " + join(rec.unresolved)));
        } catch (const InputError& ex) {
            cr.record(false, tag, ex.what());
        }
        cr.note = std::to_string(c.records.size()) + " record(s)";

        Report vr = verify_comoment(corrected);
        auto failed = failed_names(vr);
        Check& cv = rep.add("comoment:" + tag);
        cv.record(failed == c.failing, tag, "failing " + join(failed) + ", expected " + join(c.failing));
        auto cls = classify_comoment(vr, corrected);
        cv.note = vr.passed() ? std::string(cls.fundamental ? "fundamental, " : "") + "strong"
                              : first_witness(vr) + (cls.weak_only ? " (weak only)" : "");
    }
    return rep;
}

}  // namespace l2a
