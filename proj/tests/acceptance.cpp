// One line per acceptance criterion; exit status is nonzero if any line fails.
#include "l2a/catalog.hpp"
#include "l2a/cohomology.hpp"
#include "l2a/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace l2a;

namespace {

const io::fs::path kData = L2A_TEST_DATA_DIR;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

std::vector<CatalogEntry> load_all() {
    std::vector<CatalogEntry> out;
    for (const auto& id : catalog_ids(kData)) out.push_back(load_catalog_entry(kData, id));
    return out;
}

Outcome axiom_suite() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    int mutations = 0;
    for (const char* id : {"1a", "1b", "3a", "3b"}) {
        CatalogEntry e = load_catalog_entry(kData, id);
        Report r = verify_axioms(e.algebra("main").algebra);
        o.require(r.passed(), std::string(id) + " fails its axioms");
        o.require(e.mutations.size() == 6, std::string(id) + " does not ship 6 mutations");
        for (const auto& m : e.mutations) {
            Report mr = verify_axioms(m.mutated);
            bool witnessed = false;
            for (const auto& c : mr.checks)
                if (!c.passed && !c.where.empty() && !c.defect.empty()) witnessed = true;
            o.require(witnessed, std::string(id) + " mutation " + m.bracket + " " + m.entry + " has no witness");
            ++mutations;
        }
    }
    double s = seconds_since(t0);
    o.require(s < 1.0, "runtime " + fmt_seconds(s));
    if (o.ok) o.detail = "4 algebras, " + std::to_string(mutations) + " mutations witnessed, " + fmt_seconds(s);
    return o;
}

Outcome skeletal_golden() {
    Outcome o;
    CatalogEntry e = load_catalog_entry(kData, "1a");
    const Lie2Algebra& L = e.algebra("main").algebra;
    auto render = [&] {
        SkeletalizationResult r = skeletalize(L);
        return io::algebra_to_json(r.skeletal).dump() + io::morphism_to_json(r.F).dump();
    };
    SkeletalizationResult r = skeletalize(L);
    const Lie2Algebra& S = r.skeletal;
    o.require(S.dim_m1() == 0, "skeletal g_-1 is not zero");
    o.require(S.dim0() == 2, "skeletal g_0 is not 2-dimensional");
    o.require(S.dim0() == 2 && S.l2p().at({0, 1}) == RVec{Rational(1), Rational(0)}, "l2(x1,x3) != x1");
    o.require(S.l3().is_zero(), "l3 of the skeletal algebra is nonzero");
    o.require(r.F.F2.is_zero(), "F2 is nonzero");
    o.require(check_quasi_iso(r).passed(), "not a quasi-isomorphism");
    o.require(render() == render(), "reruns differ");
    if (o.ok) o.detail = "g_0 = {" + S.labels_0()[0] + ", " + S.labels_0()[1] + "}, l2(x1,x3) = x1, l3 = 0, F2 = 0";
    return o;
}

Outcome cocycles(const std::vector<CatalogEntry>& all) {
    Outcome o;
    int skeletal = 0, strict = 0;
    for (const auto& e : all)
        for (const auto& a : e.algebras) {
            const std::string name = e.id + "/" + a.key;
            Lie2Algebra S = skeletalize(a.algebra).skeletal;
            o.require(is_cocycle(ce_complex(S), S.l3()), name + ": d l3bar != 0");
            ++skeletal;
            if (!a.algebra.l3().is_zero()) continue;
            WagemannResult w = wagemann_compare(a.algebra);
            CEComplex cx = ce_complex(w.skel.skeletal);
            o.require(w.class_equal, name + ": classes differ");
            o.require(ce_differential(cx, w.witness) == w.l3bar - w.gamma, name + ": witness does not bound");
            ++strict;
        }
    if (o.ok)
        o.detail = std::to_string(skeletal) + " skeletalizations cocycle, " + std::to_string(strict) +
                   " strict algebras with coboundary witness";
    return o;
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Outcome cohomology_dims() {
    Outcome o;
    AltTensor heis(2, 3, 3);
    heis.set({0, 1}, RVec{Rational(0), Rational(0), Rational(1)});
    CEComplex h = make_complex(heis, std::vector<Matrix>(3, Matrix(1, 1)));
    int h3 = cohomology_dim(h, 3);
    o.require(h3 == 1, "dim H^3(heisenberg) = " + std::to_string(h3));
    for (int n = 1; n <= 5; ++n) {
        CEComplex a = make_complex(AltTensor(2, n, n), std::vector<Matrix>(n, Matrix(1, 1)));
        for (int k = 0; k <= n; ++k) {
            int d = cohomology_dim(a, k);
            o.require(d == binomial(n, k), "abelian R^" + std::to_string(n) + ": dim H^" + std::to_string(k) +
                                               " = " + std::to_string(d));
        }
    }
    if (o.ok) o.detail = "H^3(heisenberg) = 1, abelian R^1..R^5 binomial";
    return o;
}

Outcome selfcheck_line(const SelfcheckReport& r, double s, double limit) {
    Outcome o;
    o.require(r.passed(), r.failures.empty() ? "failed" : r.failures[0].identity + ": " + r.failures[0].witness);
    if (limit > 0) o.require(s < limit, "runtime " + fmt_seconds(s));
    if (o.ok)
        o.detail = std::to_string(r.identities.size()) + " identities x " + std::to_string(r.trials) + " trials, " +
                   fmt_seconds(s);
    return o;
}

Outcome cartan() {
    auto t0 = std::chrono::steady_clock::now();
    SelfcheckReport r = cartan_selfcheck(3, 42, 100);
    return selfcheck_line(r, seconds_since(t0), 10.0);
}

Outcome observables() {
    Outcome o;
    PlecticForm w(parse_form(3, "dq1^dq2^dq3"));
    Rng rng(11);
    std::vector<HamiltonianForm> forms;
    std::vector<PairObservable> pairs;
    for (int i = 0; i < 20; ++i) {
        forms.push_back(solve_hamiltonian_vector(random_form(3, 1, rng, true), w));
        auto h = solve_hamiltonian_pair(random_polynomial(3, rng), w);
        pairs.push_back({random_polynomial(3, rng), h.f, h.v});
    }
    int n = 0;
    for (const auto& p : pairs)
        for (const auto& x : forms) {
            o.require(same_form(l1_obs(l2m_obs(p, x, w).scaled(Rational(-1))), l2p_obs(x, l1_obs(p), w)), "R2");
            ++n;
        }
    for (const auto& p : pairs)
        for (const auto& q : pairs) {
            auto d = l2m_obs(q, l1_obs(p), w).scaled(Rational(-1)) - l2m_obs(p, l1_obs(q), w);
            o.require(d.is_zero(), "R3");
            ++n;
        }
    for (std::size_t i = 0; i + 2 < forms.size(); ++i) {
        const auto &x = forms[i], &y = forms[i + 1], &z = forms[i + 2];
        auto jac = l2p_obs(l2p_obs(x, y, w), z, w) + l2p_obs(l2p_obs(y, z, w), x, w) + l2p_obs(l2p_obs(z, x, w), y, w);
        o.require(same_form(l1_obs(l3_obs(x, y, z, w)), scaled(jac, Rational(-1))), "R4");
        o.require(l1_rogers(l3_rogers(x, y, z, w)).alpha == -jac.alpha, "R4 (Rogers)");
        ++n;
    }
    for (const auto& p : pairs)
        for (std::size_t i = 0; i + 1 < forms.size(); ++i) {
            const auto &x = forms[i], &y = forms[i + 1];
            auto lhs = l3_obs(l1_obs(p), x, y, w);
            auto rhs = l2m_obs(p, l2p_obs(x, y, w), w) + l2m_obs(l2m_obs(p, y, w), x, w) -
                       l2m_obs(l2m_obs(p, x, w), y, w);
            o.require(lhs == rhs, "R5");
            ++n;
        }
    Rng frng(5);
    for (int i = 0; i < 20; ++i) {
        ExpPoly f = random_exppoly(3, frng);
        o.require(morphism_Phi(morphism_I(f)) == f, "Phi o I != id");
    }
    for (const auto& p : pairs) o.require(morphism_Phi(morphism_I(p.ftilde)) == p.ftilde, "Phi o I != id");

    // vol has no bivector kernel; the shift check runs on the five-dimensional form
    PlecticForm w5(parse_form(5, "dq1^dq2^dq4 + dq1^dq3^dq5"));
    auto h = solve_hamiltonian_pair(parse_exppoly(5, "q2"), w5);
    PairObservable p{parse_exppoly(5, "0"), h.f, h.v};
    auto x = solve_hamiltonian_vector(parse_form(5, "q2*dq4 + q3*dq5"), w5);
    auto base = l2m_obs(p, x, w5);
    for (const auto& k : kernel2(w5)) {
        auto r = l2m_obs(PairObservable{p.ftilde, p.f, p.v + k}, x, w5);
        o.require(r.f == base.f && r.ftilde == base.ftilde, "l2m changes under a kernel shift");
    }
    if (o.ok) o.detail = std::to_string(n) + " relation instances on 20 samples, Phi o I = id, kernel shifts inert";
    return o;
}

Outcome two_kernel() {
    Outcome o;
    PlecticForm w(parse_form(5, "dq1^dq2^dq4 + dq1^dq3^dq5"));
    auto k = kernel2(w);
    o.require(k.size() == 5, "kernel2 has dimension " + std::to_string(k.size()));
    std::vector<MultiVector> listed;
    for (const char* s : {"e2^e3", "e4^e5", "e2^e5", "e3^e4", "e2^e4 - e3^e5"}) listed.push_back(parse_multivector(5, s));
    std::vector<Blade> blades;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) blades.push_back({i, j});
    auto span_rank = [&](const std::vector<MultiVector>& vs) {
        Matrix M(static_cast<int>(vs.size()), static_cast<int>(blades.size()));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < blades.size(); ++j) {
                auto c = vs[i].coeff(blades[j]).as_constant();
                if (!c) return -1;
                M(static_cast<int>(i), static_cast<int>(j)) = *c;
            }
        return rank(M);
    };
    auto both = listed;
    both.insert(both.end(), k.begin(), k.end());
    o.require(span_rank(listed) == 5, "listed bivectors are dependent");
    o.require(span_rank(both) == 5, "spans differ");
    if (o.ok) o.detail = "dim 5, rank of combined system 5";
    return o;
}

Outcome catalog_replay(const std::vector<CatalogEntry>& all) {
    Outcome o;
    SituationTable table = load_table(kData);
    std::set<std::tuple<std::string, std::string, std::string>> hit;
    int checks = 0;
    for (const auto& e : all) {
        Report r = replay(e, table);
        for (const auto& c : r.checks) {
            o.require(c.passed, e.id + "/" + c.name + ": " + c.defect);
            ++checks;
        }
        for (const auto& [s, t] : exercised_cells(e)) hit.insert({e.id, s, t});
    }
    int populated = 0, covered = 0;
    for (const auto& [s, row] : table)
        for (const auto& [t, tokens] : row)
            for (const auto& tok : tokens) {
                ++populated;
                bool found = false;
                for (const auto& [id, hs, ht] : hit)
                    if (hs == s && ht == t && table_lists(table, s, t, id) && tok.substr(3) == id.substr(0, tok.size() - 3))
                        found = true;
                if (found) ++covered;
                o.require(found, s + "/" + t + " " + tok + " not exercised");
            }
    if (o.ok)
        o.detail = std::to_string(checks) + " checks, " + std::to_string(covered) + "/" + std::to_string(populated) +
                   " table entries exercised";
    return o;
}

Outcome non_liftable() {
    Outcome o;
    CatalogEntry e = load_catalog_entry(kData, "2b");
    const CatalogAction& a = e.action("main");
    if (!a.omega) return {false, "2b main has no form"};
    const PlecticForm& w = *a.omega;
    const auto& labels = a.action.algebra().labels_0();
    for (int j = 1; j <= 4; ++j) {
        const std::string x = "x" + std::to_string(j);
        auto it = std::find(labels.begin(), labels.end(), x);
        if (it == labels.end()) return {false, x + " is not a generator"};
        Form d = exterior_derivative(contract(a.action.rho10_basis(static_cast<int>(it - labels.begin())), w.omega()));
        o.require(!d.is_zero(), "d(iota rho10(" + x + ") omega) = 0");
    }
    WeakLiftResult r = find_weak_lift(a.action, w);
    o.require(!r.lift.has_value(), "a lift was found");
    std::set<std::string> comps;
    for (const auto& ob : r.obstructions) comps.insert(ob.component);
    for (int j = 1; j <= 4; ++j) {
        std::string c = "rho10(x" + std::to_string(j) + ")";
        o.require(comps.count(c) == 1, c + " missing from the obstruction report");
    }
    if (o.ok) o.detail = std::to_string(r.obstructions.size()) + " obstructions, rho10(x1..x4) not closed";
    return o;
}

Outcome pushforward() {
    Outcome o;
    CatalogEntry e = load_catalog_entry(kData, "2b");
    const CatalogAction& a = e.action("main");
    SkeletalizationResult skel = skeletalize(a.action.algebra());
    PushforwardResult r = pushforward_along_skeletal(a.action, skel);
    o.require(r.witness.has_value(), "no witness");
    o.require(!r.skeletal_action.has_value(), "pushforward unexpectedly succeeded");
    o.require(!r.report.passed("C2"), "C2 holds");
    if (!o.ok) return o;
    const int b = *r.witness;
    const auto& labels = a.action.algebra().labels_m1();
    o.require(labels[b] == "b1", "witness is " + labels[b]);
    o.require(skel.F.F1m1.column(b) == RVec(skel.F.F1m1.rows(), Rational(0)), "F1m1(b1) != 0");
    o.require(!a.action.rho1m1_basis(b).is_zero(), "rho1m1(b1) = 0");
    if (o.ok) o.detail = "F1m1(b1) = 0, rho1m1(b1) = " + a.action.rho1m1_basis(b).str();
    return o;
}

Outcome comomenta() {
    Outcome o;
    int records = 0, maps = 0;
    std::vector<std::string> failed;
    for (const char* id : {"3a", "2c", "4a", "5"}) {
        CatalogEntry e = load_catalog_entry(kData, id);
        for (const auto& c : e.comomenta) {
            ++maps;
            Comomentum fixed = apply_records(c.source, c.records);
            for (const auto& rec : c.records) {
                o.require(!entry_condition_holds(c.source, rec.entry),
                          std::string(id) + " " + rec.entry + ": source value satisfies " + rec.condition);
                o.require(entry_condition_holds(fixed, rec.entry),
                          std::string(id) + " " + rec.entry + ": derived value fails " + rec.condition);
                ++records;
            }
            Report r = verify_comoment(fixed);
            for (const auto& ch : r.checks)
                if (!ch.passed) failed.push_back(std::string(id) + "/" + c.name + " " + ch.name + " at " + ch.where);
        }
    }
    for (const auto& f : failed) o.require(false, f);
    std::string summary = std::to_string(maps) + " comomenta, " + std::to_string(records) + " records verified";
    if (o.ok) o.detail = summary;
    else {
        std::string all;
        for (const auto& f : failed) all += (all.empty() ? "" : "; ") + f;
        o.detail = summary + "; failing after records: " + (all.empty() ? o.detail : all);
    }
    return o;
}

Outcome endo() {
    auto t0 = std::chrono::steady_clock::now();
    SelfcheckReport r = verify_endo_morphism(3, 7, 50);
    return selfcheck_line(r, seconds_since(t0), 0);
}

std::string full_report() {
    std::string out;
    SituationTable table = load_table(kData);
    for (const auto& id : catalog_ids(kData))
        out += io::report_to_json(replay(load_catalog_entry(kData, id), table)).dump();
    for (const auto& r : {cartan_selfcheck(3, 42, 20), verify_endo_morphism(3, 7, 10)}) {
        out += std::to_string(r.trials);
        for (const auto& f : r.failures) out += f.identity + f.witness;
    }
    return out;
}

Outcome determinism() {
    Outcome o;
    std::string a = full_report(), b = full_report();
    o.require(a == b, "reports differ");
    if (o.ok) o.detail = "two runs, " + std::to_string(a.size()) + " identical bytes";
    return o;
}

}  // namespace

int main() {
    const std::vector<CatalogEntry> all = load_all();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"axiom suite and mutations", axiom_suite},
        {"skeletalization golden", skeletal_golden},
        {"l3 cocycles and strict comparison", [&] { return cocycles(all); }},
        {"cohomology dimensions", cohomology_dims},
        {"Cartan identities", cartan},
        {"observable algebra laws", observables},
        {"bivector kernel on R^5", two_kernel},
        {"catalog replay and table flags", [&] { return catalog_replay(all); }},
        {"non-liftable action", non_liftable},
        {"pushforward witness", pushforward},
        {"comomenta after records", comomenta},
        {"endomorphism representation", endo},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << ": " << o.detail << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
