#pragma once

#include "l2a/action.hpp"
#include "l2a/plectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace l2a {

class Comomentum {
public:
    Comomentum() = default;
    Comomentum(TwoAction action, PlecticForm omega);  // lambda = 0, strict gradient

    const TwoAction& action() const { return action_; }
    const PlecticForm& omega() const { return omega_; }
    const Lie2Algebra& algebra() const { return action_.algebra(); }
    const Gradient& psi() const { return psi_; }
    void set_psi(Gradient g) { psi_ = std::move(g); }

    void set_lambda10(int x, Form alpha);
    void set_lambda1m1(int a, PairObservable p);
    void set_lambda2(int x, int y, PairObservable p);  // also (y, x) = -p

    const Form& lambda10_basis(int x) const { return lambda10_[x]; }
    const PairObservable& lambda1m1_basis(int a) const { return lambda1m1_[a]; }
    PairObservable lambda2_basis(int x, int y) const;

    Form lambda10(const RVec& x) const;
    PairObservable lambda1m1(const RVec& a) const;
    PairObservable lambda2(const RVec& x, const RVec& y) const;

    bool operator==(const Comomentum& o) const;

private:
    TwoAction action_;
    PlecticForm omega_;
    Gradient psi_;
    std::vector<Form> lambda10_;
    std::vector<PairObservable> lambda1m1_;
    std::vector<std::vector<PairObservable>> lambda2_;
};

// A1..A4 for lambda and C1..C3; needs a nondegenerate omega.
Report verify_comoment(const Comomentum& lam);

struct ComomentClass {
    bool fundamental = false;
    bool strong = false;
    bool weak = false;
    bool weak_only = false;
};

ComomentClass classify_comoment(const Comomentum& lam);
ComomentClass classify_comoment(const Report& verified, const Comomentum& lam);

// Primitive of a closed form with polynomial coefficients (base point 0).
Form homotopy_primitive(const Form& beta);

struct WeakLiftResult {
    std::optional<Comomentum> lift;
    std::vector<PlecticWitness> obstructions;  // non-closed contractions
};

// Throws Unsupported if a contraction is closed but has exponential coefficients.
WeakLiftResult find_weak_lift(const TwoAction& rho, const PlecticForm& omega);

// Map into the Rogers observables: forms in degree 0, functions in degree -1.
class HomotopyMomentMap {
public:
    HomotopyMomentMap() = default;
    HomotopyMomentMap(TwoAction action, PlecticForm omega);

    const TwoAction& action() const { return action_; }
    const PlecticForm& omega() const { return omega_; }
    void set_lambda10(int x, Form alpha);
    void set_lambda1m1(int a, ExpPoly f);
    void set_lambda2(int x, int y, ExpPoly f);
    const Form& lambda10_basis(int x) const { return lambda10_[x]; }
    const ExpPoly& lambda1m1_basis(int a) const { return lambda1m1_[a]; }
    ExpPoly lambda2_basis(int x, int y) const;

    bool operator==(const HomotopyMomentMap& o) const;

private:
    TwoAction action_;
    PlecticForm omega_;
    std::vector<Form> lambda10_;
    std::vector<ExpPoly> lambda1m1_;
    std::vector<std::vector<ExpPoly>> lambda2_;
};

// A1..A4 into the Rogers algebra plus C1.
Report verify_homotopy(const HomotopyMomentMap& lg);

Comomentum bridge_from_homotopy(const HomotopyMomentMap& lg);  // needs rho1m1 = rho2 = 0
HomotopyMomentMap bridge_to_homotopy(const Comomentum& lam);

struct DiscrepancyRecord {
    std::string example;
    std::string entry;  // e.g. "lambda10(x)"
    std::string condition;  // C1, C2 or C3
    std::string paper_value;
    std::string derived_value;
    std::string kind;  // "sign flip" or "replacement"

    bool operator==(const DiscrepancyRecord& o) const = default;
};

struct Reconciliation {
    Comomentum corrected;
    std::vector<DiscrepancyRecord> records;
    std::vector<std::string> unresolved;  // entries with no consistent value
};

// Compares each lambda entry against its C-condition; fixes by sign flip when that
// suffices, otherwise by a homotopy-operator primitive.
Reconciliation reconcile(const std::string& example, const Comomentum& source);

// Replays stored records onto source data; throws InputError if a record does not
// match the source value.
Comomentum apply_records(const Comomentum& source, const std::vector<DiscrepancyRecord>& records);

// Outcome of one C-condition for a single entry, e.g. ("lambda10(x)") -> passed?
bool entry_condition_holds(const Comomentum& lam, const std::string& entry);

}  // namespace l2a
