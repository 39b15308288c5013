#pragma once

#include "l2a/calculus.hpp"
#include "l2a/lie2.hpp"
#include "l2a/plectic.hpp"
#include "l2a/skeletalize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace l2a {

// Table of a 2-action on a chart; extended linearly.
class TwoAction {
public:
    TwoAction() = default;
    TwoAction(Lie2Algebra algebra, int chart_dim);  // zero action

    const Lie2Algebra& algebra() const { return algebra_; }
    int chart_dim() const { return m_; }

    void set_rho10(int x, MultiVector v);
    void set_rho1m1(int a, MultiVector v);
    void set_rho2(int x, int y, MultiVector v);  // also sets (y, x) to -v

    const MultiVector& rho10_basis(int x) const { return rho10_[x]; }
    const MultiVector& rho1m1_basis(int a) const { return rho1m1_[a]; }
    MultiVector rho2_basis(int x, int y) const;

    MultiVector rho10(const RVec& x) const;
    MultiVector rho1m1(const RVec& a) const;
    MultiVector rho2(const RVec& x, const RVec& y) const;

    bool operator==(const TwoAction& o) const;

private:
    Lie2Algebra algebra_;
    int m_ = 0;
    std::vector<MultiVector> rho10_, rho1m1_;
    std::vector<std::vector<MultiVector>> rho2_;  // upper triangle used
};

// A1..A4 on all basis tuples.
Report verify_action(const TwoAction& rho);

struct ActionFlags {
    bool rho10_nonzero = false;
    bool rho1m1_nonzero = false;
    bool rho2_nonzero = false;
    bool strict() const { return !rho2_nonzero; }
};

ActionFlags classify_action(const TwoAction& rho);
std::string t_code(const ActionFlags& f);  // e.g. "T135"

enum class PlecticClass { TwoPlectic, QuasiTwoPlectic, Neither };
std::string to_string(PlecticClass c);

struct PlecticWitness {
    std::string component;  // e.g. "rho10(x1)"
    Form d_iota;            // d(iota_v omega), nonzero
};

struct PlecticClassification {
    PlecticClass cls = PlecticClass::TwoPlectic;
    std::vector<PlecticWitness> witnesses;  // every image whose contraction is not closed
};

PlecticClassification plectic_class(const TwoAction& rho, const PlecticForm& omega);

struct PushforwardResult {
    std::optional<TwoAction> skeletal_action;  // set when C1..C3 hold
    Report report;                             // C1, C2, C3 (+ A1..A4 of the candidate)
    std::optional<int> witness;                // a with F1m1(a) = 0 but rho1m1(a) != 0
};

PushforwardResult pushforward_along_skeletal(const TwoAction& rho, const SkeletalizationResult& skel);

}  // namespace l2a
