#pragma once

#include "l2a/alt_tensor.hpp"
#include "l2a/linalg.hpp"
#include "l2a/report.hpp"

#include <string>
#include <vector>

namespace l2a {

// Finite-dimensional Lie 2-algebra g_-1 (+) g_0 given by structure constants.
// l2m is stored one-sided as l2m(a, x); the other order is l2(x, a) = -l2m(a, x).
class Lie2Algebra {
public:
    Lie2Algebra() = default;
    Lie2Algebra(std::vector<std::string> labels_m1, std::vector<std::string> labels_0);

    int dim_m1() const { return static_cast<int>(labels_m1_.size()); }
    int dim0() const { return static_cast<int>(labels_0_.size()); }
    const std::vector<std::string>& labels_m1() const { return labels_m1_; }
    const std::vector<std::string>& labels_0() const { return labels_0_; }
    int index_m1(const std::string& label) const;  // -1 if absent
    int index0(const std::string& label) const;

    // l1 as a dim0 x dim_m1 matrix; column j is l1(a_j).
    const Matrix& l1() const { return l1_; }
    const AltTensor& l2p() const { return l2p_; }
    const AltTensor& l3() const { return l3_; }
    RVec l2m_basis(int a, int x) const { return l2m_[a][x]; }

    void set_l1(int a, const RVec& value);
    void set_l2p(int x, int y, const RVec& value);
    void set_l2m(int a, int x, const RVec& value);
    void set_l3(int x, int y, int z, const RVec& value);
    void set_l1(const Matrix& m);
    void set_l2p(const AltTensor& t);
    void set_l3(const AltTensor& t);

    // Bilinear extensions.
    RVec l1(const RVec& a) const;
    RVec l2p(const RVec& x, const RVec& y) const;
    RVec l2m(const RVec& a, const RVec& x) const;
    RVec l3(const RVec& x, const RVec& y, const RVec& z) const;

    bool operator==(const Lie2Algebra& o) const;

private:
    std::vector<std::string> labels_m1_, labels_0_;
    Matrix l1_;
    AltTensor l2p_;
    std::vector<std::vector<RVec>> l2m_;  // [a][x]
    AltTensor l3_;
};

struct Lie2Flags {
    bool skeletal = false;              // l1 = 0
    bool strict = false;                // l3 = 0
    bool g0_is_lie = false;             // l1 o l3 = 0
    bool l3_vanishes_on_im_l1 = false;  // l3(l1 a, x, y) = 0
};

// Relations R1..R6 on all basis tuples.
Report verify_axioms(const Lie2Algebra& L);
Lie2Flags classify_flags(const Lie2Algebra& L);

// Jacobiator of l2p on g_0 (zero iff g_0 is a Lie algebra).
AltTensor jacobiator(const Lie2Algebra& L);

// Shorthand "S0" or "S{1|2}{3|4}{5|6}".
std::string s_code(const Lie2Algebra& L);

struct Lie2Morphism {
    Lie2Algebra source, target;
    Matrix F10;   // dim0' x dim0
    Matrix F1m1;  // dim_m1' x dim_m1
    AltTensor F2;  // arity 2, g_0 -> g'_-1

    bool is_strict() const { return F2.is_zero(); }
};

Lie2Morphism identity_morphism(const Lie2Algebra& L);
void check_shapes(const Lie2Morphism& F);

// A1..A4 on all basis tuples.
Report verify_morphism(const Lie2Morphism& F);

// Fp o F.
Lie2Morphism compose(const Lie2Morphism& Fp, const Lie2Morphism& F);

std::string format_vector(const RVec& v, const std::vector<std::string>& labels);

struct CrossedModule {
    std::vector<std::string> g_labels, h_labels;
    AltTensor g_bracket;  // arity 2 on g
    AltTensor h_bracket;  // arity 2 on h
    Matrix tau;           // dim g x dim h
    std::vector<Matrix> r;  // r[x] : h -> h

    int dim_g() const { return static_cast<int>(g_labels.size()); }
    int dim_h() const { return static_cast<int>(h_labels.size()); }
    RVec act(const RVec& x, const RVec& a) const;
};

// Lie algebra axioms for g and h, tau and r morphisms, and the two compatibilities.
Report verify_crossed_module(const CrossedModule& cm);

CrossedModule to_crossed_module(const Lie2Algebra& L);
Lie2Algebra from_crossed_module(const CrossedModule& cm);

// Phi : h -> h', psi : g -> g'.
Report verify_crossed_module_morphism(const Matrix& Phi, const Matrix& psi, const CrossedModule& cm,
                                      const CrossedModule& cmp);
Lie2Morphism strict_morphism_from(const Matrix& Phi, const Matrix& psi, const CrossedModule& cm,
                                  const CrossedModule& cmp);

}  // namespace l2a
