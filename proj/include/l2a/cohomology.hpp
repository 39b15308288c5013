#pragma once

#include "l2a/skeletalize.hpp"

#include <optional>

namespace l2a {

using Cochain = AltTensor;  // arity k, Lambda^k g -> module

// Chevalley-Eilenberg complex of a Lie algebra g with values in a module V.
struct CEComplex {
    int dim_g = 0;
    int dim_module = 0;
    AltTensor bracket;           // arity 2 on g
    std::vector<Matrix> action;  // action[x] : V -> V

    RVec act(const RVec& x, const RVec& a) const;
};

// Checks that the action is a Lie algebra morphism; throws PreconditionError otherwise.
// module_dim < 0 reads the dimension off the action matrices, which needs dim g > 0.
CEComplex make_complex(const AltTensor& bracket, std::vector<Matrix> action, int module_dim = -1);

// g_0 acting on g_-1 by x.a = l2(x, a) = -l2m(a, x). Requires l1 o l3 = 0.
CEComplex ce_complex(const Lie2Algebra& L);

Cochain zero_cochain(const CEComplex& cx, int k);
Cochain ce_differential(const CEComplex& cx, const Cochain& c);

// Matrix of d : C^k -> C^{k+1} in flattened coordinates.
Matrix differential_matrix(const CEComplex& cx, int k);

bool is_cocycle(const CEComplex& cx, const Cochain& c);
std::optional<Cochain> is_coboundary(const CEComplex& cx, const Cochain& c);
int cohomology_dim(const CEComplex& cx, int k);

struct WagemannResult {
    SkeletalizationResult skel;
    AltTensor Phi2;     // arity 2 on the skeletal g_0, values in g_-1
    Cochain gamma;      // values in ker l1, coordinates of the skeletal g_-1
    Cochain l3bar;
    Cochain witness;    // d witness = l3bar - gamma
    bool class_equal = false;
};

WagemannResult wagemann_compare(const Lie2Algebra& L);

}  // namespace l2a
