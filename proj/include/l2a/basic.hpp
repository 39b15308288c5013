#pragma once

#include "l2a/action.hpp"

namespace l2a {

// "ax+b" style basic algebra:
//   g_0  = <y1..y3l> + <x1..x3l> + <y(3l+1)..y(3l+k)>, [xi, yi] = xi
//   g_-1 = <a1..al> + <b1..bk> + <c_ij>
//   l3(y(3i+1), y(3i+2), y(3i+3)) = a(i+1), l1(bj) = y(3l+j), l2m(bi, yj) = c_ij
struct BasicParams {
    int l = 1;
    int k = 1;
    bool with_x = true;  // false drops the x's and the c's (l2 = 0)
    bool with_l3 = true;   // false: l3 = 0 and the a's become free elements of g_-1,0
    bool l1_on_b = true;   // false: l1 = 0 and the y(3l+j) are dropped
};

Lie2Algebra basic_algebra(const BasicParams& p);

struct BasicActionParts {
    bool rho10 = true;
    bool rho1m1 = true;
    bool rho2 = true;
};

// Action on R^{3l}: rho10(yj) = d_j and rho10(xj) = exp(-qj) d_j for j <= 3l-2,
// pi = d_{3l-1} ^ d_{3l} = rho2(y(3l-1), y(3l)) = rho1m1(bj), and rho1m1(ai) = pi when l3 = 0.
TwoAction basic_action(const BasicParams& p, BasicActionParts parts = {});

}  // namespace l2a
