#pragma once

#include "l2a/lie2.hpp"

#include <initializer_list>
#include <string>

namespace fx {

using namespace l2a;

inline RVec v(std::initializer_list<int> xs) {
    RVec out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

// g_-1 = <a>, g_0 = <x1, x2, x3>
inline Lie2Algebra ex1a() {
    Lie2Algebra L({"a"}, {"x1", "x2", "x3"});
    L.set_l1(0, v({0, 1, 0}));
    L.set_l2p(0, 1, v({0, -1, 0}));
    L.set_l2p(0, 2, v({1, 0, 0}));
    L.set_l2m(0, 0, v({1}));
    L.set_l3(0, 1, 2, v({-1}));
    return L;
}

inline Lie2Algebra ex3a() {
    Lie2Algebra L({"a"}, {"x1", "x2", "x3"});
    L.set_l2p(0, 1, v({-1, 0, 0}));
    L.set_l2p(0, 2, v({-1, 0, 0}));
    L.set_l3(0, 1, 2, v({1}));
    return L;
}

// g_0 = <y, x, z>, [x, y] = x ; g_-1 = <b, c>
inline Lie2Algebra ex3b() {
    Lie2Algebra L({"b", "c"}, {"y", "x", "z"});
    L.set_l2p(1, 0, v({0, 1, 0}));
    L.set_l1(0, v({0, 0, 1}));
    L.set_l2m(0, 0, v({0, 1}));
    return L;
}

// basic "ax+b" algebra with l = 1, k = 1
inline Lie2Algebra ex2b_small() {
    Lie2Algebra L({"a1", "b1", "c1", "c2", "c3"}, {"y1", "y2", "y3", "x1", "x2", "x3", "y4"});
    for (int i = 0; i < 3; ++i) {
        RVec xi = zeros(7);
        xi[3 + i] = 1;
        L.set_l2p(3 + i, i, xi);
        RVec c = zeros(5);
        c[2 + i] = 1;
        L.set_l2m(1, i, c);
    }
    L.set_l3(0, 1, 2, v({1, 0, 0, 0, 0}));
    L.set_l1(1, v({0, 0, 0, 0, 0, 0, 1}));
    return L;
}

inline Lie2Algebra abelian(int n1, int n0, const std::string& tag) {
    std::vector<std::string> a, x;
    for (int i = 0; i < n1; ++i) a.push_back(tag + "a" + std::to_string(i + 1));
    for (int i = 0; i < n0; ++i) x.push_back(tag + "x" + std::to_string(i + 1));
    return Lie2Algebra(a, x);
}

}  // namespace fx
