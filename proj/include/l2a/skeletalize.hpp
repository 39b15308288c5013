#pragma once

#include "l2a/lie2.hpp"

namespace l2a {

struct SkeletalizationResult {
    Lie2Algebra skeletal;
    Lie2Morphism F;              // input -> skeletal
    std::vector<int> complement_m1;  // C in g_-1: standard basis coordinates
    std::vector<int> complement_0;   // C' in g_0: standard basis coordinates
    Matrix kernel_inclusion;     // dim_m1 x dim ker l1
    Matrix section;              // dim0 x dim0bar, quotient class -> representative in C'
};

SkeletalizationResult skeletalize(const Lie2Algebra& L);

// Rank equalities, injectivity of F1m1 on ker l1, and the morphism conditions.
Report check_quasi_iso(const SkeletalizationResult& res);

}  // namespace l2a
