#pragma once

#include "l2a/calculus.hpp"

#include <cstdint>
#include <random>

namespace l2a {

// Seeded generator; draws go through the raw engine output so sequences are
// identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int num, int den) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(den)) < num; }

private:
    std::mt19937_64 eng_;
};

// Monomial degree <= 2, at most one exponential with |l_i| <= 2,
// coefficients in {-2..2}.
ExpPoly random_exppoly(int m, Rng& rng, int max_terms = 3);
ExpPoly random_polynomial(int m, Rng& rng, int max_terms = 3);
MultiVector random_multivector(int m, int degree, Rng& rng, bool polynomial = false);
Form random_form(int m, int degree, Rng& rng, bool polynomial = false);

}  // namespace l2a
