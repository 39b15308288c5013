#pragma once

#include "l2a/calculus.hpp"

#include <map>
#include <string_view>

namespace l2a::detail {

enum class BladeToken { None, Vector, Form };

// Parses a sum of terms "<expr> * e1^e2" (or dq1^dq2); returns the blade
// coefficients keyed by sorted blades (signs folded in). Every term must carry
// a blade of the same degree unless the degree is 0.
std::map<Blade, ExpPoly> parse_blade_sum(int m, std::string_view text, BladeToken kind, int& degree);

}  // namespace l2a::detail
