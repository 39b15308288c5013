#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace l2a {

// mpq_class keeps numerator/denominator in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using RVec = std::vector<Rational>;

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& r);

bool is_zero(const RVec& v);
RVec zeros(std::size_t n);
RVec unit(std::size_t n, std::size_t i);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const Rational& c, const RVec& v);
void axpy(RVec& y, const Rational& c, const RVec& x);

}  // namespace l2a
