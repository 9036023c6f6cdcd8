#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ihara {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient extended by C(-1, -1) = 1 and C(m, -1) = 0 for m >= 0;
// zero for every other pair outside 0 <= r <= m.
BigInt binomial(int m, int r);

BigInt ipow(long long base, int exponent);

// Closest double to num / den (den > 0), with the quotient taken exactly
// before rounding so large cancelling integers keep full relative accuracy.
double ratio_to_double(const BigInt& num, const BigInt& den);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

} // namespace ihara
