#include "ihara/bigint.hpp"

#include <cassert>
#include <cmath>

namespace ihara {

BigInt binomial(int m, int r) {
    if (r == -1) {
        return m == -1 ? 1 : 0;
    }
    if (r < 0 || m < 0 || r > m) {
        return 0;
    }
    if (r > m - r) {
        r = m - r;
    }
    BigInt out = 1;
    for (int i = 1; i <= r; ++i) {
        out *= m - r + i;
        out /= i;
    }
    return out;
}

BigInt ipow(long long base, int exponent) {
    assert(exponent >= 0);
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
    assert(den > 0);
    const BigInt magnitude = boost::multiprecision::abs(num);
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(magnitude, den, quotient, remainder);
    // Keep 64 fractional bits of the remainder before the final rounding.
    const BigInt fraction = (remainder << 64) / den;
    const double value = quotient.convert_to<double>() + std::ldexp(fraction.convert_to<double>(), -64);
    return num < 0 ? -value : value;
}

} // namespace ihara
