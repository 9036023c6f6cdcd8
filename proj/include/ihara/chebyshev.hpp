#pragma once

#include <vector>

#include "ihara/bigint.hpp"

namespace ihara {

// T_0 = 2, T_1 = x, x T_k = T_{k+1} + T_{k-1}. This is twice the classical
// Chebyshev polynomial of the first kind evaluated at x/2, so
// T_k(a + 1/a) = a^k + a^-k.
double chebyshev_T(int k, double x);

// T_0(x) .. T_K(x) in one forward pass.
std::vector<double> chebyshev_T_sequence(int K, double x);

// C(k-i, i) + C(k-i-1, i-1), the magnitude of the coefficient of x^{k-2i} in
// T_k; with the binomial() convention this is 2 for k = i = 0.
BigInt chebyshev_coefficient(int k, int i);

} // namespace ihara
