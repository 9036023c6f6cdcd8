#include "ihara/chebyshev.hpp"

#include <cassert>

namespace ihara {

double chebyshev_T(int k, double x) {
    assert(k >= 0);
    if (k == 0) {
        return 2.0;
    }
    double prev = 2.0;
    double cur = x;
    for (int i = 1; i < k; ++i) {
        const double next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> chebyshev_T_sequence(int K, double x) {
    std::vector<double> t(static_cast<std::size_t>(K) + 1);
    t[0] = 2.0;
    if (K >= 1) {
        t[1] = x;
    }
    for (int k = 1; k < K; ++k) {
        t[k + 1] = x * t[k] - t[k - 1];
    }
    return t;
}

BigInt chebyshev_coefficient(int k, int i) {
    return binomial(k - i, i) + binomial(k - i - 1, i - 1);
}

} // namespace ihara
