#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

namespace ihara {

// Variable-precision binary float. Each value carries its own precision and
// arithmetic results take the larger precision of their operands.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kMinDigits = 50;

// Decimal digits needed to expand a degree-`degree` polynomial and take its
// logarithmic-derivative series to `horizon` terms with ~25 correct digits.
// Repeated roots amplify coefficient rounding by up to C(horizon + degree,
// horizon), and coefficient magnitudes reach 2^degree.
unsigned series_digits(std::size_t degree, int horizon);

Real make_real(double value, unsigned digits10);

// Dense polynomial with coefficients in ascending degree, trailing zeros
// trimmed. The zero polynomial has no coefficients and degree -1.
class RealPolynomial {
public:
    RealPolynomial() = default;
    RealPolynomial(std::vector<Real> coefficients);

    // 1 + a u + b u^2 + ... from doubles at the given precision.
    static RealPolynomial from_doubles(const std::vector<double>& coefficients, unsigned digits10);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Real>& coefficients() const { return coeffs_; }
    Real coefficient(std::size_t i) const;
    unsigned precision() const;

    Real operator()(const Real& u) const;
    // sum |a_i| |u|^i, the scale against which cancellation is judged.
    Real magnitude_at(const Real& u) const;

    RealPolynomial derivative() const;
    // p(c u).
    RealPolynomial scaled(const Real& c) const;
    RealPolynomial pow(unsigned exponent) const;

    std::vector<double> to_doubles() const;

    friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);

private:
    void trim();

    std::vector<Real> coeffs_;
};

// Product by a balanced pairwise tree of convolutions.
RealPolynomial product(std::vector<RealPolynomial> factors);

class RationalFunction {
public:
    // Throws DomainError when the denominator is the zero polynomial.
    RationalFunction(RealPolynomial numerator, RealPolynomial denominator);

    const RealPolynomial& numerator() const { return num_; }
    const RealPolynomial& denominator() const { return den_; }
    unsigned precision() const;

    // Throws PoleHit when |den(u)| <= 10^{20 - digits} * sum |d_i| |u|^i, i.e.
    // when fewer than 20 significant digits of den(u) survive cancellation.
    Real operator()(const Real& u) const;
    double operator()(double u) const;

    bool is_pole(const Real& u) const;

    // r(c u).
    RationalFunction scaled(const Real& c) const;

private:
    bool vanishes(const Real& value, const Real& u) const;

    RealPolynomial num_;
    RealPolynomial den_;
};

// Coefficients of u^0..u^{order-1} in p'(u)/p(u). Throws ZeroAtOrigin when
// p(0) = 0.
std::vector<Real> log_derivative_series(const RealPolynomial& p, std::size_t order);

} // namespace ihara
