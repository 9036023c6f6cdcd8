#include "ihara/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "ihara/error.hpp"

namespace ihara {
namespace {

// Digits that must survive cancellation for a value to count as nonzero.
constexpr int kReliableDigits = 20;

Real zero_like(unsigned digits10) { return Real(0, digits10); }

} // namespace

unsigned series_digits(std::size_t degree, int horizon) {
    const double d = static_cast<double>(degree);
    const double h = static_cast<double>(std::max(horizon, 0));
    const double log10_binomial = (std::lgamma(h + d + 1.0) - std::lgamma(h + 1.0) - std::lgamma(d + 1.0)) / std::log(10.0);
    const double digits = log10_binomial + d * std::log10(2.0) + 25.0;
    return std::max(kMinDigits, static_cast<unsigned>(std::ceil(digits)));
}

Real make_real(double value, unsigned digits10) { return Real(value, digits10); }

RealPolynomial::RealPolynomial(std::vector<Real> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

RealPolynomial RealPolynomial::from_doubles(const std::vector<double>& coefficients, unsigned digits10) {
    std::vector<Real> c;
    c.reserve(coefficients.size());
    for (double v : coefficients) {
        c.push_back(make_real(v, digits10));
    }
    return RealPolynomial(std::move(c));
}

void RealPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Real RealPolynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_like(precision());
}

unsigned RealPolynomial::precision() const { return coeffs_.empty() ? kMinDigits : coeffs_.front().precision(); }

Real RealPolynomial::operator()(const Real& u) const {
    Real acc = zero_like(std::max(precision(), u.precision()));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * u + *it;
    }
    return acc;
}

Real RealPolynomial::magnitude_at(const Real& u) const {
    const Real r = abs(u);
    Real acc = zero_like(std::max(precision(), u.precision()));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * r + abs(*it);
    }
    return acc;
}

RealPolynomial RealPolynomial::derivative() const {
    std::vector<Real> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    }
    return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::scaled(const Real& c) const {
    std::vector<Real> out;
    out.reserve(coeffs_.size());
    Real power(1, std::max(precision(), c.precision()));
    for (const auto& a : coeffs_) {
        out.push_back(a * power);
        power *= c;
    }
    return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::pow(unsigned exponent) const {
    RealPolynomial result({Real(1, precision())});
    RealPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

std::vector<double> RealPolynomial::to_doubles() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) {
        out.push_back(a.convert_to<double>());
    }
    return out;
}

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const unsigned digits = std::max(a.precision(), b.precision());
    std::vector<Real> out(a.coeffs_.size() + b.coeffs_.size() - 1, zero_like(digits));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RealPolynomial(std::move(out));
}

RealPolynomial product(std::vector<RealPolynomial> factors) {
    if (factors.empty()) {
        return RealPolynomial({Real(1, kMinDigits)});
    }
    while (factors.size() > 1) {
        std::vector<RealPolynomial> next;
        next.reserve((factors.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2) {
            next.push_back(factors[i] * factors[i + 1]);
        }
        if (factors.size() % 2 == 1) {
            next.push_back(std::move(factors.back()));
        }
        factors = std::move(next);
    }
    return std::move(factors.front());
}

RationalFunction::RationalFunction(RealPolynomial numerator, RealPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw DomainError("rational function with zero denominator");
    }
}

unsigned RationalFunction::precision() const { return std::max(num_.precision(), den_.precision()); }

bool RationalFunction::vanishes(const Real& value, const Real& u) const {
    const int exponent = std::max(1, static_cast<int>(den_.precision()) - kReliableDigits);
    return abs(value) <= pow(Real(10, den_.precision()), -exponent) * den_.magnitude_at(u);
}

bool RationalFunction::is_pole(const Real& u) const { return vanishes(den_(u), u); }

Real RationalFunction::operator()(const Real& u) const {
    const Real d = den_(u);
    if (vanishes(d, u)) {
        throw PoleHit("denominator vanishes at u = " + u.str(17));
    }
    return num_(u) / d;
}

double RationalFunction::operator()(double u) const { return (*this)(make_real(u, precision())).convert_to<double>(); }

RationalFunction RationalFunction::scaled(const Real& c) const { return {num_.scaled(c), den_.scaled(c)}; }

std::vector<Real> log_derivative_series(const RealPolynomial& p, std::size_t order) {
    if (p.is_zero() || p.coefficient(0) == 0) {
        throw ZeroAtOrigin("logarithmic derivative needs p(0) != 0");
    }
    const auto& a = p.coefficients();
    const Real& a0 = a[0];
    std::vector<Real> l;
    l.reserve(order);
    for (std::size_t k = 0; k < order; ++k) {
        Real v = k + 1 < a.size() ? a[k + 1] * static_cast<unsigned long>(k + 1) : zero_like(p.precision());
        const std::size_t upto = std::min(k, a.size() - 1);
        for (std::size_t j = 1; j <= upto; ++j) {
            v -= a[j] * l[k - j];
        }
        l.push_back(v / a0);
    }
    return l;
}

} // namespace ihara
