#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ra/rational.hpp"

namespace ra {

/// Univariate polynomial with exact rational coefficients, ascending powers,
/// trailing zeros stripped.  The zero polynomial is the empty list and has
/// degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }
    Poly(std::initializer_list<long long> ints) {
        c_.reserve(ints.size());
        for (long long v : ints) c_.emplace_back(v);
        strip();
    }

    static Poly zero() { return Poly(); }
    static Poly constant(Rational c);
    /// c * z^k
    static Poly monomial(int k, Rational c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Index of the lowest nonzero coefficient (order of the root z=0);
    /// -1 for the zero polynomial.
    int order() const;

    /// Coefficient of z^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& a);

private:
    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

Poly derivative(const Poly& a);
Poly poly_pow(const Poly& a, unsigned e);

/// Exact Horner evaluation.
Rational eval(const Poly& a, const Rational& z);
/// Double-precision Horner evaluation.
std::complex<double> eval(const Poly& a, std::complex<double> z);

std::vector<double> double_coeffs(const Poly& a);

/// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd over the rationals; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);
/// Exact quotient; throws if the division leaves a remainder.
Poly divexact(const Poly& a, const Poly& b);

/// Human-readable form, e.g. "z^2 - z - 1".
std::string to_string(const Poly& a, const char* var = "z");

} // namespace ra
