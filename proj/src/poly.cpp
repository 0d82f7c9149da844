#include "ra/poly.hpp"

#include <sstream>

namespace ra {

Poly Poly::constant(Rational c) {
    std::vector<Rational> v;
    if (c != 0) v.push_back(std::move(c));
    return Poly(std::move(v));
}

Poly Poly::monomial(int k, Rational c) {
    if (c == 0) return Poly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
}

int Poly::order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

const Rational& Poly::coeff(int k) const {
    static const Rational kZero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

Poly Poly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& a) {
    if (s == 0) return Poly();
    std::vector<Rational> v(a.c_);
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

Poly derivative(const Poly& a) {
    if (a.degree() < 1) return Poly();
    std::vector<Rational> v(static_cast<size_t>(a.degree()), Rational(0));
    for (int k = 1; k <= a.degree(); ++k)
        v[static_cast<size_t>(k - 1)] = Rational(k) * a.coeff(k);
    return Poly(std::move(v));
}

Poly poly_pow(const Poly& a, unsigned e) {
    Poly result = Poly::constant(Rational(1));
    Poly base = a;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Rational eval(const Poly& a, const Rational& z) {
    Rational acc(0);
    for (int k = a.degree(); k >= 0; --k) acc = acc * z + a.coeff(k);
    return acc;
}

std::complex<double> eval(const Poly& a, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (int k = a.degree(); k >= 0; --k) acc = acc * z + to_double(a.coeff(k));
    return acc;
}

std::vector<double> double_coeffs(const Poly& a) {
    std::vector<double> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.push_back(to_double(c));
    return v;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail("ZeroPolynomial", "division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    const Rational lead = b.leading();
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    for (int k = a.degree(); k >= db; --k) {
        const Rational& top = rem[static_cast<size_t>(k)];
        if (top == 0) continue;
        Rational f = top / lead;
        quo[static_cast<size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= f * b.coeff(j);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return (Rational(1) / x.leading()) * x; // monic normalization
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = poly_gcd(a, b);
    Poly l = divexact(a * b, g);
    return (Rational(1) / l.leading()) * l;
}

Poly divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail("InexactDivision", "polynomial division left a remainder");
    return q;
}

std::string to_string(const Poly& a, const char* var) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = a.degree(); k >= 0; --k) {
        const Rational& c = a.coeff(k);
        if (c == 0) continue;
        Rational mag = rational_abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (k == 0 || !unit) out << to_string(mag);
        if (k > 0) {
            if (!unit) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

} // namespace ra
