#include "ra/laurent.hpp"

#include <string>

namespace ra {

LaurentTail::LaurentTail(std::vector<Rational> coeffs) : s_(std::move(coeffs)) {
    if (s_.empty()) fail("TruncationTooShort", "a LaurentTail needs at least s_0");
}

LaurentTail LaurentTail::zeros(int order) {
    return LaurentTail(std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(0)));
}

bool LaurentTail::is_zero() const {
    for (const auto& x : s_)
        if (x != 0) return false;
    return true;
}

LaurentTail expand_at_infinity(const Poly& Q, const Poly& P, int K) {
    if (P.is_zero()) fail("ZeroPolynomial", "expansion of Q/P with P = 0");
    const int m = P.degree();
    if (Q.degree() >= m)
        fail("DegreeViolation",
             "deg Q = " + std::to_string(Q.degree()) + " must be < deg P = " + std::to_string(m));
    // match coefficients of z^{m-1-n} in P(z) * sum h_k z^{-k-1} = Q(z)
    const Rational lead = P.coeff(m);
    std::vector<Rational> h(static_cast<size_t>(K) + 1, Rational(0));
    for (int n = 0; n <= K; ++n) {
        Rational acc = Q.coeff(m - 1 - n);
        for (int k = 0; k < n; ++k) {
            const Rational& p = P.coeff(m - n + k);
            if (p != 0) acc -= p * h[static_cast<size_t>(k)];
        }
        h[static_cast<size_t>(n)] = acc / lead;
    }
    return LaurentTail(std::move(h));
}

LaurentTail tail_mul(const LaurentTail& a, const LaurentTail& b) {
    const int K = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(K) + 1, Rational(0));
    // z^{-i-1} * z^{-j-1} = z^{-(i+j+1)-1}
    for (int k = 1; k <= K; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k - 1; ++i) {
            const Rational& ai = a[i];
            if (ai != 0) acc += ai * b[k - 1 - i];
        }
        c[static_cast<size_t>(k)] = std::move(acc);
    }
    return LaurentTail(std::move(c));
}

LaurentTail tail_pow(const LaurentTail& h, unsigned y) {
    if (y == 0)
        fail("ZeroExponentUnrepresentable", "h^0 = 1 has a nonnegative power; handle y = 0 at the call site");
    LaurentTail result = h;
    LaurentTail base = h;
    --y;
    while (y > 0) {
        if (y & 1u) result = tail_mul(result, base);
        y >>= 1u;
        if (y > 0) base = tail_mul(base, base);
    }
    return result;
}

Rational res(const LaurentTail& a, int x) {
    if (x < 0 || x > a.order())
        fail("TruncationTooShort",
             "res at shift " + std::to_string(x) + " needs order >= " + std::to_string(x) +
                 ", have " + std::to_string(a.order()));
    return a[x];
}

} // namespace ra
