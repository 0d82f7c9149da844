#pragma once

#include <vector>

#include "ra/poly.hpp"

namespace ra {

/// Truncated Laurent series at infinity: sum_{k=0..K} s_k z^{-k-1}.
/// No nonnegative powers, ever; K is fixed by the caller and operations
/// never extend it silently.
class LaurentTail {
public:
    /// coeffs = s_0..s_K (must be nonempty).
    explicit LaurentTail(std::vector<Rational> coeffs);
    static LaurentTail zeros(int order);

    int order() const { return static_cast<int>(s_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return s_; }
    const Rational& operator[](int k) const { return s_[static_cast<size_t>(k)]; }

    bool is_zero() const;
    bool operator==(const LaurentTail& o) const { return s_ == o.s_; }

private:
    std::vector<Rational> s_;
};

/// Exact expansion of Q/P at infinity to order K, from the linear recurrence
/// P(z)*h(z) = Q(z).  Requires deg Q < deg P; throws DegreeViolation else.
LaurentTail expand_at_infinity(const Poly& Q, const Poly& P, int K);

/// Truncated Cauchy product; the result keeps min(K_a, K_b).
LaurentTail tail_mul(const LaurentTail& a, const LaurentTail& b);

/// y-fold truncated product by binary exponentiation.  y = 0 is the constant
/// 1, which is not a tail: ZeroExponentUnrepresentable.
LaurentTail tail_pow(const LaurentTail& h, unsigned y);

/// Coefficient of z^{-1} in z^x * tail, i.e. s_x.
/// Throws TruncationTooShort if x > K.
Rational res(const LaurentTail& a, int x);

} // namespace ra
