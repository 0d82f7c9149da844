#pragma once

#include <string>
#include <vector>

#include "ra/cauchy.hpp"
#include "ra/grid.hpp"
#include "ra/poly.hpp"

namespace ra {

/// Dense bivariate polynomial over the rationals, stored as one z-polynomial
/// per w-power.  Degrees here stay tiny (z-degree around deg P + deg dDen,
/// w-degree <= 2 after normalization).
class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(std::vector<Poly> wblocks) : w_(std::move(wblocks)) { strip(); }
    static BivarPoly from_z(const Poly& p);
    /// v(w) with constant-in-z coefficients.
    static BivarPoly from_w(const Poly& v);

    bool is_zero() const { return w_.empty(); }
    int degw() const { return static_cast<int>(w_.size()) - 1; }
    int degz() const;
    /// Lowest w-power with a nonzero block; -1 for zero.
    int orderw() const;
    const Poly& wcoeff(int beta) const;
    const Rational& coeff(int alpha, int beta) const { return wcoeff(beta).coeff(alpha); }

    bool operator==(const BivarPoly& o) const { return w_ == o.w_; }

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

    /// Divide every block by w^k (all blocks below k must be zero).
    BivarPoly shifted_down(int k) const;

private:
    void strip() {
        while (!w_.empty() && w_.back().is_zero()) w_.pop_back();
    }
    std::vector<Poly> w_; // w_[beta] = z-polynomial at w^beta
};

/// N(z,w)/D(z,w), normalized on construction: common w^k and univariate
/// (pure-z / pure-w) polynomial factors cancelled, coefficients scaled to
/// coprime integers jointly, denominator sign fixed.
struct BivariateRational {
    BivariateRational(BivarPoly n, BivarPoly d);
    BivarPoly num;
    BivarPoly den;
};

/// Phi_k(w) = U(w)/V(w), the generating function of column k of the initial
/// data (y >= 1 only, so the expansion at infinity has no w^{-1} term).
struct ColumnGF {
    ColumnGF(int k, Poly U, Poly V);
    int k;
    Poly U;
    Poly V;
};

/// R_{k+1}(z,w) = sum_{a=k+1..m} (c_{a,1} w - c_{a,0}) z^{a-k-1}.
BivarPoly boundary_poly(const DifferenceEquation& eq, int k);

/// The exact column generating functions of Riordan initial data:
/// phi(k,y) vanishes for y > k, so Phi_k = U_k(w)/w^{k+1} is always rational.
std::vector<ColumnGF> riordan_columns(const RiordanSpec& spec);

/// Closed-form assembly over the common denominator
/// dDen(z) * lcm(V_k)(w) * w * (P(z)w - Q(z)), then normalized.
/// row0 supplies phi(x,0) for the correction term (x <= deg Q - 1 used).
BivariateRational assemble(const DifferenceEquation& eq, const Poly& d_num, const Poly& d_den,
                           const std::vector<ColumnGF>& cols, const std::vector<Rational>& row0);

/// Finite-table column series carry no tail information, so they cannot be
/// assembled into a rational function (Corollary); always throws
/// NonRationalInput.  Tables feed the truncated probe below instead.
BivariateRational assemble(const DifferenceEquation& eq, const Poly& d_num, const Poly& d_den,
                           const InitialData& tables);

/// Probes the Remark identity sum R_{k+1} Phi_k - (1/w) sum c_{a,0} phi(x,0) z^{x-a+1} = 0
/// on the truncated data, as a w-tail with polynomial-in-z coefficients,
/// checked exactly through w^{-Ymax}.
bool correction_is_zero(const DifferenceEquation& eq, const InitialData& init, int Ymax);
bool correction_is_zero(const DifferenceEquation& eq, const RiordanSpec& spec, int Ymax);

/// Coefficient grid r(x,y) of a GF whose denominator is B(z) * w^k * (P1(z)w + P0(z));
/// anything not linear in w after clearing the w^k factor is UnsupportedDenominator.
Grid series_of(const BivariateRational& gf, int xmax, int ymax);

/// "(z - 1)/(z^2*w - z*w - w - z + 1)"
std::string to_string(const BivariateRational& gf);
std::string to_string(const BivarPoly& p);

} // namespace ra
