#include "ra/cauchy.hpp"

namespace ra {

WellPosedness well_posed(const DifferenceEquation& eq) {
    WellPosedness wp;
    const int m = eq.m();
    if (eq.P.is_zero() || m < 1) {
        wp.report.push_back("P must have degree >= 1 so that (m,1) is a Newton polygon vertex");
        return wp;
    }
    wp.report.push_back("support of R(z,w) = P(z)w - Q(z) has beta <= 1 by construction");
    if (eq.Q.degree() > m) {
        wp.report.push_back("Newton polygon leaves the box Pi_(m,1): deg Q = " +
                            std::to_string(eq.Q.degree()) + " > m = " + std::to_string(m));
        return wp;
    }
    wp.report.push_back("support alpha <= m = " + std::to_string(m) + " holds, c_{m,1} != 0, so N_R lies in Pi_(m,1) with vertex (m,1)");
    wp.report.push_back("for R = P(z)w - Q(z) this is exactly the type invariants of the equation");
    wp.ok = true;
    return wp;
}

int InitialData::ymax() const {
    if (cols.empty()) return 0;
    return static_cast<int>(cols.front().size());
}

const Rational& InitialData::phi(int x, int y) const {
    if (y == 0) {
        if (x < 0 || x > xmax())
            fail("InsufficientInitialData", "phi(" + std::to_string(x) + ",0) outside the supplied row");
        return row0[static_cast<size_t>(x)];
    }
    if (x < 0 || x >= static_cast<int>(cols.size()) || y < 1 ||
        y > static_cast<int>(cols[static_cast<size_t>(x)].size()))
        fail("InsufficientInitialData",
             "phi(" + std::to_string(x) + "," + std::to_string(y) + ") outside the supplied columns");
    return cols[static_cast<size_t>(x)][static_cast<size_t>(y - 1)];
}

InitialData riordan_initial_data(const RiordanSpec& spec, int Xmax, int Ymax) {
    require_valid(spec);
    const int m = spec.P.degree();
    InitialData init;

    LaurentTail d = expand_at_infinity(spec.d_num, spec.d_den, Xmax);
    init.row0.assign(d.coeffs().begin(), d.coeffs().end());

    // columns x = 0..m-1 need res at shifts < m only
    const int K = std::max(m - 1, 0);
    LaurentTail dk = expand_at_infinity(spec.d_num, spec.d_den, K);
    LaurentTail h = expand_at_infinity(spec.Q, spec.P, K);
    init.cols.assign(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(Ymax), Rational(0)));
    LaurentTail dh = dk;
    for (int y = 1; y <= Ymax; ++y) {
        dh = tail_mul(dh, h);
        for (int k = 0; k < m; ++k)
            init.cols[static_cast<size_t>(k)][static_cast<size_t>(y - 1)] = dh[k];
    }
    return init;
}

Grid solve(const DifferenceEquation& eq, const InitialData& init, int xmax, int ymax) {
    auto wp = well_posed(eq);
    if (!wp.ok) fail("IllPosedEquation", wp.report.back());
    const int m = eq.m();
    const Rational lead = eq.P.coeff(m);
    const int dq = eq.Q.degree();

    Grid g = make_grid(xmax, ymax);
    for (int x = 0; x <= xmax; ++x) g[0][static_cast<size_t>(x)] = init.phi(x, 0);
    for (int y = 1; y <= ymax; ++y) {
        auto& row = g[static_cast<size_t>(y)];
        const auto& prev = g[static_cast<size_t>(y - 1)];
        for (int x = 0; x < m && x <= xmax; ++x) row[static_cast<size_t>(x)] = init.phi(x, y);
        for (int x = m; x <= xmax; ++x) {
            Rational acc(0);
            for (int a = 0; a <= dq; ++a) {
                const Rational& q = eq.Q.coeff(a);
                if (q != 0) acc += q * prev[static_cast<size_t>(x - m + a)];
            }
            for (int a = 0; a < m; ++a) {
                const Rational& p = eq.P.coeff(a);
                if (p != 0) acc -= p * row[static_cast<size_t>(x - m + a)];
            }
            row[static_cast<size_t>(x)] = acc / lead;
        }
    }
    return g;
}

Rational residual(const DifferenceEquation& eq, const Grid& r) {
    const int ymax = static_cast<int>(r.size()) - 1;
    const int xmax = ymax >= 0 ? static_cast<int>(r.front().size()) - 1 : -1;
    const int m = eq.m();
    Rational worst(0);
    for (int y = 0; y + 1 <= ymax; ++y) {
        for (int x = 0; x + m <= xmax; ++x) {
            Rational acc(0);
            for (int a = 0; a <= m; ++a) {
                const Rational& p = eq.P.coeff(a);
                if (p != 0) acc += p * r[static_cast<size_t>(y + 1)][static_cast<size_t>(x + a)];
            }
            for (int a = 0; a <= eq.Q.degree(); ++a) {
                const Rational& q = eq.Q.coeff(a);
                if (q != 0) acc -= q * r[static_cast<size_t>(y)][static_cast<size_t>(x + a)];
            }
            Rational mag = rational_abs(acc);
            if (mag > worst) worst = mag;
        }
    }
    return worst;
}

} // namespace ra
