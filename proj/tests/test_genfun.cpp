#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ra/examples.hpp"
#include "ra/genfun.hpp"

using namespace ra;

namespace {

BivariateRational assemble_riordan(const RiordanSpec& spec) {
    const DifferenceEquation eq = equation_of(spec);
    const InitialData init = riordan_initial_data(spec, std::max(eq.m() - 1, 0), 0);
    return assemble(eq, spec.d_num, spec.d_den, riordan_columns(spec), init.row0);
}

} // namespace

TEST_CASE("boundary polynomials") {
    const DifferenceEquation ex1 = equation_of(examples::binomial());
    const BivarPoly r1 = boundary_poly(ex1, 0);
    CHECK(r1 == BivarPoly({Poly{}, Poly{1}})); // just w

    const DifferenceEquation ex2 = equation_of(examples::chessboard(2));
    CHECK(boundary_poly(ex2, 1) == BivarPoly({Poly{}, Poly{1}})); // (c_{2,1}w - c_{2,0}) = w
    // R_1 = (c_{1,1}w - c_{1,0}) + (c_{2,1}w - c_{2,0})z = zw - w - 1
    CHECK(boundary_poly(ex2, 0) == BivarPoly({Poly{-1}, Poly{-1, 1}}));

    CHECK_THROWS_AS(boundary_poly(ex2, 2), Error);
    CHECK_THROWS_AS(boundary_poly(ex2, -1), Error);
}

TEST_CASE("assemble reproduces the closed forms") {
    const BivariateRational g1 = assemble_riordan(examples::binomial());
    CHECK(g1.num == BivarPoly({Poly{1}}));
    CHECK(g1.den == BivarPoly({Poly{-1}, Poly{-1, 1}})); // zw - w - 1
    CHECK(to_string(g1) == "1/(z*w - w - 1)");

    const BivariateRational g2 = assemble_riordan(examples::chessboard(2));
    CHECK(g2.num == BivarPoly({Poly{0, 1}}));                   // z
    CHECK(g2.den == BivarPoly({Poly{-1, -1}, Poly{0, -1, 1}})); // z(z-1)w - z - 1
    CHECK(to_string(g2) == "z/(z^2*w - z*w - z - 1)");

    const BivariateRational g3 = assemble_riordan(examples::isolated_strings());
    CHECK(g3.num == BivarPoly({Poly{-1, 1}}));
    CHECK(g3.den == BivarPoly({Poly{1, -1}, Poly{-1, -1, 1}})); // z^2 w - zw - w - z + 1
    CHECK(to_string(g3) == "(z - 1)/(z^2*w - z*w - w - z + 1)");
}

TEST_CASE("assemble with the combinatorial chessboard data keeps the correction") {
    const DifferenceEquation eq = equation_of(examples::chessboard(2));
    // Phi_0 = 0, Phi_1 = 2/w^2, row 0 all ones
    std::vector<ColumnGF> cols;
    cols.emplace_back(0, Poly{}, Poly{0, 1});
    cols.emplace_back(1, Poly{2}, Poly{0, 0, 1});
    const std::vector<Rational> row0{1, 1};
    const BivariateRational gf = assemble(eq, Poly{1}, Poly{-1, 1}, cols, row0);

    // (zw + 1) / (w (z^2-z)w - (z+1)w)
    CHECK(gf.num == BivarPoly({Poly{1}, Poly{0, 1}}));
    CHECK(gf.den == BivarPoly({Poly{}, Poly{-1, -1}, Poly{0, -1, 1}}));

    // its series is exactly the combinatorial table
    const Grid series = series_of(gf, 10, 6);
    const Grid exact = solve(eq, examples::chessboard_combinatorial_data(2, 10, 6), 10, 6);
    CHECK(series == exact);
}

TEST_CASE("column count must match m") {
    const DifferenceEquation eq = equation_of(examples::chessboard(2));
    std::vector<ColumnGF> one;
    one.emplace_back(0, Poly{}, Poly{0, 1});
    CHECK_THROWS_AS(assemble(eq, Poly{1}, Poly{-1, 1}, one, {Rational(1), Rational(1)}), Error);
}

TEST_CASE("table-form columns are rejected as non-rational input") {
    const auto spec = examples::chessboard(2);
    const InitialData init = riordan_initial_data(spec, 4, 4);
    try {
        assemble(equation_of(spec), spec.d_num, spec.d_den, init);
        FAIL("expected NonRationalInput");
    } catch (const Error& e) {
        CHECK(e.name() == "NonRationalInput");
    }
}

TEST_CASE("column series invariants") {
    CHECK_THROWS_AS(ColumnGF(0, Poly{1}, Poly{}), Error);        // V = 0
    CHECK_THROWS_AS(ColumnGF(0, Poly{1, 1}, Poly{0, 1}), Error); // deg U >= deg V
    CHECK_THROWS_AS(ColumnGF(0, Poly{1}, Poly{0, 1}), Error);    // w^{-1} term present
    CHECK_NOTHROW(ColumnGF(1, Poly{1}, Poly{0, 0, 1}));          // 1/w^2 is fine
}

TEST_CASE("correction probe") {
    for (const auto& spec : {examples::binomial(), examples::chessboard(2), examples::isolated_strings()})
        CHECK(correction_is_zero(equation_of(spec), spec, 8));

    // injecting phi(0,1) = 1 into the binomial data leaves a surviving term
    const auto spec = examples::binomial();
    InitialData init = riordan_initial_data(spec, 8, 8);
    init.cols[0][0] = 1;
    CHECK_FALSE(correction_is_zero(equation_of(spec), init, 8));

    // the combinatorial chessboard data is not Riordan data
    CHECK_FALSE(correction_is_zero(equation_of(examples::chessboard(2)),
                                   examples::chessboard_combinatorial_data(2, 4, 8), 8));
}

TEST_CASE("series extraction") {
    const BivariateRational pascal = assemble_riordan(examples::binomial());
    CHECK(series_of(pascal, 5, 3) == oracles::pascal_table(5, 3));

    const BivariateRational iso = assemble_riordan(examples::isolated_strings());
    const Grid row = series_of(iso, 6, 0);
    const auto fib = oracles::fibonacci_row(6);
    for (int x = 0; x <= 6; ++x) CHECK(row[0][static_cast<size_t>(x)] == Rational(fib[static_cast<size_t>(x)]));

    // linearity: scaling the numerator scales the series
    const BivariateRational scaled(BivarPoly({Poly{-3, 3}}), iso.den);
    const Grid s1 = series_of(scaled, 6, 4);
    const Grid s0 = series_of(iso, 6, 4);
    for (size_t y = 0; y < s1.size(); ++y)
        for (size_t x = 0; x < s1[y].size(); ++x) CHECK(s1[y][x] == 3 * s0[y][x]);
}

TEST_CASE("unsupported denominators") {
    // w-degree 2 above the lowest power: (Pw - Q)^2 is not linear in w
    const auto spec = examples::binomial();
    const BivarPoly pwq({-spec.Q, spec.P});
    const BivariateRational gf(BivarPoly({Poly{1}}), pwq * pwq);
    CHECK_THROWS_AS(series_of(gf, 3, 3), Error);
    try {
        series_of(gf, 3, 3);
    } catch (const Error& e) {
        CHECK(e.name() == "UnsupportedDenominator");
    }
}

TEST_CASE("vanishing correction collapses the GF to P d / (Pw - Q)") {
    auto reduced_form = [](const RiordanSpec& spec) {
        const BivarPoly pwq({-spec.Q, spec.P});
        return BivariateRational(BivarPoly::from_z(spec.P * spec.d_num),
                                 BivarPoly::from_z(spec.d_den) * pwq);
    };
    std::mt19937 rng(77);
    std::vector<RiordanSpec> specs{examples::binomial(), examples::chessboard(2),
                                   examples::isolated_strings()};
    for (int i = 0; i < 10; ++i) specs.push_back(oracles::random_spec(rng));
    for (const auto& spec : specs) {
        REQUIRE(correction_is_zero(equation_of(spec), spec, 8));
        const BivariateRational full = assemble_riordan(spec);
        const BivariateRational reduced = reduced_form(spec);
        CHECK(full.num == reduced.num);
        CHECK(full.den == reduced.den);
    }
}

TEST_CASE("d = 0 yields the zero array through every route") {
    const RiordanSpec zero{Poly{}, Poly{-1, 1}, Poly{-1, 1}, Poly{1}};
    REQUIRE(validate(zero).ok());
    const Grid a = table(zero, 6, 4);
    const Grid b = solve(equation_of(zero), riordan_initial_data(zero, 6, 4), 6, 4);
    const Grid c = series_of(assemble_riordan(zero), 6, 4);
    CHECK(a == b);
    CHECK(a == c);
    for (const auto& row : a)
        for (const auto& v : row) CHECK(v == 0);
}

TEST_CASE("round trip through all three routes") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 8; ++iter) {
        const RiordanSpec spec = oracles::random_spec(rng);
        const DifferenceEquation eq = equation_of(spec);
        const Grid a = table(spec, 15, 8);
        const Grid b = solve(eq, riordan_initial_data(spec, 15, 8), 15, 8);
        const Grid c = series_of(assemble_riordan(spec), 15, 8);
        CHECK(a == b);
        CHECK(a == c);
    }
}

TEST_CASE("identity num == den * series on the window") {
    // den * D(z,w) must reproduce num on the nonnegative monomials
    const auto spec = examples::isolated_strings();
    const BivariateRational gf = assemble_riordan(spec);
    const int X = 12, Y = 8;
    const Grid r = series_of(gf, X, Y);
    const int dz = gf.den.degz(), dw = gf.den.degw();
    for (int u = -(X - dz); u <= gf.num.degz(); ++u) {
        for (int v = -(Y - dw); v <= gf.num.degw(); ++v) {
            Rational acc(0);
            for (int a = 0; a <= dz; ++a)
                for (int b = 0; b <= dw; ++b) {
                    const int x = a - u - 1, y = b - v - 1;
                    if (x < 0 || y < 0 || x > X || y > Y) continue;
                    acc += gf.den.coeff(a, b) * r[static_cast<size_t>(y)][static_cast<size_t>(x)];
                }
            const Rational expected =
                (u >= 0 && v >= 0) ? gf.num.coeff(u, v) : Rational(0);
            CHECK(acc == expected);
        }
    }
}
