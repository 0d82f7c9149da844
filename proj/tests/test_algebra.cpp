#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <limits>

#include "oracles.hpp"
#include "ra/poly.hpp"
#include "ra/roots.hpp"

using namespace ra;

TEST_CASE("rational canonical form and serialization") {
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-3, 7)) == "-3/7");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(rational_from_string("-3/7") == Rational(-3, 7));
    CHECK(rational_from_string("4/2") == Rational(2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("banana"), Error);

    Rational r(-6, 4);
    CHECK(denominator(r) > 0);
    CHECK(gcd(BigInt(abs(numerator(r))), BigInt(denominator(r))) == 1);
}

TEST_CASE("to_double survives numerators beyond double range") {
    const BigInt huge = oracles::binomial(3000, 1500); // ~2^2996
    CHECK(to_double(Rational(huge, huge - 1)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(to_double(Rational(-huge * 3, huge)) == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(to_double(Rational(huge, 1)) == std::numeric_limits<double>::infinity());
    CHECK(to_double(Rational(1, huge)) == 0.0);
}

TEST_CASE("polynomial arithmetic") {
    const Poly zm1{-1, 1}, zp1{1, 1}, z{0, 1};
    CHECK(zm1 * zp1 == Poly{-1, 0, 1});        // (z-1)(z+1) = z^2 - 1
    CHECK(Poly{0, -1, 1} + Poly{} == Poly{0, -1, 1});
    CHECK(zm1 * z == Poly{0, -1, 1});          // z(z-1), the chessboard P
    CHECK((zm1 + zp1) - zp1 == zm1);
    CHECK(Poly{1, 2} * Poly{3, 4} == Poly{3, 4} * Poly{1, 2});
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly{0, 0, 3}.order() == 2);
}

TEST_CASE("derivatives") {
    CHECK(derivative(Poly{-1, -1, 1}) == Poly{-1, 2});  // d/dz (z^2-z-1) = 2z-1
    CHECK(derivative(Poly{9}) == Poly{});
    CHECK(derivative(derivative(Poly{0, -1, 1})) == Poly{2});
    // linearity holds exactly
    const Poly a{1, -2, 0, 5}, b{-3, 7, 2};
    CHECK(derivative(a + b) == derivative(a) + derivative(b));
}

TEST_CASE("evaluation") {
    CHECK(eval(Poly{-1, 1}, Rational(2)) == 1);
    CHECK(eval(Poly{0, -1, 1}, Rational(2)) == 2);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(eval(Poly{-1, -1, 1}, std::complex<double>(golden, 0.0))) < 1e-12);
}

TEST_CASE("roots of the example polynomials") {
    auto r = poly_roots(Poly{-1, -1, 1}); // z^2 - z - 1
    REQUIRE(r.size() == 2);
    std::sort(r.begin(), r.end(), [](auto a, auto b) { return a.real() < b.real(); });
    CHECK(r[0].real() == doctest::Approx((1 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(r[1].real() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));

    auto lin = poly_roots(Poly{-1, 1});
    REQUIRE(lin.size() == 1);
    CHECK(std::abs(lin[0] - std::complex<double>(1, 0)) < 1e-12);

    auto fac = poly_roots(Poly{0, -1, 1}); // z(z-1): the zero root is exact
    REQUIRE(fac.size() == 2);
    CHECK(fac[0] == std::complex<double>(0, 0));
    CHECK(std::abs(fac[1] - std::complex<double>(1, 0)) < 1e-12);

    CHECK_THROWS_AS(poly_roots(Poly{}), Error);
    CHECK(poly_roots(Poly{5}).empty());
}

TEST_CASE("root residuals and reconstruction") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Rational> c;
        const int deg = 1 + iter % 6;
        for (int i = 0; i < deg; ++i) c.emplace_back(coeff(rng));
        c.emplace_back(coeff(rng) | 1); // nonzero leading
        Poly p{std::vector<Rational>(c)};
        const auto roots = poly_roots(p);
        CHECK(roots.size() == static_cast<size_t>(p.degree()));

        double maxc = 0;
        for (const auto& q : p.coeffs()) maxc = std::max(maxc, std::abs(to_double(q)));
        for (const auto& r : roots) CHECK(std::abs(eval(p, r)) <= 1e-12 * (1 + maxc));

        // multiply the factors back together
        std::vector<std::complex<double>> rec{to_double(p.leading())};
        for (const auto& r : roots) {
            std::vector<std::complex<double>> next(rec.size() + 1);
            for (size_t i = 0; i < rec.size(); ++i) {
                next[i + 1] += rec[i];
                next[i] -= rec[i] * r;
            }
            rec = std::move(next);
        }
        for (int k = 0; k <= p.degree(); ++k)
            CHECK(std::abs(rec[static_cast<size_t>(k)] - to_double(p.coeff(k))) <= 1e-8 * (1 + maxc));
    }
}

TEST_CASE("division and gcd") {
    const Poly a{-1, 0, 1}, b{1, 1};
    auto [q, r] = divmod(a, b);
    CHECK(q == Poly{-1, 1});
    CHECK(r == Poly{});
    CHECK(poly_gcd(a, b) == Poly{1, 1});
    CHECK(poly_gcd(Poly{}, Poly{0, 2}) == Poly{0, 1}); // monic
    CHECK(divexact(a, b) == Poly{-1, 1});
    CHECK_THROWS_AS(divexact(Poly{1, 1, 1}, Poly{1, 1}), Error);
    CHECK(poly_lcm(Poly{-1, 1}, Poly{0, 1}) == Poly{0, -1, 1});
}

TEST_CASE("poly to_string") {
    CHECK(to_string(Poly{-1, -1, 1}) == "z^2 - z - 1");
    CHECK(to_string(Poly{1}) == "1");
    CHECK(to_string(Poly{}) == "0");
    CHECK(to_string(Poly{std::vector<Rational>{Rational(0), Rational(-3, 7)}}) == "-3/7*z");
}
