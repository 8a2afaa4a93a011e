#include <doctest.h>

#include "ncolor/combicore.hpp"
#include "ncolor/series.hpp"
#include "oracles.hpp"

using namespace ncolor;

TEST_CASE("polynomial arithmetic and formatting")
{
    IntPolynomial p{1, -3, 2, -1};
    CHECK(p.str() == "1 - 3x + 2x^2 - x^3");
    CHECK(p.degree() == 3);
    CHECK(IntPolynomial{}.str() == "0");
    CHECK((IntPolynomial{0, 0, 0}.isZero()));
    CHECK((IntPolynomial::oneMinusX().pow(2) == IntPolynomial{1, -2, 1}));
    CHECK(IntPolynomial::x().shift(2) == IntPolynomial::monomial(3));
    CHECK(((IntPolynomial{1, 1} * IntPolynomial{1, -1}) == IntPolynomial{1, 0, -1}));
    CHECK(((IntPolynomial{1, 2} - IntPolynomial{1, 2}).isZero()));
    CHECK((IntPolynomial{4, -6, 2}.content() == 2));
    CHECK((IntPolynomial{4, -6, 2}.divExact(2) == IntPolynomial{2, -3, 1}));
    CHECK_THROWS_AS((IntPolynomial{4, -6, 3}.divExact(2)), DomainError);
}

TEST_CASE("rational generating functions normalize and compare")
{
    RationalGF a(IntPolynomial{2}, IntPolynomial{2, -2});
    RationalGF b(IntPolynomial{1}, IntPolynomial{1, -1});
    CHECK(a == b);
    CHECK(a.denominator() == IntPolynomial{1, -1});
    RationalGF neg(IntPolynomial{-1}, IntPolynomial{-1, 1});
    CHECK(neg.numerator() == IntPolynomial{1});
    CHECK_THROWS_AS((RationalGF(IntPolynomial{1}, IntPolynomial{})), DomainError);
    CHECK(gfEven().str() == "(x - x^2 + x^3) / (1 - 3x + 2x^2 - x^3)");
    CHECK(gfOdd().str() == "(x) / (1 - 3x + 2x^2 - x^3)");
}

TEST_CASE("composition GF algebra reproduces EVEN and ODD")
{
    RationalGF one(IntPolynomial{1}, IntPolynomial{1});
    RationalGF U = gfUncoloredPart(), C = gfColoredPart();
    RationalGF pair = U * C;
    RationalGF seq = one / (one + RationalGF(-pair.numerator(), pair.denominator()));
    CHECK(U * seq + U * seq * C == gfEven());
    CHECK(C * seq + C * seq * U == gfOdd());
    CHECK(gfEvenOddPartCount() + gfEvenEvenPartCount() == gfEven());
}

TEST_CASE("expansion values")
{
    auto e = expand(gfEven(), 8).positiveTerms();
    CHECK(e == std::vector<BigInt>{1, 2, 5, 12, 28, 65, 151, 351});
    auto o = expand(gfOdd(), 6).positiveTerms();
    CHECK(o == std::vector<BigInt>{1, 3, 7, 16, 37, 86});
    CHECK(expand(gfEven(), 0).coefficients() == std::vector<BigInt>{0});
    CHECK(expand(gfEven(), 30).satisfiesRecurrenceOf(gfEven()));
    CHECK_FALSE((SeriesExpansion({0, 1, 2, 5, 12, 29}).satisfiesRecurrenceOf(gfEven())));
}

TEST_CASE("non-integral expansion is rejected")
{
    RationalGF half(IntPolynomial{1}, IntPolynomial{2, -1});
    try {
        expand(half, 4);
        FAIL("expected NonIntegralSeriesError");
    } catch (const NonIntegralSeriesError& e) {
        CHECK(e.index() == 0);
    }
    RationalGF late(IntPolynomial{0, 0, 1}, IntPolynomial{2, -1});
    try {
        expand(late, 4);
        FAIL("expected NonIntegralSeriesError");
    } catch (const NonIntegralSeriesError& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("part-count parity GFs match enumeration")
{
    auto odd = expand(gfEvenOddPartCount(), 10);
    auto even = expand(gfEvenEvenPartCount(), 10);
    for (int n = 1; n <= 10; ++n) {
        std::size_t oddParts = 0, evenParts = 0;
        for (const auto& c : enumerate(ColoringScheme::even(), n))
            (c.size() % 2 ? oddParts : evenParts)++;
        CHECK(odd[n] == oddParts);
        CHECK(even[n] == evenParts);
    }
}

TEST_CASE("gfMK agrees with DP and the oracle")
{
    CHECK(gfMK(2, 2) == gfEven());
    CHECK(gfMK(2, 0) == gfEven());
    CHECK(gfMK(2, 1) == gfOdd());
    for (int m = 1; m <= 5; ++m) {
        for (int k = 1; k <= m; ++k) {
            auto s = expand(gfMK(m, k), 12);
            for (int n = 1; n <= 12; ++n) {
                CAPTURE(m);
                CAPTURE(k);
                CAPTURE(n);
                CHECK(s[n] == countDP(ColoringScheme::positional(m, k), n));
                if (n <= 9)
                    CHECK(s[n] == oracle::positional(m, k, n));
            }
        }
    }
    CHECK((gfMK(1, 1) == RationalGF(IntPolynomial{0, 1}, IntPolynomial{1, -3, 1})));
}

TEST_CASE("restricted-color recurrence")
{
    for (auto [lo, d] : {std::pair{2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 2}}) {
        auto s = recurrenceRestricted(lo, d, 14);
        CHECK(s[0] == 0);
        for (int n = 1; n <= 14; ++n) {
            CAPTURE(lo);
            CAPTURE(d);
            CAPTURE(n);
            CHECK(s[n] == countDP(ColoringScheme::restrictColors(lo, d), n));
            if (n <= 10)
                CHECK(s[n] == oracle::restricted(lo, d, n));
        }
    }
    CHECK_THROWS_AS(recurrenceRestricted(1, 0, 5), DomainError);
}
