#include <doctest.h>

#include <set>

#include "ncolor/combicore.hpp"
#include "ncolor/errors.hpp"
#include "ncolor/notation.hpp"
#include "oracles.hpp"

using namespace ncolor;

namespace {

std::vector<std::string> texts(CompositionStream s)
{
    std::vector<std::string> out;
    for (const auto& c : s)
        out.push_back(format(c));
    return out;
}

} // namespace

TEST_CASE("part and composition invariants")
{
    CHECK_THROWS_AS(Part(0), DomainError);
    CHECK_THROWS_AS(Part(3, 4), DomainError);
    CHECK_THROWS_AS(Part(3, 0), DomainError);
    CHECK_NOTHROW(Part(3, 3));
    CHECK_THROWS_AS(ColoredComposition({}), DomainError);
    CHECK(parseComposition("3_2+4+1").total() == 8);
    CHECK_THROWS_AS(SpotPairPart(1, 1, 1), DomainError);
    CHECK_THROWS_AS(SpotPairPart(4, 3, 2), DomainError);
}

TEST_CASE("scheme normalization")
{
    CHECK(ColoringScheme::positional(2, 0) == ColoringScheme::even());
    CHECK(ColoringScheme::positional(3, 4) == ColoringScheme::positional(3, 1));
    CHECK(ColoringScheme::positional(3, -1) == ColoringScheme::positional(3, 2));
    CHECK(ColoringScheme::positional(4, 4).get<Positional>()->k == 4);
    CHECK_THROWS_AS(ColoringScheme::positional(0, 1), DomainError);
    CHECK_THROWS_AS(ColoringScheme::restrictColors(1, 0), DomainError);
    CHECK_THROWS_AS(ColoringScheme::restrictColors(2, -1), DomainError);
}

TEST_CASE("validate")
{
    CHECK(validate(parseComposition("3_2+4+1+2_1+3+6+1_1"), ColoringScheme::positional(3, 1)));
    CHECK(validate(parseComposition("1"), ColoringScheme::even()));
    CHECK_FALSE(validate(parseComposition("1+2_2"), ColoringScheme::restrictColors(2, 0)));

    CHECK_FALSE(validate(parseComposition("1_1"), ColoringScheme::even()));
    CHECK_FALSE(validate(parseComposition("1+2"), ColoringScheme::even()));
    CHECK(validate(parseComposition("1_1+2_1+4_3"), ColoringScheme::restrictColors(2, 0)));
    CHECK_FALSE(validate(parseComposition("1+2_1"), ColoringScheme::restrictColors(2, 0)));
    CHECK_FALSE(validate(parseComposition("3_3"), ColoringScheme::chooseTwo()));
}

TEST_CASE("enumerate: documented examples and order")
{
    CHECK(texts(enumerate(ColoringScheme::positional(1, 1), 3)) ==
          std::vector<std::string>{"1_1+1_1+1_1", "1_1+2_1", "1_1+2_2", "2_1+1_1", "2_2+1_1", "3_1", "3_2", "3_3"});
    CHECK(texts(enumerate(ColoringScheme::positional(4, 4), 3)) ==
          std::vector<std::string>{"1+1+1", "1+2", "2+1", "3"});

    auto even3 = texts(enumerate(ColoringScheme::even(), 3));
    CHECK(std::set<std::string>(even3.begin(), even3.end()) ==
          std::set<std::string>{"3", "2+1_1", "1+2_1", "1+2_2", "1+1_1+1"});
    CHECK(even3 == std::vector<std::string>{"1+1_1+1", "1+2_1", "1+2_2", "2+1_1", "3"});

    CHECK(texts(enumerate(ColoringScheme::restrictColors(2, 0), 2)) ==
          std::vector<std::string>{"1_1+1_1", "2_1"});
    CHECK_THROWS_AS(enumerate(ColoringScheme::chooseTwo(), 3), DomainError);
    CHECK_THROWS_AS(enumerate(ColoringScheme::even(), 0), DomainError);
}

TEST_CASE("countDP examples")
{
    CHECK(countDP(ColoringScheme::even(), 5) == 28);
    CHECK(countDP(ColoringScheme::odd(), 5) == 37);
    CHECK(countDP(ColoringScheme::chooseTwo(), 3) == 3);
    CHECK(countDP(ColoringScheme::chooseTwo(), 1) == 0);
    // EVEN counts pass 2^64 well before n = 60
    CHECK(countDP(ColoringScheme::even(), 60) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("countDP agrees with the brute-force oracle")
{
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        for (int m = 1; m <= 4; ++m)
            for (int k = 1; k <= m; ++k)
                CHECK(countDP(ColoringScheme::positional(m, k), n) == oracle::positional(m, k, n));
        for (auto [lo, d] : {std::pair{2, 0}, {2, 1}, {3, 0}, {3, 2}, {5, 1}})
            CHECK(countDP(ColoringScheme::restrictColors(lo, d), n) == oracle::restricted(lo, d, n));
        CHECK(countDP(ColoringScheme::chooseTwo(), n) == oracle::chooseTwo(n));
    }
}

TEST_CASE("enumeration length, validity and uniqueness")
{
    std::vector<ColoringScheme> schemes;
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= m; ++k)
            schemes.push_back(ColoringScheme::positional(m, k));
    schemes.push_back(ColoringScheme::restrictColors(2, 0));
    schemes.push_back(ColoringScheme::restrictColors(3, 1));

    for (const auto& scheme : schemes) {
        for (int n = 1; n <= 9; ++n) {
            CAPTURE(scheme.describe());
            CAPTURE(n);
            std::size_t count = 0;
            std::optional<ColoredComposition> prev;
            bool ordered = true, valid = true;
            for (const auto& c : enumerate(scheme, n)) {
                ++count;
                valid = valid && validate(c, scheme) && c.total() == n;
                if (prev) {
                    auto a = prev->sizes(), b = c.sizes();
                    ordered = ordered && (a < b || (a == b && *prev < c));
                }
                prev = c;
            }
            CHECK(valid);
            CHECK(ordered);
            CHECK(BigInt(count) == countDP(scheme, n));
        }
    }
}

TEST_CASE("k-normalization leaves counts unchanged")
{
    for (int m = 1; m <= 5; ++m)
        for (int k = 0; k <= m; ++k)
            for (int n = 1; n <= 12; ++n)
                CHECK(countDP(ColoringScheme::positional(m, k), n) ==
                      countDP(ColoringScheme::positional(m, k + m), n));
}

TEST_CASE("enumerateChooseTwo")
{
    auto all = [](int n) {
        std::vector<std::string> out;
        for (const auto& c : enumerateChooseTwo(n))
            out.push_back(format(c));
        return out;
    };
    CHECK(all(2) == std::vector<std::string>{"2_{1,2}"});
    CHECK(all(3) == std::vector<std::string>{"3_{1,2}", "3_{1,3}", "3_{2,3}"});
    auto four = all(4);
    CHECK(four.size() == 7);
    CHECK(four.front() == "2_{1,2}+2_{1,2}");
    for (int n = 2; n <= 12; ++n)
        CHECK(BigInt(drainCount(enumerateChooseTwo(n))) == countDP(ColoringScheme::chooseTwo(), n));
    CHECK_THROWS_AS(enumerateChooseTwo(1), DomainError);
}

TEST_CASE("compositionsOf")
{
    CHECK(compositionsOf(3) == std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    CHECK(compositionsOf(10).size() == 512);
}

TEST_CASE("spotted tilings")
{
    auto t31 = toTiling(parseComposition("3_1"));
    REQUIRE(t31.tiles.size() == 1);
    CHECK(t31.tiles[0] == Tile(3, {1}));
    CHECK(toTiling(parseComposition("3_3")).tiles[0] == Tile(3, {3}));
    CHECK(toTiling(parseComposition("4")).tiles[0] == Tile(4, {}));
    CHECK(toTiling(parseComposition("3_3+4"), SpotConvention::SpotAtCellOne).tiles[1] == Tile(4, {1}));

    CHECK(renderTiling(SpottedTiling{{Tile(3, {1})}}) == "|[*][ ][ ]|");
    CHECK(renderTiling(SpottedTiling{{Tile(1, {}), Tile(2, {2})}}) == "|[ ]|[ ][*]|");
    CHECK_THROWS_WITH_AS(renderTiling(SpottedTiling{}), "empty", DomainError);

    CHECK_THROWS_AS(Tile(3, {4}), DomainError);
    CHECK_THROWS_AS(Tile(3, {2, 2}), DomainError);
    CHECK_THROWS_AS(Tile(3, {1, 2, 3}), DomainError);

    // spot on a position the scheme leaves uncolored
    CHECK_THROWS_AS(fromTiling(SpottedTiling{{Tile(2, {1})}}, ColoringScheme::even()), DomainError);
    CHECK_THROWS_AS(fromTiling(SpottedTiling{{Tile(2, {}), Tile(2, {2}), Tile(1, {1})}},
                               ColoringScheme::odd(), SpotConvention::SpotAtCellOne),
                    DomainError);
    CHECK(fromTiling(SpottedTiling{{Tile(2, {2}), Tile(2, {1})}}, ColoringScheme::odd(),
                     SpotConvention::SpotAtCellOne) == parseComposition("2_2+2"));

    auto ct = toTiling(parseChooseTwo("7_{3,4}+10_{5,7}"));
    CHECK(renderTiling(ct) == "|[ ][ ][*][*][ ][ ][ ]|[ ][ ][ ][ ][*][ ][*][ ][ ][ ]|");
    CHECK(format(chooseTwoFromTiling(ct)) == "7_{3,4}+10_{5,7}");
}

TEST_CASE("tiling roundtrip over enumerations")
{
    const ColoringScheme schemes[] = {ColoringScheme::even(), ColoringScheme::odd(),
                                      ColoringScheme::positional(3, 2),
                                      ColoringScheme::restrictColors(2, 0)};
    for (const auto& scheme : schemes) {
        for (int n = 1; n <= 10; ++n) {
            bool ok = true;
            for (const auto& c : enumerate(scheme, n)) {
                ok = ok && fromTiling(toTiling(c), scheme) == c;
                if (scheme.get<Positional>())
                    ok = ok && fromTiling(toTiling(c, SpotConvention::SpotAtCellOne), scheme,
                                          SpotConvention::SpotAtCellOne) == c;
            }
            CHECK(ok);
        }
    }
}
