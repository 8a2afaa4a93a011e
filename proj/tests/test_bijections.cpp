#include <doctest.h>

#include <set>

#include "ncolor/bijections.hpp"
#include "ncolor/notation.hpp"

using namespace ncolor;

namespace {

ColoredComposition C(const char* s) { return parseComposition(s); }

} // namespace

TEST_CASE("color2 <-> EVEN worked example")
{
    CHECK(format(color2ToEven(C("3_3+1_1+6_4+4_4"))) == "1+2_2+1+6_4+2+2_2");
    CHECK(evenToColor2(C("1+2_2+1+6_4+2+2_2")) == C("3_3+1_1+6_4+4_4"));
    CHECK(format(color2ToEven(C("1_1"))) == "1");
    CHECK(format(evenToColor2(C("1"))) == "1_1");
    CHECK_THROWS_AS(color2ToEven(C("2_2")), DomainError);
    CHECK_THROWS_AS(color2ToEven(C("2")), DomainError);
    CHECK_THROWS_AS(evenToColor2(C("2_1")), DomainError);
}

TEST_CASE("color2 <-> EVEN is a bijection")
{
    const auto avoid2 = ColoringScheme::restrictColors(2, 0);
    for (int n = 1; n <= 11; ++n) {
        std::set<ColoredComposition> images;
        bool ok = true;
        for (const auto& c : enumerate(avoid2, n)) {
            auto e = color2ToEven(c);
            ok = ok && validate(e, ColoringScheme::even()) && e.total() == n &&
                 evenToColor2(e) == c;
            images.insert(e);
        }
        CAPTURE(n);
        CHECK(ok);
        CHECK(BigInt(images.size()) == countDP(ColoringScheme::even(), n));
        CHECK(countDP(avoid2, n) == countDP(ColoringScheme::even(), n));
    }
}

TEST_CASE("ODD <-> choose-two worked examples")
{
    CHECK(format(oddToChooseTwo(C("3_3+4_1+6_5+3_1"))) == "7_{3,4}+10_{5,7}");
    CHECK(format(oddToChooseTwo(C("3_3+4+6_5+3"))) == "7_{3,4}+10_{5,7}");
    CHECK(format(oddToChooseTwo(C("4_2+3_1+5_4+2_1+1_1"))) == "7_{2,5}+7_{4,6}+2_{1,2}");
    CHECK(chooseTwoToOdd(parseChooseTwo("7_{3,4}+10_{5,7}")) == C("3_3+4+6_5+3"));
    CHECK(format(chooseTwoToOdd(parseChooseTwo("7_{2,5}+7_{4,6}+2_{1,2}")), true) ==
          "4_2+3_1+5_4+2_1+1_1");
    CHECK(format(oddToChooseTwo(C("1_1"))) == "2_{1,2}");
    CHECK_THROWS_AS(oddToChooseTwo(C("3_3+4_2")), DomainError);
    CHECK_THROWS_AS(oddToChooseTwo(C("3")), DomainError);
}

TEST_CASE("ODD <-> choose-two is a bijection")
{
    for (int n = 1; n <= 10; ++n) {
        std::set<std::string> images;
        bool ok = true;
        for (const auto& c : enumerate(ColoringScheme::odd(), n)) {
            auto t = oddToChooseTwo(c);
            ok = ok && t.total() == n + 1 && chooseTwoToOdd(t) == c;
            images.insert(format(t));
        }
        CAPTURE(n);
        CHECK(ok);
        CHECK(BigInt(images.size()) == countDP(ColoringScheme::chooseTwo(), n + 1));
        CHECK(countDP(ColoringScheme::odd(), n) == countDP(ColoringScheme::chooseTwo(), n + 1));
    }
}

TEST_CASE("EVEN <-> ternary")
{
    CHECK(evenToTernary(C("1+2_2+1+6_4+4")).str() == "00200002221111");
    CHECK(ternaryToEven(TernaryString("00200002221111")) == C("1+2_2+1+6_4+4"));
    CHECK(evenToTernary(C("1+1_1+1")).str() == "021");
    CHECK(ternaryToEven(TernaryString("021")) == C("1+1_1+1"));
    CHECK(evenToTernary(C("1")).str() == "1");
    try {
        ternaryToEven(TernaryString("0012"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(ternaryToEven(TernaryString("200")), ParseError);
    CHECK_THROWS_AS(ternaryToEven(TernaryString("110")), ParseError);
    CHECK_THROWS_AS(ternaryToEven(TernaryString("")), DomainError);

    for (int n = 1; n <= 10; ++n) {
        bool ok = true;
        for (const auto& c : enumerate(ColoringScheme::even(), n)) {
            auto t = evenToTernary(c);
            ok = ok && t.size() == static_cast<std::size_t>(n) &&
                 !ternaryViolation(t, TernaryBoundary::EvenImage) && ternaryToEven(t) == c;
        }
        for (const auto& t : enumerateTernary(static_cast<std::size_t>(n), TernaryBoundary::EvenImage))
            ok = ok && evenToTernary(ternaryToEven(t)) == t;
        CAPTURE(n);
        CHECK(ok);
    }
}

TEST_CASE("binary skeletons")
{
    auto sk = binaryToSkeleton(BinaryString("1101111110000"));
    CHECK(sk.sizes == std::vector<int>{1, 2, 1, 6, 4});
    CHECK(sk.multiplicity == 12);
    CHECK(sk.str() == "1+2+1+6+4");
    CHECK(sk.templated() == "1+2_i+1+6_j+4 where 1<=i<=2 and 1<=j<=6");
    CHECK(compToBinary(C("1+2_1+1+6_5+4")).str() == "1101111110000");
    CHECK(binaryToSkeleton(BinaryString("")).sizes == std::vector<int>{1});
    CHECK(binaryToSkeleton(BinaryString("000")).templated() == "4");

    auto fiber = binaryFiber(BinaryString("1101111110000"));
    CHECK(fiber.size() == 12);
    for (const auto& c : fiber)
        CHECK(compToBinary(c).str() == "1101111110000");

    for (std::size_t k = 0; k <= 10; ++k) {
        BigInt sum = 0;
        for (const auto& s : allBinaryStrings(k))
            sum += binaryToSkeleton(s).multiplicity;
        CHECK(sum == countDP(ColoringScheme::even(), static_cast<int>(k) + 1));
    }
}

TEST_CASE("ODD binary readings")
{
    auto d = oddBinaryVariant(BinaryString("110"));
    CHECK(d.sizes == std::vector<int>{2, 1});
    CHECK(d.multiplicity == 2);
    CHECK(d.coloredParity == 1);
    CHECK(d.templated() == "2_i+1 where 1<=i<=2");
    CHECK_THROWS_AS(oddBinaryVariant(BinaryString("01")), DomainError);
    CHECK(oddBinaryVariant(BinaryString("01"), OddBinaryReading::PrependOne).sizes ==
          std::vector<int>{1, 1, 1});

    for (std::size_t k = 1; k <= 10; ++k) {
        BigInt direct = 0, prepend = 0;
        for (const auto& s : allBinaryStrings(k)) {
            prepend += oddBinaryVariant(s, OddBinaryReading::PrependOne).multiplicity;
            if (s.str()[0] == '1')
                direct += oddBinaryVariant(s).multiplicity;
        }
        CAPTURE(k);
        CHECK(direct == countDP(ColoringScheme::odd(), static_cast<int>(k)));
        CHECK(prepend == countDP(ColoringScheme::odd(), static_cast<int>(k) + 1));
    }

    // Prepending a 1 to strings that already start with 1 overcounts.
    BigInt literal = 0;
    for (const auto& s : allBinaryStrings(2))
        if (s.str()[0] == '1')
            literal += oddBinaryVariant(s, OddBinaryReading::PrependOne).multiplicity;
    CHECK(literal == 5);
    CHECK(countDP(ColoringScheme::odd(), 3) == 7);
    CHECK(countDP(ColoringScheme::odd(), 2) == 3);

    for (int n = 1; n <= 9; ++n) {
        bool ok = true;
        for (const auto& c : enumerate(ColoringScheme::odd(), n)) {
            auto b = oddCompToBinary(c);
            auto fiber = skeletonFiber(oddBinaryVariant(b));
            ok = ok && b.size() == static_cast<std::size_t>(n) &&
                 std::find(fiber.begin(), fiber.end(), c) != fiber.end();
        }
        CHECK(ok);
    }
}

TEST_CASE("permutations <-> EVEN")
{
    auto p = Permutation::parse("1,2,6,7,3,4,5,8,9,10,12,13,11");
    CHECK(format(permToEven(p)) == "3+4_2+4+2_2");
    CHECK(evenToPerm(C("3+4_2+4+2_2")) == p);
    CHECK(evenToPerm(C("1+2_1")) == Permutation({3, 1, 2}));
    CHECK(permToEven(Permutation({2, 3, 1})) == C("1+2_2"));
    CHECK(permToEven(Permutation::identity(4)) == C("4"));
    CHECK_THROWS_AS(permToEven(Permutation({3, 2, 1})), BlockParseError);
    CHECK_THROWS_AS(evenToPerm(C("1_1")), DomainError);

    for (int k = 1; k <= 8; ++k) {
        std::set<ColoredComposition> images;
        bool ok = true;
        for (const auto& q : enumeratePermutations321Sep(k)) {
            auto e = permToEven(q);
            ok = ok && validate(e, ColoringScheme::even()) && e.total() == k && evenToPerm(e) == q;
            images.insert(e);
        }
        CAPTURE(k);
        CHECK(ok);
        CHECK(BigInt(images.size()) == countDP(ColoringScheme::even(), k));
    }
}

TEST_CASE("first-part peeling")
{
    auto even = ColoringScheme::even();
    auto r = peelFirst(C("1+2_2+1"), even);
    CHECK(r.branch == Peeled::Branch::Removed);
    CHECK(r.comp == C("2_2+1"));
    CHECK(r.scheme == ColoringScheme::odd());
    CHECK(unpeel(r) == C("1+2_2+1"));

    auto d = peelFirst(C("3+2_2"), even);
    CHECK(d.branch == Peeled::Branch::Decremented);
    CHECK(d.comp == C("2+2_2"));
    CHECK(d.scheme == even);
    CHECK(unpeel(d) == C("3+2_2"));

    CHECK_THROWS_AS(peelFirst(C("1_1"), ColoringScheme::odd()), DomainError);
    CHECK_THROWS_AS(peelFirst(C("1_1"), even), DomainError);

    for (int m = 2; m <= 4; ++m) {
        for (int K = 2; K <= m; ++K) {
            auto scheme = ColoringScheme::positional(m, K);
            for (int n = 2; n <= 9; ++n) {
                std::size_t removed = 0, decremented = 0;
                bool ok = true;
                for (const auto& c : enumerate(scheme, n)) {
                    auto pe = peelFirst(c, scheme);
                    ok = ok && validate(pe.comp, pe.scheme) && pe.comp.total() == n - 1 &&
                         unpeel(pe) == c;
                    (pe.branch == Peeled::Branch::Removed ? removed : decremented)++;
                }
                CAPTURE(m);
                CAPTURE(K);
                CAPTURE(n);
                CHECK(ok);
                CHECK(BigInt(removed) == countDP(ColoringScheme::positional(m, K - 1), n - 1));
                CHECK(BigInt(decremented) == countDP(scheme, n - 1));
            }
        }
    }
}
