// bijections.cpp

#include "ncolor/bijections.hpp"

#include "ncolor/errors.hpp"

namespace ncolor {

namespace {

void require(const ColoredComposition& comp, const ColoringScheme& scheme, const char* what)
{
    if (!validate(comp, scheme))
        throw DomainError(std::string(what) + ": input is not a valid " + scheme.describe() +
                          " composition");
}

} // namespace

// ----------------------------------------------------------------------------
// colors avoiding 2 <-> EVEN
// ----------------------------------------------------------------------------

ColoredComposition color2ToEven(const ColoredComposition& comp)
{
    require(comp, ColoringScheme::restrictColors(2, 0), "color2ToEven");
    std::vector<Part> out;
    for (const auto& p : comp.parts()) {
        const int c = *p.color;
        const bool oddPosition = out.size() % 2 == 0;
        if (!oddPosition) {
            out.push_back(p);
        } else if (c == 1) {
            out.emplace_back(p.size);
        } else {
            out.emplace_back(c - 2);
            out.emplace_back(p.size - c + 2, 2);
        }
    }
    return ColoredComposition(std::move(out));
}

ColoredComposition evenToColor2(const ColoredComposition& comp)
{
    require(comp, ColoringScheme::even(), "evenToColor2");
    const auto& parts = comp.parts();
    std::vector<Part> out;
    for (std::size_t i = 0; i < parts.size(); i += 2) {
        const int p = parts[i].size;
        if (i + 1 == parts.size()) {
            out.emplace_back(p, 1);
            break;
        }
        const Part& q = parts[i + 1];
        if (q.color == 2) {
            out.emplace_back(p + q.size, p + 2);
        } else {
            out.emplace_back(p, 1);
            out.push_back(q);
        }
    }
    return ColoredComposition(std::move(out));
}

// ----------------------------------------------------------------------------
// ODD <-> (n choose 2)-color
// ----------------------------------------------------------------------------

ChooseTwoComposition oddToChooseTwo(const ColoredComposition& comp)
{
    std::vector<Part> plain = comp.parts();
    for (std::size_t i = 1; i < plain.size(); i += 2)
        if (plain[i].color == 1)
            plain[i].color.reset();
    require(ColoredComposition(plain), ColoringScheme::odd(), "oddToChooseTwo");

    SpottedTiling t = toTiling(ColoredComposition(plain), SpotConvention::SpotAtCellOne);
    if (t.tiles.size() % 2 == 1)
        t.tiles.emplace_back(1, std::vector<int>{1});
    else
        t.tiles.back().length += 1;

    std::vector<SpotPairPart> out;
    for (std::size_t i = 0; i < t.tiles.size(); i += 2) {
        const Tile& left = t.tiles[i];
        const Tile& right = t.tiles[i + 1];
        out.emplace_back(left.length + right.length, left.spots[0],
                         left.length + right.spots[0]);
    }
    return ChooseTwoComposition(std::move(out));
}

ColoredComposition chooseTwoToOdd(const ChooseTwoComposition& comp)
{
    std::vector<Part> out;
    for (const auto& p : comp.parts()) {
        out.emplace_back(p.second - 1, p.first);
        out.emplace_back(p.size - p.second + 1);
    }
    // drop the final cell: a lone last cell is the appended spotted tile
    if (out.back().size == 1)
        out.pop_back();
    else
        out.back().size -= 1;
    return ColoredComposition(std::move(out));
}

// ----------------------------------------------------------------------------
// EVEN <-> ternary strings
// ----------------------------------------------------------------------------

TernaryString evenToTernary(const ColoredComposition& comp)
{
    require(comp, ColoringScheme::even(), "evenToTernary");
    const auto& parts = comp.parts();
    std::string out;
    out.reserve(comp.total());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Part& p = parts[i];
        if (i % 2 == 0) {
            out.append(p.size - 1, '1');
            if (i + 1 == parts.size())
                out += '1';
        } else {
            // the line opening the part is counted here, not by the odd part
            out.append(*p.color, '0');
            out.append(p.size - *p.color + 1, '2');
        }
    }
    return TernaryString(std::move(out));
}

ColoredComposition ternaryToEven(const TernaryString& s)
{
    if (s.size() == 0)
        throw ParseError("empty ternary string", 0);
    if (auto v = ternaryViolation(s, TernaryBoundary::EvenImage))
        throw ParseError(v->second, v->first);

    const std::string& d = s.str();
    const std::size_t n = d.size();
    std::vector<Part> out;
    std::size_t i = 0;
    while (true) {
        int ones = 0;
        while (i < n && d[i] == '1') {
            ++ones;
            ++i;
        }
        if (i == n) {
            if (ones > 0)
                out.emplace_back(ones);
            break;
        }
        out.emplace_back(ones + 1);
        int zeros = 0;
        while (i < n && d[i] == '0') {
            ++zeros;
            ++i;
        }
        int twos = 0;
        while (i < n && d[i] == '2') {
            ++twos;
            ++i;
        }
        out.emplace_back(zeros + twos - 1, zeros);
    }
    return ColoredComposition(std::move(out));
}

// ----------------------------------------------------------------------------
// binary strings
// ----------------------------------------------------------------------------

std::string Skeleton::str() const
{
    std::string out;
    for (int s : sizes) {
        if (!out.empty())
            out += '+';
        out += std::to_string(s);
    }
    return out;
}

std::string Skeleton::templated() const
{
    static const char* const kNames[] = {"i", "j", "k", "l", "m", "n", "p",
                                         "q", "r", "s", "t", "u", "v", "w"};
    constexpr std::size_t kNameCount = sizeof(kNames) / sizeof(kNames[0]);
    std::string body;
    std::vector<std::string> bounds;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (!body.empty())
            body += '+';
        body += std::to_string(sizes[i]);
        const bool colored = static_cast<int>(i % 2) == (coloredParity == 1 ? 0 : 1);
        if (colored) {
            std::string name = bounds.size() < kNameCount
                                   ? std::string(kNames[bounds.size()])
                                   : "c" + std::to_string(bounds.size() + 1);
            body += '_' + name;
            bounds.push_back("1<=" + name + "<=" + std::to_string(sizes[i]));
        }
    }
    if (bounds.empty())
        return body;
    std::string where;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (i)
            where += " and ";
        where += bounds[i];
    }
    return body + " where " + where;
}

namespace {

// Maximal runs of equal digits; `first` is the digit of the first run.
std::vector<int> runLengths(const std::string& d)
{
    std::vector<int> runs;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i == 0 || d[i] != d[i - 1])
            runs.push_back(0);
        ++runs.back();
    }
    return runs;
}

Skeleton readRuns(const std::string& d, int coloredParity)
{
    Skeleton sk;
    sk.sizes = runLengths(d);
    sk.coloredParity = coloredParity;
    sk.multiplicity = 1;
    for (std::size_t i = 0; i < sk.sizes.size(); ++i) {
        const bool colored = static_cast<int>(i % 2) == (coloredParity == 1 ? 0 : 1);
        if (colored)
            sk.multiplicity *= sk.sizes[i];
    }
    return sk;
}

std::string runsToDigits(const std::vector<int>& sizes, char first)
{
    std::string out;
    char c = first;
    for (int s : sizes) {
        out.append(s, c);
        c = c == '0' ? '1' : '0';
    }
    return out;
}

} // namespace

BinaryString compToBinary(const ColoredComposition& comp)
{
    require(comp, ColoringScheme::even(), "compToBinary");
    return BinaryString(runsToDigits(comp.sizes(), '0').substr(1));
}

Skeleton binaryToSkeleton(const BinaryString& s)
{
    return readRuns("0" + s.str(), 2);
}

Skeleton oddBinaryVariant(const BinaryString& s, OddBinaryReading reading)
{
    if (reading == OddBinaryReading::PrependOne)
        return readRuns("1" + s.str(), 1);
    if (s.size() == 0 || s.str().front() != '1')
        throw DomainError("the ODD binary reading needs a string starting with 1");
    return readRuns(s.str(), 1);
}

BinaryString oddCompToBinary(const ColoredComposition& comp)
{
    require(comp, ColoringScheme::odd(), "oddCompToBinary");
    return BinaryString(runsToDigits(comp.sizes(), '1'));
}

std::vector<ColoredComposition> skeletonFiber(const Skeleton& sk)
{
    if (sk.sizes.empty())
        return {};
    const auto scheme = ColoringScheme::positional(2, sk.coloredParity);
    const auto* pos = scheme.get<Positional>();
    std::vector<std::size_t> coloredIdx;
    std::vector<int> colors(sk.sizes.size(), 0);
    for (std::size_t i = 0; i < sk.sizes.size(); ++i) {
        if (pos->coloredAt(i + 1)) {
            coloredIdx.push_back(i);
            colors[i] = 1;
        }
    }

    std::vector<ColoredComposition> out;
    while (true) {
        std::vector<Part> parts;
        for (std::size_t i = 0; i < sk.sizes.size(); ++i)
            parts.emplace_back(sk.sizes[i],
                               colors[i] ? std::optional<int>(colors[i]) : std::nullopt);
        out.emplace_back(std::move(parts));

        bool advanced = false;
        for (std::size_t j = coloredIdx.size(); j-- > 0 && !advanced;) {
            const std::size_t i = coloredIdx[j];
            if (colors[i] < sk.sizes[i]) {
                ++colors[i];
                advanced = true;
            } else {
                colors[i] = 1;
            }
        }
        if (!advanced)
            return out;
    }
}

std::vector<ColoredComposition> binaryFiber(const BinaryString& s)
{
    return skeletonFiber(binaryToSkeleton(s));
}

// ----------------------------------------------------------------------------
// permutations
// ----------------------------------------------------------------------------

ColoredComposition permToEven(const Permutation& p)
{
    const BlockDecomposition dec = parseBlocks(p);
    std::vector<Part> out;
    for (const auto& seg : dec.segments) {
        if (const auto* r = std::get_if<Run>(&seg)) {
            out.emplace_back(r->length + 1);
        } else {
            const auto& b = std::get<Block>(seg);
            out.emplace_back(b.a + b.b - 1, b.a);
        }
    }
    if (dec.trailing.length > 0)
        out.emplace_back(dec.trailing.length);
    return ColoredComposition(std::move(out));
}

Permutation evenToPerm(const ColoredComposition& comp)
{
    require(comp, ColoringScheme::even(), "evenToPerm");
    const auto& parts = comp.parts();
    BlockDecomposition dec;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Part& p = parts[i];
        if (i % 2 == 1)
            dec.segments.push_back(Block{*p.color, p.size + 1 - *p.color});
        else if (i + 1 == parts.size())
            dec.trailing = Run{p.size};
        else
            dec.segments.push_back(Run{p.size - 1});
    }
    return dec.toPermutation();
}

// ----------------------------------------------------------------------------
// peeling
// ----------------------------------------------------------------------------

Peeled peelFirst(const ColoredComposition& comp, const ColoringScheme& scheme)
{
    const auto* pos = scheme.get<Positional>();
    if (!pos)
        throw DomainError("peelFirst needs a positional scheme");
    if (pos->k == 1)
        throw DomainError("peelFirst needs the first position uncolored (class k+1 != 1 mod m)");
    require(comp, scheme, "peelFirst");
    if (comp.total() < 2)
        throw DomainError("peelFirst needs a total of at least 2");

    std::vector<Part> parts = comp.parts();
    if (parts.front().size == 1) {
        parts.erase(parts.begin());
        return {Peeled::Branch::Removed, ColoredComposition(std::move(parts)),
                ColoringScheme::positional(pos->m, pos->k - 1)};
    }
    parts.front().size -= 1;
    return {Peeled::Branch::Decremented, ColoredComposition(std::move(parts)), scheme};
}

ColoredComposition unpeel(const Peeled& peeled)
{
    std::vector<Part> parts = peeled.comp.parts();
    const auto* pos = peeled.scheme.get<Positional>();
    if (!pos)
        throw DomainError("unpeel needs a positional scheme");
    if (peeled.branch == Peeled::Branch::Removed) {
        require(peeled.comp, peeled.scheme, "unpeel");
        if (pos->k == pos->m)
            throw DomainError("unpeel: removal never yields class m");
        parts.insert(parts.begin(), Part(1));
    } else {
        if (pos->k == 1)
            throw DomainError("unpeel: decrement branch needs class != 1");
        require(peeled.comp, peeled.scheme, "unpeel");
        parts.front().size += 1;
    }
    return ColoredComposition(std::move(parts));
}

} // namespace ncolor
