// combicore.cpp

#include "ncolor/combicore.hpp"

#include <algorithm>
#include <numeric>

#include "ncolor/errors.hpp"

namespace ncolor {

// ----------------------------------------------------------------------------
// Value types
// ----------------------------------------------------------------------------

Part::Part(int size, std::optional<int> color) : size(size), color(color)
{
    if (size < 1)
        throw DomainError("part size must be positive, got " + std::to_string(size));
    if (color && (*color < 1 || *color > size))
        throw DomainError("color " + std::to_string(*color) + " out of range 1.." +
                          std::to_string(size));
}

ColoredComposition::ColoredComposition(std::vector<Part> parts) : _parts(std::move(parts))
{
    if (_parts.empty())
        throw DomainError("a composition needs at least one part");
    for (const auto& p : _parts)
        _total += p.size;
}

std::vector<int> ColoredComposition::sizes() const
{
    std::vector<int> out;
    out.reserve(_parts.size());
    for (const auto& p : _parts)
        out.push_back(p.size);
    return out;
}

SpotPairPart::SpotPairPart(int size, int first, int second)
  : size(size), first(first), second(second)
{
    if (size < 2)
        throw DomainError("a spot-pair part needs size >= 2, got " + std::to_string(size));
    if (!(1 <= first && first < second && second <= size))
        throw DomainError("spot pair {" + std::to_string(first) + "," + std::to_string(second) +
                          "} invalid for part of size " + std::to_string(size));
}

ChooseTwoComposition::ChooseTwoComposition(std::vector<SpotPairPart> parts)
  : _parts(std::move(parts))
{
    if (_parts.empty())
        throw DomainError("a composition needs at least one part");
    for (const auto& p : _parts)
        _total += p.size;
}

// ----------------------------------------------------------------------------
// Schemes
// ----------------------------------------------------------------------------

int RestrictColors::colorCount(int size) const
{
    int forbidden = std::max(0, std::min(size, lo + d) - lo + 1);
    return size - forbidden;
}

ColoringScheme ColoringScheme::positional(int m, int k)
{
    if (m < 1)
        throw DomainError("modulus m must be positive, got " + std::to_string(m));
    int r = ((k - 1) % m + m) % m + 1;
    return ColoringScheme(Positional{m, r});
}

ColoringScheme ColoringScheme::restrictColors(int lo, int d)
{
    if (lo < 2)
        throw DomainError("restricted colors must start at 2 or above (color 1 must stay "
                          "available), got lo=" + std::to_string(lo));
    if (d < 0)
        throw DomainError("restricted color span d must be >= 0, got " + std::to_string(d));
    return ColoringScheme(RestrictColors{lo, d});
}

std::string ColoringScheme::describe() const
{
    if (auto p = get<Positional>()) {
        if (p->m == 2)
            return p->k == 2 ? "EVEN (2,0)" : "ODD (2,1)";
        return "positional (" + std::to_string(p->m) + "," + std::to_string(p->k) + ")";
    }
    if (auto r = get<RestrictColors>())
        return "n-color restricting colors " + std::to_string(r->lo) + ".." +
               std::to_string(r->lo + r->d);
    return "(n choose 2)-color";
}

bool validate(const ColoredComposition& comp, const ColoringScheme& scheme)
{
    const auto& parts = comp.parts();
    if (auto p = scheme.get<Positional>()) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i].colored() != p->coloredAt(i + 1))
                return false;
        return true;
    }
    if (auto r = scheme.get<RestrictColors>()) {
        return std::all_of(parts.begin(), parts.end(), [&](const Part& part) {
            return part.color && r->allowed(*part.color);
        });
    }
    return false;
}

// ----------------------------------------------------------------------------
// Counting
// ----------------------------------------------------------------------------

BigInt countDP(const ColoringScheme& scheme, int total)
{
    if (total < 1)
        throw DomainError("total must be positive");

    if (auto p = scheme.get<Positional>()) {
        const int m = p->m;
        // ways[s][c]: compositions of s whose part count is c (mod m)
        std::vector<std::vector<BigInt>> ways(total + 1, std::vector<BigInt>(m));
        ways[0][0] = 1;
        for (int s = 0; s < total; ++s) {
            for (int c = 0; c < m; ++c) {
                if (ways[s][c] == 0)
                    continue;
                const int nc = (c + 1) % m;
                const bool colored = (c + 1 - p->k) % m == 0;
                for (int t = 1; s + t <= total; ++t)
                    ways[s + t][nc] += colored ? ways[s][c] * t : ways[s][c];
            }
        }
        return std::accumulate(ways[total].begin(), ways[total].end(), BigInt(0));
    }

    auto weight = [&](int size) -> BigInt {
        if (auto r = scheme.get<RestrictColors>())
            return r->colorCount(size);
        return choose2(size);
    };
    std::vector<BigInt> ways(total + 1);
    ways[0] = 1;
    for (int s = 1; s <= total; ++s)
        for (int t = 1; t <= s; ++t)
            ways[s] += ways[s - t] * weight(t);
    return ways[total];
}

// ----------------------------------------------------------------------------
// Enumeration
// ----------------------------------------------------------------------------

namespace {

// Lexicographic successor among compositions with all parts >= minPart.
// Only the second-to-last part can grow; the freed remainder is refilled with
// the smallest admissible tail. Returns false past the last one.
bool nextComposition(std::vector<int>& a, int minPart)
{
    if (a.size() < 2)
        return false;
    int rest = a.back() - 1;
    a.pop_back();
    a.back() += 1;
    if (rest == 0)
        return true;
    if (rest < minPart) {
        // remainder cannot stand alone
        a.back() += rest;
        return true;
    }
    for (int i = 0; i < rest / minPart - 1; ++i)
        a.push_back(minPart);
    a.push_back(minPart + rest % minPart);
    return true;
}

std::vector<int> firstComposition(int total, int minPart)
{
    if (total < minPart)
        return {};
    std::vector<int> a(total / minPart - 1, minPart);
    a.push_back(minPart + total % minPart);
    return a;
}

} // namespace

std::vector<std::vector<int>> compositionsOf(int total)
{
    std::vector<std::vector<int>> out;
    auto a = firstComposition(total, 1);
    if (a.empty())
        return out;
    do {
        out.push_back(a);
    } while (nextComposition(a, 1));
    return out;
}

CompositionStream::CompositionStream(const ColoringScheme& scheme, int total)
  : _scheme(scheme), _total(total)
{
    if (total < 1)
        throw DomainError("total must be positive");
    if (scheme.get<ChooseTwo>())
        throw DomainError("use enumerateChooseTwo for the (n choose 2)-color scheme");
}

std::vector<std::optional<int>> CompositionStream::choicesFor(std::size_t position, int size) const
{
    std::vector<std::optional<int>> out;
    if (auto p = _scheme.get<Positional>()) {
        if (!p->coloredAt(position))
            return {std::nullopt};
        for (int c = 1; c <= size; ++c)
            out.emplace_back(c);
        return out;
    }
    const auto& r = *_scheme.get<RestrictColors>();
    for (int c = 1; c <= size; ++c)
        if (r.allowed(c))
            out.emplace_back(c);
    return out;
}

void CompositionStream::resetColors()
{
    _choices.clear();
    for (std::size_t i = 0; i < _sizes.size(); ++i)
        _choices.push_back(choicesFor(i + 1, _sizes[i]));
    _pick.assign(_sizes.size(), 0);
}

bool CompositionStream::advanceColors()
{
    for (std::size_t i = _pick.size(); i-- > 0;) {
        if (++_pick[i] < _choices[i].size())
            return true;
        _pick[i] = 0;
    }
    return false;
}

bool CompositionStream::advanceSizes()
{
    if (!nextComposition(_sizes, 1))
        return false;
    resetColors();
    return true;
}

std::optional<ColoredComposition> CompositionStream::next()
{
    if (_done)
        return std::nullopt;
    if (!_started) {
        _started = true;
        _sizes = firstComposition(_total, 1);
        resetColors();
    } else if (!advanceColors() && !advanceSizes()) {
        _done = true;
        return std::nullopt;
    }
    std::vector<Part> parts;
    parts.reserve(_sizes.size());
    for (std::size_t i = 0; i < _sizes.size(); ++i)
        parts.emplace_back(_sizes[i], _choices[i][_pick[i]]);
    return ColoredComposition(std::move(parts));
}

ChooseTwoStream::ChooseTwoStream(int total) : _total(total)
{
    if (total < 2)
        throw DomainError("(n choose 2)-color compositions need a total >= 2");
}

void ChooseTwoStream::resetPairs()
{
    _pairs.assign(_sizes.size(), {1, 2});
}

bool ChooseTwoStream::advancePairs()
{
    for (std::size_t i = _pairs.size(); i-- > 0;) {
        auto& [a, b] = _pairs[i];
        if (b < _sizes[i]) {
            ++b;
            return true;
        }
        if (a + 1 < _sizes[i]) {
            ++a;
            b = a + 1;
            return true;
        }
        _pairs[i] = {1, 2};
    }
    return false;
}

bool ChooseTwoStream::advanceSizes()
{
    if (!nextComposition(_sizes, 2))
        return false;
    resetPairs();
    return true;
}

std::optional<ChooseTwoComposition> ChooseTwoStream::next()
{
    if (_done)
        return std::nullopt;
    if (!_started) {
        _started = true;
        _sizes = firstComposition(_total, 2);
        resetPairs();
    } else if (!advancePairs() && !advanceSizes()) {
        _done = true;
        return std::nullopt;
    }
    std::vector<SpotPairPart> parts;
    parts.reserve(_sizes.size());
    for (std::size_t i = 0; i < _sizes.size(); ++i)
        parts.emplace_back(_sizes[i], _pairs[i].first, _pairs[i].second);
    return ChooseTwoComposition(std::move(parts));
}

// ----------------------------------------------------------------------------
// Tilings
// ----------------------------------------------------------------------------

Tile::Tile(int length, std::vector<int> spots) : length(length), spots(std::move(spots))
{
    if (length < 1)
        throw DomainError("tile length must be positive");
    if (this->spots.size() > 2)
        throw DomainError("a tile carries at most two spots");
    for (std::size_t i = 0; i < this->spots.size(); ++i) {
        int s = this->spots[i];
        if (s < 1 || s > length)
            throw DomainError("spot " + std::to_string(s) + " outside tile of length " +
                              std::to_string(length));
        if (i > 0 && this->spots[i - 1] >= s)
            throw DomainError("spots within a tile must be strictly increasing");
    }
}

int SpottedTiling::total() const
{
    int n = 0;
    for (const auto& t : tiles)
        n += t.length;
    return n;
}

SpottedTiling toTiling(const ColoredComposition& comp, SpotConvention conv)
{
    SpottedTiling t;
    for (const auto& p : comp.parts()) {
        if (p.color)
            t.tiles.emplace_back(p.size, std::vector<int>{*p.color});
        else if (conv == SpotConvention::SpotAtCellOne)
            t.tiles.emplace_back(p.size, std::vector<int>{1});
        else
            t.tiles.emplace_back(p.size, std::vector<int>{});
    }
    return t;
}

ColoredComposition fromTiling(const SpottedTiling& t, const ColoringScheme& scheme,
                              SpotConvention conv)
{
    if (t.tiles.empty())
        throw DomainError("empty tiling");
    const auto* pos = scheme.get<Positional>();
    std::vector<Part> parts;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const auto& tile = t.tiles[i];
        if (tile.spots.size() > 1)
            throw DomainError("tile " + std::to_string(i + 1) + " has two spots");
        std::optional<int> color;
        if (!tile.spots.empty())
            color = tile.spots.front();
        if (conv == SpotConvention::SpotAtCellOne && pos && !pos->coloredAt(i + 1)) {
            if (color != 1)
                throw DomainError("tile " + std::to_string(i + 1) +
                                  " must carry a single spot in cell 1");
            color.reset();
        }
        parts.emplace_back(tile.length, color);
    }
    ColoredComposition comp(std::move(parts));
    if (!validate(comp, scheme))
        throw DomainError("spot placement contradicts scheme " + scheme.describe());
    return comp;
}

SpottedTiling toTiling(const ChooseTwoComposition& comp)
{
    SpottedTiling t;
    for (const auto& p : comp.parts())
        t.tiles.emplace_back(p.size, std::vector<int>{p.first, p.second});
    return t;
}

ChooseTwoComposition chooseTwoFromTiling(const SpottedTiling& t)
{
    if (t.tiles.empty())
        throw DomainError("empty tiling");
    std::vector<SpotPairPart> parts;
    for (const auto& tile : t.tiles) {
        if (tile.spots.size() != 2)
            throw DomainError("every tile needs exactly two spots");
        parts.emplace_back(tile.length, tile.spots[0], tile.spots[1]);
    }
    return ChooseTwoComposition(std::move(parts));
}

std::string renderTiling(const SpottedTiling& t)
{
    if (t.tiles.empty())
        throw DomainError("empty");
    std::string out = "|";
    for (const auto& tile : t.tiles) {
        for (int c = 1; c <= tile.length; ++c) {
            bool spot = std::find(tile.spots.begin(), tile.spots.end(), c) != tile.spots.end();
            out += spot ? "[*]" : "[ ]";
        }
        out += '|';
    }
    return out;
}

} // namespace ncolor
