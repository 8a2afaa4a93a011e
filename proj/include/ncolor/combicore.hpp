// combicore.hpp -- colored compositions, coloring schemes, spotted tilings,
// exhaustive enumeration and DP counting

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ncolor/bigint.hpp"
#include "ncolor/stream.hpp"

namespace ncolor {

// ============================================================================
// Compositions
// ============================================================================

/// One part of a composition: a size and an optional color in 1..size.
struct Part
{
    int size = 1;
    std::optional<int> color;

    Part() = default;

    /// Throws `DomainError` unless size >= 1 and 1 <= color <= size.
    Part(int size, std::optional<int> color = std::nullopt);

    bool colored() const { return color.has_value(); }

    friend bool operator==(const Part&, const Part&) = default;
    friend auto operator<=>(const Part&, const Part&) = default;
};

/// An ordered, non-empty list of parts. The total is derived from the parts.
class ColoredComposition
{
public:
    /// Throws `DomainError` if `parts` is empty.
    explicit ColoredComposition(std::vector<Part> parts);

    const std::vector<Part>& parts() const { return _parts; }
    int total() const { return _total; }
    std::size_t size() const { return _parts.size(); }
    const Part& operator[](std::size_t i) const { return _parts[i]; }

    /// The part sizes with all colors dropped.
    std::vector<int> sizes() const;

    friend bool operator==(const ColoredComposition&, const ColoredComposition&) = default;
    friend auto operator<=>(const ColoredComposition& a, const ColoredComposition& b)
    {
        return a._parts <=> b._parts;
    }

private:
    std::vector<Part> _parts;
    int _total = 0;
};

/// A part decorated with two distinct spots 1 <= first < second <= size.
struct SpotPairPart
{
    int size = 2;
    int first = 1;
    int second = 2;

    SpotPairPart() = default;
    SpotPairPart(int size, int first, int second);

    friend bool operator==(const SpotPairPart&, const SpotPairPart&) = default;
    friend auto operator<=>(const SpotPairPart&, const SpotPairPart&) = default;
};

/// A composition where every part carries an unordered pair of distinct
/// spots; C(size, 2) choices per part, so parts of size 1 cannot occur.
class ChooseTwoComposition
{
public:
    explicit ChooseTwoComposition(std::vector<SpotPairPart> parts);

    const std::vector<SpotPairPart>& parts() const { return _parts; }
    int total() const { return _total; }
    std::size_t size() const { return _parts.size(); }

    friend bool operator==(const ChooseTwoComposition&, const ChooseTwoComposition&) = default;

private:
    std::vector<SpotPairPart> _parts;
    int _total = 0;
};

// ============================================================================
// Coloring schemes
// ============================================================================

/// Parts at 1-indexed positions p with p = k (mod m) are n-colored, all
/// other parts are uncolored. k is normalized into 1..m.
struct Positional
{
    int m = 1;
    int k = 1;

    bool coloredAt(std::size_t position) const
    {
        return static_cast<int>((position - 1) % static_cast<std::size_t>(m)) + 1 == k;
    }

    friend bool operator==(const Positional&, const Positional&) = default;
};

/// Every part is n-colored, but colors lo..lo+d are forbidden.
struct RestrictColors
{
    int lo = 2;
    int d = 0;

    bool allowed(int color) const { return color < lo || color > lo + d; }

    /// Number of admissible colors for a part of the given size.
    int colorCount(int size) const;

    friend bool operator==(const RestrictColors&, const RestrictColors&) = default;
};

/// Each part carries a pair of distinct spots. Compositions under this
/// scheme are `ChooseTwoComposition`s, never `ColoredComposition`s.
struct ChooseTwo
{
    friend bool operator==(const ChooseTwo&, const ChooseTwo&) = default;
};

class ColoringScheme
{
public:
    using Variant = std::variant<Positional, RestrictColors, ChooseTwo>;

    /// Residue `k` may be any integer; it is normalized to ((k-1) mod m)+1,
    /// so class 0 becomes m. Throws `DomainError` if m < 1.
    static ColoringScheme positional(int m, int k);
    /// Throws `DomainError` unless lo >= 2 and d >= 0.
    static ColoringScheme restrictColors(int lo, int d);
    static ColoringScheme chooseTwo() { return ColoringScheme(ChooseTwo{}); }

    /// The (2,0) scheme: even-positioned parts colored.
    static ColoringScheme even() { return positional(2, 2); }
    /// The (2,1) scheme: odd-positioned parts colored.
    static ColoringScheme odd() { return positional(2, 1); }

    const Variant& variant() const { return _v; }
    template <class T>
    const T* get() const { return std::get_if<T>(&_v); }

    std::string describe() const;

    friend bool operator==(const ColoringScheme&, const ColoringScheme&) = default;

private:
    explicit ColoringScheme(Variant v) : _v(v) {}
    Variant _v;
};

/// True iff `comp` is a valid composition under `scheme`. ChooseTwo always
/// yields false; use `ChooseTwoComposition` for that scheme.
bool validate(const ColoredComposition& comp, const ColoringScheme& scheme);

/// Exact count of compositions of `total` under `scheme` by dynamic
/// programming over (remaining sum, position class).
BigInt countDP(const ColoringScheme& scheme, int total);

/// Streams every composition of a total under a Positional or
/// RestrictColors scheme exactly once. Order: lexicographic by the sequence
/// of part sizes, then lexicographic by the color vector.
class CompositionStream : public StreamBase<CompositionStream, ColoredComposition>
{
public:
    CompositionStream(const ColoringScheme& scheme, int total);

    std::optional<ColoredComposition> next();

private:
    bool advanceSizes();
    void resetColors();
    bool advanceColors();
    std::vector<std::optional<int>> choicesFor(std::size_t position, int size) const;

    ColoringScheme _scheme;
    int _total;
    bool _started = false;
    bool _done = false;
    std::vector<int> _sizes;
    std::vector<std::vector<std::optional<int>>> _choices;
    std::vector<std::size_t> _pick;
};

inline CompositionStream enumerate(const ColoringScheme& scheme, int total)
{
    return CompositionStream(scheme, total);
}

/// Streams all (n choose 2)-color compositions of `total` (>= 2): part sizes
/// in lexicographic order, then spot pairs in lexicographic order.
class ChooseTwoStream : public StreamBase<ChooseTwoStream, ChooseTwoComposition>
{
public:
    explicit ChooseTwoStream(int total);

    std::optional<ChooseTwoComposition> next();

private:
    bool advanceSizes();
    bool advancePairs();
    void resetPairs();

    int _total;
    bool _started = false;
    bool _done = false;
    std::vector<int> _sizes;
    std::vector<std::pair<int, int>> _pairs;
};

inline ChooseTwoStream enumerateChooseTwo(int total) { return ChooseTwoStream(total); }

/// All compositions (uncolored) of `total`, in lexicographic order.
std::vector<std::vector<int>> compositionsOf(int total);

// ============================================================================
// Spotted tilings
// ============================================================================

struct Tile
{
    int length = 1;
    std::vector<int> spots;

    Tile() = default;
    /// Throws `DomainError` unless spots are strictly increasing, lie in
    /// 1..length, and number at most two.
    Tile(int length, std::vector<int> spots);

    friend bool operator==(const Tile&, const Tile&) = default;
};

struct SpottedTiling
{
    std::vector<Tile> tiles;

    int total() const;
    friend bool operator==(const SpottedTiling&, const SpottedTiling&) = default;
};

/// How uncolored parts are drawn. `SpotAtCellOne` draws them with a spot in
/// their first cell (the convention used when tiling ODD compositions for the
/// choose-two correspondence).
enum class SpotConvention { Unspotted, SpotAtCellOne };

SpottedTiling toTiling(const ColoredComposition& comp,
                       SpotConvention conv = SpotConvention::Unspotted);

/// Rebuilds a composition from its tiling. Throws `DomainError` if the spot
/// placement contradicts `scheme` or the convention.
ColoredComposition fromTiling(const SpottedTiling& t, const ColoringScheme& scheme,
                              SpotConvention conv = SpotConvention::Unspotted);

SpottedTiling toTiling(const ChooseTwoComposition& comp);
ChooseTwoComposition chooseTwoFromTiling(const SpottedTiling& t);

/// ASCII rendering: cells `[ ]` / `[*]`, `|` at tile boundaries.
/// Throws `DomainError("empty")` on an empty tiling.
std::string renderTiling(const SpottedTiling& t);

} // namespace ncolor
