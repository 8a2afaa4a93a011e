// patterns.hpp -- permutations, pattern containment, the exchange-block
// parser for 321-avoiding separable permutations, and constrained strings

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncolor/bigint.hpp"
#include "ncolor/errors.hpp"
#include "ncolor/stream.hpp"

namespace ncolor {

/// A bijection on 1..k stored in one-line notation.
class Permutation
{
public:
    /// Throws `DomainError` unless `values` is a permutation of 1..size.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int k);
    /// Comma-separated integers, optionally parenthesized: "2,3,1" or "(2,3,1)".
    static Permutation parse(std::string_view text);

    const std::vector<int>& values() const { return _v; }
    std::size_t size() const { return _v.size(); }
    int operator[](std::size_t i) const { return _v[i]; }

    /// "(2,3,1)"
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> _v;
};

/// True iff some subsequence of `p` is order-isomorphic to `pattern`.
/// Brute force over index subsets; intended for small permutations.
bool containsPattern(const Permutation& p, const Permutation& pattern);

/// True iff `p` avoids 321, 2413 and 3142.
bool isSeparable321Avoiding(const Permutation& p);

/// A stretch of `length` consecutive increasing values (length may be 0).
struct Run
{
    int length = 0;
    friend bool operator==(const Run&, const Run&) = default;
};

/// The top `a` values of a consecutive range in increasing order, followed
/// by the bottom `b` values in increasing order.
struct Block
{
    int a = 1;
    int b = 1;
    friend bool operator==(const Block&, const Block&) = default;
};

using Segment = std::variant<Run, Block>;

/// Run, Block, Run, Block, ... followed by a trailing run. Every block is
/// preceded by a (possibly empty) run.
struct BlockDecomposition
{
    std::vector<Segment> segments;
    Run trailing;

    /// Number of elements covered.
    int size() const;
    /// Reassembles the permutation the decomposition describes.
    Permutation toPermutation() const;

    friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Failure of `parseBlocks` at element `index` (0-based).
class BlockParseError : public ParseError
{
public:
    using ParseError::ParseError;
};

/// Greedy left-to-right parse into runs and exchange blocks. Succeeds iff
/// `p` is 321-avoiding and separable; throws `BlockParseError` otherwise.
BlockDecomposition parseBlocks(const Permutation& p);

/// Same as `parseBlocks` but reports failure as nullopt.
std::optional<BlockDecomposition> tryParseBlocks(const Permutation& p);

/// Streams the 321-avoiding separable permutations of [k] in lexicographic
/// order. k is capped at `kMaxPermutationSize` since this filters all k!.
class SeparablePermutationStream
  : public StreamBase<SeparablePermutationStream, Permutation>
{
public:
    static constexpr int kMaxPermutationSize = 10;

    explicit SeparablePermutationStream(int k);
    std::optional<Permutation> next();

private:
    std::vector<int> _v;
    bool _done = false;
};

inline SeparablePermutationStream enumeratePermutations321Sep(int k)
{
    return SeparablePermutationStream(k);
}

// ----------------------------------------------------------------------------
// Digit strings
// ----------------------------------------------------------------------------

/// A string over {0,1,2}.
class TernaryString
{
public:
    /// Throws `ParseError` on any other character.
    explicit TernaryString(std::string digits);
    const std::string& str() const { return _d; }
    std::size_t size() const { return _d.size(); }
    friend bool operator==(const TernaryString&, const TernaryString&) = default;
    friend auto operator<=>(const TernaryString&, const TernaryString&) = default;

private:
    std::string _d;
};

/// A string over {0,1}.
class BinaryString
{
public:
    explicit BinaryString(std::string digits);
    const std::string& str() const { return _d; }
    std::size_t size() const { return _d.size(); }
    friend bool operator==(const BinaryString&, const BinaryString&) = default;
    friend auto operator<=>(const BinaryString&, const BinaryString&) = default;

private:
    std::string _d;
};

/// `Corollary`: no "01" and no "12" substring.
/// `EvenImage`: additionally no leading 2 and no trailing 0.
enum class TernaryBoundary { Corollary, EvenImage };

/// Index of the first violation of `mode` in `s`, with a reason; nullopt if
/// `s` conforms.
std::optional<std::pair<std::size_t, std::string>>
ternaryViolation(const TernaryString& s, TernaryBoundary mode);

/// Generates conforming ternary strings of a fixed length in lexicographic
/// order by walking the transition automaton 0->{0,2}, 1->{0,1}, 2->{0,1,2}.
/// Length 0 yields the empty string once.
class TernaryStream : public StreamBase<TernaryStream, TernaryString>
{
public:
    TernaryStream(std::size_t length, TernaryBoundary mode);
    std::optional<TernaryString> next();

private:
    bool extend(std::size_t from);
    bool valid(std::size_t i, char c) const;

    std::size_t _n;
    TernaryBoundary _mode;
    std::string _s;
    bool _started = false;
    bool _done = false;
};

inline TernaryStream enumerateTernary(std::size_t length, TernaryBoundary mode)
{
    return TernaryStream(length, mode);
}

/// All binary strings of a length, lexicographic ("00..0" first).
std::vector<BinaryString> allBinaryStrings(std::size_t length);

/// Product of the lengths of the maximal runs of 1's (1 if there are none).
BigInt runProduct(const BinaryString& s);

} // namespace ncolor
