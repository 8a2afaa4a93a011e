// bijections.hpp -- explicit, invertible correspondences between positional
// n-color compositions and other combinatorial families

#pragma once

#include <string>
#include <vector>

#include "ncolor/bigint.hpp"
#include "ncolor/combicore.hpp"
#include "ncolor/patterns.hpp"

namespace ncolor {

// -- colors avoiding 2 <-> EVEN ----------------------------------------------

/// n-color composition avoiding color 2 -> EVEN composition, same total.
/// Scans left to right over the evolving output: an odd-positioned part p_c
/// with c >= 3 splits into (c-2) + (p-c+2)_2; with c = 1 it loses its color;
/// even-positioned parts are kept. Throws `DomainError` if any part is
/// uncolored or has color 2.
ColoredComposition color2ToEven(const ColoredComposition& comp);

/// Inverse of `color2ToEven`: each (odd p, even q_2) pair merges into
/// (p+q)_(p+2); other pairs become p_1, q_c; a trailing odd p becomes p_1.
ColoredComposition evenToColor2(const ColoredComposition& comp);

// -- ODD <-> (n choose 2)-color ----------------------------------------------

/// ODD composition of k -> choose-two composition of k+1. Even-positioned
/// parts may be given uncolored or with color 1 (their tile spot sits in
/// cell 1 either way).
ChooseTwoComposition oddToChooseTwo(const ColoredComposition& comp);

/// Inverse of `oddToChooseTwo`. The result is a plain ODD composition
/// (even-positioned parts uncolored).
ColoredComposition chooseTwoToOdd(const ChooseTwoComposition& comp);

// -- EVEN <-> ternary strings -----------------------------------------------

/// EVEN composition of k -> ternary string of length k, one digit per cell
/// boundary (excluding the leading one).
TernaryString evenToTernary(const ColoredComposition& comp);

/// Inverse of `evenToTernary`. Throws `ParseError` naming the first
/// offending index if `s` has "01" or "12", starts with 2, or ends with 0.
ColoredComposition ternaryToEven(const TernaryString& s);

// -- EVEN / ODD <-> binary strings ------------------------------------------

/// An uncolored composition plus the number of colored compositions that
/// share it as skeleton.
struct Skeleton
{
    std::vector<int> sizes;
    BigInt multiplicity;
    /// Which positions carry colors: 2 = even positions, 1 = odd positions.
    int coloredParity = 2;

    /// "1+2+1+6+4"
    std::string str() const;
    /// Color-variable form, e.g. "1+2_i+1+6_j+4 where 1<=i<=2 and 1<=j<=6".
    std::string templated() const;
};

/// EVEN composition of k+1 -> binary string of length k: forget colors,
/// write runs of 0s for odd-positioned parts and runs of 1s for
/// even-positioned parts, then drop the leading 0.
BinaryString compToBinary(const ColoredComposition& comp);

/// Prepends 0 and reads runs as part sizes. Multiplicity is the product of
/// the lengths of the runs of 1's.
Skeleton binaryToSkeleton(const BinaryString& s);

/// All EVEN compositions whose `compToBinary` image is `s`.
std::vector<ColoredComposition> binaryFiber(const BinaryString& s);

/// Two readings of the ODD variant of the binary-string correspondence.
///  - `Direct`: `s` must start with 1; its runs are read as parts as-is
///    (runs of 1's are the colored, odd-positioned parts). Composition of |s|.
///  - `PrependOne`: a 1 is prepended to `s` first, then read as `Direct`.
///    Composition of |s|+1.
/// Summing multiplicities over strings of length k starting with 1 gives
/// o(k) under `Direct`; `PrependOne` only gives o(k+1) when summed over all
/// strings of length k.
enum class OddBinaryReading { Direct, PrependOne };

/// Throws `DomainError` if the reading is `Direct` and `s` starts with 0.
Skeleton oddBinaryVariant(const BinaryString& s, OddBinaryReading reading = OddBinaryReading::Direct);

/// ODD composition of k -> binary string of length k starting with 1
/// (inverse of the `Direct` reading on skeletons).
BinaryString oddCompToBinary(const ColoredComposition& comp);

/// All compositions with the given skeleton, colored at `coloredParity`
/// positions.
std::vector<ColoredComposition> skeletonFiber(const Skeleton& sk);

// -- 321-avoiding separable permutations <-> EVEN ----------------------------

/// Each run of length c before a block -> odd part c+1; each block (a,b) ->
/// even part (a+b-1)_a; a nonempty trailing run of length c -> final odd
/// part c. Throws `BlockParseError` if `p` contains 321, 2413 or 3142.
ColoredComposition permToEven(const Permutation& p);

/// Inverse of `permToEven`.
Permutation evenToPerm(const ColoredComposition& comp);

// -- first-part peeling ------------------------------------------------------

/// The two images of `peelFirst`.
struct Peeled
{
    enum class Branch { Removed, Decremented };

    Branch branch;
    ColoredComposition comp;
    /// Scheme `comp` is valid under: class k after removal, class k+1
    /// after decrementing.
    ColoringScheme scheme;
};

/// `comp` is an (m,K)-composition of l+1 with K != 1 (normalized), so its
/// first part is uncolored. A leading 1 is removed, giving an (m,K-1)
/// composition of l; otherwise the first part is decremented, giving an
/// (m,K)-composition of l.
Peeled peelFirst(const ColoredComposition& comp, const ColoringScheme& scheme);

/// Inverse of `peelFirst`; returns the (m,K)-composition of l+1.
ColoredComposition unpeel(const Peeled& peeled);

} // namespace ncolor
