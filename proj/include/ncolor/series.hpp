// series.hpp -- exact integer polynomials, rational generating functions,
// and coefficient extraction

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ncolor/bigint.hpp"
#include "ncolor/errors.hpp"

namespace ncolor {

/// Polynomial in x with big-integer coefficients; index = power of x.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients.
class IntPolynomial
{
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }
    /// c * x^n
    static IntPolynomial monomial(std::size_t n, const BigInt& c = 1);
    static IntPolynomial x() { return monomial(1); }
    static IntPolynomial oneMinusX() { return IntPolynomial{1, -1}; }

    const std::vector<BigInt>& coefficients() const { return _c; }
    bool isZero() const { return _c.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(_c.size()) - 1; }
    /// Coefficient of x^n (zero past the degree).
    BigInt operator[](std::size_t n) const { return n < _c.size() ? _c[n] : BigInt(0); }

    /// gcd of all coefficients (0 for the zero polynomial).
    BigInt content() const;

    IntPolynomial pow(unsigned e) const;
    /// Multiplies by x^j.
    IntPolynomial shift(std::size_t j) const;
    /// Divides every coefficient exactly by d.
    IntPolynomial divExact(const BigInt& d) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Human form such as "1 - 3x + 2x^2 - x^3". Display only.
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> _c;
};

/// numerator / denominator, kept with a positive constant denominator term
/// and coprime coefficient content.
class RationalGF
{
public:
    /// Throws `DomainError` if the denominator has a zero constant term.
    RationalGF(IntPolynomial numerator, IntPolynomial denominator);

    const IntPolynomial& numerator() const { return _num; }
    const IntPolynomial& denominator() const { return _den; }

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
    /// Throws `DomainError` if b's numerator has a zero constant term.
    friend RationalGF operator/(const RationalGF& a, const RationalGF& b);

    /// Equality as rational functions (cross-multiplication).
    friend bool operator==(const RationalGF& a, const RationalGF& b);

    std::string str() const;

private:
    IntPolynomial _num;
    IntPolynomial _den;
};

/// Raised when a power-series coefficient would not be an integer.
class NonIntegralSeriesError : public DomainError
{
public:
    explicit NonIntegralSeriesError(std::size_t index)
      : DomainError("coefficient " + std::to_string(index) +
                    " of the expansion is not an integer"),
        _index(index)
    {}
    std::size_t index() const noexcept { return _index; }

private:
    std::size_t _index;
};

/// Coefficients c_0..c_N of a power series.
class SeriesExpansion
{
public:
    SeriesExpansion() = default;
    explicit SeriesExpansion(std::vector<BigInt> coeffs) : _c(std::move(coeffs)) {}

    const std::vector<BigInt>& coefficients() const { return _c; }
    const BigInt& operator[](std::size_t n) const { return _c.at(n); }
    std::size_t maxIndex() const { return _c.empty() ? 0 : _c.size() - 1; }
    /// Coefficients c_1..c_N.
    std::vector<BigInt> positiveTerms() const
    {
        return _c.empty() ? std::vector<BigInt>{} : std::vector<BigInt>(_c.begin() + 1, _c.end());
    }

    /// Checks that every coefficient past the numerator degree satisfies the
    /// recurrence induced by `gf`'s denominator.
    bool satisfiesRecurrenceOf(const RationalGF& gf) const;

private:
    std::vector<BigInt> _c;
};

SeriesExpansion expand(const RationalGF& gf, std::size_t n);

/// x / (1 - x): one uncolored part.
RationalGF gfUncoloredPart();
/// x / (1 - x)^2: one n-colored part.
RationalGF gfColoredPart();

/// EVEN compositions: (x - x^2 + x^3) / (1 - 3x + 2x^2 - x^3).
RationalGF gfEven();
/// ODD compositions: x / (1 - 3x + 2x^2 - x^3).
RationalGF gfOdd();

/// EVEN compositions with an odd number of parts, x(1-x)^2 / ((1-x)^3 - x^2).
RationalGF gfEvenOddPartCount();
/// EVEN compositions with an even number of parts, x^2 / ((1-x)^3 - x^2).
RationalGF gfEvenEvenPartCount();

/// (m,k)-n-colored compositions, summing the three part-count cases over the
/// common denominator (1-x)^(m+1) - x^m. k is normalized into 1..m.
RationalGF gfMK(int m, int k);

/// a(1)..a(N) for n-color compositions avoiding colors k..k+d, via
/// a(n) = 3a(n-1) - a(n-2) - a(n-k) + a(n-k-d-1). The first k+d+1 values are
/// seeded by exhaustive enumeration. Index 0 of the result holds 0.
SeriesExpansion recurrenceRestricted(int k, int d, std::size_t n);

} // namespace ncolor
