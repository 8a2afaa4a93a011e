// series.cpp

#include "ncolor/series.hpp"

#include <algorithm>


#include "ncolor/combicore.hpp"

namespace ncolor {

// ----------------------------------------------------------------------------
// IntPolynomial
// ----------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
    for (long long c : coeffs)
        _c.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : _c(std::move(coeffs))
{
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t n, const BigInt& c)
{
    std::vector<BigInt> v(n + 1);
    v[n] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!_c.empty() && _c.back() == 0)
        _c.pop_back();
}

BigInt IntPolynomial::content() const
{
    BigInt g = 0;
    for (const auto& c : _c)
        g = boost::multiprecision::gcd(g, c);
    return abs(g);
}

IntPolynomial IntPolynomial::pow(unsigned e) const
{
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

IntPolynomial IntPolynomial::shift(std::size_t j) const
{
    if (isZero())
        return {};
    std::vector<BigInt> v(j);
    v.insert(v.end(), _c.begin(), _c.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divExact(const BigInt& d) const
{
    if (d == 0)
        throw DomainError("division by zero");
    std::vector<BigInt> v = _c;
    for (auto& c : v) {
        if (c % d != 0)
            throw DomainError("coefficient " + c.str() + " is not divisible by " + d.str());
        c /= d;
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> v(std::max(a._c.size(), b._c.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a[i] + b[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a)
{
    std::vector<BigInt> v = a._c;
    for (auto& c : v)
        c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.isZero() || b.isZero())
        return {};
    std::vector<BigInt> v(a._c.size() + b._c.size() - 1);
    for (std::size_t i = 0; i < a._c.size(); ++i)
        for (std::size_t j = 0; j < b._c.size(); ++j)
            v[i + j] += a._c[i] * b._c[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& a)
{
    return IntPolynomial::constant(s) * a;
}

std::string IntPolynomial::str() const
{
    if (isZero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < _c.size(); ++i) {
        const BigInt& c = _c[i];
        if (c == 0)
            continue;
        BigInt mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || i == 0)
            out += mag.str();
        if (i >= 1)
            out += 'x';
        if (i >= 2)
            out += '^' + std::to_string(i);
    }
    return out;
}

// ----------------------------------------------------------------------------
// RationalGF
// ----------------------------------------------------------------------------

RationalGF::RationalGF(IntPolynomial numerator, IntPolynomial denominator)
  : _num(std::move(numerator)), _den(std::move(denominator))
{
    if (_den[0] == 0)
        throw DomainError("denominator must have a nonzero constant term");
    BigInt g = boost::multiprecision::gcd(_num.content(), _den.content());
    if (_den[0] < 0)
        g = -g;
    if (g != 1) {
        _num = _num.divExact(g);
        _den = _den.divExact(g);
    }
}

RationalGF operator+(const RationalGF& a, const RationalGF& b)
{
    if (a._den == b._den)
        return RationalGF(a._num + b._num, a._den);
    return RationalGF(a._num * b._den + b._num * a._den, a._den * b._den);
}

RationalGF operator*(const RationalGF& a, const RationalGF& b)
{
    return RationalGF(a._num * b._num, a._den * b._den);
}

RationalGF operator/(const RationalGF& a, const RationalGF& b)
{
    if (b._num[0] == 0)
        throw DomainError("division by a series with zero constant term");
    return RationalGF(a._num * b._den, a._den * b._num);
}

bool operator==(const RationalGF& a, const RationalGF& b)
{
    return a._num * b._den == b._num * a._den;
}

std::string RationalGF::str() const
{
    return "(" + _num.str() + ") / (" + _den.str() + ")";
}

// ----------------------------------------------------------------------------
// Expansion
// ----------------------------------------------------------------------------

SeriesExpansion expand(const RationalGF& gf, std::size_t n)
{
    const auto& num = gf.numerator();
    const auto& den = gf.denominator();
    const BigInt& d0 = den[0];
    std::vector<BigInt> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        BigInt acc = num[i];
        const std::size_t lag = std::min<std::size_t>(i, den.coefficients().size() - 1);
        for (std::size_t j = 1; j <= lag; ++j)
            acc -= den[j] * c[i - j];
        if (acc % d0 != 0)
            throw NonIntegralSeriesError(i);
        c[i] = acc / d0;
    }
    return SeriesExpansion(std::move(c));
}

bool SeriesExpansion::satisfiesRecurrenceOf(const RationalGF& gf) const
{
    const auto& den = gf.denominator();
    const std::size_t start = static_cast<std::size_t>(std::max(gf.numerator().degree() + 1, 0));
    for (std::size_t i = start; i < _c.size(); ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j <= i && j < den.coefficients().size(); ++j)
            acc += den[j] * _c[i - j];
        if (acc != 0)
            return false;
    }
    return true;
}

// ----------------------------------------------------------------------------
// Generating functions
// ----------------------------------------------------------------------------

namespace {

const IntPolynomial& sharedDenominator()
{
    static const IntPolynomial d = IntPolynomial::oneMinusX().pow(3) - IntPolynomial::monomial(2);
    return d;
}

} // namespace

RationalGF gfUncoloredPart()
{
    return RationalGF(IntPolynomial::x(), IntPolynomial::oneMinusX());
}

RationalGF gfColoredPart()
{
    return RationalGF(IntPolynomial::x(), IntPolynomial::oneMinusX().pow(2));
}

RationalGF gfEven()
{
    return RationalGF(IntPolynomial{0, 1, -1, 1}, IntPolynomial{1, -3, 2, -1});
}

RationalGF gfOdd()
{
    return RationalGF(IntPolynomial{0, 1}, IntPolynomial{1, -3, 2, -1});
}

RationalGF gfEvenOddPartCount()
{
    return RationalGF(IntPolynomial::x() * IntPolynomial::oneMinusX().pow(2), sharedDenominator());
}

RationalGF gfEvenEvenPartCount()
{
    return RationalGF(IntPolynomial::monomial(2), sharedDenominator());
}

RationalGF gfMK(int m, int k)
{
    const auto* scheme = ColoringScheme::positional(m, k).get<Positional>();
    k = scheme->k;
    const IntPolynomial oneMinusX = IntPolynomial::oneMinusX();
    const IntPolynomial den = oneMinusX.pow(m + 1) - IntPolynomial::monomial(m);

    // part count = 0 (mod m)
    IntPolynomial num = IntPolynomial::monomial(m);
    // part count = j (mod m), 1 <= j <= k-1: only uncolored parts in the remainder
    for (int j = 1; j <= k - 1; ++j)
        num = num + oneMinusX.pow(m - j + 1).shift(j);
    // part count = j (mod m), k <= j <= m-1: one colored part in the remainder
    for (int j = k; j <= m - 1; ++j)
        num = num + oneMinusX.pow(m - j).shift(j);
    return RationalGF(num, den);
}

SeriesExpansion recurrenceRestricted(int k, int d, std::size_t n)
{
    const auto scheme = ColoringScheme::restrictColors(k, d);
    const std::size_t seeds = static_cast<std::size_t>(k + d + 1);
    std::vector<BigInt> a(n + 1);
    for (std::size_t i = 1; i <= std::min(n, seeds); ++i)
        a[i] = drainCount(enumerate(scheme, static_cast<int>(i)));
    for (std::size_t i = seeds + 1; i <= n; ++i)
        a[i] = 3 * a[i - 1] - a[i - 2] - a[i - k] + a[i - k - d - 1];
    return SeriesExpansion(std::move(a));
}

} // namespace ncolor
