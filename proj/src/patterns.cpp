// patterns.cpp

#include "ncolor/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ncolor {

// ----------------------------------------------------------------------------
// Permutation
// ----------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> values) : _v(std::move(values))
{
    if (_v.empty())
        throw DomainError("a permutation needs at least one element");
    std::vector<bool> seen(_v.size() + 1, false);
    for (int x : _v) {
        if (x < 1 || x > static_cast<int>(_v.size()) || seen[x])
            throw DomainError("values must be a permutation of 1.." + std::to_string(_v.size()));
        seen[x] = true;
    }
}

Permutation Permutation::identity(int k)
{
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text)
{
    std::size_t i = 0;
    auto skipSpace = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skipSpace();
    bool paren = i < text.size() && text[i] == '(';
    if (paren)
        ++i;
    std::vector<int> v;
    while (true) {
        skipSpace();
        std::size_t start = i;
        long long x = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            x = x * 10 + (text[i] - '0');
            if (x > 1'000'000)
                throw ParseError("permutation entry too large", start);
            ++i;
        }
        if (i == start)
            throw ParseError("expected an integer", start);
        v.push_back(static_cast<int>(x));
        skipSpace();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (paren) {
        if (i >= text.size() || text[i] != ')')
            throw ParseError("expected ')'", i);
        ++i;
    }
    skipSpace();
    if (i != text.size())
        throw ParseError("unexpected trailing input", i);
    try {
        return Permutation(std::move(v));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string Permutation::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < _v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(_v[i]);
    }
    return out + ")";
}

bool containsPattern(const Permutation& p, const Permutation& pattern)
{
    const std::size_t n = p.size();
    const std::size_t k = pattern.size();
    if (k > n)
        return false;
    // idx walks all increasing k-subsets of 0..n-1
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool iso = true;
        for (std::size_t a = 0; a < k && iso; ++a)
            for (std::size_t b = a + 1; b < k && iso; ++b)
                iso = (p[idx[a]] < p[idx[b]]) == (pattern[a] < pattern[b]);
        if (iso)
            return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

bool isSeparable321Avoiding(const Permutation& p)
{
    static const Permutation p321({3, 2, 1});
    static const Permutation p2413({2, 4, 1, 3});
    static const Permutation p3142({3, 1, 4, 2});
    return !containsPattern(p, p321) && !containsPattern(p, p2413) && !containsPattern(p, p3142);
}

// ----------------------------------------------------------------------------
// Block decomposition
// ----------------------------------------------------------------------------

int BlockDecomposition::size() const
{
    int n = trailing.length;
    for (const auto& s : segments) {
        if (auto r = std::get_if<Run>(&s))
            n += r->length;
        else
            n += std::get<Block>(s).a + std::get<Block>(s).b;
    }
    return n;
}

Permutation BlockDecomposition::toPermutation() const
{
    std::vector<int> v;
    int next = 1;
    auto emitRun = [&](int len) {
        for (int i = 0; i < len; ++i)
            v.push_back(next++);
    };
    for (const auto& s : segments) {
        if (auto r = std::get_if<Run>(&s)) {
            emitRun(r->length);
        } else {
            const auto& b = std::get<Block>(s);
            for (int i = 0; i < b.a; ++i)
                v.push_back(next + b.b + i);
            for (int i = 0; i < b.b; ++i)
                v.push_back(next + i);
            next += b.a + b.b;
        }
    }
    emitRun(trailing.length);
    return Permutation(std::move(v));
}

BlockDecomposition parseBlocks(const Permutation& p)
{
    BlockDecomposition out;
    const std::size_t n = p.size();
    // Invariant: the values consumed so far are exactly 1..smallest-1.
    int smallest = 1;
    int run = 0;
    std::size_t i = 0;
    while (i < n) {
        if (p[i] == smallest) {
            ++run;
            ++smallest;
            ++i;
            continue;
        }
        const int top = p[i];
        out.segments.push_back(Run{run});
        run = 0;
        int a = 0;
        while (i < n && p[i] == top + a) {
            ++a;
            ++i;
        }
        const int b = top - smallest;
        for (int j = 0; j < b; ++j, ++i) {
            if (i >= n)
                throw BlockParseError("block ended early: expected " +
                                          std::to_string(smallest + j) + " after top segment " +
                                          std::to_string(top) + ".." + std::to_string(top + a - 1),
                                      i);
            if (p[i] != smallest + j)
                throw BlockParseError("expected " + std::to_string(smallest + j) +
                                          " in the bottom segment, found " + std::to_string(p[i]),
                                      i);
        }
        out.segments.push_back(Block{a, b});
        smallest = top + a;
    }
    out.trailing = Run{run};
    return out;
}

std::optional<BlockDecomposition> tryParseBlocks(const Permutation& p)
{
    try {
        return parseBlocks(p);
    } catch (const BlockParseError&) {
        return std::nullopt;
    }
}

SeparablePermutationStream::SeparablePermutationStream(int k)
{
    if (k < 1)
        throw DomainError("permutation size must be positive");
    if (k > kMaxPermutationSize)
        throw DomainError("k=" + std::to_string(k) + " exceeds " +
                          std::to_string(kMaxPermutationSize) +
                          "; filtering k! permutations is too slow, count via the EVEN "
                          "sequence e(k) instead");
    _v.resize(k);
    std::iota(_v.begin(), _v.end(), 1);
}

std::optional<Permutation> SeparablePermutationStream::next()
{
    while (!_done) {
        Permutation cur(_v);
        _done = !std::next_permutation(_v.begin(), _v.end());
        if (tryParseBlocks(cur))
            return cur;
    }
    return std::nullopt;
}

// ----------------------------------------------------------------------------
// Strings
// ----------------------------------------------------------------------------

TernaryString::TernaryString(std::string digits) : _d(std::move(digits))
{
    for (std::size_t i = 0; i < _d.size(); ++i)
        if (_d[i] < '0' || _d[i] > '2')
            throw ParseError("ternary digits must be 0, 1 or 2", i);
}

BinaryString::BinaryString(std::string digits) : _d(std::move(digits))
{
    for (std::size_t i = 0; i < _d.size(); ++i)
        if (_d[i] != '0' && _d[i] != '1')
            throw ParseError("binary digits must be 0 or 1", i);
}

std::optional<std::pair<std::size_t, std::string>>
ternaryViolation(const TernaryString& s, TernaryBoundary mode)
{
    const std::string& d = s.str();
    if (mode == TernaryBoundary::EvenImage && !d.empty() && d.front() == '2')
        return std::pair<std::size_t, std::string>{0, "string starts with 2"};
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] == '0' && d[i + 1] == '1')
            return std::pair<std::size_t, std::string>{i, "forbidden substring \"01\""};
        if (d[i] == '1' && d[i + 1] == '2')
            return std::pair<std::size_t, std::string>{i, "forbidden substring \"12\""};
    }
    if (mode == TernaryBoundary::EvenImage && !d.empty() && d.back() == '0')
        return std::pair<std::size_t, std::string>{d.size() - 1, "string ends with 0"};
    return std::nullopt;
}

TernaryStream::TernaryStream(std::size_t length, TernaryBoundary mode)
  : _n(length), _mode(mode), _s(length, '0')
{}

bool TernaryStream::valid(std::size_t i, char c) const
{
    const bool evenImage = _mode == TernaryBoundary::EvenImage;
    if (i == 0 && evenImage && c == '2')
        return false;
    if (i + 1 == _n && evenImage && c == '0')
        return false;
    if (i > 0) {
        char prev = _s[i - 1];
        if ((prev == '0' && c == '1') || (prev == '1' && c == '2'))
            return false;
    }
    return true;
}

bool TernaryStream::extend(std::size_t from)
{
    if (from == _n)
        return true;
    for (char c = '0'; c <= '2'; ++c) {
        if (valid(from, c)) {
            _s[from] = c;
            if (extend(from + 1))
                return true;
        }
    }
    return false;
}

std::optional<TernaryString> TernaryStream::next()
{
    if (_done)
        return std::nullopt;
    if (!_started) {
        _started = true;
        if (extend(0))
            return TernaryString(_s);
        _done = true;
        return std::nullopt;
    }
    for (std::size_t i = _n; i-- > 0;) {
        for (char c = static_cast<char>(_s[i] + 1); c <= '2'; ++c) {
            if (valid(i, c)) {
                _s[i] = c;
                if (extend(i + 1))
                    return TernaryString(_s);
            }
        }
    }
    _done = true;
    return std::nullopt;
}

std::vector<BinaryString> allBinaryStrings(std::size_t length)
{
    std::vector<BinaryString> out;
    const std::size_t count = std::size_t{1} << length;
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::string s(length, '0');
        for (std::size_t i = 0; i < length; ++i)
            if (mask >> (length - 1 - i) & 1u)
                s[i] = '1';
        out.emplace_back(std::move(s));
    }
    return out;
}

BigInt runProduct(const BinaryString& s)
{
    BigInt prod = 1;
    std::size_t run = 0;
    for (char c : s.str() + '0') {
        if (c == '1') {
            ++run;
        } else if (run) {
            prod *= run;
            run = 0;
        }
    }
    return prod;
}

} // namespace ncolor
