// verify.cpp

#include "ncolor/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ncolor/bijections.hpp"
#include "ncolor/combicore.hpp"
#include "ncolor/errors.hpp"
#include "ncolor/notation.hpp"
#include "ncolor/patterns.hpp"
#include "ncolor/series.hpp"

namespace ncolor::verify {

namespace {

using Results = std::vector<CheckResult>;

std::string str(const BigInt& v) { return v.str(); }

CheckResult check(std::string name, bool ok, std::string detail = {})
{
    return {std::move(name), ok, std::move(detail), false};
}

BigInt enumCount(const ColoringScheme& s, int n)
{
    return drainCount(enumerate(s, n));
}

// ---------------------------------------------------------------------------

Results gfVsDp(const Options& o)
{
    Results out;
    for (int m = 1; m <= o.m; ++m) {
        for (int k = 1; k <= m; ++k) {
            const auto scheme = ColoringScheme::positional(m, k);
            const auto series = expand(gfMK(m, k), static_cast<std::size_t>(o.maxN));
            bool ok = true;
            std::string detail = "n<=" + std::to_string(o.maxN);
            for (int n = 1; n <= o.maxN && ok; ++n) {
                const BigInt dp = countDP(scheme, n);
                const BigInt en = enumCount(scheme, n);
                if (dp != en || dp != series[n]) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + ": enum " + str(en) + ", dp " + str(dp) +
                             ", gf " + str(series[n]);
                }
            }
            out.push_back(check("gf=dp=enum (" + std::to_string(m) + "," + std::to_string(k) + ")",
                                ok, detail));
        }
    }
    return out;
}

Results recurrence(const Options& o)
{
    Results out;
    const std::pair<int, int> cases[] = {{2, 0}, {2, 1}, {3, 0}, {3, 1}};
    for (auto [k, d] : cases) {
        const auto scheme = ColoringScheme::restrictColors(k, d);
        const auto rec = recurrenceRestricted(k, d, static_cast<std::size_t>(o.maxN));
        bool ok = true;
        std::string detail = "n<=" + std::to_string(o.maxN);
        for (int n = 1; n <= o.maxN && ok; ++n) {
            const BigInt brute = enumCount(scheme, n);
            const BigInt dp = countDP(scheme, n);
            if (rec[n] != brute || rec[n] != dp) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": recurrence " + str(rec[n]) + ", enum " +
                         str(brute) + ", dp " + str(dp);
            }
        }
        out.push_back(check("recurrence k=" + std::to_string(k) + " d=" + std::to_string(d), ok,
                            detail));
    }
    return out;
}

template <class Items, class Fwd, class Rev>
CheckResult roundtrip(std::string name, const Items& items, Fwd fwd, Rev rev)
{
    std::size_t n = 0;
    for (const auto& x : items) {
        ++n;
        try {
            auto y = fwd(x);
            if (!(rev(y) == x))
                return check(std::move(name), false, "roundtrip failed on item " + std::to_string(n));
        } catch (const std::exception& e) {
            return check(std::move(name), false, std::string("threw: ") + e.what());
        }
    }
    return check(std::move(name), true, std::to_string(n) + " items");
}

Results roundtrips(const Options& o)
{
    Results out;
    std::vector<ColoredComposition> color2, even, odd;
    std::vector<ChooseTwoComposition> c2;
    std::vector<TernaryString> tern;
    std::vector<Permutation> perms;
    std::vector<BinaryString> bins;
    for (int n = 1; n <= o.maxN; ++n) {
        for (auto& c : enumerate(ColoringScheme::restrictColors(2, 0), n))
            color2.push_back(c);
        for (auto& c : enumerate(ColoringScheme::even(), n))
            even.push_back(c);
        for (auto& c : enumerate(ColoringScheme::odd(), n))
            odd.push_back(c);
        if (n >= 2)
            for (auto& c : enumerateChooseTwo(n))
                c2.push_back(c);
        for (auto& s : enumerateTernary(static_cast<std::size_t>(n), TernaryBoundary::EvenImage))
            tern.push_back(s);
    }
    for (int k = 1; k <= o.maxPerm; ++k)
        for (auto& p : enumeratePermutations321Sep(k))
            perms.push_back(p);

    out.push_back(roundtrip("color2: rev(fwd(x))", color2, color2ToEven, evenToColor2));
    out.push_back(roundtrip("color2: fwd(rev(y))", even, evenToColor2, color2ToEven));
    out.push_back(roundtrip("choose2: rev(fwd(x))", odd, oddToChooseTwo, chooseTwoToOdd));
    out.push_back(roundtrip("choose2: fwd(rev(y))", c2, chooseTwoToOdd, oddToChooseTwo));
    out.push_back(roundtrip("ternary: rev(fwd(x))", even, evenToTernary, ternaryToEven));
    out.push_back(roundtrip("ternary: fwd(rev(y))", tern, ternaryToEven, evenToTernary));
    out.push_back(roundtrip("perm: rev(fwd(x))", perms, permToEven, evenToPerm));
    {
        std::vector<ColoredComposition> evenSmall;
        for (const auto& c : even)
            if (c.total() <= o.maxPerm)
                evenSmall.push_back(c);
        out.push_back(roundtrip("perm: fwd(rev(y))", evenSmall, evenToPerm, permToEven));
    }

    // binary: EVEN(k+1) is the disjoint union of the fibers over strings of length k
    {
        bool ok = true;
        std::string detail;
        std::size_t items = 0;
        for (int k = 1; k + 1 <= o.maxN && ok; ++k) {
            std::set<std::vector<Part>> seen;
            for (const auto& s : allBinaryStrings(static_cast<std::size_t>(k))) {
                for (const auto& c : binaryFiber(s)) {
                    ++items;
                    if (!(compToBinary(c) == s) || !seen.insert(c.parts()).second) {
                        ok = false;
                        detail = "string " + s.str();
                    }
                }
            }
            if (ok && BigInt(seen.size()) != countDP(ColoringScheme::even(), k + 1)) {
                ok = false;
                detail = "fibers do not cover EVEN(" + std::to_string(k + 1) + ")";
            }
        }
        out.push_back(check("binary: fibers partition EVEN(k+1)", ok,
                            ok ? std::to_string(items) + " items" : detail));
    }

    // peel: unpeel(peel(x)) = x for every class K != 1
    {
        bool ok = true;
        std::size_t items = 0;
        std::string detail;
        for (int m = 2; m <= std::min(o.m, 5) && ok; ++m) {
            for (int K = 2; K <= m && ok; ++K) {
                const auto scheme = ColoringScheme::positional(m, K);
                for (int n = 2; n <= o.maxN && ok; ++n) {
                    for (const auto& c : enumerate(scheme, n)) {
                        ++items;
                        const auto p = peelFirst(c, scheme);
                        if (!validate(p.comp, p.scheme) || !(unpeel(p) == c)) {
                            ok = false;
                            detail = format(c);
                            break;
                        }
                    }
                }
            }
        }
        out.push_back(check("peel: unpeel(peel(x))", ok, ok ? std::to_string(items) + " items" : detail));
    }
    return out;
}

Results equinumerosity(const Options& o)
{
    Results out;
    const auto E = [](int n) { return countDP(ColoringScheme::even(), n); };
    const auto O = [](int n) { return countDP(ColoringScheme::odd(), n); };

    auto series = [&](std::string name, int from, int to, const std::function<BigInt(int)>& lhs,
                      const std::function<BigInt(int)>& rhs) {
        for (int n = from; n <= to; ++n) {
            BigInt l = lhs(n), r = rhs(n);
            if (l != r) {
                out.push_back(check(name, false,
                                    "n=" + std::to_string(n) + ": " + str(l) + " vs " + str(r)));
                return;
            }
        }
        out.push_back(check(name, true, std::to_string(from) + "<=n<=" + std::to_string(to)));
    };

    series("|avoid color 2 (n)| = e(n)", 1, o.maxN,
           [](int n) { return BigInt(drainCount(enumerate(ColoringScheme::restrictColors(2, 0), n))); }, E);
    series("|ODD(n)| = |choose2(n+1)|", 1, o.maxN,
           [](int n) { return BigInt(drainCount(enumerate(ColoringScheme::odd(), n))); },
           [](int n) { return BigInt(drainCount(enumerateChooseTwo(n + 1))); });
    series("|ternary even-image(n)| = e(n)", 1, o.maxN,
           [](int n) {
               return BigInt(drainCount(enumerateTernary(static_cast<std::size_t>(n), TernaryBoundary::EvenImage)));
           },
           E);
    series("|ternary corollary(n-1)| = o(n)", 2, o.maxN,
           [](int n) {
               return BigInt(drainCount(enumerateTernary(static_cast<std::size_t>(n - 1), TernaryBoundary::Corollary)));
           },
           O);
    series("sum runProduct(len n) = e(n+1)", 1, o.maxN,
           [](int n) {
               BigInt s = 0;
               for (const auto& b : allBinaryStrings(static_cast<std::size_t>(n)))
                   s += runProduct(b);
               return s;
           },
           [&](int n) { return E(n + 1); });
    series("sum runProduct(len n, starts 1) = o(n)", 1, o.maxN,
           [](int n) {
               BigInt s = 0;
               for (const auto& b : allBinaryStrings(static_cast<std::size_t>(n)))
                   if (b.str().front() == '1')
                       s += runProduct(b);
               return s;
           },
           O);
    series("|321-avoiding separable perms(n)| = e(n)", 1, o.maxPerm,
           [](int n) { return BigInt(drainCount(enumeratePermutations321Sep(n))); }, E);
    return out;
}

Results identity(const Options& o)
{
    Results out;
    const auto e = expand(gfEven(), static_cast<std::size_t>(o.maxN + 1));
    const auto od = expand(gfOdd(), static_cast<std::size_t>(o.maxN + 1));
    for (int n = 1; n <= o.maxN; ++n) {
        const bool ok = e[n + 1] == e[n] + od[n];
        out.push_back(check("e(" + std::to_string(n + 1) + ") = e(" + std::to_string(n) + ") + o(" +
                                std::to_string(n) + ")",
                            ok, str(e[n + 1]) + " = " + str(e[n]) + " + " + str(od[n])));
    }

    const int m = o.m;
    for (int k = 1; k <= m - 1; ++k) {
        const auto hi = ColoringScheme::positional(m, k + 1);
        const auto lo = ColoringScheme::positional(m, k);
        bool ok = true;
        std::string detail = "1<=l<=" + std::to_string(o.maxN);
        for (int l = 1; l <= o.maxN && ok; ++l) {
            BigInt lhs = countDP(hi, l + 1), rhs = countDP(hi, l) + countDP(lo, l);
            if (lhs != rhs) {
                ok = false;
                detail = "l=" + std::to_string(l) + ": " + str(lhs) + " vs " + str(rhs);
            }
        }
        out.push_back(check("c(" + std::to_string(m) + "," + std::to_string(k + 1) +
                                ")(l+1) = c(" + std::to_string(m) + "," + std::to_string(k + 1) +
                                ")(l) + c(" + std::to_string(m) + "," + std::to_string(k) + ")(l)",
                            ok, detail));

        // peeling splits the (m,k+1) compositions of l+1 into the two families
        bool fiberOk = true;
        std::string fiberDetail = "1<=l<=" + std::to_string(std::min(o.maxN, 12));
        for (int l = 1; l <= std::min(o.maxN, 12) && fiberOk; ++l) {
            BigInt removed = 0, decremented = 0;
            for (const auto& c : enumerate(hi, l + 1)) {
                auto p = peelFirst(c, hi);
                (p.branch == Peeled::Branch::Removed ? removed : decremented) += 1;
            }
            if (removed != countDP(lo, l) || decremented != countDP(hi, l)) {
                fiberOk = false;
                fiberDetail = "l=" + std::to_string(l) + ": removed " + str(removed) +
                              ", decremented " + str(decremented);
            }
        }
        out.push_back(check("peel fibers (" + std::to_string(m) + "," + std::to_string(k + 1) + ")",
                            fiberOk, fiberDetail));
    }

    // Side conditions k >= 1, l >= 2, m <= l-1 taken literally also admit
    // k = 0 (mod m), where the identity fails. Reported as information only.
    {
        const auto hi = ColoringScheme::positional(m, 1);
        const auto lo = ColoringScheme::positional(m, m);
        int violations = 0;
        std::string first;
        for (int l = std::max(2, m + 1); l <= o.maxN; ++l) {
            BigInt lhs = countDP(hi, l + 1), rhs = countDP(hi, l) + countDP(lo, l);
            if (lhs != rhs) {
                if (!violations)
                    first = "l=" + std::to_string(l) + ": " + str(lhs) + " vs " + str(rhs);
                ++violations;
            }
        }
        CheckResult r = check("literal side conditions, k=" + std::to_string(m) + " (wraps to class 1)",
                              violations == 0,
                              violations ? std::to_string(violations) + " violations, first " + first
                                         : "no violations");
        r.informational = true;
        out.push_back(r);
    }
    return out;
}

Results parser(const Options& o)
{
    Results out;
    for (int k = 1; k <= o.maxPerm; ++k) {
        std::vector<int> v(k);
        for (int i = 0; i < k; ++i)
            v[i] = i + 1;
        bool ok = true;
        std::size_t accepted = 0;
        std::string detail;
        do {
            Permutation p(v);
            const bool parsed = tryParseBlocks(p).has_value();
            accepted += parsed;
            if (parsed != isSeparable321Avoiding(p)) {
                ok = false;
                detail = "disagree on " + p.str();
                break;
            }
        } while (std::next_permutation(v.begin(), v.end()));
        out.push_back(check("parseBlocks <=> avoids {321,2413,3142}, k=" + std::to_string(k), ok,
                            ok ? std::to_string(accepted) + " accepted" : detail));
    }
    return out;
}

const std::map<std::string, std::function<Results(const Options&)>, std::less<>>& registry()
{
    static const std::map<std::string, std::function<Results(const Options&)>, std::less<>> r = {
        {"gf-vs-dp", gfVsDp},
        {"recurrence", recurrence},
        {"roundtrips", roundtrips},
        {"equinumerosity", equinumerosity},
        {"identity", identity},
        {"parser", parser},
    };
    return r;
}

} // namespace

const std::vector<std::string>& suiteNames()
{
    static const std::vector<std::string> names = {"gf-vs-dp", "recurrence", "roundtrips",
                                                   "equinumerosity", "identity", "parser", "all"};
    return names;
}

std::vector<CheckResult> run(std::string_view suite, const Options& options)
{
    if (options.maxN < 1 || options.m < 1 || options.maxPerm < 1)
        throw DomainError("verify ranges must be positive");
    if (options.maxPerm > SeparablePermutationStream::kMaxPermutationSize)
        throw DomainError("--max-perm is capped at " +
                          std::to_string(SeparablePermutationStream::kMaxPermutationSize));
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto& [name, fn] : registry()) {
            auto part = fn(options);
            for (auto& r : part)
                r.name = name + ": " + r.name;
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    auto it = registry().find(suite);
    if (it == registry().end())
        throw DomainError("unknown suite '" + std::string(suite) + "'");
    return it->second(options);
}

bool allPassed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed || r.informational; });
}

std::string formatTable(const std::vector<CheckResult>& results)
{
    std::size_t width = 5;
    for (const auto& r : results)
        width = std::max(width, r.name.size());
    std::ostringstream out;
    auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
    out << pad("check") << "  status  detail\n";
    out << std::string(width, '-') << "  ------  ------\n";
    std::size_t failed = 0;
    for (const auto& r : results) {
        const char* status = r.informational ? (r.passed ? "info  " : "note  ")
                                             : (r.passed ? "PASS  " : "FAIL  ");
        if (!r.passed && !r.informational)
            ++failed;
        out << pad(r.name) << "  " << status << "  " << r.detail << '\n';
    }
    out << results.size() << " checks, " << failed << " failed\n";
    return out.str();
}

} // namespace ncolor::verify
