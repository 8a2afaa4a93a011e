// cli.cpp

#include "ncolor/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncolor/bijections.hpp"
#include "ncolor/combicore.hpp"
#include "ncolor/errors.hpp"
#include "ncolor/notation.hpp"
#include "ncolor/oeis.hpp"
#include "ncolor/patterns.hpp"
#include "ncolor/series.hpp"
#include "ncolor/verify.hpp"

namespace ncolor::cli {

namespace {

using nlohmann::json;

json bigJson(const BigInt& v)
{
    if (auto i = fitInt64(v))
        return *i;
    return v.str();
}

json bigArray(const std::vector<BigInt>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(bigJson(x));
    return a;
}

struct SchemeFlags
{
    std::string scheme = "even";
    int m = 2;
    int k = 0;
    int lo = 2;
    int d = 0;
    CLI::Option* mOpt = nullptr;
    CLI::Option* kOpt = nullptr;
    CLI::Option* loOpt = nullptr;
    CLI::Option* dOpt = nullptr;

    void attach(CLI::App* app, const std::vector<std::string>& allowed)
    {
        app->add_option("--scheme", scheme, "Coloring scheme")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
        mOpt = app->add_option("--m", m, "Modulus for --scheme mk");
        kOpt = app->add_option("--k", k, "Residue class for --scheme mk (0 means m)");
        loOpt = app->add_option("--lo", lo, "First restricted color for --scheme restrict");
        dOpt = app->add_option("--d", d, "Restricted colors are lo..lo+d");
    }

    ColoringScheme resolve() const
    {
        const bool mk = *mOpt || *kOpt;
        const bool restrict = *loOpt || *dOpt;
        if (scheme != "mk" && mk)
            throw DomainError("--m/--k only apply to --scheme mk");
        if (scheme != "restrict" && restrict)
            throw DomainError("--lo/--d only apply to --scheme restrict");
        if (scheme == "even")
            return ColoringScheme::even();
        if (scheme == "odd")
            return ColoringScheme::odd();
        if (scheme == "mk") {
            if (!*mOpt || !*kOpt)
                throw DomainError("--scheme mk needs both --m and --k");
            return ColoringScheme::positional(m, k);
        }
        if (scheme == "restrict")
            return ColoringScheme::restrictColors(lo, d);
        return ColoringScheme::chooseTwo();
    }
};

json schemeJson(const ColoringScheme& s)
{
    if (auto p = s.get<Positional>())
        return {{"type", "positional"}, {"m", p->m}, {"k", p->k}};
    if (auto r = s.get<RestrictColors>())
        return {{"type", "restrict"}, {"lo", r->lo}, {"d", r->d}};
    return {{"type", "choose2"}};
}

void requirePositive(int n, const char* flag)
{
    if (n < 1)
        throw DomainError(std::string(flag) + " must be a positive integer");
}

// ---------------------------------------------------------------------------

int doCount(const SchemeFlags& sf, int n, bool asJson, std::ostream& out)
{
    requirePositive(n, "--n");
    const auto scheme = sf.resolve();
    const BigInt c = countDP(scheme, n);
    if (asJson)
        out << json{{"scheme", schemeJson(scheme)}, {"n", n}, {"count", bigJson(c)}}.dump() << '\n';
    else
        out << c << '\n';
    return kOk;
}

int doEnumerate(const SchemeFlags& sf, int n, bool asJson, std::ostream& out)
{
    requirePositive(n, "--n");
    const auto scheme = sf.resolve();
    if (scheme.get<ChooseTwo>()) {
        if (n < 2)
            throw DomainError("(n choose 2)-color compositions need --n >= 2");
        for (const auto& c : enumerateChooseTwo(n))
            out << (asJson ? toJson(c).dump() : format(c)) << '\n';
        return kOk;
    }
    for (const auto& c : enumerate(scheme, n))
        out << (asJson ? toJson(c).dump() : format(c)) << '\n';
    return kOk;
}

int doSeries(const SchemeFlags& sf, int terms, bool asJson, std::ostream& out)
{
    requirePositive(terms, "--terms");
    const auto scheme = sf.resolve();
    std::optional<RationalGF> gf;
    SeriesExpansion ex;
    if (auto p = scheme.get<Positional>()) {
        gf = (p->m == 2 && p->k == 2) ? gfEven() : (p->m == 2 && p->k == 1) ? gfOdd() : gfMK(p->m, p->k);
        ex = expand(*gf, static_cast<std::size_t>(terms));
    } else if (auto r = scheme.get<RestrictColors>()) {
        ex = recurrenceRestricted(r->lo, r->d, static_cast<std::size_t>(terms));
    } else {
        throw DomainError("series supports --scheme even|odd|mk|restrict");
    }
    const auto coeffs = ex.positiveTerms();
    if (asJson) {
        json j{{"scheme", schemeJson(scheme)}, {"coefficients", bigArray(coeffs)}};
        if (gf) {
            j["numerator"] = bigArray(gf->numerator().coefficients());
            j["denominator"] = bigArray(gf->denominator().coefficients());
        } else {
            const auto* r = scheme.get<RestrictColors>();
            j["recurrence"] = "a(n) = 3a(n-1) - a(n-2) - a(n-" + std::to_string(r->lo) + ") + a(n-" +
                              std::to_string(r->lo + r->d + 1) + ")";
        }
        out << j.dump() << '\n';
        return kOk;
    }
    if (gf) {
        out << "F(x) = " << gf->str() << '\n';
    } else {
        const auto* r = scheme.get<RestrictColors>();
        out << "a(n) = 3a(n-1) - a(n-2) - a(n-" << r->lo << ") + a(n-" << r->lo + r->d + 1
            << "), seeded by enumeration for n <= " << r->lo + r->d + 1 << '\n';
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out << (i ? " " : "") << coeffs[i];
    out << '\n';
    return kOk;
}

struct MapFlags
{
    std::string bijection;
    std::string direction = "fwd";
    std::string input;
    std::string scheme = "even";
    std::string reading = "direct";
    std::string branch;
    int m = 2;
    int k = 2;
    bool plain = false;
};

int doMap(const MapFlags& f, bool asJson, std::ostream& out)
{
    const bool fwd = f.direction == "fwd";
    auto emit = [&](const std::string& text, json j) {
        if (asJson)
            out << j.dump() << '\n';
        else
            out << text << '\n';
    };

    if (f.bijection == "color2") {
        auto c = parseComposition(f.input);
        auto r = fwd ? color2ToEven(c) : evenToColor2(c);
        emit(format(r), toJson(r));
    } else if (f.bijection == "choose2") {
        if (fwd) {
            auto r = oddToChooseTwo(parseComposition(f.input));
            emit(format(r), toJson(r));
        } else {
            auto r = chooseTwoToOdd(parseChooseTwo(f.input));
            emit(format(r, !f.plain), toJson(r));
        }
    } else if (f.bijection == "ternary") {
        if (fwd) {
            auto s = evenToTernary(parseComposition(f.input));
            emit(s.str(), json{{"string", s.str()}});
        } else {
            auto r = ternaryToEven(TernaryString(f.input));
            emit(format(r), toJson(r));
        }
    } else if (f.bijection == "binary") {
        const bool odd = f.scheme == "odd";
        if (fwd) {
            auto c = parseComposition(f.input);
            auto s = odd ? oddCompToBinary(c) : compToBinary(c);
            emit(s.str(), json{{"string", s.str()}});
        } else {
            BinaryString s(f.input);
            Skeleton sk = odd ? oddBinaryVariant(s, f.reading == "prepend" ? OddBinaryReading::PrependOne
                                                                            : OddBinaryReading::Direct)
                              : binaryToSkeleton(s);
            json j{{"skeleton", sk.sizes}, {"multiplicity", bigJson(sk.multiplicity)},
                   {"template", sk.templated()}};
            emit(sk.templated() + "\nmultiplicity " + sk.multiplicity.str(), j);
        }
    } else if (f.bijection == "perm") {
        if (fwd) {
            auto r = permToEven(Permutation::parse(f.input));
            emit(format(r), toJson(r));
        } else {
            auto p = evenToPerm(parseComposition(f.input));
            emit(p.str(), json{{"permutation", p.values()}});
        }
    } else if (f.bijection == "peel") {
        // --m/--k give the class of the composition of l+1
        const auto scheme = ColoringScheme::positional(f.m, f.k);
        const auto* pos = scheme.get<Positional>();
        if (fwd) {
            auto p = peelFirst(parseComposition(f.input), scheme);
            const auto* ps = p.scheme.get<Positional>();
            std::string tag = p.branch == Peeled::Branch::Removed ? "removed" : "decremented";
            emit(tag + " (" + std::to_string(ps->m) + "," + std::to_string(ps->k) + ") " + format(p.comp),
                 json{{"branch", tag}, {"scheme", schemeJson(p.scheme)}, {"composition", toJson(p.comp)}});
        } else {
            if (f.branch != "removed" && f.branch != "decremented")
                throw DomainError("--direction rev for peel needs --branch removed|decremented");
            const bool removed = f.branch == "removed";
            Peeled p{removed ? Peeled::Branch::Removed : Peeled::Branch::Decremented,
                     parseComposition(f.input),
                     removed ? ColoringScheme::positional(pos->m, pos->k - 1) : scheme};
            auto r = unpeel(p);
            emit(format(r), toJson(r));
        }
    }
    return kOk;
}

int doVerify(const std::string& suite, const verify::Options& o, std::ostream& out)
{
    auto results = verify::run(suite, o);
    out << verify::formatTable(results);
    return verify::allPassed(results) ? kOk : kVerificationFailed;
}

int doOeis(const std::string& id, bool offline, int terms, double timeoutSec,
           const std::string& schemeName, std::ostream& out)
{
    requirePositive(terms, "--terms");
    auto opts = oeis::FetchOptions::fromEnvironment();
    opts.offline = offline;
    opts.timeout = std::chrono::milliseconds(static_cast<long long>(timeoutSec * 1000));

    ColoringScheme scheme = ColoringScheme::even();
    if (!schemeName.empty())
        scheme = schemeName == "odd" ? ColoringScheme::odd() : ColoringScheme::even();
    else if (id == "A095263")
        scheme = ColoringScheme::odd();

    const auto rec = oeis::fetch(id, opts);
    std::vector<BigInt> computed;
    for (int n = 1; n <= terms; ++n)
        computed.push_back(countDP(scheme, n));
    const auto al = oeis::align(rec, computed);

    out << rec.id << " (" << oeis::sourceName(rec.source) << ", " << rec.terms.size()
        << " terms, offset " << rec.offset << ") vs " << scheme.describe() << " n=1.." << terms << '\n';
    out << "shift " << al.shift << ": computed n pairs with " << rec.id << "(n"
        << (rec.offset + al.shift - 1 >= 0 ? "+" : "") << rec.offset + al.shift - 1 << ")\n";
    out << "matched " << al.matched << " of " << al.overlap << " overlapping terms (required "
        << al.required() << ")\n";
    if (al.firstMismatch)
        out << "first mismatch at n=" << al.firstMismatch->index + 1 << ": computed "
            << al.firstMismatch->left << ", OEIS " << al.firstMismatch->right << '\n';
    out << (al.accepted() ? "PASS" : "FAIL") << '\n';
    return al.accepted() ? kOk : kVerificationFailed;
}

int doTiling(const std::string& input, bool spotConvention, std::ostream& out)
{
    auto parsed = parseAnyComposition(input);
    SpottedTiling t = std::holds_alternative<ChooseTwoComposition>(parsed)
                          ? toTiling(std::get<ChooseTwoComposition>(parsed))
                          : toTiling(std::get<ColoredComposition>(parsed),
                                     spotConvention ? SpotConvention::SpotAtCellOne
                                                    : SpotConvention::Unspotted);
    out << renderTiling(t) << '\n';
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Positional n-color compositions: counting, series, bijections, verification",
                 "ncolor"};
    app.require_subcommand(1);

    std::string formatName = "text";
    std::string outputPath;
    auto addIo = [&](CLI::App* sub) {
        sub->add_option("--format", formatName, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--output", outputPath, "Write output to this file instead of stdout");
    };

    SchemeFlags countFlags, enumFlags, seriesFlags;
    int n = 0, terms = 10;

    auto* count = app.add_subcommand("count", "Print the number of compositions of n");
    countFlags.attach(count, {"even", "odd", "mk", "restrict", "choose2"});
    count->add_option("--n", n, "Total")->required();
    addIo(count);

    auto* enumerateCmd = app.add_subcommand("enumerate", "Stream every composition of n");
    enumFlags.attach(enumerateCmd, {"even", "odd", "mk", "restrict", "choose2"});
    enumerateCmd->add_option("--n", n, "Total")->required();
    addIo(enumerateCmd);

    auto* series = app.add_subcommand("series", "Show the generating function and coefficients 1..N");
    seriesFlags.attach(series, {"even", "odd", "mk", "restrict"});
    series->add_option("--terms", terms, "Number of coefficients")->capture_default_str();
    addIo(series);

    MapFlags mf;
    auto* map = app.add_subcommand("map", "Apply a bijection");
    map->add_option("--bijection", mf.bijection, "Which correspondence")
        ->required()
        ->check(CLI::IsMember({"color2", "choose2", "ternary", "binary", "perm", "peel"}));
    map->add_option("--direction", mf.direction, "fwd or rev")
        ->check(CLI::IsMember({"fwd", "rev"}))
        ->capture_default_str();
    map->add_option("--input", mf.input, "Composition, string, or permutation literal")->required();
    map->add_option("--scheme", mf.scheme, "binary: even (default) or odd variant")
        ->check(CLI::IsMember({"even", "odd"}));
    map->add_option("--reading", mf.reading, "binary odd variant: direct or prepend")
        ->check(CLI::IsMember({"direct", "prepend"}));
    map->add_option("--m", mf.m, "peel: modulus")->capture_default_str();
    map->add_option("--k", mf.k, "peel: class of the composition of l+1")->capture_default_str();
    map->add_option("--branch", mf.branch, "peel rev: removed or decremented")
        ->check(CLI::IsMember({"removed", "decremented"}));
    map->add_flag("--plain", mf.plain, "choose2 rev: print even-positioned parts without color 1");
    addIo(map);

    std::string suite;
    verify::Options vo;
    auto* verifyCmd = app.add_subcommand("verify", "Run a property suite and print a pass/fail table");
    verifyCmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(verify::suiteNames()));
    verifyCmd->add_option("--m", vo.m, "Modulus (identity) / largest m (gf-vs-dp)")->capture_default_str();
    verifyCmd->add_option("--max-n", vo.maxN, "Largest total")->capture_default_str();
    verifyCmd->add_option("--max-perm", vo.maxPerm, "Largest permutation size")->capture_default_str();
    verifyCmd->add_option("--output", outputPath, "Write output to this file instead of stdout");

    std::string oeisId, oeisScheme;
    bool offline = false;
    double timeoutSec = 10.0;
    int oeisTerms = 20;
    auto* oeisCmd = app.add_subcommand("oeis", "Fetch an OEIS b-file and align it with computed counts");
    oeisCmd->add_option("--id", oeisId, "OEIS id, e.g. A034943")->required();
    oeisCmd->add_flag("--offline", offline, "Use the bundled fixture only");
    oeisCmd->add_option("--terms", oeisTerms, "Computed terms to compare")->capture_default_str();
    oeisCmd->add_option("--timeout", timeoutSec, "Network timeout in seconds")->capture_default_str();
    oeisCmd->add_option("--scheme", oeisScheme, "Computed sequence (default chosen by id)")
        ->check(CLI::IsMember({"even", "odd"}));
    oeisCmd->add_option("--output", outputPath, "Write output to this file instead of stdout");

    std::string tilingInput;
    bool spotConvention = false;
    auto* tiling = app.add_subcommand("tiling", "Render a composition as a spotted tiling");
    tiling->add_option("--input", tilingInput, "Composition literal")->required();
    tiling->add_flag("--spot-convention", spotConvention, "Draw uncolored parts with a spot in cell 1");
    tiling->add_option("--output", outputPath, "Write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return kDomainError;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!outputPath.empty()) {
        file.open(outputPath, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << outputPath << " for writing\n";
            return kDomainError;
        }
        sink = &file;
    }
    const bool asJson = formatName == "json";

    try {
        if (*count)
            return doCount(countFlags, n, asJson, *sink);
        if (*enumerateCmd)
            return doEnumerate(enumFlags, n, asJson, *sink);
        if (*series)
            return doSeries(seriesFlags, terms, asJson, *sink);
        if (*map)
            return doMap(mf, asJson, *sink);
        if (*verifyCmd)
            return doVerify(suite, vo, *sink);
        if (*oeisCmd)
            return doOeis(oeisId, offline, oeisTerms, timeoutSec, oeisScheme, *sink);
        if (*tiling)
            return doTiling(tilingInput, spotConvention, *sink);
    } catch (const oeis::OeisError& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == oeis::OeisError::Kind::Mismatch ? kVerificationFailed : kDomainError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kDomainError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"ncolor"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace ncolor::cli
