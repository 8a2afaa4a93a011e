// oeis.cpp

#include "ncolor/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#ifndef NCOLOR_FIXTURE_DIR
#define NCOLOR_FIXTURE_DIR "data/oeis"
#endif

namespace ncolor::oeis {

namespace fs = std::filesystem;

std::string_view sourceName(Source s)
{
    switch (s) {
    case Source::Network: return "network";
    case Source::Cache: return "cache";
    case Source::Fixture: return "fixture";
    }
    return "?";
}

bool isValidId(std::string_view id)
{
    return id.size() == 7 && id[0] == 'A' &&
           std::all_of(id.begin() + 1, id.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

namespace {

void requireId(std::string_view id)
{
    if (!isValidId(id))
        throw OeisError(OeisError::Kind::BadId,
                        "malformed OEIS id '" + std::string(id) + "' (expected A + 6 digits)");
}

std::string bFileName(std::string_view id)
{
    return "b" + std::string(id.substr(1)) + ".txt";
}

std::optional<std::string> readFile(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SequenceRecord makeRecord(std::string_view id, std::string_view text, Source source)
{
    BFile b = parseBFile(text);
    if (b.terms.empty())
        throw OeisError(OeisError::Kind::MalformedLine, "b-file for " + std::string(id) +
                                                            " contains no terms");
    return {std::string(id), b.offset, std::move(b.terms), source};
}

} // namespace

std::string bFileUrl(std::string_view id)
{
    requireId(id);
    return "https://oeis.org/" + std::string(id) + "/" + bFileName(id);
}

BFile parseBFile(std::string_view text)
{
    BFile out;
    std::size_t lineNo = 0;
    std::optional<long long> expected;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++lineNo;

        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string idx, val, extra;
        if (!(ls >> idx))
            continue;
        auto bad = [&](const std::string& why) {
            return OeisError(OeisError::Kind::MalformedLine,
                             "b-file line " + std::to_string(lineNo) + ": " + why, lineNo);
        };
        if (!(ls >> val) || (ls >> extra))
            throw bad("expected \"index value\"");
        long long index = 0;
        try {
            std::size_t used = 0;
            index = std::stoll(idx, &used);
            if (used != idx.size())
                throw std::invalid_argument(idx);
        } catch (const std::exception&) {
            throw bad("bad index '" + idx + "'");
        }
        BigInt value;
        {
            std::size_t start = (val[0] == '-' || val[0] == '+') ? 1 : 0;
            if (start == val.size() ||
                !std::all_of(val.begin() + static_cast<long>(start), val.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw bad("bad value '" + val + "'");
            value = BigInt(val);
        }
        if (expected && index != *expected)
            throw bad("index " + std::to_string(index) + " does not follow " +
                      std::to_string(*expected - 1));
        if (!expected)
            out.offset = index;
        expected = index + 1;
        out.terms.push_back(std::move(value));
    }
    return out;
}

std::optional<std::string> httpGet(const std::string& url, std::chrono::milliseconds timeout)
{
    const auto schemeEnd = url.find("://");
    if (schemeEnd == std::string::npos)
        return std::nullopt;
    const auto pathStart = url.find('/', schemeEnd + 3);
    const std::string host = url.substr(0, pathStart);
    const std::string path = pathStart == std::string::npos ? "/" : url.substr(pathStart);
    try {
        httplib::Client cli(host);
        cli.set_follow_location(true);
        cli.set_connection_timeout(timeout);
        cli.set_read_timeout(timeout);
        auto res = cli.Get(path);
        if (!res || res->status != 200)
            return std::nullopt;
        return res->body;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

FetchOptions FetchOptions::fromEnvironment()
{
    FetchOptions o;
    if (const char* c = std::getenv("NCOLOR_OEIS_CACHE"); c && *c)
        o.cacheDir = c;
    else if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        o.cacheDir = fs::path(x) / "ncolor" / "oeis";
    else if (const char* h = std::getenv("HOME"); h && *h)
        o.cacheDir = fs::path(h) / ".cache" / "ncolor" / "oeis";
    else
        o.cacheDir = fs::temp_directory_path() / "ncolor-oeis";

    if (const char* f = std::getenv("NCOLOR_OEIS_FIXTURES"); f && *f)
        o.fixtureDir = f;
    else
        o.fixtureDir = NCOLOR_FIXTURE_DIR;
    return o;
}

fs::path cachePath(const fs::path& dir, std::string_view id)
{
    requireId(id);
    return dir / bFileName(id);
}

void writeCache(const fs::path& dir, std::string_view id, std::string_view text)
{
    const fs::path target = cachePath(dir, id);
    fs::create_directories(dir);
    std::ostringstream tmpName;
    tmpName << target.filename().string() << ".tmp." << std::this_thread::get_id();
    const fs::path tmp = dir / tmpName.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
    fs::rename(tmp, target);
}

std::optional<std::string> readCache(const fs::path& dir, std::string_view id)
{
    return readFile(cachePath(dir, id));
}

SequenceRecord fetch(std::string_view id, const FetchOptions& options)
{
    requireId(id);
    auto fromFixture = [&]() {
        auto text = readFile(options.fixtureDir / bFileName(id));
        if (!text)
            throw OeisError(OeisError::Kind::UnknownId,
                            "no fixture for " + std::string(id) + " in " +
                                options.fixtureDir.string());
        return makeRecord(id, *text, Source::Fixture);
    };

    if (options.offline)
        return fromFixture();

    if (options.transport) {
        if (auto body = options.transport(bFileUrl(id), options.timeout)) {
            SequenceRecord rec = makeRecord(id, *body, Source::Network);
            if (!options.cacheDir.empty()) {
                try {
                    writeCache(options.cacheDir, id, *body);
                } catch (const std::exception&) {
                    // the record is still good without a cache entry
                }
            }
            return rec;
        }
    }
    if (!options.cacheDir.empty())
        if (auto cached = readCache(options.cacheDir, id))
            return makeRecord(id, *cached, Source::Cache);
    return fromFixture();
}

// ----------------------------------------------------------------------------
// Alignment
// ----------------------------------------------------------------------------

namespace {

struct Candidate
{
    Alignment al;
    std::vector<BigInt> run;
};

Candidate measure(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int s)
{
    Candidate c;
    c.al.shift = s;
    const long long sa = static_cast<long long>(a.size());
    const long long sb = static_cast<long long>(b.size());
    const long long start = std::max(0LL, -static_cast<long long>(s));
    const long long stop = std::min(sa, sb - s);
    if (stop <= start)
        return c;
    c.al.overlap = static_cast<std::size_t>(stop - start);
    for (long long i = start; i < stop; ++i) {
        const BigInt& x = a[static_cast<std::size_t>(i)];
        const BigInt& y = b[static_cast<std::size_t>(i + s)];
        if (x != y) {
            c.al.firstMismatch = Mismatch{static_cast<std::size_t>(i), x, y};
            break;
        }
        c.run.push_back(x);
        ++c.al.matched;
    }
    return c;
}

bool better(const Candidate& x, const Candidate& y)
{
    if (x.al.matched != y.al.matched)
        return x.al.matched > y.al.matched;
    if (std::abs(x.al.shift) != std::abs(y.al.shift))
        return std::abs(x.al.shift) < std::abs(y.al.shift);
    if (x.run != y.run)
        return x.run < y.run;
    return x.al.shift > y.al.shift;
}

} // namespace

Alignment alignSequences(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int maxShift)
{
    std::optional<Candidate> best;
    for (int s = -maxShift; s <= maxShift; ++s) {
        Candidate c = measure(a, b, s);
        if (!best || better(c, *best))
            best = std::move(c);
    }
    if (!best || best->al.matched < kMinMatched) {
        throw OeisError(OeisError::Kind::Mismatch,
                        "no shift within +/-" + std::to_string(maxShift) + " matches " +
                            std::to_string(kMinMatched) + " consecutive terms (best: " +
                            std::to_string(best ? best->al.matched : 0) + ")");
    }
    return best->al;
}

Alignment align(const SequenceRecord& rec, const std::vector<BigInt>& computed)
{
    if (computed.empty())
        throw OeisError(OeisError::Kind::Mismatch, "nothing to align: computed sequence is empty");
    return alignSequences(computed, rec.terms);
}

} // namespace ncolor::oeis
