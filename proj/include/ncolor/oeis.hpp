// oeis.hpp -- OEIS b-file client with a disk cache and bundled fixtures

#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncolor/bigint.hpp"

namespace ncolor::oeis {

enum class Source { Network, Cache, Fixture };

std::string_view sourceName(Source s);

struct SequenceRecord
{
    std::string id;
    long long offset = 0;
    std::vector<BigInt> terms;
    Source source = Source::Fixture;
};

class OeisError : public std::runtime_error
{
public:
    enum class Kind { BadId, UnknownId, MalformedLine, Network, Mismatch };

    OeisError(Kind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), _kind(kind), _line(line)
    {}

    Kind kind() const noexcept { return _kind; }
    /// 1-based line number for `MalformedLine`, 0 otherwise.
    std::size_t line() const noexcept { return _line; }

private:
    Kind _kind;
    std::size_t _line;
};

/// `A` followed by exactly six digits.
bool isValidId(std::string_view id);

/// "https://oeis.org/A034943/b034943.txt"
std::string bFileUrl(std::string_view id);

struct BFile
{
    long long offset = 0;
    std::vector<BigInt> terms;
};

/// Parses "index value" lines; '#' comments and blank lines are skipped.
/// Indices must be consecutive. Throws `OeisError(MalformedLine)`.
BFile parseBFile(std::string_view text);

/// Returns the body on success, nullopt on any transport failure.
using Transport = std::function<std::optional<std::string>(const std::string& url,
                                                           std::chrono::milliseconds timeout)>;

/// HTTPS GET through cpp-httplib.
std::optional<std::string> httpGet(const std::string& url, std::chrono::milliseconds timeout);

struct FetchOptions
{
    bool offline = true;
    std::filesystem::path cacheDir;
    std::filesystem::path fixtureDir;
    std::chrono::milliseconds timeout{10'000};
    Transport transport = httpGet;

    /// Cache dir from NCOLOR_OEIS_CACHE (else $XDG_CACHE_HOME/ncolor/oeis,
    /// else ~/.cache/ncolor/oeis); fixture dir from NCOLOR_OEIS_FIXTURES,
    /// else the directory bundled at build time.
    static FetchOptions fromEnvironment();
};

/// Offline: served from the fixture. Online: HTTP GET, stored in the cache;
/// on network failure falls back to the cache, then to the fixture.
SequenceRecord fetch(std::string_view id, const FetchOptions& options);

std::filesystem::path cachePath(const std::filesystem::path& dir, std::string_view id);
/// Writes through a temp file and an atomic rename.
void writeCache(const std::filesystem::path& dir, std::string_view id, std::string_view text);
std::optional<std::string> readCache(const std::filesystem::path& dir, std::string_view id);

// ----------------------------------------------------------------------------
// Alignment
// ----------------------------------------------------------------------------

struct Mismatch
{
    std::size_t index;  // into the first sequence
    BigInt left;
    BigInt right;
};

/// Result of matching sequence `a` against `b`, where a[i] pairs with
/// b[i + shift].
struct Alignment
{
    int shift = 0;
    std::size_t matched = 0;
    std::size_t overlap = 0;
    std::optional<Mismatch> firstMismatch;

    /// Acceptance threshold: min(12, overlap).
    std::size_t required() const { return std::min<std::size_t>(12, overlap); }
    bool accepted() const { return matched >= required() && matched > 0; }
};

constexpr int kMaxShift = 3;
constexpr std::size_t kMinMatched = 5;

/// Picks the shift |s| <= maxShift with the longest exact agreement run
/// starting at the first overlapping pair. Ties go to the smaller |s|, then
/// to the lexicographically smaller matched run. Throws
/// `OeisError(Mismatch)` if no shift matches at least `kMinMatched` terms.
Alignment alignSequences(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                         int maxShift = kMaxShift);

/// `computed` holds values for n = 1, 2, ...; rec.terms for indices
/// rec.offset, rec.offset+1, ...
Alignment align(const SequenceRecord& rec, const std::vector<BigInt>& computed);

} // namespace ncolor::oeis
