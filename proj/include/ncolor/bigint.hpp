// bigint.hpp -- arbitrary-precision integer type shared by all counting code

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncolor {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Returns the value as int64 if it fits.
inline std::optional<std::int64_t> fitInt64(const BigInt& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return static_cast<std::int64_t>(v);
}

/// Binomial coefficient C(n, 2) for n >= 0.
inline BigInt choose2(long long n) { return n < 2 ? BigInt(0) : BigInt(n) * (n - 1) / 2; }

} // namespace ncolor
