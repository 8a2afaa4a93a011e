// verify.hpp -- named property suites shared by the CLI `verify` command

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ncolor::verify {

struct CheckResult
{
    std::string name;
    bool passed = true;
    std::string detail;
    /// Informational rows are reported but never fail a run.
    bool informational = false;
};

struct Options
{
    /// Modulus for the identity suite; upper bound on m for gf-vs-dp.
    int m = 4;
    /// Largest composition total examined.
    int maxN = 12;
    /// Largest permutation size examined.
    int maxPerm = 8;
};

/// Suite names accepted by `run`.
const std::vector<std::string>& suiteNames();

/// Runs one suite ("all" runs every suite). Throws `DomainError` for an
/// unknown name.
std::vector<CheckResult> run(std::string_view suite, const Options& options);

/// True iff no non-informational check failed.
bool allPassed(const std::vector<CheckResult>& results);

/// Fixed-width pass/fail table.
std::string formatTable(const std::vector<CheckResult>& results);

} // namespace ncolor::verify
