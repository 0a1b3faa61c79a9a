#pragma once

// Seeded property suites over the digits, system, operators and cylinder
// modules. Used by the `check` command.

#include <cstdint>
#include <string>
#include <vector>

namespace salem {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;  // empty when failed == 0
};

struct CheckReport {
    std::vector<SuiteResult> suites;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] std::size_t failed() const;
};

/// Runs every suite with `cases` random cases each (exhaustive suites run
/// once). Deterministic for a fixed seed.
CheckReport run_checks(std::uint64_t seed, std::size_t cases);

}  // namespace salem
