#pragma once

// Command layer of the `salem` executable. Kept as a library so tests can
// drive commands without spawning processes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salem/operators.hpp"
#include "salem/rational.hpp"
#include "salem/system.hpp"

namespace salem::cli {

enum class Command { encode, decode, cylinder, map, alternate, demo, sample, check };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Raised for malformed flag values; `flag` names the offending option.
class UsageError : public std::invalid_argument {
public:
    UsageError(std::string flag, const std::string& message)
        : std::invalid_argument(flag + ": " + message), flag_(std::move(flag)) {}

    [[nodiscard]] const std::string& flag() const { return flag_; }

private:
    std::string flag_;
};

struct CommandRequest {
    Command command = Command::demo;
    std::optional<ProbabilityVector> system;
    std::optional<DigitPermutation> permutation;
    std::optional<AlternatingScheme> scheme;
    std::optional<std::string> digits;
    std::optional<std::string> base;
    std::optional<Rational> x;
    std::size_t max_digits = 4096;
    std::size_t n = 100;
    unsigned places = 12;
    bool exact = false;
    std::uint64_t seed = 42;
    std::size_t cases = 200;
};

/// Runs a validated request. Returns 0 on success, 1 when `check` finds a
/// failure, 2 on a usage error (message written to `err`).
int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run_command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Exact (x, S(x)) for x = k/n, k = 0..n. S(x) evaluates the canonical
/// q-ary digits of x under P.
std::vector<std::pair<Rational, Rational>> sample_points(const ProbabilityVector& P, std::size_t n);

/// CSV with header `x,S`, both columns rendered to `places` decimals.
std::string sample_csv(const ProbabilityVector& P, std::size_t n, unsigned places);

/// Fixed table of the worked example values.
std::string demo_table(bool exact, unsigned places);

}  // namespace salem::cli
