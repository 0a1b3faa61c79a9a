#pragma once

// Seeded generators for property checks. All draws go through the given
// engine so a fixed seed reproduces the same cases.

#include <random>

#include "salem/digits.hpp"
#include "salem/system.hpp"

namespace salem::random {

using Engine = std::mt19937_64;

std::uint64_t uniform_int(Engine& rng, std::uint64_t lo, std::uint64_t hi);

/// p_t = w_t / sum(w) with integer weights w_t in [1, max_weight].
ProbabilityVector probability_vector(Engine& rng, std::uint32_t q, std::uint64_t max_weight = 9);

/// q drawn from [q_lo, q_hi], then probability_vector.
ProbabilityVector probability_vector_in(Engine& rng, std::uint32_t q_lo, std::uint32_t q_hi);

DigitWord word(Engine& rng, Alphabet alphabet, std::size_t min_len, std::size_t max_len);

PeriodicDigits periodic(Engine& rng, Alphabet alphabet, std::size_t max_pre, std::size_t max_per);

/// A canonical string: any periodic string mapped through canonicalize.
PeriodicDigits canonical_periodic(Engine& rng, Alphabet alphabet, std::size_t max_pre, std::size_t max_per);

/// A string with tail (0) and a nonzero last preperiod letter, i.e. one
/// member of a twin pair.
PeriodicDigits twin_source(Engine& rng, Alphabet alphabet, std::size_t max_pre);

/// a/b in [0, 1] with b in [1, max_den].
Rational unit_rational(Engine& rng, std::uint64_t max_den);

}  // namespace salem::random
