#pragma once

// Exact rational scalar used for every distance, coordinate and comparison.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace linf {

using Rational = mpq_class;

/// Parses `p`, `p/q` or a plain decimal such as `-1.25` into an exact rational.
/// Throws std::invalid_argument on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` in lowest terms otherwise.
std::string format_rational(const Rational& value);

Rational abs(const Rational& value);

/// Deterministic generator used everywhere a seed is accepted.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Modulo reduction keeps the mapping
/// identical across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform draw from the grid {lo + (hi - lo) * u / steps : u = 0..steps}.
Rational uniform_rational(Rng& rng, const Rational& lo, const Rational& hi,
                          std::uint64_t steps = 1'000'000'000ULL);

}  // namespace linf
