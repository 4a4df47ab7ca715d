#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wrd {

using Rational = mpq_class;

/// Parses "7", "-3", "2.5", ".5" or "p/q" into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q" in lowest terms, or a bare integer.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);
Rational ceil(const Rational& r);
Rational floor(const Rational& r);

Rational sum(std::span<const Rational> values);
Rational min_of(std::span<const Rational> values);

/// Parses a comma-separated list of rationals ("1,5/2,3.25").
std::vector<Rational> parse_rational_list(std::string_view text);
std::string join(std::span<const Rational> values, std::string_view sep = ",");

/// Weights rescaled by the lcm of their denominators so that exhaustive
/// searches can run on machine integers. `values[i] = w_i * scale`.
struct ScaledWeights {
  std::vector<std::int64_t> values;
  Rational scale;
  std::int64_t total = 0;

  Rational to_rational(std::int64_t scaled) const {
    return Rational(mpz_class(static_cast<long>(scaled))) / scale;
  }
};

/// Throws std::overflow_error unless 4 * total fits in int64.
ScaledWeights scale_to_integers(std::span<const Rational> weights);

}  // namespace wrd
