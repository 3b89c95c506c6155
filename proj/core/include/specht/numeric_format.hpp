#ifndef SPECHT_NUMERIC_FORMAT_HPP
#define SPECHT_NUMERIC_FORMAT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace specht {

/// Nearest integer, ties rounded toward +infinity.
mpz_class round_half_up(const mpq_class& q);

/// Fixed-point rendering with `digits` fractional digits, round-half-up.
std::string decimal_string(const mpq_class& q, int digits);

/// 100 * part / whole with one decimal, round-half-up ("32.4"). whole == 0 gives "0.0".
std::string percent_string(std::uint64_t part, std::uint64_t whole);

} // namespace specht

#endif // SPECHT_NUMERIC_FORMAT_HPP
