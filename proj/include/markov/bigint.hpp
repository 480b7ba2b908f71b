#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace markov {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Resource caps shared by every operation that can blow up: big-int growth
/// (region numbers roughly square per tree level) and tree node counts.
struct Budget {
  std::size_t max_digits = 1'000'000;
  std::size_t max_nodes = std::size_t{1} << 22;
};

std::string to_decimal(const BigInt& v);
std::string to_decimal(const Rational& v);

// Throws Error(InvalidArgument) on anything but an optionally signed decimal.
BigInt parse_bigint(std::string_view text);

std::size_t decimal_digits(const BigInt& v);

// Throws ResourceLimit when |v| has more than budget.max_digits digits.
void check_digits(const BigInt& v, const Budget& budget);

BigInt isqrt(const BigInt& v);
bool is_perfect_square(const BigInt& v);

// Least non-negative residue of v modulo m (m >= 1).
std::uint64_t mod_u64(const BigInt& v, std::uint64_t m);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);
BigInt from_u64(std::uint64_t v);
BigInt from_u128(unsigned __int128 v);

// log10|v| from the exact digit count and the leading 15 digits, so huge
// values never go through a double.
double log10_abs(const BigInt& v);

}  // namespace markov
