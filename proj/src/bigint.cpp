#include "markov/bigint.hpp"

#include <cctype>
#include <cmath>

#include "markov/error.hpp"

namespace markov {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

std::string to_decimal(const Rational& v) {
  Rational c(v);
  c.canonicalize();
  return c.get_str(10);
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(Errc::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(Errc::InvalidArgument, "not an integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::size_t decimal_digits(const BigInt& v) {
  if (v == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t n = mpz_sizeinbase(v.get_mpz_t(), 10);
  BigInt a = abs(v);
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n - 1));
  return a < p ? n - 1 : n;
}

void check_digits(const BigInt& v, const Budget& budget) {
  if (mpz_sizeinbase(v.get_mpz_t(), 10) > budget.max_digits + 1 ||
      decimal_digits(v) > budget.max_digits) {
    throw Error(Errc::ResourceLimit,
                "value exceeds digit cap of " + std::to_string(budget.max_digits));
  }
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw Error(Errc::InvalidArgument, "isqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& v) {
  return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  BigInt r;
  BigInt mm = from_u64(m);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
  return to_u64(r);
}

bool fits_u64(const BigInt& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw Error(Errc::InvalidArgument, "value does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

BigInt from_u128(unsigned __int128 v) {
  BigInt hi = from_u64(static_cast<std::uint64_t>(v >> 64));
  BigInt lo = from_u64(static_cast<std::uint64_t>(v));
  return (hi << 64) + lo;
}

double log10_abs(const BigInt& v) {
  if (v == 0) throw Error(Errc::InvalidArgument, "log10 of zero");
  std::string s = BigInt(abs(v)).get_str(10);
  std::size_t lead = std::min<std::size_t>(15, s.size());
  double mantissa = std::stod(s.substr(0, lead));
  return std::log10(mantissa) + static_cast<double>(s.size() - lead);
}

}  // namespace markov
