#include "markov/lucas.hpp"

#include <cmath>
#include <string>

#include "markov/error.hpp"
#include "modarith.hpp"

namespace markov {

namespace {

std::uint64_t magnitude(std::int64_t k) {
  return k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
}

// U_k grows like (3R)^k; refuse before allocating anything that large.
void check_index(const BigInt& P, std::uint64_t k, const Budget& budget) {
  double digits = static_cast<double>(k) * log10_abs(P);
  if (digits > static_cast<double>(budget.max_digits)) {
    throw Error(Errc::ResourceLimit, "U_" + std::to_string(k) + "(" + to_decimal(P) +
                                         ",1) would exceed " + std::to_string(budget.max_digits) +
                                         " digits");
  }
}

// (U_k, U_{k+1}) for k >= 0.
std::pair<BigInt, BigInt> u_pair(const BigInt& P, std::uint64_t k) {
  BigInt a = 0, b = 1;
  int top = 63;
  while (top >= 0 && !((k >> top) & 1)) --top;
  for (int bit = top; bit >= 0; --bit) {
    BigInt c = a * (2 * b - P * a);
    BigInt d = b * b - a * a;
    if ((k >> bit) & 1) {
      a = d;
      b = P * d - c;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

LucasParams::LucasParams(BigInt region) : R(std::move(region)) {
  if (R < 1) throw Error(Errc::InvalidArgument, "Lucas parameter R must be >= 1");
}

BigInt lucas_U(const LucasParams& params, std::int64_t k, const Budget& budget) {
  const BigInt P = params.P();
  std::uint64_t n = magnitude(k);
  check_index(P, n, budget);
  BigInt u = u_pair(P, n).first;
  return k < 0 ? BigInt(-u) : u;
}

BigInt lucas_V(const LucasParams& params, std::int64_t k, const Budget& budget) {
  const BigInt P = params.P();
  std::uint64_t n = magnitude(k);
  check_index(P, n + 1, budget);
  auto [u, u1] = u_pair(P, n);
  return 2 * u1 - P * u;
}

BigInt lucas_U_linear(const LucasParams& params, std::int64_t k) {
  const BigInt P = params.P();
  BigInt a = 0, b = 1;
  for (std::uint64_t i = 0, n = magnitude(k); i < n; ++i) {
    BigInt next = P * b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return k < 0 ? BigInt(-a) : a;
}

BigInt lucas_V_linear(const LucasParams& params, std::int64_t k) {
  const BigInt P = params.P();
  BigInt a = 2, b = P;
  for (std::uint64_t i = 0, n = magnitude(k); i < n; ++i) {
    BigInt next = P * b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

std::pair<BigInt, BigInt> lucas_U_adjacent(const LucasParams& params, std::int64_t k,
                                           const Budget& budget) {
  const BigInt P = params.P();
  if (k >= 1) {
    check_index(P, static_cast<std::uint64_t>(k), budget);
    return u_pair(P, static_cast<std::uint64_t>(k - 1));
  }
  // k <= 0: U_k = -U_{-k}, U_{k-1} = -U_{1-k}.
  std::uint64_t n = magnitude(k);
  check_index(P, n + 1, budget);
  auto [u, u1] = u_pair(P, n);
  return {BigInt(-u1), BigInt(-u)};
}

BigInt seq_U(const BigInt& a, const BigInt& R, const BigInt& b, std::int64_t n,
             const Budget& budget) {
  auto [u_prev, u] = lucas_U_adjacent(LucasParams(R), n, budget);
  BigInt v = b * u - a * u_prev;
  check_digits(v, budget);
  return v;
}

BigInt seq_V(const BigInt& x, const BigInt& R, const BigInt& z, std::int64_t n,
             const Budget& budget) {
  LucasParams params(R);
  BigInt v = z * lucas_V(params, n, budget) - x * lucas_V(params, n - 1, budget);
  check_digits(v, budget);
  return v;
}

std::uint64_t lucas_U_mod(std::uint64_t P, std::int64_t k, std::uint64_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  std::uint64_t u = detail::lucas_u_pair_mod(P, magnitude(k), m).first;
  return k < 0 ? detail::submod(0, u, m) : u;
}

std::uint64_t seq_U_mod(std::uint64_t a, std::uint64_t R, std::uint64_t b, std::int64_t n,
                        std::uint64_t m) {
  using detail::mulmod;
  const std::uint64_t P = mulmod(3 % m, R % m, m);
  std::uint64_t u = lucas_U_mod(P, n, m);
  std::uint64_t u_prev = lucas_U_mod(P, n - 1, m);
  return detail::submod(mulmod(b % m, u, m), mulmod(a % m, u_prev, m), m);
}

}  // namespace markov
