#pragma once

// Word-sized modular helpers. Internal to the library.

#include <cmath>
#include <cstdint>
#include <utility>

namespace markov::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 addmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) + b) % m); }
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
inline u64 invmod(u64 a, u64 m) {
  __int128 t = 0, nt = 1;
  __int128 r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

inline u128 isqrt_u128(u128 n) {
  if (n == 0) return 0;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_square_u128(u128 n, u128* root = nullptr) {
  // Squares mod 64 occupy 12 of 64 residues; rejects most candidates cheaply.
  constexpr u64 kSquareMask64 = 0x0202021202030213ULL;
  if (!((kSquareMask64 >> static_cast<unsigned>(n & 63)) & 1)) return false;
  u128 r = isqrt_u128(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// (U_k, U_{k+1}) of U(P, 1) modulo m for k >= 0, by fast doubling:
//   U_2k = U_k (2 U_{k+1} - P U_k),  U_{2k+1} = U_{k+1}^2 - U_k^2.
inline std::pair<u64, u64> lucas_u_pair_mod(u64 p, u64 k, u64 m) {
  p %= m;
  u64 a = 0, b = 1 % m;
  for (int bit = 63; bit >= 0; --bit) {
    u64 two_b = addmod(b, b, m);
    u64 c = mulmod(a, submod(two_b, mulmod(p, a, m), m), m);
    u64 d = submod(mulmod(b, b, m), mulmod(a, a, m), m);
    if ((k >> bit) & 1) {
      a = d;
      b = submod(mulmod(p, d, m), c, m);
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b};
}

}  // namespace markov::detail
