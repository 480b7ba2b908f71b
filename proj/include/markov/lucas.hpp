#pragma once

#include <cstdint>
#include <utility>

#include "markov/bigint.hpp"

namespace markov {

/// Parameters of U_k(3R, 1) and V_k(3R, 1).
struct LucasParams {
  BigInt R;

  explicit LucasParams(BigInt region);
  BigInt P() const { return 3 * R; }
};

// Fast doubling; negative k by U_{-k} = -U_k and V_{-k} = V_k.
BigInt lucas_U(const LucasParams& params, std::int64_t k, const Budget& budget = {});
BigInt lucas_V(const LucasParams& params, std::int64_t k, const Budget& budget = {});

// Plain recurrence. Slow; kept as the reference the fast path is tested against.
BigInt lucas_U_linear(const LucasParams& params, std::int64_t k);
BigInt lucas_V_linear(const LucasParams& params, std::int64_t k);

/// (U_{k-1}, U_k) for any integer k.
std::pair<BigInt, BigInt> lucas_U_adjacent(const LucasParams& params, std::int64_t k,
                                           const Budget& budget = {});

/// b*U_n - a*U_{n-1}: the edge sequence with seq_U(a,R,b,0) = a, seq_U(a,R,b,1) = b.
BigInt seq_U(const BigInt& a, const BigInt& R, const BigInt& b, std::int64_t n,
             const Budget& budget = {});

/// z*V_n - x*V_{n-1}.
BigInt seq_V(const BigInt& x, const BigInt& R, const BigInt& z, std::int64_t n,
             const Budget& budget = {});

/// U_k(P, 1) mod m for any integer k (m >= 1).
std::uint64_t lucas_U_mod(std::uint64_t P, std::int64_t k, std::uint64_t m);

/// seq_U(a, R, b, n) mod m, with a, b, R already reduced or not.
std::uint64_t seq_U_mod(std::uint64_t a, std::uint64_t R, std::uint64_t b, std::int64_t n,
                        std::uint64_t m);

}  // namespace markov
