#include "doctest.h"
#include "markov/markov.hpp"

using namespace markov;

TEST_CASE("small Lucas values for R = 1") {
  LucasParams p(BigInt(1));
  // P = 3: U = 0, 1, 3, 8, 21 (even-indexed Fibonacci), V = 2, 3, 7, 18, 47.
  const long u[] = {0, 1, 3, 8, 21};
  const long v[] = {2, 3, 7, 18, 47};
  for (int k = 0; k < 5; ++k) {
    CHECK(lucas_U(p, k) == u[k]);
    CHECK(lucas_V(p, k) == v[k]);
  }
  CHECK(lucas_U(p, -1) == -1);
  CHECK(lucas_U(p, -3) == -8);
  CHECK(lucas_V(p, -2) == 7);
}

TEST_CASE("fast doubling agrees with the linear recurrence") {
  for (long R : {1L, 2L, 5L, 13L, 433L, 1325L}) {
    LucasParams p{BigInt(R)};
    for (std::int64_t k = -40; k <= 40; ++k) {
      CHECK(lucas_U(p, k) == lucas_U_linear(p, k));
      CHECK(lucas_V(p, k) == lucas_V_linear(p, k));
    }
  }
}

TEST_CASE("adjacent pair") {
  LucasParams p(BigInt(5));
  for (std::int64_t k = -10; k <= 10; ++k) {
    auto [a, b] = lucas_U_adjacent(p, k);
    CHECK(a == lucas_U_linear(p, k - 1));
    CHECK(b == lucas_U_linear(p, k));
  }
}

TEST_CASE("digit budget") {
  Budget b;
  b.max_digits = 50;
  CHECK_THROWS_AS(lucas_U(LucasParams(BigInt(5)), 100, b), Error);
  CHECK_NOTHROW(lucas_U(LucasParams(BigInt(5)), 20, b));
}

TEST_CASE("R must be positive") { CHECK_THROWS_AS(LucasParams(BigInt(0)), Error); }

TEST_CASE("seq_U recovers the edge of {1,5,2}") {
  // b U_n - a U_{n-1} with (a, b) = (2, 1) gives 2, 1, 13, 194, 2897 for n = 0..4.
  CHECK(seq_U(BigInt(2), BigInt(5), BigInt(1), 1) == 1);
  CHECK(seq_U(BigInt(2), BigInt(5), BigInt(1), 2) == 13);
  CHECK(seq_U(BigInt(2), BigInt(5), BigInt(1), 3) == 194);
  CHECK(seq_U(BigInt(2), BigInt(5), BigInt(1), 4) == 2897);
}

TEST_CASE("modular Lucas agrees with exact values") {
  for (std::uint64_t m : {2ULL, 10ULL, 1000ULL, 999999937ULL}) {
    for (long R : {1L, 5L, 29L}) {
      LucasParams p{BigInt(R)};
      for (std::int64_t k = -30; k <= 30; ++k) {
        CHECK(lucas_U_mod(3 * R, k, m) == mod_u64(lucas_U_linear(p, k), m));
        CHECK(seq_U_mod(2, R, 1, k, m) == mod_u64(seq_U(BigInt(2), BigInt(R), BigInt(1), k), m));
      }
    }
  }
}
