#include "doctest.h"
#include "markov/markov.hpp"

using namespace markov;

namespace {
// Period of the big-int edge sequence mod m found by brute force on pairs.
std::uint64_t naive_period(const Triplet& h, EdgeSide s, std::uint64_t m) {
  const BigInt a0 = edge_region_number(h, s, 0), a1 = edge_region_number(h, s, 1);
  BigInt a = a0, b = a1;
  for (std::uint64_t n = 1;; ++n) {
    BigInt c = 3 * h.R * b - a;
    a = b;
    b = c;
    if (mod_u64(a, m) == mod_u64(a0, m) && mod_u64(b, m) == mod_u64(a1, m)) return n;
  }
}
}  // namespace

TEST_CASE("parity types") {
  CHECK(parity_type(make_triplet(1, 13, 5)) == 1);
  CHECK(parity_type(make_triplet(34, 1325, 13)) == 2);
  CHECK(parity_type(make_triplet(1, 5, 2)) == 3);
  CHECK(parity_type(make_triplet(13, 194, 5)) == 4);
}

TEST_CASE("parity pattern repeats with period three") {
  auto p = edge_parity_pattern(make_triplet(1, 5, 2), EdgeSide::Left, 9);
  REQUIRE(p.size() == 9);
  for (int i = 3; i < 9; ++i) CHECK(p[i] == p[i - 3]);
}

TEST_CASE("pow10") {
  CHECK(pow10(1) == 10);
  CHECK(pow10(18) == 1'000'000'000'000'000'000ULL);
  CHECK_THROWS_AS(pow10(19), Error);
}

TEST_CASE("cycle lengths of known regions") {
  CHECK(cycle_length(make_triplet(1, 1, 1), EdgeSide::Right, 1) == 30);
  CHECK(cycle_length(make_triplet(1, 2, 1), EdgeSide::Left, 1) == 6);
  CHECK(cycle_length(make_triplet(1, 5, 2), EdgeSide::Left, 1) == 12);
  CHECK(cycle_length(make_triplet(1, 13, 5), EdgeSide::Left, 2) == 15);
}

TEST_CASE("pair-map period agrees with a big-integer walk") {
  for (const Triplet& h : {make_triplet(1, 5, 2), make_triplet(1, 13, 5), make_triplet(5, 29, 2),
                           make_triplet(13, 194, 5)}) {
    for (unsigned d = 1; d <= 2; ++d) {
      CHECK(cycle_length(h, EdgeSide::Left, d) == naive_period(h, EdgeSide::Left, pow10(d)));
      CHECK(cycle_length(h, EdgeSide::Right, d) == naive_period(h, EdgeSide::Right, pow10(d)));
    }
  }
}

TEST_CASE("cycle residues start at n = 0") {
  auto r = cycle_residues(make_triplet(1, 5, 2), EdgeSide::Left, 2);
  REQUIRE(r.size() == 60);
  CHECK(r[0] == 1);
  CHECK(r[1] == 13);
  CHECK(r[2] == 94);
}

TEST_CASE("palindromic cycle of {1,5,2}") {
  PalindromicCycle pc = palindromic_cycle(make_triplet(1, 5, 2), 2);
  CHECK(pc.left.palindromic_with_opposite);
  auto joined = pc.left.residues;
  joined.insert(joined.end(), pc.right.residues.begin(), pc.right.residues.end());
  CHECK(std::equal(joined.begin(), joined.end(), joined.rbegin()));
}

TEST_CASE("Lucas and Fibonacci helpers") {
  CHECK(lucas_mod10_cycle() == std::vector<std::uint64_t>{1, 3, 4, 7, 1, 8, 9, 7, 6, 3, 9, 2});
  CHECK(odd_fibonacci_mod(5, 100) == std::vector<std::uint64_t>{1, 2, 5, 13, 34});
}

TEST_CASE("internal structure rejects other families") {
  try {
    internal_structure(make_triplet(1, 13, 5), EdgeSide::Left, 1);
    FAIL("expected UnsupportedFamily");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedFamily);
  }
}

TEST_CASE("column labels") {
  CHECK(fibpell_column_labels(1) == std::array<std::uint64_t, 6>{1, 2, 5, 13, 34, 89});
  CHECK(fibpell_column_labels(2) == std::array<std::uint64_t, 6>{1, 5, 29, 169, 985, 5741});
}

TEST_CASE("endpoint rows") {
  auto rows = fibpell_cycle_endpoints(1, {30});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].length == 30);
  CHECK(rows[0].digits == 2);
  CHECK_THROWS_AS(fibpell_cycle_endpoints(1, {31}), Error);
}

TEST_CASE("last-digit frequency counts every non-singular region") {
  auto f = last_digit_frequency(10, 2);
  REQUIRE(f.size() == 100);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < f.size(); ++r) {
    total += f[r];
    // Odd Markov numbers are 1 mod 4, even ones 2 mod 4.
    if (r % 4 == 0 || r % 4 == 3) CHECK(f[r] == 0);
  }
  CHECK(total == (1u << 10) - 1);
}

TEST_CASE("pattern observations are sorted and counted") {
  auto m = pattern_by_residue(4);
  std::size_t total = 0;
  for (const auto& [cls, obs] : m) {
    CHECK(cls < 20);
    for (std::size_t i = 1; i < obs.size(); ++i) CHECK(obs[i - 1].pattern < obs[i].pattern);
    for (const auto& o : obs) {
      CHECK(mod_u64(o.example, 20) == cls);
      total += o.count;
    }
  }
  CHECK(total == 15);
}
