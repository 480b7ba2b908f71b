#include "doctest.h"
#include "markov/markov.hpp"

using namespace markov;

TEST_CASE("discriminant and residual") {
  CHECK(discriminant(BigInt(5)) == 221);
  CHECK(pell_residual(BigInt(11), BigInt(1), BigInt(5)) == -100);
  CHECK(pell_residual(BigInt(1), BigInt(1), BigInt(1)) == -4);
}

TEST_CASE("brute-force rows for small regions") {
  CHECK(solve_pell_brute(BigInt(5), BigInt(200)) == std::vector<BigInt>{1, 2, 13, 29, 194});
  CHECK(solve_pell_brute(BigInt(1), BigInt(25)) == std::vector<BigInt>{1, 2, 5, 13});
  CHECK(solve_pell_brute(BigInt(7), BigInt(100000)).empty());
}

TEST_CASE("residue route agrees with the plain scan") {
  for (long R : {1L, 2L, 5L, 10L, 13L, 29L, 34L, 89L, 169L, 194L, 233L, 433L}) {
    CHECK(solve_pell_brute(BigInt(R), BigInt(20000)) == solve_pell_scan(BigInt(R), BigInt(20000)));
  }
}

TEST_CASE("forward generation from {1,5,2}") {
  auto s = generate_solutions(make_triplet(1, 5, 2), 4);
  REQUIRE(s.size() == 4);
  for (const auto& p : s) CHECK(pell_residual(p.K, p.J, p.R) == -100);
  CHECK(s[0].J == 2);
  CHECK(s[1].J == 29);
  CHECK(s[2].J == 433);
}

TEST_CASE("backward generation from {1,5,2}") {
  auto s = generate_solutions(make_triplet(1, 5, 2), 3, PellDirection::Backward);
  REQUIRE(s.size() == 3);
  CHECK(s[0].K == -11);
  CHECK(s[0].J == 1);
  CHECK(s[1].K == -193);
  CHECK(s[1].J == 13);
  CHECK(s[2].K == -2884);
  CHECK(s[2].J == 194);
}

TEST_CASE("generated solutions follow the edge sequences") {
  const Triplet h = make_triplet(13, 194, 5);
  auto s = generate_solutions(h, 5);
  for (const auto& p : s) {
    CHECK(p.J == seq_U(h.x, h.R, h.z, p.n));
    CHECK(p.K == seq_V(h.x, h.R, h.z, p.n));
  }
}

TEST_CASE("uniqueness check") {
  MarkovList list = enumerate(4);
  UniquenessReport r = uniqueness_check(BigInt(433), list);
  CHECK(r.ok);
  CHECK(r.triplet == make_triplet(5, 433, 29));
  REQUIRE(r.solutions.size() >= 2);
  CHECK(r.solutions[0] == 5);
  CHECK(r.solutions[1] == 29);
  BoundPolicy tight;
  tight.fixed = 6;
  try {
    uniqueness_check(BigInt(433), list, tight);
    FAIL("expected BoundTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundTooSmall);
  }
}
