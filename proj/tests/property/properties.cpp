// Randomised invariants. Every case draws from a fixed-seed mt19937_64 so
// failures replay exactly; the seed is printed on failure via INFO.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "markov/markov.hpp"

using namespace markov;

namespace {

constexpr std::uint64_t kSeed = 0x5eed'1234'abcdULL;

struct Gen {
  std::mt19937_64 rng{kSeed};
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }
  bool coin() { return range(0, 1) == 1; }

  // A random walk of `steps` moves down from {1,5,2}, with the path taken.
  std::pair<Triplet, std::vector<bool>> walk(int steps) {
    Triplet t = make_triplet(1, 5, 2);
    std::vector<bool> path;
    for (int i = 0; i < steps; ++i) {
      const bool left = coin();
      auto [l, r] = children(t);
      t = left ? l : r;
      path.push_back(left);
    }
    return {t, path};
  }
};

}  // namespace

TEST_CASE("children then parent is the identity") {
  Gen g;
  for (int trial = 0; trial < 300; ++trial) {
    // Alternating paths grow digit counts like Fibonacci numbers, so keep walks short.
    auto [t, path] = g.walk(static_cast<int>(g.range(0, 20)));
    INFO("trial " << trial << " R=" << to_decimal(t.R));
    REQUIRE(satisfies_markov(t));
    auto [l, r] = children(t);
    CHECK(parent(l) == t);
    CHECK(parent(r) == t);
    CHECK(l.R > t.R);
    CHECK(r.R > t.R);
    CHECK(satisfies_markov(secondary_solution(t)));
  }
}

TEST_CASE("modular enumeration matches exact residues for random moduli") {
  Gen g;
  MarkovList exact = enumerate(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t m = static_cast<std::uint64_t>(g.range(2, 1'000'000'007));
    INFO("modulus " << m);
    auto mod = enumerate_mod(9, m);
    REQUIRE(mod.size() == exact.size());
    for (std::size_t i = 0; i < mod.size(); i += 7) {
      const Triplet& t = exact.entries()[i].triplet;
      CHECK(mod[i].R == mod_u64(t.R, m));
      CHECK(mod[i].x == mod_u64(t.x, m));
    }
  }
}

TEST_CASE("fast Lucas matches the linear recurrence") {
  Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    const BigInt R(g.range(1, 100000));
    const std::int64_t k = g.range(-150, 150);
    LucasParams p(R);
    CHECK(lucas_U(p, k) == lucas_U_linear(p, k));
    CHECK(lucas_V(p, k) == lucas_V_linear(p, k));
  }
}

TEST_CASE("edge mirror and Pell identity on random heads") {
  Gen g;
  for (int trial = 0; trial < 150; ++trial) {
    auto [h, path] = g.walk(static_cast<int>(g.range(0, 12)));
    const std::int64_t n = g.range(0, 20);
    INFO("R=" << to_decimal(h.R) << " n=" << n);
    CHECK(edge_region_number(h, EdgeSide::Left, -n - 1) == edge_region_number(h, EdgeSide::Right, n));
    const std::int64_t k = g.range(-20, 20);
    BigInt K = seq_V(h.x, h.R, h.z, k), J = seq_U(h.x, h.R, h.z, k);
    CHECK(pell_residual(K, J, h.R) == -4 * h.R * h.R);
    Triplet e = edge_triplet(h, g.coin() ? EdgeSide::Left : EdgeSide::Right, g.range(1, 15));
    CHECK(satisfies_markov(e));
  }
}

TEST_CASE("modular edge numbers agree with exact values") {
  Gen g;
  for (int trial = 0; trial < 150; ++trial) {
    auto [h, path] = g.walk(static_cast<int>(g.range(0, 10)));
    const std::uint64_t m = static_cast<std::uint64_t>(g.range(2, 1'000'000'000'000LL));
    const std::int64_t n = g.range(-30, 30);
    const EdgeSide s = g.coin() ? EdgeSide::Left : EdgeSide::Right;
    CHECK(edge_region_number_mod(h, s, n, m) == mod_u64(edge_region_number(h, s, n), m));
  }
}

TEST_CASE("special squares decompose random edges") {
  Gen g;
  const MarkovList list = enumerate(10);
  for (int trial = 0; trial < 60; ++trial) {
    auto [h, path] = g.walk(static_cast<int>(g.range(0, 7)));
    const EdgeSide s = g.coin() ? EdgeSide::Left : EdgeSide::Right;
    INFO("R=" << to_decimal(h.R) << " side " << side_name(s));
    EdgeSquareLists ls = edge_square_lists(h, s, list);
    for (int j = 0; j < 5; ++j) {
      const std::int64_t m = g.range(-25, 25);
      CHECK(square_stream(ls, h.R, m).norm() == edge_region_number(h, s, m));
    }
    QResult q = q_decompose(h, list);
    CHECK(brahmagupta_check(h, q).ok());
  }
}

TEST_CASE("Farey indexing is a bijection on random paths") {
  Gen g;
  const MarkovList list = enumerate(12);
  std::set<Rational> mids;
  for (int trial = 0; trial < 200; ++trial) {
    auto [t, path] = g.walk(static_cast<int>(g.range(0, 11)));
    FareyTriplet f = farey_root();
    for (bool left : path) f = left ? farey_children(f).first : farey_children(f).second;
    CHECK(is_valid_farey(f));
    CHECK(farey_for_region(t.R, list) == f);
    mids.insert(f.mid);
  }
  // Distinct Markov regions drawn above must have distinct Farey middles.
  std::set<BigInt> regions;
  Gen again;
  for (int trial = 0; trial < 200; ++trial) regions.insert(again.walk(static_cast<int>(again.range(0, 11))).first.R);
  CHECK(mids.size() == regions.size());
}
