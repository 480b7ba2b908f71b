#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "markov/bigint.hpp"
#include "markov/markov_tree.hpp"

namespace markov {

/// (3R)^2 - 4.
BigInt discriminant(const BigInt& R);

/// K^2 - D(R) J^2. Equals -(2R)^2 on every edge solution of a Markov region.
BigInt pell_residual(const BigInt& K, const BigInt& J, const BigInt& R);

struct PellSolution {
  BigInt K;
  BigInt J;
  BigInt R;
  std::int64_t n;  // edge index: (K, J) = (seq_V(x,R,z,n), seq_U(x,R,z,n))
};

/// Every J in [1, j_bound] with D(R) J^2 - (2R)^2 a perfect square, ascending.
/// Searches K over the residue classes K^2 = -(2R)^2 (mod D) when that is
/// cheaper than scanning J; both routes are exhaustive.
std::vector<BigInt> solve_pell_brute(const BigInt& R, const BigInt& j_bound);

/// Plain J scan. Same contract as solve_pell_brute; used as its oracle.
std::vector<BigInt> solve_pell_scan(const BigInt& R, const BigInt& j_bound);

enum class PellDirection { Forward, Backward };

/// Forward: m solutions starting at n = 1, stepping by the half-integer unit
/// (3R + sqrt(D)) / 2. Backward: m solutions starting at n = 0, stepping by its
/// inverse. Every halving is checked (NonIntegralStep).
std::vector<PellSolution> generate_solutions(const Triplet& head, std::size_t m_count,
                                             PellDirection direction = PellDirection::Forward);

struct BoundPolicy {
  // bound = multiplier * max(x, z), unless `fixed` is non-zero.
  unsigned multiplier = 2;
  BigInt fixed = 0;
};

struct UniquenessReport {
  BigInt R;
  Triplet triplet;
  BigInt bound;
  std::vector<BigInt> solutions;  // everything found under the bound
  bool ok = false;                // two smallest == {min(x,z), max(x,z)}
};

/// Throws NotFound when R is not in `list`, BoundTooSmall when fewer than two
/// solutions lie under the bound.
UniquenessReport uniqueness_check(const BigInt& R, const MarkovList& list,
                                  const BoundPolicy& policy = {});

}  // namespace markov
