#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "markov/edge_sequences.hpp"
#include "markov/markov_tree.hpp"

namespace markov {

/// 1 (odd,odd,odd), 2 (even,odd,odd), 3 (odd,odd,even), 4 (odd,even,odd).
int parity_type(const Triplet& t);

/// Parity types of edge_triplet(head, side, n) for n = 1..count.
std::vector<int> edge_parity_pattern(const RegionHead& head, EdgeSide side, std::size_t count);

/// 10^d, for 1 <= d <= 18.
std::uint64_t pow10(unsigned d);

/// Minimal period of edge_region_number(head, side, n) mod 10^d, via the pair
/// map (a, b) -> (b, 3Rb - a). The map is invertible, so the orbit is purely
/// periodic and the first return to the starting pair gives the period.
std::uint64_t cycle_length(const RegionHead& head, EdgeSide side, unsigned d,
                           std::uint64_t max_steps = 100'000'000);

/// One period of residues starting at edge index n = 0.
std::vector<std::uint64_t> cycle_residues(const RegionHead& head, EdgeSide side, unsigned d);

struct CycleReport {
  RegionHead head;
  EdgeSide side = EdgeSide::Left;
  unsigned digits = 1;
  std::uint64_t length = 0;
  std::vector<std::uint64_t> residues;  // from n = 0
  bool palindromic_with_opposite = false;
};

struct PalindromicCycle {
  CycleReport left;
  CycleReport right;
};

/// Left and right cycles anchored at n = 0; the verdict says whether
/// left ++ right reads the same in both directions.
PalindromicCycle palindromic_cycle(const RegionHead& head, unsigned d);

enum class CycleFamily { Fibonacci30, Lucas12 };

struct StructureReport {
  CycleFamily family = CycleFamily::Fibonacci30;
  std::array<std::uint64_t, 3> pattern{};  // cycle lengths at d = 1, 2, 3
  std::vector<std::uint64_t> cycle;

  // Fibonacci30 family: cycle = first ++ second, both palindromes.
  bool split_found = false;
  std::vector<std::uint64_t> first;
  std::vector<std::uint64_t> second;
  bool first_is_odd_fibonacci = false;  // reversed-then-forward odd-indexed F mod 10^d
  std::size_t second_offset = 0;        // best rotation of odd-indexed F against `second`
  std::size_t second_matches = 0;       // positions agreeing at that rotation

  // Lucas12 family: the d = 2 cycle read mod 10 is `copies` copies of `unit`.
  std::vector<std::uint64_t> unit;
  std::size_t copies = 0;
  bool ascending = false;   // unit is a rotation of the Lucas list L_1..L_12 mod 10
  bool descending = false;  // unit is a rotation of the reversed list
  std::size_t lucas_offset = 0;
};

/// Throws UnsupportedFamily unless the head's d = 1..3 cycle lengths are
/// {30, 150, 750} or {12, 60, 300}. For the Fibonacci family `d` picks the
/// cycle that is split; the Lucas family always works on the 60-cycle mod 10.
StructureReport internal_structure(const RegionHead& head, EdgeSide side, unsigned d);

/// Odd-indexed Fibonacci numbers F_1, F_3, ... mod m, `count` of them.
std::vector<std::uint64_t> odd_fibonacci_mod(std::size_t count, std::uint64_t m);

/// L_1..L_12 mod 10.
std::vector<std::uint64_t> lucas_mod10_cycle();

struct EndpointRow {
  std::uint64_t length = 0;
  unsigned digits = 0;                 // residues are mod 10^digits
  std::array<std::uint64_t, 6> cells{};  // e_{L-1}, ..., e_{L-6}
};

/// Region 1 walks the right edge of {1,1,1} (odd-indexed Fibonacci numbers),
/// region 2 the left edge of {1,2,1} (odd-indexed Pell numbers). For each L,
/// finds the digit count d whose cycle length is L and reports the last six
/// members of that cycle mod 10^(d+1).
std::vector<EndpointRow> fibpell_cycle_endpoints(int region, const std::vector<std::uint64_t>& lengths,
                                                 std::uint64_t max_steps = 100'000'000);

/// The first six edge values e_0..e_5 of region 1 or 2 (table column labels).
std::array<std::uint64_t, 6> fibpell_column_labels(int region);

struct EvenIndexedReport {
  std::vector<std::uint64_t> fibonacci;  // F_0, F_2, ... mod 10, one period
  std::vector<std::uint64_t> pell;       // P_0, P_2, ... mod 10, one period
  bool fibonacci_palindrome = true;
  bool pell_palindrome = true;
  bool fibonacci_complement = false;  // second half = 10's complement of first
  bool pell_complement = false;
};

EvenIndexedReport even_indexed_nonpalindromic();

/// Region-number residues mod 10^d over every non-singular triplet through
/// `depth`, computed on the modular traversal.
std::vector<std::uint64_t> last_digit_frequency(unsigned depth, unsigned d, const Budget& budget = {});

struct PatternObservation {
  std::array<std::uint64_t, 3> pattern;
  BigInt example;  // smallest region showing it
  std::size_t count = 0;
};

/// Region numbers through `depth` bucketed by R mod 20, each bucket holding
/// the distinct (d = 1, 2, 3) cycle-length patterns observed.
std::map<std::uint64_t, std::vector<PatternObservation>> pattern_by_residue(unsigned depth,
                                                                            const Budget& budget = {});

}  // namespace markov
