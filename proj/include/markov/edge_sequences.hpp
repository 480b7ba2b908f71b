#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "markov/bigint.hpp"
#include "markov/markov_tree.hpp"

namespace markov {

enum class EdgeSide { Left, Right };

std::string_view side_name(EdgeSide side) noexcept;
EdgeSide opposite(EdgeSide side) noexcept;

/// Head of a region: a non-singular Markov triplet, or one of the singular
/// heads {1,1,1} (right edge only) and {1,2,1} (left edge only).
using RegionHead = Triplet;

/// Region numbers along an edge. n = 0 is x (left) or z (right), n = 1 the
/// first child; negative n wraps onto the opposite edge.
BigInt edge_region_number(const RegionHead& head, EdgeSide side, std::int64_t n,
                          const Budget& budget = {});

/// Residue of edge_region_number modulo m, without big integers.
std::uint64_t edge_region_number_mod(const RegionHead& head, EdgeSide side, std::int64_t n,
                                     std::uint64_t m);

/// The n-th triplet (n >= 1) along an edge. The left edge is the left child
/// followed by repeated right children; the right edge mirrors it.
Triplet edge_triplet(const RegionHead& head, EdgeSide side, std::int64_t n,
                     const Budget& budget = {});

struct GfCoefficients {
  std::vector<BigInt> first;
  std::vector<BigInt> middle;
  std::vector<BigInt> last;
};

/// Taylor coefficients of the three component generating functions of an
/// edge. Coefficient k belongs to edge_triplet(head, side, k + 1).
GfCoefficients gf_coefficients(const RegionHead& head, EdgeSide side, std::size_t count);

/// {x, 3xz - R, z}: the other Markov solution with the outer members fixed.
Triplet secondary_solution(const Triplet& t);

}  // namespace markov
