#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "markov/edge_sequences.hpp"
#include "markov/markov_tree.hpp"

namespace markov {

/// (a/b, x/y, c/d) with x/y the mediant of its neighbours.
struct FareyTriplet {
  Rational left;
  Rational mid;
  Rational right;

  friend bool operator==(const FareyTriplet&, const FareyTriplet&) = default;
};

FareyTriplet farey_root();  // (0, 1/2, 1), paired with {1,5,2}

bool is_valid_farey(const FareyTriplet& t);

Rational mediant(const Rational& p, const Rational& q);

/// Left (a/b, mediant, x/y) and right (x/y, mediant, c/d).
std::pair<FareyTriplet, FareyTriplet> farey_children(const FareyTriplet& t);

/// Walks R's ancestry in the Markov tree back to {1,5,2}, then replays the
/// same left/right path down the Farey tree. Throws NotFound for regions that
/// are absent or singular.
FareyTriplet farey_for_region(const BigInt& R, const MarkovList& list);

/// Left (xk + a)/(yk + b), right (xk + c)/(yk + d).
Rational farey_edge_sequence(const FareyTriplet& t, EdgeSide side, std::int64_t k);

struct PlotPoint {
  Rational farey;
  BigInt R;
  double log10_R;
  unsigned depth;
};

/// The regions of one tree level, ordered by their Farey value.
std::vector<PlotPoint> plot_points(unsigned depth, const MarkovList& list);

}  // namespace markov
