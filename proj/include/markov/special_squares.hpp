#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "markov/edge_sequences.hpp"
#include "markov/markov_tree.hpp"

namespace markov {

/// (sigma, Lambda) with sigma^2 + Lambda^2 the number it decomposes.
struct SquarePair {
  BigInt sigma;
  BigInt lambda;

  BigInt norm() const { return sigma * sigma + lambda * lambda; }
  friend bool operator==(const SquarePair&, const SquarePair&) = default;
};

struct QResult {
  SquarePair region;   // decomposes R
  SquarePair sibling;  // decomposes s = 3xz - R
};

/// The recursive special-square algorithm. Runs iteratively down the sibling
/// chain, so depth is bounded only by the list.
QResult q_decompose(const Triplet& t, const MarkovList& list);

/// -1 for {1,2,1} and {1,5,2}; otherwise (+1 iff position is even) times
/// (-1 iff position is a multiple of 3), positions 1-based with singulars.
int region_sign(const Triplet& t, const MarkovList& list);

struct EdgeSquareLists {
  SquarePair alpha;
  SquarePair beta;
  SquarePair gamma;
  SquarePair delta;
};

EdgeSquareLists edge_square_lists(const Triplet& first, const Triplet& second, const MarkovList& list);

/// Lists for the edge of `head`, from edge_triplet(head, side, 1) and (…, 2).
EdgeSquareLists edge_square_lists(const RegionHead& head, EdgeSide side, const MarkovList& list);

/// Odd n = 2k-1: alpha U_k - gamma U_{k-1}; even n = 2k: beta U_k - delta
/// U_{k-1}; negative n uses k = -ceil(|n|/2).
SquarePair k_sf(const EdgeSquareLists& lists, const BigInt& R, std::int64_t n);

/// Edge-indexed stream: entry m decomposes edge_region_number(head, side, m)
/// for every integer m. k = ceil(m/2); m = 0 gives delta, m = -1 gamma.
SquarePair square_stream(const EdgeSquareLists& lists, const BigInt& R, std::int64_t m);

/// square_stream reduced mod `mod`, in word arithmetic.
std::pair<std::uint64_t, std::uint64_t> square_stream_mod(const EdgeSquareLists& lists, const BigInt& R,
                                                          std::int64_t m, std::uint64_t mod);

struct KgfStreams {
  std::vector<SquarePair> odd;   // coefficient k = k_sf(2k + 1)
  std::vector<SquarePair> even;  // coefficient k = k_sf(2k + 2)
};

/// Series coefficients of (alpha - gamma t)/(1 - 3Rt + t^2) and the beta/delta analogue.
KgfStreams k_gf_coefficients(const EdgeSquareLists& lists, const BigInt& R, std::size_t count);

struct BrahmaguptaReport {
  bool product = false;   // R s = x^2 + z^2
  bool identity = false;  // (Λ_R²+σ_R²)(Λ_s²+σ_s²) = (Λ_sΛ_R+σ_sσ_R)² + (σ_sΛ_R−Λ_sσ_R)²
  bool max_term = false;  // Λ_sΛ_R + σ_sσ_R = max(x, z)
  bool min_term = false;  // |σ_sΛ_R − Λ_sσ_R| = min(x, z)
  bool ok() const { return product && identity && max_term && min_term; }
};

BrahmaguptaReport brahmagupta_check(const Triplet& t, const QResult& q);

enum class SquareStream { Odd, Even };
enum class SquareComponent { Sigma, Lambda };

/// Period mod 10^d of one component of the odd- or even-indexed k_sf stream.
std::uint64_t square_cycle_length(const EdgeSquareLists& lists, const BigInt& R, unsigned d,
                                  SquareStream stream, SquareComponent component);

struct SquarePalindromeReport {
  unsigned digits = 0;
  std::uint64_t checked = 0;  // number of m values checked on each side
  bool identities_hold = false;
  std::optional<std::int64_t> first_failure;
  // Start of the left cycle (m = 0..4) and end of the right cycle (m = -5..-1).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> left_start;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> right_end;
};

/// Checks S_L(-m-1) = (-Λ, σ) of S_R(m) and S_R(-m-1) = (Λ, -σ) of S_L(m)
/// mod 10^d for m across one full stream period.
SquarePalindromeReport square_palindrome_check(const RegionHead& head, unsigned d, const MarkovList& list);

struct OscillationPoint {
  std::int64_t n;
  SquarePair pair;
};

struct OscillationReport {
  std::vector<OscillationPoint> series;  // 1 <= n <= n_max, σ = 0 terms skipped
  Rational odd_last;                     // Λ/σ at the last odd n
  Rational even_last;                    // Λ/σ at the last even n
  double upper = 0;
  double lower = 0;
  double ratio = 0;       // upper / lower
  double odd_step = 0;    // |last - previous| within the odd subsequence
  double even_step = 0;   // same for the even subsequence
};

/// Λ/σ along an edge split by index parity. Throws DivisionByZero if either
/// subsequence has no term with σ != 0.
OscillationReport oscillation_ratio(const EdgeSquareLists& lists, const BigInt& R, std::int64_t n_max);

}  // namespace markov
