#include "markov/edge_sequences.hpp"

#include "markov/error.hpp"
#include "markov/lucas.hpp"

namespace markov {

namespace {

void check_side(const RegionHead& head, EdgeSide side) {
  if (head == make_triplet(1, 1, 1) && side == EdgeSide::Left) {
    throw Error(Errc::WrongSideForSingular, "{1, 1, 1} has only a right edge");
  }
  if (head == make_triplet(1, 2, 1) && side == EdgeSide::Right) {
    throw Error(Errc::WrongSideForSingular, "{1, 2, 1} has only a left edge");
  }
}

// Coefficients of (c0 + c1 t) / (1 - P t + t^2).
std::vector<BigInt> expand(const BigInt& P, const BigInt& c0, const BigInt& c1, std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (k == 0) {
      out.push_back(c0);
    } else if (k == 1) {
      out.push_back(c1 + P * out[0]);
    } else {
      out.push_back(P * out[k - 1] - out[k - 2]);
    }
  }
  return out;
}

}  // namespace

std::string_view side_name(EdgeSide side) noexcept { return side == EdgeSide::Left ? "L" : "R"; }

EdgeSide opposite(EdgeSide side) noexcept {
  return side == EdgeSide::Left ? EdgeSide::Right : EdgeSide::Left;
}

BigInt edge_region_number(const RegionHead& head, EdgeSide side, std::int64_t n,
                          const Budget& budget) {
  require_markov(head);
  if (side == EdgeSide::Left) return seq_U(head.z, head.R, head.x, n + 1, budget);
  return seq_U(head.x, head.R, head.z, n + 1, budget);
}

std::uint64_t edge_region_number_mod(const RegionHead& head, EdgeSide side, std::int64_t n,
                                     std::uint64_t m) {
  std::uint64_t x = mod_u64(head.x, m), R = mod_u64(head.R, m), z = mod_u64(head.z, m);
  if (side == EdgeSide::Left) return seq_U_mod(z, R, x, n + 1, m);
  return seq_U_mod(x, R, z, n + 1, m);
}

Triplet edge_triplet(const RegionHead& head, EdgeSide side, std::int64_t n, const Budget& budget) {
  require_markov(head);
  check_side(head, side);
  if (n < 1) throw Error(Errc::InvalidArgument, "edge_triplet index must be >= 1");
  if (side == EdgeSide::Left) {
    return Triplet{seq_U(head.z, head.R, head.x, n, budget),
                   seq_U(head.z, head.R, head.x, n + 1, budget), head.R};
  }
  return Triplet{head.R, seq_U(head.x, head.R, head.z, n + 1, budget),
                 seq_U(head.x, head.R, head.z, n, budget)};
}

GfCoefficients gf_coefficients(const RegionHead& head, EdgeSide side, std::size_t count) {
  require_markov(head);
  check_side(head, side);
  if (count < 1) throw Error(Errc::InvalidArgument, "count must be >= 1");
  const BigInt& x = head.x;
  const BigInt& R = head.R;
  const BigInt& z = head.z;
  const BigInt P = 3 * R;
  std::vector<BigInt> constant(count, R);
  GfCoefficients gf;
  if (side == EdgeSide::Left) {
    gf.first = expand(P, x, -z, count);
    gf.middle = expand(P, P * x - z, -x, count);
    gf.last = std::move(constant);
  } else {
    gf.first = std::move(constant);
    gf.middle = expand(P, P * z - x, -z, count);
    gf.last = expand(P, z, -x, count);
  }
  return gf;
}

Triplet secondary_solution(const Triplet& t) {
  require_markov(t);
  if (is_singular(t)) throw Error(Errc::SingularTriplet, "secondary_solution needs R >= 5");
  return Triplet{t.x, 3 * t.x * t.z - t.R, t.z};
}

}  // namespace markov
