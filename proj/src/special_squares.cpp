#include "markov/special_squares.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "markov/error.hpp"
#include "markov/lucas.hpp"
#include "modarith.hpp"

namespace markov {

namespace {

using u64 = std::uint64_t;
using detail::mulmod;
using detail::submod;

std::string show(const Triplet& t) {
  return "{" + to_decimal(t.x) + ", " + to_decimal(t.R) + ", " + to_decimal(t.z) + "}";
}

const MarkovEntry& locate(const Triplet& t, const MarkovList& list) {
  const MarkovEntry* e = list.find(t.R);
  if (!e || !(e->triplet == t)) {
    throw Error(Errc::NotFound, show(t) + " is not in the Markov list through depth " +
                                    std::to_string(list.depth()));
  }
  return *e;
}

const MarkovEntry& locate_region(const BigInt& R, const MarkovList& list) {
  const MarkovEntry* e = list.find(R);
  if (!e) {
    throw Error(Errc::NotFound, "region " + to_decimal(R) + " is not in the Markov list through depth " +
                                    std::to_string(list.depth()));
  }
  return *e;
}

std::optional<QResult> startup(const Triplet& t) {
  auto sp = [](long s, long l) { return SquarePair{BigInt(s), BigInt(l)}; };
  if (t == make_triplet(1, 1, 1)) return QResult{sp(0, 1), sp(1, 1)};
  if (t == make_triplet(1, 2, 1)) return QResult{sp(1, 1), sp(0, 1)};
  if (t == make_triplet(1, 5, 2)) return QResult{sp(1, 2), sp(0, 1)};
  return std::nullopt;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const Triplet& t) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(Errc::NonIntegralSolution, "special squares of " + show(t) + " are not integral");
  }
  return num / den;
}

// (k, uses alpha/gamma) for the Lucas index of k_sf.
std::int64_t ceil_half(std::int64_t m) { return m > 0 ? (m + 1) / 2 : m / 2; }

SquarePair combine(const SquarePair& A, const SquarePair& C, const BigInt& R, std::int64_t k) {
  auto [u0, u1] = lucas_U_adjacent(LucasParams(R), k);
  return SquarePair{A.sigma * u1 - C.sigma * u0, A.lambda * u1 - C.lambda * u0};
}

std::pair<u64, u64> combine_mod(const SquarePair& A, const SquarePair& C, const BigInt& R, std::int64_t k,
                                u64 mod) {
  const u64 P = mulmod(3 % mod, mod_u64(R, mod), mod);
  const u64 u1 = lucas_U_mod(P, k, mod), u0 = lucas_U_mod(P, k - 1, mod);
  auto comp = [&](const BigInt& a, const BigInt& c) {
    return submod(mulmod(mod_u64(a, mod), u1, mod), mulmod(mod_u64(c, mod), u0, mod), mod);
  };
  return {comp(A.sigma, C.sigma), comp(A.lambda, C.lambda)};
}

u64 period_of(u64 a0, u64 a1, u64 P, u64 m) {
  u64 a = a0, b = a1;
  for (u64 steps = 1; steps <= 100'000'000; ++steps) {
    u64 next = submod(mulmod(P, b, m), a, m);
    a = b;
    b = next;
    if (a == a0 && b == a1) return steps;
  }
  throw Error(Errc::ResourceLimit, "square-term period exceeds step budget");
}

}  // namespace

int region_sign(const Triplet& t, const MarkovList& list) {
  const MarkovEntry& e = locate(t, list);
  if (t == make_triplet(1, 2, 1) || t == make_triplet(1, 5, 2)) return -1;
  int left_right = e.position % 2 == 0 ? 1 : -1;
  int parity = e.position % 3 == 0 ? -1 : 1;
  return left_right * parity;
}

QResult q_decompose(const Triplet& t, const MarkovList& list) {
  require_markov(t);
  locate(t, list);
  std::vector<Triplet> chain;
  Triplet cur = t;
  std::optional<QResult> q;
  while (!(q = startup(cur))) {
    chain.push_back(cur);
    cur = locate_region(3 * cur.x * cur.z - cur.R, list).triplet;
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Triplet& tr = *it;
    const SquarePair sib = q->region;
    const BigInt& m = tr.x < tr.z ? tr.x : tr.z;
    const BigInt& M = tr.x < tr.z ? tr.z : tr.x;
    const int sg = region_sign(tr, list);
    // sg (σs Λ - Λs σ) = m and Λs Λ + σs σ = M, solved for (σ, Λ).
    const BigInt a = -sg * sib.lambda, b = sg * sib.sigma, c = sib.sigma, d = sib.lambda;
    const BigInt det = a * d - b * c;
    if (det == 0) throw Error(Errc::NonIntegralSolution, "singular system for " + show(tr));
    SquarePair region{exact_div(m * d - b * M, det, tr), exact_div(a * M - c * m, det, tr)};
    if (region.norm() != tr.R) {
      throw Error(Errc::DecompositionMismatch, "sigma^2 + Lambda^2 != R for " + show(tr));
    }
    q = QResult{std::move(region), sib};
  }
  return *q;
}

EdgeSquareLists edge_square_lists(const Triplet& first, const Triplet& second, const MarkovList& list) {
  QResult q1 = q_decompose(first, list);
  QResult q2 = q_decompose(second, list);
  const int sign1 = region_sign(first, list);
  return EdgeSquareLists{q1.region, q2.region,
                         SquarePair{-sign1 * q1.sibling.lambda, sign1 * q1.sibling.sigma}, q2.sibling};
}

EdgeSquareLists edge_square_lists(const RegionHead& head, EdgeSide side, const MarkovList& list) {
  return edge_square_lists(edge_triplet(head, side, 1), edge_triplet(head, side, 2), list);
}

SquarePair k_sf(const EdgeSquareLists& lists, const BigInt& R, std::int64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "k_sf is defined for n != 0");
  const bool odd = n % 2 != 0;
  const std::int64_t k = n > 0 ? (n + 1) / 2 : -((1 - n) / 2);
  return odd ? combine(lists.alpha, lists.gamma, R, k) : combine(lists.beta, lists.delta, R, k);
}

SquarePair square_stream(const EdgeSquareLists& lists, const BigInt& R, std::int64_t m) {
  const std::int64_t k = ceil_half(m);
  return m % 2 != 0 ? combine(lists.alpha, lists.gamma, R, k) : combine(lists.beta, lists.delta, R, k);
}

std::pair<std::uint64_t, std::uint64_t> square_stream_mod(const EdgeSquareLists& lists, const BigInt& R,
                                                          std::int64_t m, std::uint64_t mod) {
  const std::int64_t k = ceil_half(m);
  return m % 2 != 0 ? combine_mod(lists.alpha, lists.gamma, R, k, mod)
                    : combine_mod(lists.beta, lists.delta, R, k, mod);
}

KgfStreams k_gf_coefficients(const EdgeSquareLists& lists, const BigInt& R, std::size_t count) {
  if (count < 1) throw Error(Errc::InvalidArgument, "count must be >= 1");
  const BigInt P = 3 * R;
  auto expand = [&](const SquarePair& A, const SquarePair& C) {
    std::vector<SquarePair> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      if (k == 0) {
        out.push_back(A);
      } else if (k == 1) {
        out.push_back(SquarePair{P * A.sigma - C.sigma, P * A.lambda - C.lambda});
      } else {
        out.push_back(SquarePair{P * out[k - 1].sigma - out[k - 2].sigma,
                                 P * out[k - 1].lambda - out[k - 2].lambda});
      }
    }
    return out;
  };
  return KgfStreams{expand(lists.alpha, lists.gamma), expand(lists.beta, lists.delta)};
}

BrahmaguptaReport brahmagupta_check(const Triplet& t, const QResult& q) {
  require_markov(t);
  const BigInt s = 3 * t.x * t.z - t.R;
  const SquarePair& r = q.region;
  const SquarePair& g = q.sibling;
  const BigInt inter = g.lambda * r.lambda + g.sigma * r.sigma;
  const BigInt small = g.sigma * r.lambda - g.lambda * r.sigma;
  const BigInt& m = t.x < t.z ? t.x : t.z;
  const BigInt& M = t.x < t.z ? t.z : t.x;
  BrahmaguptaReport rep;
  rep.product = t.R * s == t.x * t.x + t.z * t.z && r.norm() == t.R && g.norm() == s;
  rep.identity = r.norm() * g.norm() == inter * inter + small * small;
  rep.max_term = inter == M;
  rep.min_term = abs(small) == m;
  return rep;
}

std::uint64_t square_cycle_length(const EdgeSquareLists& lists, const BigInt& R, unsigned d,
                                  SquareStream stream, SquareComponent component) {
  if (d < 1 || d > 9) throw Error(Errc::InvalidArgument, "digit count must be in 1..9");
  u64 mod = 1;
  for (unsigned i = 0; i < d; ++i) mod *= 10;
  const std::int64_t base = stream == SquareStream::Odd ? -1 : 0;  // n = 2k + base
  auto at = [&](std::int64_t k) {
    auto [s, l] = square_stream_mod(lists, R, 2 * k + base, mod);
    return component == SquareComponent::Sigma ? s : l;
  };
  const u64 P = mulmod(3 % mod, mod_u64(R, mod), mod);
  return period_of(at(1), at(2), P, mod);
}

SquarePalindromeReport square_palindrome_check(const RegionHead& head, unsigned d, const MarkovList& list) {
  require_markov(head);
  if (is_singular(head)) throw Error(Errc::SingularTriplet, "square palindromes need an interior region");
  if (d < 1 || d > 9) throw Error(Errc::InvalidArgument, "digit count must be in 1..9");
  u64 mod = 1;
  for (unsigned i = 0; i < d; ++i) mod *= 10;
  const EdgeSquareLists left = edge_square_lists(head, EdgeSide::Left, list);
  const EdgeSquareLists right = edge_square_lists(head, EdgeSide::Right, list);

  // Every stream component obeys the same kernel, so the period of the
  // matrix (U_0, U_1) = (0, 1) orbit bounds all of them.
  const u64 P = mulmod(3 % mod, mod_u64(head.R, mod), mod);
  const u64 kernel = period_of(0, 1 % mod, P, mod);

  SquarePalindromeReport rep;
  rep.digits = d;
  rep.checked = 2 * kernel;
  rep.identities_hold = true;
  auto neg = [&](u64 v) { return submod(0, v, mod); };
  for (std::int64_t m = 0; m < static_cast<std::int64_t>(rep.checked) && rep.identities_hold; ++m) {
    auto [rs, rl] = square_stream_mod(right, head.R, m, mod);
    auto [ls, ll] = square_stream_mod(left, head.R, m, mod);
    auto wl = square_stream_mod(left, head.R, -m - 1, mod);
    auto wr = square_stream_mod(right, head.R, -m - 1, mod);
    if (wl != std::make_pair(neg(rl), rs) || wr != std::make_pair(ll, neg(ls))) {
      rep.identities_hold = false;
      rep.first_failure = m;
    }
  }
  for (std::int64_t m = 0; m < 5; ++m) rep.left_start.push_back(square_stream_mod(left, head.R, m, mod));
  for (std::int64_t m = -5; m < 0; ++m) rep.right_end.push_back(square_stream_mod(right, head.R, m, mod));
  return rep;
}

OscillationReport oscillation_ratio(const EdgeSquareLists& lists, const BigInt& R, std::int64_t n_max) {
  if (n_max < 8) throw Error(Errc::InvalidArgument, "n_max must be >= 8");
  OscillationReport rep;
  std::vector<Rational> odd, even;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    SquarePair p = k_sf(lists, R, n);
    if (p.sigma == 0) continue;
    Rational r(p.lambda, p.sigma);
    r.canonicalize();
    (n % 2 ? odd : even).push_back(r);
    rep.series.push_back({n, std::move(p)});
  }
  if (odd.size() < 2 || even.size() < 2) {
    throw Error(Errc::DivisionByZero, "too few terms with sigma != 0");
  }
  rep.odd_last = odd.back();
  rep.even_last = even.back();
  const double o = rep.odd_last.get_d(), e = rep.even_last.get_d();
  rep.upper = std::max(o, e);
  rep.lower = std::min(o, e);
  rep.ratio = rep.upper / rep.lower;
  rep.odd_step = std::fabs(Rational(odd.back() - odd[odd.size() - 2]).get_d());
  rep.even_step = std::fabs(Rational(even.back() - even[even.size() - 2]).get_d());
  return rep;
}

}  // namespace markov
