#include "markov/pell.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "markov/error.hpp"
#include "markov/lucas.hpp"
#include "modarith.hpp"

namespace markov {

namespace {

using detail::u128;
using detail::u64;

constexpr u64 kMaxFactorCandidate = u64{1} << 40;  // trial division up to 2^20
constexpr std::size_t kMaxRoots = std::size_t{1} << 20;
constexpr double kMaxWork = 4e9;

struct PrimePower {
  u64 p;
  unsigned e;
  u64 pe;
};

void factor_into(u64 n, std::vector<PrimePower>& out) {
  auto add = [&](u64 p, unsigned e) {
    for (auto& f : out) {
      if (f.p == p) {
        f.e += e;
        for (unsigned i = 0; i < e; ++i) f.pe *= p;
        return;
      }
    }
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    out.push_back({p, e, pe});
  };
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) add(p, e);
  }
  if (n > 1) add(n, 1);
}

// Tonelli-Shanks; nullopt when c is a non-residue mod the odd prime p.
std::optional<u64> sqrt_mod_prime(u64 c, u64 p) {
  using detail::mulmod;
  using detail::powmod;
  c %= p;
  if (c == 0) return 0;
  if (powmod(c, (p - 1) / 2, p) != 1) return std::nullopt;
  u64 q = p - 1;
  unsigned s = 0;
  while (!(q & 1)) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s, cc = powmod(z, q, p), t = powmod(c, q, p), r = powmod(c, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = cc;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    cc = mulmod(b, b, p);
    t = mulmod(t, cc, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// Roots of K^2 = c modulo p^e for an odd prime p not dividing c.
std::vector<u64> roots_odd_prime_power(u64 c, const PrimePower& f) {
  using detail::invmod;
  using detail::mulmod;
  using detail::submod;
  auto r = sqrt_mod_prime(c, f.p);
  if (!r) return {};
  u64 root = *r, mod = f.p;
  for (unsigned i = 1; i < f.e; ++i) {
    mod *= f.p;
    u64 cm = c % mod;
    u64 fx = submod(mulmod(root, root, mod), cm, mod);
    u64 inv = invmod(mulmod(2 % mod, root, mod), mod);
    root = submod(root, mulmod(fx, inv, mod), mod);
  }
  std::vector<u64> out{root};
  if (root != 0) out.push_back(f.pe - root);
  return out;
}

// Roots of K^2 = c modulo 2^e by lifting the full root set one bit at a time.
std::vector<u64> roots_power_of_two(u64 c, const PrimePower& f) {
  std::vector<u64> roots{0, 1};
  u64 mod = 1;
  std::vector<u64> next;
  for (unsigned i = 1; i <= f.e; ++i) {
    mod <<= 1;
    next.clear();
    for (u64 r : roots) {
      for (u64 cand : {r, r + (mod >> 1)}) {
        if (cand >= mod) continue;
        if (static_cast<u64>(static_cast<u128>(cand) * cand % mod) == c % mod) next.push_back(cand);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    roots.swap(next);
    if (roots.size() > kMaxRoots || roots.empty()) break;
  }
  return roots;
}

std::vector<u64> crt_combine(const std::vector<u64>& a, u64 ma, const std::vector<u64>& b, u64 mb) {
  using detail::invmod;
  using detail::mulmod;
  using detail::submod;
  u64 inv = invmod(ma % mb, mb);
  std::vector<u64> out;
  out.reserve(a.size() * b.size());
  for (u64 ra : a) {
    for (u64 rb : b) {
      u64 t = mulmod(submod(rb % mb, ra % mb, mb), inv, mb);
      out.push_back(static_cast<u64>(ra + static_cast<u128>(ma) * t));
    }
  }
  return out;
}

u128 u128_from(const BigInt& v) {
  BigInt hi = v >> 64;
  BigInt lo = v - (hi << 64);
  return (static_cast<u128>(to_u64(hi)) << 64) | to_u64(lo);
}

bool fits_bits(const BigInt& v, std::size_t bits) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= bits;
}

std::vector<BigInt> scan_u128(u128 D, u128 four_r2, u64 bound) {
  std::vector<BigInt> out;
  for (u64 j = 1; j <= bound; ++j) {
    u128 dj2 = D * j * j;
    if (dj2 < four_r2) continue;
    if (detail::is_square_u128(dj2 - four_r2)) out.push_back(from_u64(j));
  }
  return out;
}

std::vector<BigInt> scan_big(const BigInt& D, const BigInt& four_r2, const BigInt& bound) {
  std::vector<BigInt> out;
  for (BigInt j = 1; j <= bound; ++j) {
    BigInt v = D * j * j - four_r2;
    if (v >= 0 && is_perfect_square(v)) out.push_back(j);
  }
  return out;
}

void require_region(const BigInt& R) {
  if (R < 1) throw Error(Errc::InvalidArgument, "R must be >= 1");
}

void require_work(double work) {
  if (work > kMaxWork) {
    throw Error(Errc::ResourceLimit, "Pell search would need about " +
                                         std::to_string(static_cast<long double>(work)) +
                                         " candidate tests");
  }
}

}  // namespace

BigInt discriminant(const BigInt& R) { return 9 * R * R - 4; }

BigInt pell_residual(const BigInt& K, const BigInt& J, const BigInt& R) {
  return K * K - discriminant(R) * J * J;
}

std::vector<BigInt> solve_pell_scan(const BigInt& R, const BigInt& j_bound) {
  require_region(R);
  if (j_bound < 1) throw Error(Errc::InvalidArgument, "j_bound must be >= 1");
  const BigInt D = discriminant(R);
  const BigInt four_r2 = 4 * R * R;
  require_work(j_bound.get_d());
  if (fits_bits(D * j_bound * j_bound, 126)) {
    return scan_u128(u128_from(D), u128_from(four_r2), to_u64(j_bound));
  }
  return scan_big(D, four_r2, j_bound);
}

std::vector<BigInt> solve_pell_brute(const BigInt& R, const BigInt& j_bound) {
  require_region(R);
  if (j_bound < 1) throw Error(Errc::InvalidArgument, "j_bound must be >= 1");
  const BigInt D = discriminant(R);
  const BigInt four_r2 = 4 * R * R;
  const BigInt lo = 3 * R - 2, hi = 3 * R + 2;

  // The residue route needs word-sized D, both factors small enough to trial
  // divide, and K^2 within 128 bits.
  const BigInt k_max_sq = D * j_bound * j_bound - four_r2;
  if (!fits_bits(D, 62) || hi > from_u64(kMaxFactorCandidate) || !fits_bits(k_max_sq, 126)) {
    return solve_pell_scan(R, j_bound);
  }
  const u64 d = to_u64(D);
  const u64 c = mod_u64(-four_r2, d);
  const u128 k_max = k_max_sq < 0 ? 0 : detail::isqrt_u128(u128_from(k_max_sq));

  std::vector<PrimePower> factors;
  factor_into(to_u64(lo), factors);
  factor_into(to_u64(hi), factors);

  std::vector<u64> roots{0};
  u64 modulus = 1;
  for (const auto& f : factors) {
    std::vector<u64> local = f.p == 2 ? roots_power_of_two(c % f.pe, f)
                                      : roots_odd_prime_power(c % f.pe, f);
    if (local.empty()) return {};
    if (roots.size() * local.size() > kMaxRoots) return solve_pell_scan(R, j_bound);
    roots = crt_combine(roots, modulus, local, f.pe);
    modulus *= f.pe;
  }

  double per_root = static_cast<double>(k_max / d) + 1.0;
  double residue_work = per_root * static_cast<double>(roots.size());
  if (residue_work > j_bound.get_d()) return solve_pell_scan(R, j_bound);
  require_work(residue_work);

  const u128 four = u128_from(four_r2);
  const u128 bound = u128_from(j_bound);
  std::vector<BigInt> out;
  for (u64 r : roots) {
    for (u128 k = r; k <= k_max; k += d) {
      u128 n = k * k + four;
      u128 j2 = n / d;
      u128 j;
      if (j2 >= 1 && detail::is_square_u128(j2, &j) && j <= bound) out.push_back(from_u128(j));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PellSolution> generate_solutions(const Triplet& head, std::size_t m_count,
                                             PellDirection direction) {
  require_markov(head);
  const BigInt& R = head.R;
  const BigInt P = 3 * R;
  const BigInt D = discriminant(R);
  const bool forward = direction == PellDirection::Forward;
  std::int64_t n = forward ? 1 : 0;
  BigInt X = seq_V(head.x, R, head.z, n);
  BigInt Y = seq_U(head.x, R, head.z, n);

  auto halve = [&](const BigInt& v) {
    if (mpz_odd_p(v.get_mpz_t())) {
      throw Error(Errc::NonIntegralStep, "odd numerator " + to_decimal(v) + " at n = " +
                                             std::to_string(n));
    }
    return BigInt(v / 2);
  };

  std::vector<PellSolution> out;
  out.reserve(m_count);
  for (std::size_t i = 0; i < m_count; ++i) {
    out.push_back(PellSolution{X, Y, R, n});
    BigInt nx = forward ? halve(P * X + D * Y) : halve(P * X - D * Y);
    BigInt ny = forward ? halve(X + P * Y) : halve(P * Y - X);
    X = std::move(nx);
    Y = std::move(ny);
    n += forward ? 1 : -1;
  }
  return out;
}

UniquenessReport uniqueness_check(const BigInt& R, const MarkovList& list,
                                  const BoundPolicy& policy) {
  auto [t, position] = triplet_by_region(R, list);
  (void)position;
  const BigInt& lo = t.x < t.z ? t.x : t.z;
  const BigInt& hi = t.x < t.z ? t.z : t.x;
  UniquenessReport report;
  report.R = R;
  report.triplet = t;
  report.bound = policy.fixed > 0 ? policy.fixed : BigInt(policy.multiplier * hi);
  report.solutions = solve_pell_brute(R, report.bound);
  if (report.solutions.size() < 2) {
    throw Error(Errc::BoundTooSmall, "only " + std::to_string(report.solutions.size()) +
                                         " solution(s) for R = " + to_decimal(R) +
                                         " under bound " + to_decimal(report.bound));
  }
  report.ok = report.solutions[0] == lo && report.solutions[1] == hi;
  return report;
}

}  // namespace markov
