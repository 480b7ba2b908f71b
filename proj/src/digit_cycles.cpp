#include "markov/digit_cycles.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "markov/error.hpp"
#include "modarith.hpp"

namespace markov {

namespace {

using detail::mulmod;
using detail::submod;
using u64 = std::uint64_t;

void require_digits(unsigned d, unsigned max) {
  if (d < 1 || d > max) {
    throw Error(Errc::InvalidArgument, "digit count must be in 1.." + std::to_string(max));
  }
}

template <class Seq>
bool is_palindrome(const Seq& s) {
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

// Period of a_{k+1} = P a_k - a_{k-1} (mod m) from (a0, a1); 0 if longer
// than `limit`.
u64 period_up_to(u64 a0, u64 a1, u64 P, u64 m, u64 limit) {
  u64 a = a0, b = a1;
  for (u64 steps = 1; steps <= limit; ++steps) {
    u64 next = submod(mulmod(P, b, m), a, m);
    a = b;
    b = next;
    if (a == a0 && b == a1) return steps;
  }
  return 0;
}

u64 pair_period(u64 a0, u64 a1, u64 P, u64 m, u64 max_steps) {
  if (u64 p = period_up_to(a0, a1, P, m, max_steps)) return p;
  throw Error(Errc::ResourceLimit, "no period within " + std::to_string(max_steps) + " steps");
}

std::vector<u64> pair_orbit(u64 a0, u64 a1, u64 P, u64 m, u64 count) {
  std::vector<u64> out;
  out.reserve(count);
  u64 a = a0, b = a1;
  for (u64 i = 0; i < count; ++i) {
    out.push_back(a);
    u64 next = submod(mulmod(P, b, m), a, m);
    a = b;
    b = next;
  }
  return out;
}

struct EdgeSeed {
  u64 a0, a1, P, m;
};

EdgeSeed seed(const RegionHead& head, EdgeSide side, u64 m) {
  require_markov(head);
  return {edge_region_number_mod(head, side, 0, m), edge_region_number_mod(head, side, 1, m),
          mulmod(3 % m, mod_u64(head.R, m), m), m};
}

// Smallest rotation r with unit[i] == ref[(r + i) % n] for all i, if any.
std::optional<std::size_t> rotation_of(const std::vector<u64>& unit, const std::vector<u64>& ref) {
  if (unit.size() != ref.size()) return std::nullopt;
  const std::size_t n = ref.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = unit[i] == ref[(r + i) % n];
    if (ok) return r;
  }
  return std::nullopt;
}

}  // namespace

int parity_type(const Triplet& t) {
  require_markov(t);
  const bool x = mpz_odd_p(t.x.get_mpz_t()), R = mpz_odd_p(t.R.get_mpz_t()),
             z = mpz_odd_p(t.z.get_mpz_t());
  if (x && R && z) return 1;
  if (!x && R && z) return 2;
  if (x && R && !z) return 3;
  if (x && !R && z) return 4;
  throw Error(Errc::InvalidParity, "parity pattern not one of the four Markov types");
}

std::vector<int> edge_parity_pattern(const RegionHead& head, EdgeSide side, std::size_t count) {
  std::vector<int> out;
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    out.push_back(parity_type(edge_triplet(head, side, static_cast<std::int64_t>(n))));
  }
  return out;
}

std::uint64_t pow10(unsigned d) {
  require_digits(d, 18);
  u64 m = 1;
  for (unsigned i = 0; i < d; ++i) m *= 10;
  return m;
}

std::uint64_t cycle_length(const RegionHead& head, EdgeSide side, unsigned d,
                           std::uint64_t max_steps) {
  EdgeSeed s = seed(head, side, pow10(d));
  return pair_period(s.a0, s.a1, s.P, s.m, max_steps);
}

std::vector<std::uint64_t> cycle_residues(const RegionHead& head, EdgeSide side, unsigned d) {
  EdgeSeed s = seed(head, side, pow10(d));
  return pair_orbit(s.a0, s.a1, s.P, s.m, pair_period(s.a0, s.a1, s.P, s.m, 100'000'000));
}

PalindromicCycle palindromic_cycle(const RegionHead& head, unsigned d) {
  require_markov(head);
  if (is_singular(head)) throw Error(Errc::SingularTriplet, "palindromic cycles need an interior region");
  PalindromicCycle pc;
  for (EdgeSide side : {EdgeSide::Left, EdgeSide::Right}) {
    CycleReport& r = side == EdgeSide::Left ? pc.left : pc.right;
    r.head = head;
    r.side = side;
    r.digits = d;
    r.residues = cycle_residues(head, side, d);
    r.length = r.residues.size();
  }
  std::vector<u64> joined = pc.left.residues;
  joined.insert(joined.end(), pc.right.residues.begin(), pc.right.residues.end());
  pc.left.palindromic_with_opposite = pc.right.palindromic_with_opposite = is_palindrome(joined);
  return pc;
}

std::vector<std::uint64_t> odd_fibonacci_mod(std::size_t count, std::uint64_t m) {
  // F_1 = 1, F_3 = 2, and F_{2k+3} = 3 F_{2k+1} - F_{2k-1}.
  return pair_orbit(1 % m, 2 % m, 3 % m, m, count);
}

std::vector<std::uint64_t> lucas_mod10_cycle() {
  std::vector<u64> out{1, 3};
  while (out.size() < 12) out.push_back((out[out.size() - 1] + out[out.size() - 2]) % 10);
  return out;
}

StructureReport internal_structure(const RegionHead& head, EdgeSide side, unsigned d) {
  require_digits(d, 3);
  StructureReport rep;
  for (unsigned k = 1; k <= 3; ++k) rep.pattern[k - 1] = cycle_length(head, side, k);
  const std::array<u64, 3> fib{30, 150, 750}, luc{12, 60, 300};

  if (rep.pattern == fib) {
    rep.family = CycleFamily::Fibonacci30;
    const u64 m = pow10(d);
    rep.cycle = cycle_residues(head, side, d);
    const std::size_t L = rep.cycle.size();
    std::size_t split = 0;
    if (is_palindrome(rep.cycle)) {
      split = L;
    } else {
      for (std::size_t p = 2; p < L && !split; ++p) {
        auto mid = rep.cycle.begin() + static_cast<std::ptrdiff_t>(p);
        std::vector<u64> a(rep.cycle.begin(), mid), b(mid, rep.cycle.end());
        if (is_palindrome(a) && is_palindrome(b)) split = p;
      }
    }
    if (!split) return rep;
    rep.split_found = true;
    auto mid = rep.cycle.begin() + static_cast<std::ptrdiff_t>(split);
    rep.first.assign(rep.cycle.begin(), mid);
    rep.second.assign(mid, rep.cycle.end());

    if (rep.first.size() % 2 == 0) {
      std::vector<u64> half = odd_fibonacci_mod(rep.first.size() / 2, m);
      std::vector<u64> expected(half.rbegin(), half.rend());
      expected.insert(expected.end(), half.begin(), half.end());
      rep.first_is_odd_fibonacci = expected == rep.first;
    }
    if (!rep.second.empty()) {
      const u64 period = pair_period(1 % m, 2 % m, 3 % m, m, 100'000'000);
      std::vector<u64> ref = odd_fibonacci_mod(period, m);
      for (std::size_t o = 0; o < period; ++o) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < rep.second.size(); ++i) hits += rep.second[i] == ref[(o + i) % period];
        if (hits > rep.second_matches) {
          rep.second_matches = hits;
          rep.second_offset = o;
        }
      }
    }
    return rep;
  }

  if (rep.pattern == luc) {
    rep.family = CycleFamily::Lucas12;
    rep.cycle = cycle_residues(head, side, 2);
    for (auto& v : rep.cycle) v %= 10;
    rep.unit.assign(rep.cycle.begin(), rep.cycle.begin() + 12);
    for (std::size_t i = 0; i + 12 <= rep.cycle.size(); i += 12) {
      if (!std::equal(rep.unit.begin(), rep.unit.end(), rep.cycle.begin() + static_cast<std::ptrdiff_t>(i))) break;
      ++rep.copies;
    }
    std::vector<u64> up = lucas_mod10_cycle();
    std::vector<u64> down(up.rbegin(), up.rend());
    if (auto r = rotation_of(rep.unit, up)) {
      rep.ascending = true;
      rep.lucas_offset = *r;
    } else if (auto r2 = rotation_of(rep.unit, down)) {
      rep.descending = true;
      rep.lucas_offset = *r2;
    }
    return rep;
  }

  throw Error(Errc::UnsupportedFamily,
              "cycle pattern {" + std::to_string(rep.pattern[0]) + ", " + std::to_string(rep.pattern[1]) +
                  ", " + std::to_string(rep.pattern[2]) + "} has no documented internal structure");
}

namespace {

std::pair<RegionHead, EdgeSide> fibpell_edge(int region) {
  if (region == 1) return {make_triplet(1, 1, 1), EdgeSide::Right};
  if (region == 2) return {make_triplet(1, 2, 1), EdgeSide::Left};
  throw Error(Errc::InvalidArgument, "region must be 1 or 2");
}

}  // namespace

std::array<std::uint64_t, 6> fibpell_column_labels(int region) {
  auto [head, side] = fibpell_edge(region);
  std::array<u64, 6> out{};
  for (int j = 0; j < 6; ++j) out[j] = to_u64(edge_region_number(head, side, j));
  return out;
}

std::vector<EndpointRow> fibpell_cycle_endpoints(int region, const std::vector<std::uint64_t>& lengths,
                                                 std::uint64_t max_steps) {
  auto [head, side] = fibpell_edge(region);
  std::vector<EndpointRow> rows;
  for (u64 L : lengths) {
    if (L < 6) throw Error(Errc::InvalidArgument, "cycle length must be >= 6");
    EndpointRow row;
    row.length = L;
    u64 spent = 0;
    for (unsigned d = 1; d <= 17; ++d) {
      if (spent + L > max_steps) {
        throw Error(Errc::ResourceLimit, "cycle length " + std::to_string(L) + " exceeds step budget");
      }
      EdgeSeed s = seed(head, side, pow10(d));
      u64 len = period_up_to(s.a0, s.a1, s.P, s.m, L);
      spent += len ? len : L;
      if (len == L) {
        row.digits = d + 1;
        break;
      }
      if (len == 0) break;  // periods only grow with d
    }
    if (!row.digits) {
      throw Error(Errc::InvalidArgument, std::to_string(L) + " is not a cycle length of region " +
                                             std::to_string(region));
    }
    const u64 m = pow10(row.digits);
    for (std::size_t j = 1; j <= 6; ++j) {
      row.cells[j - 1] = edge_region_number_mod(head, side, static_cast<std::int64_t>(L - j), m);
    }
    rows.push_back(row);
  }
  return rows;
}

EvenIndexedReport even_indexed_nonpalindromic() {
  EvenIndexedReport rep;
  // F_{2j} = U_j(3, 1) and P_{2j} = 2 U_j(6, 1).
  rep.fibonacci = pair_orbit(0, 1, 3, 10, pair_period(0, 1, 3, 10, 1000));
  rep.pell = pair_orbit(0, 2, 6, 10, pair_period(0, 2, 6, 10, 1000));
  auto complement = [](const std::vector<u64>& s) {
    if (s.size() % 2) return false;
    const std::size_t h = s.size() / 2;
    for (std::size_t i = 0; i < h; ++i) {
      if (s[h + i] != (10 - s[i]) % 10) return false;
    }
    return true;
  };
  rep.fibonacci_palindrome = is_palindrome(rep.fibonacci);
  rep.pell_palindrome = is_palindrome(rep.pell);
  rep.fibonacci_complement = complement(rep.fibonacci);
  rep.pell_complement = complement(rep.pell);
  return rep;
}

std::vector<std::uint64_t> last_digit_frequency(unsigned depth, unsigned d, const Budget& budget) {
  require_digits(d, 4);
  const u64 m = pow10(d);
  std::vector<u64> counts(m, 0);
  enumerate_mod(depth, m, [&](const ResidueTriplet& t, unsigned level) {
    if (level > 0) ++counts[t.R];
  }, budget);
  return counts;
}

std::map<std::uint64_t, std::vector<PatternObservation>> pattern_by_residue(unsigned depth,
                                                                            const Budget& budget) {
  MarkovList list = MarkovList::enumerate(depth, budget);
  std::map<u64, std::vector<PatternObservation>> out;
  for (const MarkovEntry& e : list.entries()) {
    if (e.depth == 0) continue;
    std::array<u64, 3> pattern{};
    for (unsigned k = 1; k <= 3; ++k) pattern[k - 1] = cycle_length(e.triplet, EdgeSide::Left, k);
    auto& bucket = out[mod_u64(e.triplet.R, 20)];
    auto it = std::find_if(bucket.begin(), bucket.end(),
                           [&](const PatternObservation& o) { return o.pattern == pattern; });
    if (it == bucket.end()) {
      bucket.push_back({pattern, e.triplet.R, 1});
    } else {
      ++it->count;
      if (e.triplet.R < it->example) it->example = e.triplet.R;
    }
  }
  for (auto& [cls, bucket] : out) {
    std::sort(bucket.begin(), bucket.end(),
              [](const PatternObservation& a, const PatternObservation& b) { return a.pattern < b.pattern; });
  }
  return out;
}

}  // namespace markov
