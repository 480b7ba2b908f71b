#include "markov/markov_tree.hpp"

#include <algorithm>
#include <string>

#include "markov/error.hpp"
#include "modarith.hpp"

namespace markov {

namespace {

std::string show(const Triplet& t) {
  return "{" + to_decimal(t.x) + ", " + to_decimal(t.R) + ", " + to_decimal(t.z) + "}";
}

const Triplet& kOnes() {
  static const Triplet t = make_triplet(1, 1, 1);
  return t;
}
const Triplet& kPell() {
  static const Triplet t = make_triplet(1, 2, 1);
  return t;
}
const Triplet& kRoot() {
  static const Triplet t = make_triplet(1, 5, 2);
  return t;
}

std::size_t nodes_through(unsigned depth) {
  // 2 singular + (2^depth - 1) non-singular; saturates instead of overflowing.
  if (depth >= 63) return SIZE_MAX;
  return 2 + ((std::size_t{1} << depth) - 1);
}

}  // namespace

Triplet make_triplet(long x, long R, long z) { return Triplet{BigInt(x), BigInt(R), BigInt(z)}; }

bool satisfies_markov(const Triplet& t) {
  return t.x * t.x + t.R * t.R + t.z * t.z == 3 * t.x * t.R * t.z;
}

bool is_singular(const Triplet& t) { return t == kOnes() || t == kPell(); }

void require_markov(const Triplet& t) {
  if (t.x < 1 || t.R < 1 || t.z < 1 || !satisfies_markov(t)) {
    throw Error(Errc::InvalidTriplet, "not a Markov triplet: " + show(t));
  }
}

std::pair<Triplet, Triplet> children(const Triplet& t) {
  require_markov(t);
  if (is_singular(t)) {
    throw Error(Errc::SingularTriplet, show(t) + " is singular; use singular_successor");
  }
  Triplet left{t.x, 3 * t.R * t.x - t.z, t.R};
  Triplet right{t.R, 3 * t.R * t.z - t.x, t.z};
  return {std::move(left), std::move(right)};
}

Triplet singular_successor(const Triplet& t) {
  if (t == kOnes()) return kPell();
  if (t == kPell()) return kRoot();
  throw Error(Errc::NotSingular, show(t) + " is not singular");
}

Triplet parent(const Triplet& t) {
  require_markov(t);
  if (is_singular(t)) throw Error(Errc::SingularTriplet, show(t) + " is singular");
  if (t == kRoot()) throw Error(Errc::RootTriplet, "{1, 5, 2} has no non-singular parent");
  BigInt s = 3 * t.x * t.z - t.R;
  if (t.x < t.z) return Triplet{t.x, t.z, s};
  return Triplet{s, t.x, t.z};
}

BigInt sibling_number(const Triplet& t) {
  require_markov(t);
  return 3 * t.x * t.z - t.R;
}

void MarkovList::push(Triplet t, unsigned depth) {
  std::size_t position = entries_.size() + 1;
  index_.emplace(t.R, entries_.size());
  entries_.push_back(MarkovEntry{std::move(t), position, depth});
}

MarkovList MarkovList::enumerate(unsigned depth, const Budget& budget) {
  if (nodes_through(depth) > budget.max_nodes) {
    throw Error(Errc::ResourceLimit, "depth " + std::to_string(depth) + " exceeds node budget of " +
                                         std::to_string(budget.max_nodes));
  }
  MarkovList list;
  list.push(kOnes(), 0);
  list.push(kPell(), 0);
  for (unsigned d = 0; d < depth; ++d) list = list.deepened(budget);
  return list;
}

MarkovList MarkovList::deepened(const Budget& budget) const {
  if (nodes_through(depth_ + 1) > budget.max_nodes) {
    throw Error(Errc::ResourceLimit, "node budget of " + std::to_string(budget.max_nodes) +
                                         " exceeded at depth " + std::to_string(depth_ + 1));
  }
  MarkovList next = *this;
  next.entries_.reserve(nodes_through(depth_ + 1));
  if (depth_ == 0) {
    next.push(kRoot(), 1);
  } else {
    for (const MarkovEntry& e : level(depth_)) {
      auto [left, right] = children(e.triplet);
      check_digits(left.R, budget);
      check_digits(right.R, budget);
      next.push(std::move(left), depth_ + 1);
      next.push(std::move(right), depth_ + 1);
    }
  }
  next.depth_ = depth_ + 1;
  return next;
}

const MarkovEntry* MarkovList::find(const BigInt& region) const {
  auto it = index_.find(region);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::span<const MarkovEntry> MarkovList::level(unsigned depth) const {
  if (depth == 0) return std::span(entries_).first(2);
  if (depth > depth_) return {};
  std::size_t begin = nodes_through(depth - 1);
  std::size_t count = std::size_t{1} << (depth - 1);
  return std::span(entries_).subspan(begin, count);
}

std::pair<Triplet, std::size_t> triplet_by_region(const BigInt& region, const MarkovList& list) {
  const MarkovEntry* e = list.find(region);
  if (!e) {
    throw Error(Errc::NotFound, "region " + to_decimal(region) + " not found through depth " +
                                    std::to_string(list.depth()));
  }
  return {e->triplet, e->position};
}

MarkovTree::MarkovTree(unsigned initial_depth, Budget budget)
    : list_(std::make_shared<const MarkovList>(MarkovList::enumerate(initial_depth, budget))),
      budget_(budget) {}

std::shared_ptr<const MarkovList> MarkovTree::snapshot() const {
  std::lock_guard lock(mutex_);
  return list_;
}

std::shared_ptr<const MarkovList> MarkovTree::containing(const BigInt& region) {
  std::lock_guard lock(mutex_);
  while (!list_->find(region)) {
    if (list_->depth() >= 1) {
      auto last = list_->level(list_->depth());
      auto smallest = std::min_element(last.begin(), last.end(), [](const auto& a, const auto& b) {
        return a.triplet.R < b.triplet.R;
      });
      if (region < smallest->triplet.R) {
        throw Error(Errc::NotFound, to_decimal(region) + " is not a Markov region number");
      }
    }
    list_ = std::make_shared<const MarkovList>(list_->deepened(budget_));
  }
  return list_;
}

std::pair<Triplet, std::size_t> MarkovTree::lookup(const BigInt& region) {
  return triplet_by_region(region, *containing(region));
}

void enumerate_mod(unsigned depth, std::uint64_t modulus,
                   const std::function<void(const ResidueTriplet&, unsigned depth)>& visit,
                   const Budget& budget) {
  using detail::mulmod;
  using detail::submod;
  if (modulus < 2) throw Error(Errc::InvalidArgument, "modulus must be at least 2");
  if (nodes_through(depth) > budget.max_nodes) {
    throw Error(Errc::ResourceLimit, "depth " + std::to_string(depth) + " exceeds node budget of " +
                                         std::to_string(budget.max_nodes));
  }
  const std::uint64_t m = modulus;
  visit(ResidueTriplet{1 % m, 1 % m, 1 % m}, 0);
  visit(ResidueTriplet{1 % m, 2 % m, 1 % m}, 0);
  if (depth == 0) return;

  std::vector<ResidueTriplet> level{{1 % m, 5 % m, 2 % m}};
  std::vector<ResidueTriplet> next;
  for (unsigned d = 1; d <= depth; ++d) {
    for (const auto& t : level) visit(t, d);
    if (d == depth) break;
    next.clear();
    next.reserve(level.size() * 2);
    for (const auto& t : level) {
      std::uint64_t three_r = mulmod(3 % m, t.R, m);
      next.push_back({t.x, submod(mulmod(three_r, t.x, m), t.z, m), t.R});
      next.push_back({t.R, submod(mulmod(three_r, t.z, m), t.x, m), t.z});
    }
    level.swap(next);
  }
}

std::vector<ResidueTriplet> enumerate_mod(unsigned depth, std::uint64_t modulus,
                                          const Budget& budget) {
  std::vector<ResidueTriplet> out;
  enumerate_mod(depth, modulus, [&](const ResidueTriplet& t, unsigned) { out.push_back(t); },
                budget);
  return out;
}

}  // namespace markov
