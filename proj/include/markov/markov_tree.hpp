#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "markov/bigint.hpp"

namespace markov {

/// An ordered Markov triplet {x, R, z}. R is the region number; the order of
/// the outer members encodes the position in the tree (see children()).
struct Triplet {
  BigInt x;
  BigInt R;
  BigInt z;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

Triplet make_triplet(long x, long R, long z);

bool satisfies_markov(const Triplet& t);
bool is_singular(const Triplet& t);

// Throws InvalidTriplet unless t has positive members satisfying the identity.
void require_markov(const Triplet& t);

/// Left child {x, 3Rx - z, R} and right child {R, 3Rz - x, z}.
std::pair<Triplet, Triplet> children(const Triplet& t);

// {1,1,1} -> {1,2,1} -> {1,5,2}; the chain that leads into the tree proper.
Triplet singular_successor(const Triplet& t);

Triplet parent(const Triplet& t);

/// The second solution s = 3xz - R of the Markov equation with x, z fixed.
BigInt sibling_number(const Triplet& t);

struct MarkovEntry {
  Triplet triplet;
  std::size_t position;  // 1-based, singular triplets included
  unsigned depth;        // 0 for singular triplets, 1 for {1,5,2}
};

/// Immutable breadth-first prefix of the Markov tree: {1,1,1}, {1,2,1}, then
/// every non-singular triplet through `depth()`, left child before right child.
class MarkovList {
 public:
  static MarkovList enumerate(unsigned depth, const Budget& budget = {});

  std::span<const MarkovEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  unsigned depth() const { return depth_; }

  const MarkovEntry* find(const BigInt& region) const;

  // Entries belonging to a single tree level.
  std::span<const MarkovEntry> level(unsigned depth) const;

  // A new list one level deeper.
  MarkovList deepened(const Budget& budget = {}) const;

 private:
  void push(Triplet t, unsigned depth);

  std::vector<MarkovEntry> entries_;
  std::map<BigInt, std::size_t> index_;
  unsigned depth_ = 0;
};

inline MarkovList enumerate(unsigned depth, const Budget& budget = {}) {
  return MarkovList::enumerate(depth, budget);
}

/// Throws NotFound when `region` is not a region number in `list`.
std::pair<Triplet, std::size_t> triplet_by_region(const BigInt& region, const MarkovList& list);

/// A MarkovList that deepens itself on demand. Lookups from several threads
/// see consistent prefixes: each call works on an immutable snapshot.
class MarkovTree {
 public:
  explicit MarkovTree(unsigned initial_depth = 3, Budget budget = {});

  std::shared_ptr<const MarkovList> snapshot() const;

  // Deepens level by level until `region` is present. Throws NotFound once
  // every region of the deepest level exceeds `region`, ResourceLimit when the
  // budget runs out first.
  std::shared_ptr<const MarkovList> containing(const BigInt& region);

  std::pair<Triplet, std::size_t> lookup(const BigInt& region);

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const MarkovList> list_;
  Budget budget_;
};

struct ResidueTriplet {
  std::uint64_t x;
  std::uint64_t R;
  std::uint64_t z;

  friend bool operator==(const ResidueTriplet&, const ResidueTriplet&) = default;
};

/// Breadth-first traversal of the non-singular tree with every member reduced
/// modulo `modulus`; the child map commutes with the reduction, so no big
/// integers are involved. Visits entries in MarkovList order (singulars first).
void enumerate_mod(unsigned depth, std::uint64_t modulus,
                   const std::function<void(const ResidueTriplet&, unsigned depth)>& visit,
                   const Budget& budget = {});

std::vector<ResidueTriplet> enumerate_mod(unsigned depth, std::uint64_t modulus,
                                          const Budget& budget = {});

}  // namespace markov
