#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "poirev/world.hpp"

namespace poirev {

/// Total preorder over worlds 0..n-1 stored as a canonical rank vector:
/// the ranks in use are exactly 0..levels()-1.
class Tpo {
 public:
  Tpo() = default;

  /// Canonicalizes arbitrary ranks, keeping every order relation.
  static Tpo from_ranks(const std::vector<std::size_t>& ranks);

  /// Orders worlds by an arbitrary totally ordered key (smaller = more plausible).
  template <class Key>
  static Tpo from_keys(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Tpo t;
    t.rank_.reserve(keys.size());
    for (const Key& k : keys) {
      t.rank_.push_back(static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
    }
    t.levels_ = sorted.size();
    return t;
  }

  std::size_t size() const noexcept { return rank_.size(); }
  std::size_t levels() const noexcept { return levels_; }
  std::size_t rank(World w) const { return rank_.at(w); }
  const std::vector<std::size_t>& ranks() const noexcept { return rank_; }
  WorldSet level(std::size_t i) const;
  std::vector<WorldSet> level_sets() const;

  bool leq(World x, World y) const { return rank(x) <= rank(y); }
  bool less(World x, World y) const { return rank(x) < rank(y); }
  bool equiv(World x, World y) const { return rank(x) == rank(y); }

  friend bool operator==(const Tpo&, const Tpo&) = default;
  friend auto operator<=>(const Tpo& a, const Tpo& b) { return a.rank_ <=> b.rank_; }

 private:
  std::vector<std::size_t> rank_;
  std::size_t levels_ = 0;
};

/// Dense renumbering of ranks preserving order; idempotent.
std::vector<std::size_t> canonicalize(const std::vector<std::size_t>& ranks);
bool is_canonical(const std::vector<std::size_t>& ranks);

/// Worlds in levels[i] get rank i. The levels must partition the n worlds.
Tpo tpo_from_levels(std::size_t n, const std::vector<WorldSet>& levels);

/// Builds a TPO from a binary relation, throwing NotTotal or NotTransitive.
Tpo tpo_from_relation(std::size_t n, const std::function<bool(World, World)>& leq);

/// The most plausible members of s. Throws InconsistentInput on empty s.
WorldSet min_worlds(const Tpo& t, const WorldSet& s);

}  // namespace poirev
