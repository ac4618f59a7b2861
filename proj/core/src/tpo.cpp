#include "poirev/tpo.hpp"

#include <string>

#include "poirev/error.hpp"

namespace poirev {

std::vector<std::size_t> canonicalize(const std::vector<std::size_t>& ranks) {
  return Tpo::from_keys(ranks).ranks();
}

bool is_canonical(const std::vector<std::size_t>& ranks) { return canonicalize(ranks) == ranks; }

Tpo Tpo::from_ranks(const std::vector<std::size_t>& ranks) {
  if (ranks.size() > kMaxWorlds) throw DomainTooLarge("too many worlds for a TPO");
  return from_keys(ranks);
}

WorldSet Tpo::level(std::size_t i) const {
  std::uint64_t bits = 0;
  for (World w = 0; w < rank_.size(); ++w) {
    if (rank_[w] == i) bits |= std::uint64_t{1} << w;
  }
  return {size(), bits};
}

std::vector<WorldSet> Tpo::level_sets() const {
  std::vector<WorldSet> out;
  out.reserve(levels_);
  for (std::size_t i = 0; i < levels_; ++i) out.push_back(level(i));
  return out;
}

Tpo tpo_from_levels(std::size_t n, const std::vector<WorldSet>& levels) {
  std::vector<std::size_t> ranks(n);
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const WorldSet& l = levels[i];
    if (l.universe() != n) throw SizeMismatch("level over a space of the wrong size");
    if (l.empty()) throw InvalidOrder("level " + std::to_string(i) + " is empty");
    if ((seen & l.bits()) != 0) throw InvalidOrder("levels overlap");
    seen |= l.bits();
    for (World w : l.members()) ranks[w] = i;
  }
  if (seen != universe_mask(n)) throw InvalidOrder("levels do not cover every world");
  return Tpo::from_ranks(ranks);
}

Tpo tpo_from_relation(std::size_t n, const std::function<bool(World, World)>& leq) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (World x = 0; x < n; ++x) {
    for (World y = 0; y < n; ++y) r[x][y] = leq(x, y);
  }
  for (World x = 0; x < n; ++x) {
    for (World y = 0; y < n; ++y) {
      if (!r[x][y] && !r[y][x]) {
        throw NotTotal("worlds " + std::to_string(x) + " and " + std::to_string(y) +
                       " are incomparable");
      }
    }
  }
  for (World x = 0; x < n; ++x) {
    for (World y = 0; y < n; ++y) {
      if (!r[x][y]) continue;
      for (World z = 0; z < n; ++z) {
        if (r[y][z] && !r[x][z]) {
          throw NotTransitive("relation fails transitivity on " + std::to_string(x) + ", " +
                              std::to_string(y) + ", " + std::to_string(z));
        }
      }
    }
  }
  // In a total preorder, the number of worlds strictly below x determines its level.
  std::vector<std::size_t> below(n);
  for (World x = 0; x < n; ++x) {
    for (World y = 0; y < n; ++y) {
      if (r[y][x] && !r[x][y]) ++below[x];
    }
  }
  return Tpo::from_ranks(below);
}

WorldSet min_worlds(const Tpo& t, const WorldSet& s) {
  if (s.universe() != t.size()) throw SizeMismatch("world set and order over different spaces");
  if (s.empty()) throw InconsistentInput();
  std::size_t best = t.levels();
  for (World w : s.members()) best = std::min(best, t.rank(w));
  std::uint64_t bits = 0;
  for (World w : s.members()) {
    if (t.rank(w) == best) bits |= std::uint64_t{1} << w;
  }
  return {t.size(), bits};
}

}  // namespace poirev
