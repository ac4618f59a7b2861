#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace poirev {

using World = std::size_t;

/// Worlds are stored in a 64-bit mask, so a world space holds at most 64 points.
inline constexpr std::size_t kMaxWorlds = 64;

/// A subset of a finite world space {0, ..., universe-1}.
class WorldSet {
 public:
  WorldSet() = default;
  WorldSet(std::size_t universe, std::uint64_t bits);

  static WorldSet all(std::size_t universe);
  static WorldSet none(std::size_t universe);
  static WorldSet of(std::size_t universe, std::initializer_list<World> members);
  static WorldSet single(std::size_t universe, World w);

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(World w) const noexcept { return w < universe_ && ((bits_ >> w) & 1U) != 0; }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

  bool subset_of(const WorldSet& other) const;
  bool intersects(const WorldSet& other) const;
  WorldSet complement() const;
  std::vector<World> members() const;

  friend WorldSet operator|(const WorldSet& a, const WorldSet& b);
  friend WorldSet operator&(const WorldSet& a, const WorldSet& b);
  friend WorldSet operator-(const WorldSet& a, const WorldSet& b);
  friend WorldSet operator^(const WorldSet& a, const WorldSet& b);
  friend bool operator==(const WorldSet&, const WorldSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

std::uint64_t universe_mask(std::size_t universe);

}  // namespace poirev
