#include "poirev/world.hpp"

#include <string>

#include "poirev/error.hpp"

namespace poirev {

std::uint64_t universe_mask(std::size_t universe) {
  if (universe > kMaxWorlds) {
    throw DomainTooLarge("world spaces are limited to " + std::to_string(kMaxWorlds) + " worlds");
  }
  return universe == kMaxWorlds ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
}

namespace {

void require_same(const WorldSet& a, const WorldSet& b) {
  if (a.universe() != b.universe()) {
    throw SizeMismatch("world sets over spaces of size " + std::to_string(a.universe()) + " and " +
                       std::to_string(b.universe()));
  }
}

}  // namespace

WorldSet::WorldSet(std::size_t universe, std::uint64_t bits)
    : universe_(universe), bits_(bits & universe_mask(universe)) {
  if ((bits & ~universe_mask(universe)) != 0) {
    throw SizeMismatch("world set has members outside a space of size " + std::to_string(universe));
  }
}

WorldSet WorldSet::all(std::size_t universe) { return {universe, universe_mask(universe)}; }

WorldSet WorldSet::none(std::size_t universe) { return {universe, 0}; }

WorldSet WorldSet::of(std::size_t universe, std::initializer_list<World> members) {
  std::uint64_t bits = 0;
  for (World w : members) {
    if (w >= universe) throw SizeMismatch("world " + std::to_string(w) + " out of range");
    bits |= std::uint64_t{1} << w;
  }
  return {universe, bits};
}

WorldSet WorldSet::single(std::size_t universe, World w) { return of(universe, {w}); }

bool WorldSet::subset_of(const WorldSet& other) const {
  require_same(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

bool WorldSet::intersects(const WorldSet& other) const {
  require_same(*this, other);
  return (bits_ & other.bits_) != 0;
}

WorldSet WorldSet::complement() const { return {universe_, ~bits_ & universe_mask(universe_)}; }

std::vector<World> WorldSet::members() const {
  std::vector<World> out;
  out.reserve(count());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<World>(std::countr_zero(rest)));
  }
  return out;
}

WorldSet operator|(const WorldSet& a, const WorldSet& b) {
  require_same(a, b);
  return {a.universe_, a.bits_ | b.bits_};
}

WorldSet operator&(const WorldSet& a, const WorldSet& b) {
  require_same(a, b);
  return {a.universe_, a.bits_ & b.bits_};
}

WorldSet operator-(const WorldSet& a, const WorldSet& b) {
  require_same(a, b);
  return {a.universe_, a.bits_ & ~b.bits_};
}

WorldSet operator^(const WorldSet& a, const WorldSet& b) {
  require_same(a, b);
  return {a.universe_, a.bits_ ^ b.bits_};
}

}  // namespace poirev
