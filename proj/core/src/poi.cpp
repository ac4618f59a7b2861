#include "poirev/poi.hpp"

#include "poirev/error.hpp"

namespace poirev {

PoiAssignment poi_from_ranks(const std::vector<std::size_t>& plus,
                             const std::vector<std::size_t>& minus) {
  const std::size_t n = plus.size();
  if (minus.size() != n) throw SizeMismatch("plus and minus rank maps differ in size");
  if (n > kMaxWorlds) throw DomainTooLarge("too many worlds for a POI assignment");
  for (World x = 0; x < n; ++x) {
    if (plus[x] >= minus[x]) throw Flush2Violation(x);
  }
  for (World x = 0; x < n; ++x) {
    for (World y = x + 1; y < n; ++y) {
      if ((plus[x] <= plus[y]) != (minus[x] <= minus[y]) ||
          (plus[y] <= plus[x]) != (minus[y] <= minus[x])) {
        throw Order3Violation(x, y);
      }
    }
  }
  std::vector<std::size_t> joint(plus);
  joint.insert(joint.end(), minus.begin(), minus.end());
  joint = canonicalize(joint);
  PoiAssignment p;
  p.plus_.assign(joint.begin(), joint.begin() + static_cast<std::ptrdiff_t>(n));
  p.minus_.assign(joint.begin() + static_cast<std::ptrdiff_t>(n), joint.end());
  return p;
}

Tpo derived_tpo(const PoiAssignment& p) { return Tpo::from_ranks(p.pluses()); }

bool non_flush(const PoiAssignment& p) {
  for (World x = 0; x < p.size(); ++x) {
    for (World y = 0; y < p.size(); ++y) {
      if (p.plus(x) == p.minus(y)) return false;
    }
  }
  return true;
}

PoiAssignment lexicographic_poi(const Tpo& t) {
  std::vector<std::size_t> plus(t.ranks());
  std::vector<std::size_t> minus(t.size());
  for (World w = 0; w < t.size(); ++w) minus[w] = t.rank(w) + t.levels();
  return poi_from_ranks(plus, minus);
}

PoiAssignment reverse_lex_poi(const Tpo& t) {
  std::vector<std::size_t> plus(t.size());
  std::vector<std::size_t> minus(t.size());
  for (World w = 0; w < t.size(); ++w) {
    plus[w] = 2 * t.rank(w);
    minus[w] = 2 * t.rank(w) + 1;
  }
  return poi_from_ranks(plus, minus);
}

}  // namespace poirev
