#pragma once

#include <cstddef>
#include <vector>

#include "poirev/tpo.hpp"

namespace poirev {

/// Proper ordinal interval assignment: each world x owns two points x+ < x-
/// ranked on one shared, contiguous scale, with the plus order mirroring the minus order.
class PoiAssignment {
 public:
  PoiAssignment() = default;

  std::size_t size() const noexcept { return plus_.size(); }
  std::size_t plus(World w) const { return plus_.at(w); }
  std::size_t minus(World w) const { return minus_.at(w); }
  const std::vector<std::size_t>& pluses() const noexcept { return plus_; }
  const std::vector<std::size_t>& minuses() const noexcept { return minus_; }

  friend bool operator==(const PoiAssignment&, const PoiAssignment&) = default;
  friend auto operator<=>(const PoiAssignment&, const PoiAssignment&) = default;

 private:
  friend PoiAssignment poi_from_ranks(const std::vector<std::size_t>&,
                                      const std::vector<std::size_t>&);
  std::vector<std::size_t> plus_;
  std::vector<std::size_t> minus_;
};

/// Validates and canonicalizes. Throws Flush2Violation, then Order3Violation
/// naming the first offending pair (smaller world first).
PoiAssignment poi_from_ranks(const std::vector<std::size_t>& plus,
                             const std::vector<std::size_t>& minus);

/// The TPO the assignment is faithful to: worlds ranked by their plus points.
Tpo derived_tpo(const PoiAssignment& p);

/// No world's plus point ties another world's minus point.
bool non_flush(const PoiAssignment& p);

/// Every plus point below every minus point, plus order given by t.
PoiAssignment lexicographic_poi(const Tpo& t);

/// Each world's interval sits strictly inside its own level of t: x+ = 2 rank, x- = 2 rank + 1.
PoiAssignment reverse_lex_poi(const Tpo& t);

}  // namespace poirev
