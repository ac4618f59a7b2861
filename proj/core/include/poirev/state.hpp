#pragma once

#include <variant>

#include "poirev/error.hpp"
#include "poirev/poi.hpp"
#include "poirev/tpo.hpp"

namespace poirev {

enum class StateKind { tpo, poi };

/// A belief state: either a bare TPO or a POI assignment.
class State {
 public:
  State(Tpo t) : v_(std::move(t)) {}  // NOLINT(google-explicit-constructor)
  State(PoiAssignment p) : v_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  StateKind kind() const noexcept { return v_.index() == 0 ? StateKind::tpo : StateKind::poi; }
  bool is_poi() const noexcept { return kind() == StateKind::poi; }
  std::size_t size() const { return is_poi() ? poi().size() : std::get<Tpo>(v_).size(); }

  /// The state's own TPO (derived_tpo for POI states).
  Tpo tpo() const { return is_poi() ? derived_tpo(poi()) : std::get<Tpo>(v_); }
  /// Throws StateKindError on TPO states.
  const PoiAssignment& poi() const {
    if (!is_poi()) throw StateKindError("state is a TPO, not a POI assignment");
    return std::get<PoiAssignment>(v_);
  }

  friend bool operator==(const State&, const State&) = default;

 private:
  std::variant<Tpo, PoiAssignment> v_;
};

}  // namespace poirev
