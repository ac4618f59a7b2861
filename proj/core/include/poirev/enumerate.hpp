#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "poirev/poi.hpp"
#include "poirev/tpo.hpp"

namespace poirev {

enum class Domain { tpo, poi, verify };

/// Largest n accepted for a domain: 6 for TPOs, 4 for POIs and exhaustive
/// verification, unless the POIREV_MAX_N environment variable says otherwise.
std::size_t max_worlds(Domain d);
/// Throws DomainTooLarge when n is 0 or above max_worlds(d).
void check_bound(Domain d, std::size_t n);

/// Calls f once per TPO over n worlds (every ordered set partition), in a fixed order.
void for_each_tpo(std::size_t n, const std::function<void(const Tpo&)>& f);
std::vector<Tpo> enumerate_tpos(std::size_t n);

/// Calls f once per canonical POI assignment over n worlds, in a fixed order.
void for_each_poi(std::size_t n, const std::function<void(const PoiAssignment&)>& f);
std::vector<PoiAssignment> enumerate_pois(std::size_t n);

}  // namespace poirev
