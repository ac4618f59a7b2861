#include "poirev/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "poirev/error.hpp"

namespace poirev {

std::size_t max_worlds(Domain d) {
  if (const char* env = std::getenv("POIREV_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return std::min<std::size_t>(v, kMaxWorlds);
  }
  return d == Domain::tpo ? 6 : 4;
}

void check_bound(Domain d, std::size_t n) {
  const std::size_t limit = max_worlds(d);
  if (n == 0 || n > limit) {
    throw DomainTooLarge("world count " + std::to_string(n) + " outside 1.." +
                         std::to_string(limit) + " (set POIREV_MAX_N to raise the bound)");
  }
}

namespace {

void partitions(std::uint64_t remaining, std::size_t level, std::vector<std::size_t>& ranks,
                const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (remaining == 0) {
    f(ranks);
    return;
  }
  // Walk every nonempty submask of the remaining worlds as the next level.
  for (std::uint64_t sub = remaining;; sub = (sub - 1) & remaining) {
    if (sub == 0) break;
    for (std::uint64_t b = sub; b != 0; b &= b - 1) ranks[std::countr_zero(b)] = level;
    partitions(remaining & ~sub, level + 1, ranks, f);
  }
}

void ordered_partitions(std::size_t n,
                        const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> ranks(n);
  partitions(universe_mask(n), 0, ranks, f);
}

// Merges the plus chain p_0 < ... < p_{k-1} with the minus chain m_0 < ... < m_{k-1},
// one scale step at a time. A step places p_i, m_j, or both tied; m_j needs p_j placed earlier.
void merges(std::size_t k, std::size_t i, std::size_t j, std::size_t step,
            std::vector<std::size_t>& prank, std::vector<std::size_t>& mrank,
            const std::function<void()>& f) {
  if (i == k && j == k) {
    f();
    return;
  }
  if (i < k) {
    prank[i] = step;
    merges(k, i + 1, j, step + 1, prank, mrank, f);
  }
  if (j < i) {
    mrank[j] = step;
    merges(k, i, j + 1, step + 1, prank, mrank, f);
    if (i < k) {
      prank[i] = step;
      merges(k, i + 1, j + 1, step + 1, prank, mrank, f);
    }
  }
}

}  // namespace

void for_each_tpo(std::size_t n, const std::function<void(const Tpo&)>& f) {
  check_bound(Domain::tpo, n);
  ordered_partitions(n, [&](const std::vector<std::size_t>& r) { f(Tpo::from_ranks(r)); });
}

std::vector<Tpo> enumerate_tpos(std::size_t n) {
  std::vector<Tpo> out;
  for_each_tpo(n, [&](const Tpo& t) { out.push_back(t); });
  return out;
}

void for_each_poi(std::size_t n, const std::function<void(const PoiAssignment&)>& f) {
  check_bound(Domain::poi, n);
  ordered_partitions(n, [&](const std::vector<std::size_t>& level) {
    const std::size_t k = *std::max_element(level.begin(), level.end()) + 1;
    std::vector<std::size_t> prank(k);
    std::vector<std::size_t> mrank(k);
    merges(k, 0, 0, 0, prank, mrank, [&] {
      std::vector<std::size_t> plus(n);
      std::vector<std::size_t> minus(n);
      for (World w = 0; w < n; ++w) {
        plus[w] = prank[level[w]];
        minus[w] = mrank[level[w]];
      }
      f(poi_from_ranks(plus, minus));
    });
  });
}

std::vector<PoiAssignment> enumerate_pois(std::size_t n) {
  std::vector<PoiAssignment> out;
  for_each_poi(n, [&](const PoiAssignment& p) { out.push_back(p); });
  return out;
}

}  // namespace poirev
