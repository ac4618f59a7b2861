#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poirev/io.hpp"

namespace poirev {

/// Operator families: the TPO families range over all TPOs, the POI families over all POIs.
enum class Family { natural, lex, restrained, revlex, poi_circ, poi };

std::string family_name(Family f);
/// Accepts the CLI operator names (natural, lex, restrained, revlex, poi-circ, poi).
Family family_from_name(std::string_view name);
RevisionOperator family_operator(Family f);
bool family_uses_poi(Family f);
/// Every state of the family over n worlds, in enumeration order.
std::vector<State> family_states(Family f, std::size_t n);

/// Abstract worlds x, y, z, u, v, w, then w6, w7, ...
WorldSpace default_space(std::size_t n);

enum class Verdict { holds, witness, skipped };
std::string verdict_name(Verdict v);

struct CampaignEntry {
  std::string family;
  std::size_t n = 0;
  std::string postulate;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  std::size_t states = 0;
  std::size_t failing_states = 0;
  std::size_t instances = 0;
  std::size_t skipped = 0;
};

struct CampaignReport {
  std::vector<CampaignEntry> entries;
  double seconds = 0;

  bool all_hold() const;
};

/// Runs verify_all for every (state, postulate) pair of each family, fanning states out
/// over `jobs` threads. The reported witness is the one for the first failing state.
CampaignReport campaign(const std::vector<Family>& families, std::size_t n,
                        const std::vector<std::string>& ids, std::size_t jobs = 1);

Json campaign_to_json(const CampaignReport& r);
std::string campaign_to_markdown(const CampaignReport& r);

enum class SearchStatus { found, holds, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::holds;
  std::optional<Witness> witness;
  std::size_t instances = 0;
};

/// Walks the family's states in order with a shared instance budget.
SearchResult search_countermodel(std::string_view id, Family f, std::size_t n,
                                 std::size_t budget);

/// A semantic/syntactic or composite equivalence: every id on the left holds
/// iff every id on the right holds.
struct Bridge {
  std::string name;
  std::vector<std::string> left;
  std::vector<std::string> right;
};
const std::vector<Bridge>& bridges();

struct BridgeDisagreement {
  std::string bridge;
  State state;
  bool left;
  bool right;
};

/// Compares both sides of every bridge on each state of the family.
std::vector<BridgeDisagreement> check_bridges(Family f, std::size_t n, std::size_t jobs = 1);

struct RepresentationReport {
  std::size_t states = 0;
  std::size_t inputs = 0;
  /// (state, input) pairs where the reconstruction differs from poi-circ itself;
  /// informational, since several non-prioritised operators share one naturalisation.
  std::size_t circ_mismatches = 0;
  std::vector<std::string> failures;
};

/// For every POI over n worlds: poi revision satisfies {eq, c1, c2, p, ps, alpha1-3};
/// the operator reconstructed from it is TPO-valued, satisfies {c1, c2, p, beta1p,
/// beta2p, iia}, and naturalises back to poi revision.
RepresentationReport representation_check(std::size_t n);

}  // namespace poirev
