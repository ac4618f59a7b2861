#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "poirev/logic.hpp"
#include "poirev/operators.hpp"
#include "poirev/postulates.hpp"

namespace poirev {

using Json = nlohmann::ordered_json;

/// "x y | z": levels separated by '|', ties by whitespace.
std::string format_tpo(const Tpo& t, const WorldSpace& space);
Tpo parse_tpo(std::string_view text, const WorldSpace& space);
/// World names in order of first appearance in a TPO text.
std::vector<std::string> tpo_world_names(std::string_view text);

/// "x:+0,-1 y:+1,-3": one name:+plus,-minus entry per world.
std::string format_poi(const PoiAssignment& p, const WorldSpace& space);
PoiAssignment parse_poi(std::string_view text, const WorldSpace& space);
std::vector<std::string> poi_world_names(std::string_view text);

Json tpo_to_json(const Tpo& t, const WorldSpace& space);
/// Accepts {"levels": [[...], ...]} or a TPO text string.
Tpo tpo_from_json(const Json& j, const WorldSpace& space);
Json poi_to_json(const PoiAssignment& p, const WorldSpace& space);
PoiAssignment poi_from_json(const Json& j, const WorldSpace& space);
Json state_to_json(const State& s, const WorldSpace& space);
Json worldset_to_json(const WorldSet& s, const WorldSpace& space);

/// Splits "A,C" into atom names.
std::vector<std::string> split_list(std::string_view text);

struct ParsedState {
  WorldSpace space;
  State state;
};

/// Builds the world space and state from exactly one of a TPO or POI text.
/// Without atoms the space is abstract and named by the state text in order of appearance.
ParsedState parse_state(const std::optional<std::string>& tpo_text,
                        const std::optional<std::string>& poi_text,
                        const std::optional<std::vector<std::string>>& atoms);

/// A sentence string, or a list of world names.
WorldSet input_from_json(const Json& j, const WorldSpace& space);

struct LoadedFixture {
  WorldSpace space;
  FixtureTable table;
};

/// {"atoms": [...]} or {"worlds": [...]}, "prior": TPO, "entries": [{"input", "posterior"}].
LoadedFixture fixture_from_json(const Json& j);
LoadedFixture load_fixture_file(const std::filesystem::path& path);
Json fixture_to_json(const FixtureTable& table, const WorldSpace& space);

/// Non-fixture operators by CLI name: natural, lex, restrained, revlex, poi-circ, poi.
RevisionOperator operator_by_name(std::string_view name);

Json witness_to_json(const Witness& w, const WorldSpace& space);
std::string format_witness(const Witness& w, const WorldSpace& space);

}  // namespace poirev
