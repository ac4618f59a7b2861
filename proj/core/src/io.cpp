#include "poirev/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "poirev/error.hpp"

namespace poirev {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

void add_unique(std::vector<std::string>& names, const std::string& n) {
  if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
}

struct PoiEntry {
  std::string name;
  std::size_t plus;
  std::size_t minus;
};

std::vector<PoiEntry> poi_entries(std::string_view text) {
  static const std::regex entry(R"(^([A-Za-z0-9_]+):\+?([0-9]+),-?([0-9]+)$)");
  std::vector<PoiEntry> out;
  for (const auto& tok : split_ws(text)) {
    std::smatch m;
    if (!std::regex_match(tok, m, entry)) {
      throw InvalidOrder("malformed POI entry '" + tok + "' (expected name:+p,-q)");
    }
    out.push_back({m[1], std::stoul(m[2]), std::stoul(m[3])});
  }
  if (out.empty()) throw InvalidOrder("empty POI assignment");
  return out;
}

Tpo tpo_from_name_levels(const std::vector<std::vector<std::string>>& levels,
                         const WorldSpace& space) {
  std::vector<WorldSet> sets;
  for (const auto& level : levels) {
    std::uint64_t bits = 0;
    for (const auto& name : level) {
      const World w = space.lookup(name);
      if (((bits >> w) & 1U) != 0) throw InvalidOrder("world '" + name + "' repeated");
      bits |= std::uint64_t{1} << w;
    }
    sets.emplace_back(space.size(), bits);
  }
  return tpo_from_levels(space.size(), sets);
}

std::vector<std::vector<std::string>> text_levels(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  for (const auto& part : split_on(text, '|')) {
    auto names = split_ws(part);
    if (names.empty()) throw InvalidOrder("empty level in TPO '" + std::string(text) + "'");
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  for (auto& part : split_on(text, ',')) {
    auto names = split_ws(part);
    if (names.size() != 1) throw Error("malformed list '" + std::string(text) + "'");
    out.push_back(names.front());
  }
  return out;
}

std::string format_tpo(const Tpo& t, const WorldSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < t.levels(); ++i) {
    if (i > 0) out += " | ";
    bool first = true;
    for (World w : t.level(i).members()) {
      if (!first) out += ' ';
      out += space.name(w);
      first = false;
    }
  }
  return out;
}

Tpo parse_tpo(std::string_view text, const WorldSpace& space) {
  return tpo_from_name_levels(text_levels(text), space);
}

std::vector<std::string> tpo_world_names(std::string_view text) {
  std::vector<std::string> names;
  for (const auto& level : text_levels(text)) {
    for (const auto& n : level) add_unique(names, n);
  }
  return names;
}

std::string format_poi(const PoiAssignment& p, const WorldSpace& space) {
  std::string out;
  for (World w = 0; w < p.size(); ++w) {
    if (w > 0) out += ' ';
    out += space.name(w) + ":+" + std::to_string(p.plus(w)) + ",-" + std::to_string(p.minus(w));
  }
  return out;
}

PoiAssignment parse_poi(std::string_view text, const WorldSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> plus(n), minus(n);
  std::vector<bool> seen(n);
  for (const auto& e : poi_entries(text)) {
    const World w = space.lookup(e.name);
    if (seen[w]) throw InvalidOrder("world '" + e.name + "' assigned twice");
    seen[w] = true;
    plus[w] = e.plus;
    minus[w] = e.minus;
  }
  for (World w = 0; w < n; ++w) {
    if (!seen[w]) throw InvalidOrder("world '" + space.name(w) + "' has no interval");
  }
  return poi_from_ranks(plus, minus);
}

std::vector<std::string> poi_world_names(std::string_view text) {
  std::vector<std::string> names;
  for (const auto& e : poi_entries(text)) add_unique(names, e.name);
  return names;
}

Json worldset_to_json(const WorldSet& s, const WorldSpace& space) {
  Json j = Json::array();
  for (World w : s.members()) j.push_back(space.name(w));
  return j;
}

Json tpo_to_json(const Tpo& t, const WorldSpace& space) {
  Json levels = Json::array();
  for (const auto& l : t.level_sets()) levels.push_back(worldset_to_json(l, space));
  return Json{{"levels", levels}};
}

Tpo tpo_from_json(const Json& j, const WorldSpace& space) {
  if (j.is_string()) return parse_tpo(j.get<std::string>(), space);
  if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array()) {
    throw InvalidOrder("TPO JSON needs a \"levels\" array");
  }
  std::vector<std::vector<std::string>> levels;
  for (const auto& l : j["levels"]) levels.push_back(l.get<std::vector<std::string>>());
  return tpo_from_name_levels(levels, space);
}

Json poi_to_json(const PoiAssignment& p, const WorldSpace& space) {
  Json m = Json::object();
  for (World w = 0; w < p.size(); ++w) m[space.name(w)] = {p.plus(w), p.minus(w)};
  return Json{{"poi", m}};
}

PoiAssignment poi_from_json(const Json& j, const WorldSpace& space) {
  if (j.is_string()) return parse_poi(j.get<std::string>(), space);
  if (!j.is_object() || !j.contains("poi") || !j["poi"].is_object()) {
    throw InvalidOrder("POI JSON needs a \"poi\" object");
  }
  const std::size_t n = space.size();
  std::vector<std::size_t> plus(n), minus(n);
  std::vector<bool> seen(n);
  for (const auto& [name, pair] : j["poi"].items()) {
    const World w = space.lookup(name);
    if (!pair.is_array() || pair.size() != 2) throw InvalidOrder("POI entry needs [plus, minus]");
    seen[w] = true;
    plus[w] = pair[0].get<std::size_t>();
    minus[w] = pair[1].get<std::size_t>();
  }
  for (World w = 0; w < n; ++w) {
    if (!seen[w]) throw InvalidOrder("world '" + space.name(w) + "' has no interval");
  }
  return poi_from_ranks(plus, minus);
}

Json state_to_json(const State& s, const WorldSpace& space) {
  return s.is_poi() ? poi_to_json(s.poi(), space) : tpo_to_json(s.tpo(), space);
}

ParsedState parse_state(const std::optional<std::string>& tpo_text,
                        const std::optional<std::string>& poi_text,
                        const std::optional<std::vector<std::string>>& atoms) {
  if (tpo_text.has_value() == poi_text.has_value()) {
    throw Error("give exactly one of a TPO or a POI state");
  }
  WorldSpace space = atoms ? WorldSpace::propositional(AtomTable(*atoms))
                           : WorldSpace::abstract(tpo_text ? tpo_world_names(*tpo_text)
                                                           : poi_world_names(*poi_text));
  if (tpo_text) {
    Tpo t = parse_tpo(*tpo_text, space);
    return {std::move(space), State(std::move(t))};
  }
  PoiAssignment p = parse_poi(*poi_text, space);
  return {std::move(space), State(std::move(p))};
}

WorldSet input_from_json(const Json& j, const WorldSpace& space) {
  if (j.is_string()) return space.models_of(j.get<std::string>());
  if (j.is_array()) {
    std::uint64_t bits = 0;
    for (const auto& n : j) bits |= std::uint64_t{1} << space.lookup(n.get<std::string>());
    return {space.size(), bits};
  }
  throw Error("revision input must be a sentence string or a list of worlds");
}

LoadedFixture fixture_from_json(const Json& j) {
  if (!j.is_object()) throw Error("fixture file must hold a JSON object");
  WorldSpace space = [&] {
    if (j.contains("atoms")) {
      return WorldSpace::propositional(AtomTable(j["atoms"].get<std::vector<std::string>>()));
    }
    if (j.contains("worlds")) return WorldSpace::abstract(j["worlds"].get<std::vector<std::string>>());
    throw Error("fixture needs \"atoms\" or \"worlds\"");
  }();
  if (!j.contains("prior")) throw Error("fixture needs a \"prior\"");
  FixtureTable table{tpo_from_json(j["prior"], space), {}};
  for (const auto& e : j.value("entries", Json::array())) {
    WorldSet input = input_from_json(e.at("input"), space);
    if (table.find(input) != nullptr) throw Error("fixture records the same input twice");
    table.entries.emplace_back(input, tpo_from_json(e.at("posterior"), space));
  }
  return {std::move(space), std::move(table)};
}

LoadedFixture load_fixture_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture file '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("fixture file '" + path.string() + "': " + e.what());
  }
  return fixture_from_json(j);
}

Json fixture_to_json(const FixtureTable& table, const WorldSpace& space) {
  Json j;
  if (space.mode() == WorldMode::propositional) {
    j["atoms"] = space.atoms().names();
  } else {
    j["worlds"] = space.names();
  }
  j["prior"] = tpo_to_json(table.prior, space);
  j["entries"] = Json::array();
  for (const auto& [input, posterior] : table.entries) {
    j["entries"].push_back(
        {{"input", worldset_to_json(input, space)}, {"posterior", tpo_to_json(posterior, space)}});
  }
  return j;
}

RevisionOperator operator_by_name(std::string_view name) {
  if (name == "natural") return RevisionOperator::natural();
  if (name == "lex") return RevisionOperator::lexicographic();
  if (name == "restrained") return RevisionOperator::restrained();
  if (name == "revlex") return RevisionOperator::reverse_lex();
  if (name == "poi-circ") return RevisionOperator::nonprioritised_poi();
  if (name == "poi") return RevisionOperator::poi();
  throw Error("unknown operator '" + std::string(name) +
              "' (natural, lex, restrained, revlex, poi-circ, poi, fixture:<file>)");
}

Json witness_to_json(const Witness& w, const WorldSpace& space) {
  const PostulateInfo& p = postulate(w.postulate);
  Json bindings = Json::object();
  for (std::size_t i = 0; i < p.sentence_vars.size(); ++i) {
    bindings[p.sentence_vars[i]] = worldset_to_json(w.bindings.s[i], space);
  }
  for (std::size_t i = 0; i < p.world_vars.size(); ++i) {
    bindings[p.world_vars[i]] = space.name(w.bindings.w[i]);
  }
  Json trace = Json::array();
  for (const auto& t : w.trace) trace.push_back({{"condition", t.condition}, {"value", t.value}});
  return Json{{"postulate", w.postulate},
              {"state", state_to_json(w.state, space)},
              {"bindings", bindings},
              {"trace", trace}};
}

std::string format_witness(const Witness& w, const WorldSpace& space) {
  const PostulateInfo& p = postulate(w.postulate);
  std::string out = w.postulate + " fails on " +
                    (w.state.is_poi() ? format_poi(w.state.poi(), space)
                                      : format_tpo(w.state.tpo(), space)) +
                    "\n  bindings:";
  for (std::size_t i = 0; i < p.sentence_vars.size(); ++i) {
    out += " " + p.sentence_vars[i] + "=" + space.format(w.bindings.s[i]);
  }
  for (std::size_t i = 0; i < p.world_vars.size(); ++i) {
    out += " " + p.world_vars[i] + "=" + space.name(w.bindings.w[i]);
  }
  for (const auto& t : w.trace) {
    out += "\n  " + t.condition + ": " + (t.value ? "true" : "false");
  }
  return out;
}

}  // namespace poirev
