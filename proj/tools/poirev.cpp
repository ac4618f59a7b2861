#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "poirev/campaign.hpp"
#include "poirev/enumerate.hpp"
#include "poirev/error.hpp"
#include "poirev/fixtures.hpp"
#include "poirev/io.hpp"

namespace {

using namespace poirev;

constexpr int kPass = 0;
constexpr int kWitness = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct StateOptions {
  std::string mode = "abstract";
  std::optional<std::string> atoms;
  std::optional<std::string> tpo;
  std::optional<std::string> poi;
  std::string op;
};

void add_state_options(CLI::App* cmd, StateOptions& o, bool op_required) {
  cmd->add_option("--mode", o.mode, "World space: abstract (named worlds) or propositional")
      ->check(CLI::IsMember({"abstract", "propositional"}));
  cmd->add_option("--atoms", o.atoms, "Comma-separated atoms; selects propositional mode");
  cmd->add_option("--tpo", o.tpo, "TPO state, e.g. \"x y | z\"");
  cmd->add_option("--poi", o.poi, "POI state, e.g. \"x:+0,-1 y:+1,-3\"");
  auto* op = cmd->add_option("--op", o.op, "natural, lex, restrained, revlex, poi-circ, poi, fixture:<file>");
  if (op_required) op->required();
}

struct Resolved {
  WorldSpace space;
  std::optional<State> state;
  RevisionOperator op;
};

Resolved resolve(const StateOptions& o) {
  if (o.op.rfind("fixture:", 0) == 0) {
    if (o.tpo || o.poi || o.atoms) {
      throw Error("a fixture operator takes its world space and prior from the fixture file");
    }
    LoadedFixture f = load_fixture_file(o.op.substr(8));
    State s(f.table.prior);
    return {std::move(f.space), std::move(s), RevisionOperator::fixture(std::move(f.table))};
  }
  std::optional<std::vector<std::string>> atoms;
  if (o.atoms) atoms = split_list(*o.atoms);
  if (o.mode == "propositional" && !atoms) throw Error("propositional mode needs --atoms");
  RevisionOperator op = operator_by_name(o.op.empty() ? "poi" : o.op);
  if (!o.tpo && !o.poi) throw Error("give a state with --tpo or --poi");
  ParsedState ps = parse_state(o.tpo, o.poi, atoms);
  return {std::move(ps.space), std::move(ps.state), std::move(op)};
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_revise(const StateOptions& o, const std::vector<std::string>& sentences, bool json) {
  Resolved r = resolve(o);
  if (sentences.empty()) throw Error("revise needs at least one sentence");
  const bool poi_based = r.op.kind() == OperatorKind::poi ||
                         r.op.kind() == OperatorKind::nonprioritised_poi;
  if (poi_based && sentences.size() > 1) {
    throw Error(
        "POI-based operators return a posterior TPO only; a second revision would need a "
        "posterior POI assignment, which is left undefined. Query the posterior with a "
        "single step instead.");
  }
  State state = *r.state;
  Json steps = Json::array();
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const WorldSet a = r.space.models_of(sentences[i]);
    const Tpo post = r.op.revise(state, a);
    const WorldSet bel = belief_set(post);
    const bool success = bel.subset_of(a);
    if (json) {
      Json step{{"input", sentences[i]},
                {"models", worldset_to_json(a, r.space)},
                {"posterior", tpo_to_json(post, r.space)},
                {"belief_set", worldset_to_json(bel, r.space)}};
      if (r.op.kind() == OperatorKind::nonprioritised_poi) step["success"] = success;
      steps.push_back(std::move(step));
    } else {
      std::cout << "step " << i + 1 << ": revise by " << sentences[i] << " "
                << r.space.format(a) << "\n  posterior: " << format_tpo(post, r.space)
                << "\n  belief set: " << r.space.format(bel) << '\n';
      if (r.op.kind() == OperatorKind::nonprioritised_poi) {
        std::cout << "  success: " << (success ? "yes" : "no") << '\n';
      }
    }
    state = State(post);
  }
  if (json) {
    print(Json{{"operator", r.op.name()}, {"state", state_to_json(*r.state, r.space)},
               {"steps", steps}});
  }
  return kPass;
}

int cmd_check(const StateOptions& o, const std::optional<std::string>& family,
              std::optional<std::size_t> n, std::vector<std::string> ids, std::size_t jobs,
              const std::string& format) {
  if (ids.empty()) throw Error("check needs at least one postulate id");
  if (ids.size() == 1 && ids.front() == "all") {
    ids.clear();
    for (const auto& p : registry()) ids.push_back(p.id);
  }
  for (const auto& id : ids) postulate(id);
  if (family) {
    if (!n) throw Error("--family needs --n");
    if (o.tpo || o.poi) throw Error("give either --family or a single state, not both");
    const CampaignReport report = campaign({family_from_name(*family)}, *n, ids, jobs);
    if (format == "json") {
      print(campaign_to_json(report));
    } else if (format == "markdown") {
      std::cout << campaign_to_markdown(report);
    } else {
      const WorldSpace space = default_space(*n);
      for (const auto& e : report.entries) {
        std::cout << e.postulate << ": " << verdict_name(e.verdict) << " (" << e.family
                  << ", n=" << e.n << ", " << e.states << " states, " << e.failing_states
                  << " failing)\n";
        if (e.witness) std::cout << "  " << format_witness(*e.witness, space) << '\n';
      }
    }
    return report.all_hold() ? kPass : kWitness;
  }
  Resolved r = resolve(o);
  Evaluator ev(r.op, *r.state);
  bool ok = true;
  Json results = Json::array();
  for (const auto& id : ids) {
    const VerifyResult v = verify_all(postulate(id), ev);
    const Verdict verdict = v.witness ? Verdict::witness
                            : v.instances == v.skipped ? Verdict::skipped
                                                       : Verdict::holds;
    ok = ok && !v.witness;
    if (format == "json") {
      Json j{{"postulate", id},
             {"verdict", verdict_name(verdict)},
             {"instances", v.instances},
             {"skipped", v.skipped}};
      if (v.witness) j["witness"] = witness_to_json(*v.witness, r.space);
      results.push_back(std::move(j));
    } else {
      std::cout << id << ": " << verdict_name(verdict) << " (" << v.instances << " instances, "
                << v.skipped << " skipped)\n";
      if (v.witness) std::cout << "  " << format_witness(*v.witness, r.space) << '\n';
    }
  }
  if (format == "json") {
    print(Json{{"operator", r.op.name()}, {"state", state_to_json(*r.state, r.space)},
               {"results", results}, {"all_hold", ok}});
  }
  return ok ? kPass : kWitness;
}

int cmd_fixtures(const std::vector<std::string>& filter, bool json) {
  bool ok = true;
  std::size_t ran = 0;
  Json reports = Json::array();
  for (const auto& f : builtin_fixtures()) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), f.name) == filter.end()) {
      continue;
    }
    ++ran;
    const FixtureReport r = run_fixture(f);
    ok = ok && r.passed();
    if (json) {
      reports.push_back(fixture_report_to_json(r));
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << f.summary << ")\n";
    for (const auto& e : r.results) {
      std::cout << "  [" << (e.passed ? "ok" : "FAILED") << "] " << e.description << '\n';
      if (!e.passed) std::cout << "    got: " << e.detail << '\n';
    }
  }
  if (ran == 0) throw Error("no fixture matches the filter");
  if (json) print(Json{{"fixtures", reports}, {"all_pass", ok}});
  return ok ? kPass : kWitness;
}

int cmd_enumerate(const std::string& kind, std::size_t n, bool list, bool json) {
  const WorldSpace space = default_space(n);
  std::vector<std::string> items;
  std::size_t count = 0;
  if (kind == "tpo") {
    for_each_tpo(n, [&](const Tpo& t) {
      ++count;
      if (list) items.push_back(format_tpo(t, space));
    });
  } else {
    for_each_poi(n, [&](const PoiAssignment& p) {
      ++count;
      if (list) items.push_back(format_poi(p, space));
    });
  }
  if (json) {
    Json j{{"kind", kind}, {"n", n}, {"count", count}};
    if (list) j["items"] = items;
    print(j);
  } else {
    std::cout << count << '\n';
    for (const auto& s : items) std::cout << s << '\n';
  }
  return kPass;
}

int cmd_search(const std::string& id, const std::string& family, std::size_t n,
               std::size_t budget, bool json) {
  const SearchResult r = search_countermodel(id, family_from_name(family), n, budget);
  const WorldSpace space = default_space(n);
  const char* status = r.status == SearchStatus::found     ? "witness"
                       : r.status == SearchStatus::holds   ? "holds"
                                                           : "budget-exhausted";
  if (json) {
    Json j{{"postulate", id}, {"family", family}, {"n", n}, {"status", status},
           {"instances", r.instances}};
    if (r.witness) j["witness"] = witness_to_json(*r.witness, space);
    print(j);
  } else {
    std::cout << id << " (" << family << ", n=" << n << "): " << status << " after "
              << r.instances << " instances\n";
    if (r.witness) std::cout << "  " << format_witness(*r.witness, space) << '\n';
  }
  switch (r.status) {
    case SearchStatus::found: return kWitness;
    case SearchStatus::holds: return kPass;
    case SearchStatus::budget_exhausted: return kBudget;
  }
  return kUsage;
}

int cmd_overrules(const StateOptions& o, const std::string& a_text, const std::string& b_text,
                  bool json) {
  Resolved r = resolve(o);
  const WorldSet a = r.space.models_of(a_text);
  const WorldSet b = r.space.models_of(b_text);
  const bool over = overrules(r.op, *r.state, a, b);
  const bool strict = strictly_overrules(r.op, *r.state, a, b);
  if (json) {
    print(Json{{"A", a_text}, {"B", b_text}, {"overrules", over}, {"strictly_overrules", strict}});
  } else {
    std::cout << b_text << (over ? " overrules " : " does not overrule ") << a_text << '\n'
              << b_text << (strict ? " strictly overrules " : " does not strictly overrule ")
              << a_text << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poirev: finite-model engine for iterated belief revision"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "markdown"}));

  StateOptions revise_opts;
  std::vector<std::string> sentences;
  auto* revise = app.add_subcommand("revise", "Revise a state by one or more sentences");
  add_state_options(revise, revise_opts, false);
  revise->add_option("sentences", sentences, "Revision inputs, applied in order")->required();

  StateOptions check_opts;
  std::optional<std::string> family;
  std::optional<std::size_t> n;
  std::vector<std::string> ids;
  std::size_t jobs = 1;
  auto* check = app.add_subcommand("check", "Verify postulates exhaustively");
  add_state_options(check, check_opts, false);
  check->add_option("--family", family, "Operator family to quantify over");
  check->add_option("--n", n, "World count for --family");
  check->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_option("ids", ids, "Postulate ids, or 'all'")->required();

  std::vector<std::string> filter;
  auto* fixtures = app.add_subcommand("fixtures", "Run the built-in countermodel fixtures");
  fixtures->add_option("names", filter, "Fixture names (default: all)");

  std::string kind;
  std::size_t enum_n = 0;
  bool list = false;
  auto* enumerate = app.add_subcommand("enumerate", "Count (and list) TPOs or POI assignments");
  enumerate->add_option("kind", kind)->required()->check(CLI::IsMember({"tpo", "poi"}));
  enumerate->add_option("n", enum_n)->required();
  enumerate->add_flag("--list", list, "Print every element");

  std::string search_id;
  std::string search_family;
  std::size_t search_n = 3;
  std::size_t budget = 100000000;
  auto* search = app.add_subcommand("search", "Look for a countermodel within a budget");
  search->add_option("id", search_id)->required();
  search->add_option("--family", search_family)->required();
  search->add_option("--n", search_n);
  search->add_option("--budget", budget, "Instance budget");

  StateOptions over_opts;
  std::string over_a, over_b;
  auto* over = app.add_subcommand("overrules", "Does B (strictly) overrule A?");
  add_state_options(over, over_opts, false);
  over->add_option("A", over_a)->required();
  over->add_option("B", over_b)->required();

  for (auto* sub : {revise, check, fixtures, enumerate, search, over}) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "markdown"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const bool json = format == "json";
  try {
    if (*revise) return cmd_revise(revise_opts, sentences, json);
    if (*check) return cmd_check(check_opts, family, n, ids, jobs, format);
    if (*fixtures) return cmd_fixtures(filter, json);
    if (*enumerate) return cmd_enumerate(kind, enum_n, list, json);
    if (*search) return cmd_search(search_id, search_family, search_n, budget, json);
    if (*over) return cmd_overrules(over_opts, over_a, over_b, json);
  } catch (const poirev::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
