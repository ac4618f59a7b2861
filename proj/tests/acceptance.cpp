// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "oracles.hpp"
#include "poirev/campaign.hpp"
#include "poirev/enumerate.hpp"
#include "poirev/fixtures.hpp"

using namespace poirev;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<WorldSet> inputs(std::size_t n) {
  std::vector<WorldSet> v;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) v.emplace_back(n, m);
  return v;
}

Outcome fixtures() {
  const auto t0 = Clock::now();
  std::size_t checks = 0;
  std::string bad;
  for (const auto& f : builtin_fixtures()) {
    const FixtureReport r = run_fixture(f);
    checks += r.results.size();
    if (!r.passed()) bad += " " + f.name;
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!bad.empty()) return {false, "failing:" + bad};
  if (s >= 1.0) return {false, "took " + std::to_string(s) + " s"};
  return {true, std::to_string(builtin_fixtures().size()) + " fixtures, " +
                    std::to_string(checks) + " checks, " + std::to_string(s) + " s"};
}

Outcome poi_soundness() {
  const std::vector<std::string> ids{
      "eq",     "c1",     "c2",     "c3",     "c4",      "p",   "beta1", "beta2",
      "beta3",  "beta4",  "gamma1", "gamma2", "gamma3",  "gamma4", "alpha1", "alpha2",
      "alpha3", "omega1", "omega2", "omega3", "success", "ik3", "ik7",   "idr",
      "ido",    "idi"};
  std::size_t states = 0;
  for (std::size_t n : {2, 3}) {
    const CampaignReport r = campaign({Family::poi}, n, ids, 4);
    for (const auto& e : r.entries) {
      if (e.verdict != Verdict::holds) {
        return {false, e.postulate + " at n=" + std::to_string(n) + " is " + verdict_name(e.verdict)};
      }
    }
    states += r.entries.front().states;
  }
  return {true, std::to_string(ids.size()) + " postulates over " + std::to_string(states) + " POIs"};
}

Outcome representation() {
  std::size_t states = 0, inputs = 0, differ = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const RepresentationReport r = representation_check(n);
    if (!r.failures.empty()) return {false, r.failures.front()};
    states += r.states;
    inputs += r.inputs;
    differ += r.circ_mismatches;
  }
  return {true, std::to_string(states) + " POIs, " + std::to_string(inputs) +
                    " inputs recomposed (" + std::to_string(differ) +
                    " where the reconstruction is a different circ with the same naturalisation)"};
}

Outcome family_identities() {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Tpo& t : enumerate_tpos(n)) {
      const PoiAssignment lp = lexicographic_poi(t);
      for (const WorldSet& a : inputs(n)) {
        ++cases;
        if (lex_revise(t, a) != poi_revise(lp, a)) return {false, "lex differs at n=" + std::to_string(n)};
        if (restrained_revise(t, a) != naturalise(reverse_lex_revise(t, a), a)) {
          return {false, "restrained differs at n=" + std::to_string(n)};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " (TPO, input) pairs"};
}

Outcome landscape() {
  struct Probe {
    std::string id;
    Family family;
  };
  const std::vector<Probe> expected_failures{
      {"beta1p", Family::restrained}, {"p", Family::natural},   {"sep", Family::poi},
      {"pplus", Family::poi},         {"ik8", Family::poi},     {"gamma5", Family::poi},
      {"gamma6", Family::poi}};
  for (const auto& probe : expected_failures) {
    const SearchResult r = search_countermodel(probe.id, probe.family, 3, 1000000000);
    if (r.status != SearchStatus::found) return {false, "no witness for " + probe.id};
    Evaluator ev(family_operator(probe.family), r.witness->state);
    if (check_instance(postulate(probe.id), ev, r.witness->bindings) != std::optional<bool>(false)) {
      return {false, "witness for " + probe.id + " does not re-validate"};
    }
  }
  const std::vector<std::string> lex_holds{"beta1p", "beta2p", "rec",    "sep",  "pplus",
                                           "gamma5", "gamma6", "idf1", "idf2", "idf3"};
  const CampaignReport r = campaign({Family::lex}, 3, lex_holds, 4);
  for (const auto& e : r.entries) {
    if (e.verdict != Verdict::holds) return {false, "lex fails " + e.postulate};
  }
  return {true, std::to_string(expected_failures.size()) + " re-validated witnesses, lex clean on " +
                    std::to_string(lex_holds.size()) + " postulates"};
}

Outcome bridge_agreement() {
  const auto d = check_bridges(Family::poi, 3, 4);
  if (!d.empty()) return {false, std::to_string(d.size()) + " disagreements, first: " + d.front().bridge};
  return {true, std::to_string(bridges().size()) + " bridges over 85 POIs"};
}

Outcome enumeration() {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<oracle::Ranks> got;
    for (const Tpo& t : enumerate_tpos(n)) got.insert(t.ranks());
    if (got != oracle::weak_orders(n) || enumerate_tpos(n).size() != got.size()) {
      return {false, "TPO mismatch at n=" + std::to_string(n)};
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::pair<oracle::Ranks, oracle::Ranks>> got;
    for (const PoiAssignment& p : enumerate_pois(n)) got.emplace(p.pluses(), p.minuses());
    if (got != oracle::poi_assignments(n) || enumerate_pois(n).size() != got.size()) {
      return {false, "POI mismatch at n=" + std::to_string(n)};
    }
  }
  return {true, "TPO n=4: " + std::to_string(enumerate_tpos(4).size()) +
                    ", POI n=2: " + std::to_string(enumerate_pois(2).size())};
}

Outcome overrules_characterisation() {
  const auto lex = RevisionOperator::lexicographic();
  const auto res = RevisionOperator::restrained();
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Tpo& t : enumerate_tpos(n)) {
      const State s(t);
      for (const WorldSet& a : inputs(n)) {
        for (const WorldSet& b : inputs(n)) {
          ++cases;
          if (overrules(lex, s, a, b) != (a & b).empty()) return {false, "lex"};
          if (strictly_overrules(lex, s, a, b) != overrules(lex, s, a, b)) return {false, "lex strict"};
          const bool counteract = belief_set(res.revise(s, b)).subset_of(a.complement()) &&
                                  belief_set(res.revise(s, a)).subset_of(b.complement());
          if (overrules(res, s, a, b) != counteract) return {false, "restrained"};
          if (strictly_overrules(res, s, a, b) != counteract) return {false, "restrained strict"};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " (prior, A, B) triples"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 fixture suite", fixtures},
      {"2 POI soundness", poi_soundness},
      {"3 representation", representation},
      {"4 family identities", family_identities},
      {"5 violation landscape", landscape},
      {"6 equivalence bridges", bridge_agreement},
      {"7 enumeration oracles", enumeration},
      {"8 overrules characterisations", overrules_characterisation},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
