#include "poirev/fixtures.hpp"

#include <chrono>

#include "poirev/error.hpp"

namespace poirev {

namespace {

struct Builder {
  Fixture f;
  RevisionOperator op;

  WorldSet set(std::string_view sentence) const { return f.space.models_of(sentence); }
  World world(std::string_view name) const { return f.space.lookup(name); }
  Tpo tpo(std::string_view text) const { return parse_tpo(text, f.space); }

  void posterior(std::string_view input, std::string_view expected, const RevisionOperator& o) {
    f.expectations.push_back({o.name() + " revision by " + std::string(input) + " = " +
                                  std::string(expected),
                              ExpectKind::posterior, o, {}, true, set(input), tpo(expected)});
  }
  void posterior(std::string_view input, std::string_view expected) {
    posterior(input, expected, op);
  }
  void belief(std::string_view input, const WorldSet& worlds, const RevisionOperator& o) {
    Expectation e{"[" + o.name() + " " + std::string(input) + "] = " + f.space.format(worlds),
                  ExpectKind::belief, o};
    e.input = set(input);
    e.worlds = worlds;
    f.expectations.push_back(std::move(e));
  }
  void verdict(const std::string& id, bool holds, const RevisionOperator& o) {
    Expectation e{id + (holds ? " holds" : " fails") + " for " + o.name(), ExpectKind::verdict, o, id,
                  holds};
    f.expectations.push_back(std::move(e));
  }
  void verdict(const std::string& id, bool holds) { verdict(id, holds, op); }
  void instance(const std::string& id, std::vector<std::string> sentences,
                std::vector<std::string> worlds) {
    const PostulateInfo& p = postulate(id);
    Expectation e{id + " refuted at", ExpectKind::instance, op, id, false};
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      e.bindings.s[i] = set(sentences[i]);
      e.description += " " + p.sentence_vars[i] + "=" + f.space.format(e.bindings.s[i]);
    }
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      e.bindings.w[i] = world(worlds[i]);
      e.description += " " + p.world_vars[i] + "=" + worlds[i];
    }
    f.expectations.push_back(std::move(e));
  }
  void nonflush(bool expected) {
    f.expectations.push_back({std::string("non-flush is ") + (expected ? "true" : "false"),
                              ExpectKind::nonflush, op, {}, expected});
  }
};

Builder poi_fixture(std::string name, std::string summary, std::vector<std::string> worlds,
                    std::string_view poi_text) {
  WorldSpace space = WorldSpace::abstract(std::move(worlds));
  PoiAssignment p = parse_poi(poi_text, space);
  return {{std::move(name), std::move(summary), std::move(space), State(std::move(p)), {}},
          RevisionOperator::poi()};
}

WorldSpace two_atoms() { return WorldSpace::propositional(AtomTable({"A", "C"})); }

Fixture fig() {
  Builder b = poi_fixture("FX-FIG", "figure POI x:(0,1) y:(1,3) z:(2,4)", {"x", "y", "z"},
                          "x:+0,-1 y:+1,-3 z:+2,-4");
  const auto circ = RevisionOperator::nonprioritised_poi();
  b.posterior("y | z", "x y | z", circ);
  b.posterior("y | z", "y | x | z");
  b.belief("y | z", b.set("x | y"), circ);
  b.belief("y | z", b.set("y"), b.op);
  b.verdict("success", false, circ);
  b.verdict("success", true);
  return b.f;
}

Fixture s6() {
  Builder b = poi_fixture("FX-S6", "POI z:(0,2) y:(1,3) x:(4,5) refutes beta1+ and beta2+",
                          {"x", "y", "z"}, "z:+0,-2 y:+1,-3 x:+4,-5");
  b.posterior("T", "z | y | x", RevisionOperator::nonprioritised_poi());
  b.posterior("x | z", "z | y | x", RevisionOperator::nonprioritised_poi());
  b.posterior("x | z", "z | y | x");
  b.posterior("x", "x | z | y");
  b.instance("beta1p", {"x | z", "x"}, {"x", "y"});
  b.instance("beta2p", {"x | z", "x"}, {"x", "y"});
  b.verdict("beta1p", false);
  b.verdict("beta2p", false);
  for (const char* id : {"beta1", "beta2", "alpha1", "alpha2", "alpha3"}) b.verdict(id, true);
  return b.f;
}

Fixture p5a() {
  WorldSpace space = two_atoms();
  FixtureTable table{parse_tpo("11 | 00 | 10 | 01", space), {}};
  table.entries.emplace_back(space.models_of("A"), table.prior);
  table.entries.emplace_back(space.models_of("A | C"), parse_tpo("11 | 10 | 01 | 00", space));
  State s(table.prior);
  Builder b{{"FX-P5a", "recorded revisions refuting gamma1 and gamma2", space, s, {}},
            RevisionOperator::fixture(table)};
  for (const char* id : {"c1", "c2", "p"}) b.verdict(id, true);
  b.verdict("gamma1", false);
  b.verdict("gamma2", false);
  b.instance("gamma1", {"A", "C"}, {"10", "00"});
  b.instance("gamma2", {"A", "C"}, {"10", "00"});
  return b.f;
}

Fixture p5b() {
  WorldSpace space = two_atoms();
  FixtureTable table{parse_tpo("11 | 00 | 01 | 10", space), {}};
  table.entries.emplace_back(space.models_of("A | C"), table.prior);
  table.entries.emplace_back(space.models_of("C"), parse_tpo("11 | 01 | 00 | 10", space));
  State s(table.prior);
  Builder b{{"FX-P5b", "recorded revisions refuting gamma3 and gamma4", space, s, {}},
            RevisionOperator::fixture(table)};
  for (const char* id : {"c1", "c2", "p"}) b.verdict(id, true);
  b.verdict("gamma3", false);
  b.verdict("gamma4", false);
  b.instance("gamma3", {"A", "C"}, {"01", "00"});
  b.instance("gamma4", {"A", "C"}, {"01", "00"});
  return b.f;
}

Fixture p15() {
  WorldSpace space = two_atoms();
  State s(parse_tpo("10 | 00 | 01 | 11", space));
  Builder b{{"FX-P15", "restrained revision refutes gamma5 and gamma6", space, s, {}},
            RevisionOperator::restrained()};
  b.posterior("C", "01 | 10 | 00 | 11");
  b.posterior("A | C", "10 | 00 | 01 | 11");
  b.belief("C", b.set("~A & C"), b.op);
  b.instance("gamma5", {"A", "C"}, {"01", "00"});
  b.instance("gamma6", {"A", "C"}, {"01", "00"});
  b.verdict("gamma5", false);
  b.verdict("gamma6", false);
  return b.f;
}

Fixture nf() {
  Builder b = poi_fixture("FX-NF", "flush POI x:(0,2) y:(1,3) z:(3,4) refutes separation",
                          {"x", "y", "z"}, "x:+0,-2 y:+1,-3 z:+3,-4");
  b.nonflush(false);
  b.posterior("x | z", "x | y z");
  b.instance("sep", {"x | z"}, {"z", "y"});
  b.instance("pplus", {"x | z", "x | z"}, {"z", "y"});
  b.verdict("sep", false);
  b.verdict("pplus", false);
  b.verdict("ik8", false);
  return b.f;
}

}  // namespace

bool FixtureReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> all{fig(), s6(), p5a(), p5b(), p15(), nf()};
  return all;
}

FixtureReport run_fixture(const Fixture& f) {
  const auto start = std::chrono::steady_clock::now();
  FixtureReport report{f.name, {}, 0};
  for (const auto& e : f.expectations) {
    ExpectationResult r{e.description, false, {}};
    try {
      switch (e.kind) {
        case ExpectKind::posterior: {
          const Tpo got = e.op.revise(f.state, e.input);
          r.passed = got == e.posterior;
          r.detail = format_tpo(got, f.space);
          break;
        }
        case ExpectKind::belief: {
          const WorldSet got = belief_set(e.op.revise(f.state, e.input));
          r.passed = got == e.worlds;
          r.detail = f.space.format(got);
          break;
        }
        case ExpectKind::verdict: {
          Evaluator ev(e.op, f.state);
          const VerifyResult v = verify_all(postulate(e.postulate), ev);
          r.passed = v.witness.has_value() != e.expected;
          r.detail = v.witness ? format_witness(*v.witness, f.space)
                               : "holds over " + std::to_string(v.instances - v.skipped) +
                                     " instances (" + std::to_string(v.skipped) + " skipped)";
          break;
        }
        case ExpectKind::instance: {
          Evaluator ev(e.op, f.state);
          Trace trace;
          const auto v = check_instance(postulate(e.postulate), ev, e.bindings, &trace);
          r.passed = v.has_value() && *v == e.expected;
          for (const auto& t : trace) {
            r.detail += (r.detail.empty() ? "" : "; ") + t.condition + "=" + (t.value ? "1" : "0");
          }
          break;
        }
        case ExpectKind::nonflush: {
          const bool v = non_flush(f.state.poi());
          r.passed = v == e.expected;
          r.detail = v ? "non-flush" : "flush";
          break;
        }
      }
    } catch (const Error& err) {
      r.passed = false;
      r.detail = err.what();
    }
    report.results.push_back(std::move(r));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json fixture_report_to_json(const FixtureReport& r) {
  Json results = Json::array();
  for (const auto& e : r.results) {
    results.push_back({{"expectation", e.description}, {"passed", e.passed}, {"detail", e.detail}});
  }
  return Json{{"fixture", r.name}, {"passed", r.passed()}, {"seconds", r.seconds},
              {"expectations", results}};
}

}  // namespace poirev
