#include "poirev/campaign.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "poirev/enumerate.hpp"
#include "poirev/error.hpp"

namespace poirev {

std::string family_name(Family f) { return family_operator(f).name(); }

Family family_from_name(std::string_view name) {
  for (Family f : {Family::natural, Family::lex, Family::restrained, Family::revlex,
                   Family::poi_circ, Family::poi}) {
    if (family_name(f) == name) return f;
  }
  throw Error("unknown family '" + std::string(name) +
              "' (natural, lex, restrained, revlex, poi-circ, poi)");
}

RevisionOperator family_operator(Family f) {
  switch (f) {
    case Family::natural: return RevisionOperator::natural();
    case Family::lex: return RevisionOperator::lexicographic();
    case Family::restrained: return RevisionOperator::restrained();
    case Family::revlex: return RevisionOperator::reverse_lex();
    case Family::poi_circ: return RevisionOperator::nonprioritised_poi();
    case Family::poi: return RevisionOperator::poi();
  }
  throw Error("unreachable family");
}

bool family_uses_poi(Family f) { return f == Family::poi_circ || f == Family::poi; }

std::vector<State> family_states(Family f, std::size_t n) {
  std::vector<State> out;
  if (family_uses_poi(f)) {
    for_each_poi(n, [&](const PoiAssignment& p) { out.emplace_back(p); });
  } else {
    for_each_tpo(n, [&](const Tpo& t) { out.emplace_back(t); });
  }
  return out;
}

WorldSpace default_space(std::size_t n) {
  static const char* letters[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i < 6 ? letters[i] : "w" + std::to_string(i));
  return WorldSpace::abstract(names);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::witness: return "witness";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

bool CampaignReport::all_hold() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const CampaignEntry& e) { return e.verdict == Verdict::witness; });
}

namespace {

// Calls f(i) for i in [0, count) over `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& f) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (std::size_t k = 0; k < jobs; ++k) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

CampaignReport campaign(const std::vector<Family>& families, std::size_t n,
                        const std::vector<std::string>& ids, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  check_bound(Domain::verify, n);
  std::vector<const PostulateInfo*> ps;
  for (const auto& id : ids) ps.push_back(&postulate(id));

  CampaignReport report;
  for (Family f : families) {
    const RevisionOperator op = family_operator(f);
    const std::vector<State> states = family_states(f, n);
    std::vector<std::vector<VerifyResult>> results(states.size());
    parallel_for(states.size(), jobs, [&](std::size_t i) {
      Evaluator ev(op, states[i]);
      results[i].reserve(ps.size());
      for (const PostulateInfo* p : ps) results[i].push_back(verify_all(*p, ev));
    });
    for (std::size_t k = 0; k < ps.size(); ++k) {
      CampaignEntry e;
      e.family = family_name(f);
      e.n = n;
      e.postulate = ps[k]->id;
      e.states = states.size();
      for (std::size_t i = 0; i < states.size(); ++i) {
        const VerifyResult& r = results[i][k];
        e.instances += r.instances;
        e.skipped += r.skipped;
        if (r.witness) {
          ++e.failing_states;
          if (!e.witness) e.witness = r.witness;
        }
      }
      e.verdict = e.witness ? Verdict::witness
                  : e.instances == e.skipped ? Verdict::skipped
                                             : Verdict::holds;
      report.entries.push_back(std::move(e));
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json campaign_to_json(const CampaignReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"family", e.family},
           {"n", e.n},
           {"postulate", e.postulate},
           {"verdict", verdict_name(e.verdict)},
           {"states", e.states},
           {"failing_states", e.failing_states},
           {"instances", e.instances},
           {"skipped", e.skipped}};
    if (e.witness) j["witness"] = witness_to_json(*e.witness, default_space(e.n));
    entries.push_back(std::move(j));
  }
  return Json{{"entries", entries}, {"all_hold", r.all_hold()}, {"seconds", r.seconds}};
}

std::string campaign_to_markdown(const CampaignReport& r) {
  std::string out =
      "| family | n | postulate | verdict | states | failing | instances | skipped |\n"
      "|---|---|---|---|---|---|---|---|\n";
  for (const auto& e : r.entries) {
    out += "| " + e.family + " | " + std::to_string(e.n) + " | " + e.postulate + " | " +
           verdict_name(e.verdict) + " | " + std::to_string(e.states) + " | " +
           std::to_string(e.failing_states) + " | " + std::to_string(e.instances) + " | " +
           std::to_string(e.skipped) + " |\n";
  }
  return out;
}

SearchResult search_countermodel(std::string_view id, Family f, std::size_t n,
                                 std::size_t budget) {
  const PostulateInfo& p = postulate(id);
  check_bound(Domain::verify, n);
  const RevisionOperator op = family_operator(f);
  SearchResult out;
  for (const State& s : family_states(f, n)) {
    Evaluator ev(op, s);
    const VerifyResult r = verify_all(p, ev, budget - out.instances);
    out.instances += r.instances;
    if (r.witness) {
      out.status = SearchStatus::found;
      out.witness = r.witness;
      return out;
    }
    if (r.exhausted) {
      out.status = SearchStatus::budget_exhausted;
      return out;
    }
  }
  out.status = SearchStatus::holds;
  return out;
}

const std::vector<Bridge>& bridges() {
  static const std::vector<Bridge> all{
      {"beta1+ semantic = syntactic", {"beta1p"}, {"beta1ps"}},
      {"beta2+ semantic = syntactic", {"beta2p"}, {"beta2ps"}},
      {"beta1 semantic = syntactic", {"beta1"}, {"beta1s"}},
      {"beta2 semantic = syntactic", {"beta2"}, {"beta2s"}},
      {"beta1 = gamma1 + gamma3", {"beta1"}, {"gamma1", "gamma3"}},
      {"beta2 = gamma2 + gamma4", {"beta2"}, {"gamma2", "gamma4"}},
      {"alpha1 = beta1 + beta3", {"alpha1"}, {"beta1", "beta3"}},
      {"alpha2 = beta2 + beta4", {"alpha2"}, {"beta2", "beta4"}},
      {"beta3 semantic = syntactic", {"beta3"}, {"beta3s"}},
      {"beta4 semantic = syntactic", {"beta4"}, {"beta4s"}},
      {"alpha3 semantic = syntactic", {"alpha3"}, {"alpha3s"}},
      {"gamma1 = iDI", {"gamma1"}, {"idi"}},
      {"gamma2 = iK7", {"gamma2"}, {"ik7"}},
      {"iK8 = gamma1 + P+", {"ik8"}, {"gamma1", "pplus"}},
      {"iDF(i) right-to-left = gamma5", {"idf1rtl"}, {"gamma5"}},
      {"iDF(i) left-to-right = gamma6", {"idf1ltr"}, {"gamma6"}},
  };
  return all;
}

std::vector<BridgeDisagreement> check_bridges(Family f, std::size_t n, std::size_t jobs) {
  check_bound(Domain::verify, n);
  std::vector<std::string> ids;
  for (const auto& b : bridges()) {
    for (const auto* side : {&b.left, &b.right}) {
      for (const auto& id : *side) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
      }
    }
  }
  const RevisionOperator op = family_operator(f);
  const std::vector<State> states = family_states(f, n);
  std::vector<std::vector<BridgeDisagreement>> per_state(states.size());
  parallel_for(states.size(), jobs, [&](std::size_t i) {
    Evaluator ev(op, states[i]);
    std::map<std::string, bool> holds;
    for (const auto& id : ids) holds[id] = !verify_all(postulate(id), ev).witness.has_value();
    for (const auto& b : bridges()) {
      auto all = [&](const std::vector<std::string>& side) {
        return std::all_of(side.begin(), side.end(), [&](const auto& id) { return holds[id]; });
      };
      const bool l = all(b.left), r = all(b.right);
      if (l != r) per_state[i].push_back({b.name, states[i], l, r});
    }
  });
  std::vector<BridgeDisagreement> out;
  for (auto& v : per_state) out.insert(out.end(), v.begin(), v.end());
  return out;
}

RepresentationReport representation_check(std::size_t n) {
  RepresentationReport report;
  const WorldSpace space = default_space(n);
  const RevisionOperator star = RevisionOperator::poi();
  const RevisionOperator circ = RevisionOperator::derived(star);
  for_each_poi(n, [&](const PoiAssignment& p) {
    ++report.states;
    const State s(p);
    const std::string where = " on " + format_poi(p, space);
    Evaluator star_ev(star, s);
    for (const char* id : {"eq", "c1", "c2", "p", "ps", "alpha1", "alpha2", "alpha3"}) {
      if (auto w = verify_all(postulate(id), star_ev).witness) {
        report.failures.push_back("poi violates " + std::string(id) + where);
      }
    }
    Evaluator circ_ev(circ, s);
    for (std::uint64_t bits = 1; bits <= universe_mask(n); ++bits) {
      const WorldSet a(n, bits);
      ++report.inputs;
      try {
        const Tpo derived = circ_ev.post(a);
        if (derived != nonprioritised_poi_revise(p, a)) ++report.circ_mismatches;
        if (naturalise(derived, a) != poi_revise(p, a)) {
          report.failures.push_back("naturalisation does not recover poi at " +
                                    space.format(a) + where);
        }
      } catch (const Error& e) {
        report.failures.push_back(std::string("reconstruction failed: ") + e.what() + where);
      }
    }
    for (const char* id : {"c1", "c2", "p", "beta1p", "beta2p", "iia"}) {
      if (auto w = verify_all(postulate(id), circ_ev).witness) {
        report.failures.push_back("reconstructed operator violates " + std::string(id) + where);
      }
    }
  });
  return report;
}

}  // namespace poirev
