#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "poirev/campaign.hpp"
#include "poirev/enumerate.hpp"
#include "poirev/error.hpp"

using namespace poirev;

namespace {

using Check = std::function<bool(const RevisionOperator&, const State&, std::size_t)>;

std::vector<WorldSet> inputs(std::size_t n) {
  std::vector<WorldSet> v;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) v.emplace_back(n, m);
  return v;
}

// Each check spells out its postulate over raw posteriors, without the registry.
template <class Body>
bool forall_pairs(std::size_t n, Body body) {
  for (World x = 0; x < n; ++x) {
    for (World y = 0; y < n; ++y) {
      if (!body(x, y)) return false;
    }
  }
  return true;
}

const std::map<std::string, Check>& direct() {
  static const std::map<std::string, Check> m{
      {"success",
       [](const RevisionOperator& op, const State& s, std::size_t n) {
         for (const auto& a : inputs(n)) {
           if (!belief_set(op.revise(s, a)).subset_of(a)) return false;
         }
         return true;
       }},
      {"c1",
       [](const RevisionOperator& op, const State& s, std::size_t n) {
         const Tpo t = s.tpo();
         for (const auto& a : inputs(n)) {
           const Tpo p = op.revise(s, a);
           if (!forall_pairs(n, [&](World x, World y) {
                 return !(a.contains(x) && a.contains(y)) || t.leq(x, y) == p.leq(x, y);
               }))
             return false;
         }
         return true;
       }},
      {"c2",
       [](const RevisionOperator& op, const State& s, std::size_t n) {
         const Tpo t = s.tpo();
         for (const auto& a : inputs(n)) {
           const Tpo p = op.revise(s, a);
           if (!forall_pairs(n, [&](World x, World y) {
                 return a.contains(x) || a.contains(y) || t.leq(x, y) == p.leq(x, y);
               }))
             return false;
         }
         return true;
       }},
      {"c3",
       [](const RevisionOperator& op, const State& s, std::size_t n) {
         const Tpo t = s.tpo();
         for (const auto& a : inputs(n)) {
           const Tpo p = op.revise(s, a);
           if (!forall_pairs(n, [&](World x, World y) {
                 return !(a.contains(x) && !a.contains(y) && t.less(x, y)) || p.less(x, y);
               }))
             return false;
         }
         return true;
       }},
      {"c4",
       [](const RevisionOperator& op, const State& s, std::size_t n) {
         const Tpo t = s.tpo();
         for (const auto& a : inputs(n)) {
           const Tpo p = op.revise(s, a);
           if (!forall_pairs(n, [&](World x, World y) {
                 return !(a.contains(x) && !a.contains(y) && t.leq(x, y)) || p.leq(x, y);
               }))
             return false;
         }
         return true;
       }},
      {"p",
       [](const RevisionOperator& op, const State& s, std::size_t n) {
         const Tpo t = s.tpo();
         for (const auto& a : inputs(n)) {
           const Tpo p = op.revise(s, a);
           if (!forall_pairs(n, [&](World x, World y) {
                 return !(a.contains(x) && !a.contains(y) && t.leq(x, y)) || p.less(x, y);
               }))
             return false;
         }
         return true;
       }},
      {"sep",
       [](const RevisionOperator& op, const State& s, std::size_t n) {
         for (const auto& a : inputs(n)) {
           const Tpo p = op.revise(s, a);
           if (!forall_pairs(n, [&](World x, World y) {
                 return !(a.contains(x) && !a.contains(y)) || !p.equiv(x, y);
               }))
             return false;
         }
         return true;
       }},
      {"rec",
       [](const RevisionOperator& op, const State& s, std::size_t n) {
         for (const auto& a : inputs(n)) {
           const Tpo pa = op.revise(s, a);
           for (const auto& b : inputs(n)) {
             // [(s * A) * B] is read off the posterior: min(<=_A, B)
             if (!(a & b).empty() && !oracle::min_set(pa, b).subset_of(a)) {
               return false;
             }
           }
         }
         return true;
       }},
  };
  return m;
}

}  // namespace

TEST(Postulates, RegistryIdsAreUniqueAndCoverTheCatalogue) {
  std::set<std::string> ids;
  for (const auto& p : registry()) EXPECT_TRUE(ids.insert(p.id).second) << p.id;
  for (const char* id :
       {"success", "eq", "c1", "c2", "c3", "c4", "p", "sep", "k7", "k8", "dr", "do", "di", "df",
        "c1s", "c2s", "c3s", "c4s", "ps", "rec", "omega1", "omega2", "omega3", "seps", "ik3",
        "ik4", "ipres", "iia", "beta1p", "beta2p", "beta1", "beta2", "gamma1", "gamma2",
        "gamma3", "gamma4", "gamma5", "gamma6", "pplus", "ik7", "ik8", "idr", "ido", "idi",
        "idf1", "idf2", "idf3", "beta3", "beta4", "alpha1", "alpha2", "alpha3", "wpuplus",
        "spuplus", "beta3s", "beta4s", "alpha3s", "nonflush"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_THROW(postulate("nope"), UnknownPostulate);
}

TEST(Postulates, InstanceCountIsProductOfDomains) {
  for (const auto& p : registry()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < p.sentence_vars.size(); ++i) expected *= (1u << n) - 1;
      for (std::size_t i = 0; i < p.world_vars.size(); ++i) expected *= n;
      EXPECT_EQ(instance_count(p, n), expected) << p.id;
    }
  }
}

TEST(Postulates, VerdictsMatchDirectDefinitions) {
  for (Family f : {Family::natural, Family::lex, Family::restrained, Family::revlex,
                   Family::poi_circ, Family::poi}) {
    const RevisionOperator op = family_operator(f);
    for (const State& s : family_states(f, 3)) {
      Evaluator ev(op, s);
      for (const auto& [id, check] : direct()) {
        const VerifyResult r = verify_all(postulate(id), ev);
        ASSERT_EQ(!r.witness.has_value(), check(op, s, 3)) << family_name(f) << " " << id;
        EXPECT_LE(r.instances, instance_count(postulate(id), 3));
      }
    }
  }
}

TEST(Postulates, WitnessesReplayAsFailures) {
  for (Family f : {Family::natural, Family::restrained, Family::poi}) {
    const RevisionOperator op = family_operator(f);
    for (const State& s : family_states(f, 3)) {
      Evaluator ev(op, s);
      for (const auto& p : registry()) {
        const VerifyResult r = verify_all(p, ev);
        if (!r.witness) continue;
        Trace trace;
        Evaluator fresh(op, r.witness->state);
        ASSERT_EQ(check_instance(p, fresh, r.witness->bindings, &trace), std::optional<bool>(false))
            << p.id;
        EXPECT_EQ(trace.size(), r.witness->trace.size());
      }
    }
  }
}

TEST(Postulates, NamedBindings) {
  const auto space = default_space(3);
  const State s(parse_tpo("x | y z", space));
  const auto nat = RevisionOperator::natural();
  const WorldSet a = space.models_of("x | z");
  EXPECT_EQ(check_instance("p", nat, s, {{"A", a, {}}, {"x", {}, 0}, {"y", {}, 1}}),
            std::optional<bool>(true));
  EXPECT_EQ(check_instance("p", nat, s, {{"A", a, {}}, {"x", {}, 2}, {"y", {}, 1}}),
            std::optional<bool>(false));
  EXPECT_THROW(check_instance("p", nat, s, {{"A", a, {}}}), ArityMismatch);
  EXPECT_THROW(check_instance("p", nat, s, {{"B", a, {}}, {"x", {}, 0}, {"y", {}, 1}}),
               ArityMismatch);
}

TEST(Postulates, UndefinedInstancesAreSkipped) {
  const auto space = default_space(2);
  const State s(parse_tpo("x | y", space));
  const auto nat = RevisionOperator::natural();
  // k7 with A & C inconsistent has no posterior to compare.
  EXPECT_EQ(check_instance("k7", nat, s, {{"A", space.models_of("x"), {}},
                                          {"C", space.models_of("y"), {}}}),
            std::nullopt);
  EXPECT_EQ(check_instance("nonflush", nat, s, {}), std::nullopt);
}

TEST(Postulates, OverrulesDefinitions) {
  for (const Tpo& t : enumerate_tpos(3)) {
    const State s(t);
    for (const auto& op : {RevisionOperator::natural(), RevisionOperator::restrained()}) {
      for (const auto& a : inputs(3)) {
        for (const auto& b : inputs(3)) {
          const WorldSet bel = oracle::min_set(op.revise(s, a), b);
          EXPECT_EQ(overrules(op, s, a, b), !bel.subset_of(a));
          EXPECT_EQ(strictly_overrules(op, s, a, b), bel.subset_of(a.complement()));
        }
      }
    }
  }
}

TEST(Postulates, BudgetStopsVerification) {
  Evaluator ev(RevisionOperator::lexicographic(), State(enumerate_tpos(3).front()));
  const VerifyResult r = verify_all(postulate("c1"), ev, 5);
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(r.instances, 5u);
  EXPECT_FALSE(r.witness);
}
