#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "poirev/operators.hpp"

namespace poirev {

/// Memoizes one operator's posteriors for one state.
class Evaluator {
 public:
  Evaluator(RevisionOperator op, State s);

  const RevisionOperator& op() const noexcept { return op_; }
  const State& state() const noexcept { return state_; }
  std::size_t size() const noexcept { return n_; }
  const Tpo& prior() const noexcept { return prior_; }
  WorldSet all() const { return WorldSet::all(n_); }

  /// Posterior TPO of state * a.
  const Tpo& post(const WorldSet& a);
  /// Models of [state * a].
  WorldSet bel(const WorldSet& a) { return min_worlds(post(a), all()); }
  /// Models of [(state * a) * b].
  WorldSet bel2(const WorldSet& a, const WorldSet& b) { return min_worlds(post(a), b); }

 private:
  RevisionOperator op_;
  State state_;
  std::size_t n_;
  Tpo prior_;
  std::vector<std::optional<Tpo>> dense_;
  std::unordered_map<std::uint64_t, Tpo> sparse_;
};

struct Bindings {
  std::array<WorldSet, 4> s{};
  std::array<World, 3> w{};
};

struct TraceEntry {
  std::string condition;
  bool value;
};
using Trace = std::vector<TraceEntry>;

enum class Flavor { semantic, syntactic, structural };

/// Evaluates one instance. nullopt means the instance is undefined
/// (e.g. a derived revision input is inconsistent) and is skipped.
using Predicate = std::optional<bool> (*)(Evaluator&, const Bindings&, Trace*);

struct PostulateInfo {
  std::string id;
  std::vector<std::string> sentence_vars;
  std::vector<std::string> world_vars;
  Flavor flavor;
  std::string statement;
  Predicate predicate;
};

const std::vector<PostulateInfo>& registry();
/// Throws UnknownPostulate.
const PostulateInfo& postulate(std::string_view id);

struct Witness {
  std::string postulate;
  State state;
  Bindings bindings;
  Trace trace;
};

/// Checks one instantiation; bindings are named by the postulate's variables
/// (e.g. {"A", set}, {"x", world}). Throws ArityMismatch, InconsistentInput,
/// FixtureLookupError. Returns nullopt for undefined instances.
struct NamedBinding {
  std::string var;
  std::optional<WorldSet> set;
  std::optional<World> world;
};
std::optional<bool> check_instance(std::string_view id, const RevisionOperator& op,
                                   const State& s, const std::vector<NamedBinding>& bindings,
                                   Trace* trace = nullptr);
std::optional<bool> check_instance(const PostulateInfo& p, Evaluator& ev, const Bindings& b,
                                   Trace* trace = nullptr);

struct VerifyResult {
  std::optional<Witness> witness;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  /// True when the instance budget ran out before the search finished.
  bool exhausted = false;
};

/// Universal check over all nonempty sentence sets (ascending mask, first variable
/// most significant) and all worlds (ascending), stopping at the first failure.
/// Instances that hit a fixture lookup miss or are undefined are counted as skipped.
VerifyResult verify_all(const PostulateInfo& p, Evaluator& ev,
                        std::optional<std::size_t> budget = std::nullopt);
std::optional<Witness> verify(std::string_view id, const RevisionOperator& op, const State& s);

/// Number of instantiations verify_all walks over n worlds.
std::size_t instance_count(const PostulateInfo& p, std::size_t n);

/// B overrules A: A is not believed after revising by A then B.
bool overrules(const RevisionOperator& op, const State& s, const WorldSet& a, const WorldSet& b);
/// B strictly overrules A: not-A is believed after revising by A then B.
bool strictly_overrules(const RevisionOperator& op, const State& s, const WorldSet& a,
                        const WorldSet& b);

}  // namespace poirev
