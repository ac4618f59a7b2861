#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poirev/state.hpp"

namespace poirev {

Tpo natural_revise(const Tpo& t, const WorldSet& a);
Tpo lex_revise(const Tpo& t, const WorldSet& a);
Tpo restrained_revise(const Tpo& t, const WorldSet& a);
Tpo reverse_lex_revise(const Tpo& t, const WorldSet& a);
Tpo nonprioritised_poi_revise(const PoiAssignment& p, const WorldSet& a);
/// Promotes min(circ_posterior, a) to an exclusive bottom level.
Tpo naturalise(const Tpo& circ_posterior, const WorldSet& a);
Tpo poi_revise(const PoiAssignment& p, const WorldSet& a);

/// Models of the belief set: min(t, W).
WorldSet belief_set(const Tpo& t);

/// Recorded revisions of one prior; anything not in the table is undefined.
struct FixtureTable {
  Tpo prior;
  std::vector<std::pair<WorldSet, Tpo>> entries;

  const Tpo* find(const WorldSet& a) const;
};

enum class OperatorKind {
  natural,
  lexicographic,
  restrained,
  reverse_lex,
  nonprioritised_poi,
  poi,
  fixture,
  derived,
};

/// A one-shot semantic revision operator (state, consistent input) -> posterior TPO.
class RevisionOperator {
 public:
  static RevisionOperator natural();
  static RevisionOperator lexicographic();
  static RevisionOperator restrained();
  static RevisionOperator reverse_lex();
  static RevisionOperator nonprioritised_poi();
  static RevisionOperator poi();
  static RevisionOperator fixture(FixtureTable table);
  /// The non-prioritised operator reconstructed pairwise from `star` (see derived_circ).
  static RevisionOperator derived(const RevisionOperator& star);

  OperatorKind kind() const noexcept { return kind_; }
  /// CLI-facing name: natural, lex, restrained, revlex, poi-circ, poi, fixture, derived(<base>).
  std::string name() const;
  bool accepts(const State& s) const;
  /// Throws StateKindError, InconsistentInput, FixtureLookupError, NotTotal or NotTransitive.
  Tpo revise(const State& s, const WorldSet& a) const;

  const FixtureTable* table() const noexcept { return table_.get(); }
  const RevisionOperator* base() const noexcept { return base_.get(); }

 private:
  explicit RevisionOperator(OperatorKind k) : kind_(k) {}
  OperatorKind kind_;
  std::shared_ptr<const FixtureTable> table_;
  std::shared_ptr<const RevisionOperator> base_;
};

/// Ramsey test: A => B is accepted iff min(op(s, a), W) is inside b.
bool cond_belief(const RevisionOperator& op, const State& s, const WorldSet& a, const WorldSet& b);

/// x <= y after s o A iff x <= y after s * (A | ~{x, y}); validated as a TPO.
Tpo derived_circ(const RevisionOperator& star, const State& s, const WorldSet& a);

/// A and B classify the pair (x, y) the same way under x <|^A y iff x in A or y not in A.
bool agree(const WorldSet& a, const WorldSet& b, World x, World y);

}  // namespace poirev
