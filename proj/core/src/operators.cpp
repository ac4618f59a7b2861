#include "poirev/operators.hpp"

#include <tuple>

#include "poirev/error.hpp"

namespace poirev {

namespace {

void require_input(const Tpo& t, const WorldSet& a) {
  if (a.universe() != t.size()) throw SizeMismatch("revision input over a different world space");
  if (a.empty()) throw InconsistentInput();
}

}  // namespace

Tpo naturalise(const Tpo& t, const WorldSet& a) {
  const WorldSet m = min_worlds(t, a);
  std::vector<std::pair<int, std::size_t>> keys(t.size());
  for (World x = 0; x < t.size(); ++x) keys[x] = {m.contains(x) ? 0 : 1, t.rank(x)};
  return Tpo::from_keys(keys);
}

Tpo natural_revise(const Tpo& t, const WorldSet& a) {
  require_input(t, a);
  return naturalise(t, a);
}

Tpo lex_revise(const Tpo& t, const WorldSet& a) {
  require_input(t, a);
  std::vector<std::pair<int, std::size_t>> keys(t.size());
  for (World x = 0; x < t.size(); ++x) keys[x] = {a.contains(x) ? 0 : 1, t.rank(x)};
  return Tpo::from_keys(keys);
}

Tpo restrained_revise(const Tpo& t, const WorldSet& a) {
  require_input(t, a);
  const WorldSet m = min_worlds(t, a);
  std::vector<std::tuple<int, std::size_t, int>> keys(t.size());
  for (World x = 0; x < t.size(); ++x) {
    keys[x] = m.contains(x) ? std::tuple{0, std::size_t{0}, 0}
                            : std::tuple{1, t.rank(x), a.contains(x) ? 0 : 1};
  }
  return Tpo::from_keys(keys);
}

Tpo reverse_lex_revise(const Tpo& t, const WorldSet& a) {
  require_input(t, a);
  std::vector<std::pair<std::size_t, int>> keys(t.size());
  for (World x = 0; x < t.size(); ++x) keys[x] = {t.rank(x), a.contains(x) ? 0 : 1};
  return Tpo::from_keys(keys);
}

Tpo nonprioritised_poi_revise(const PoiAssignment& p, const WorldSet& a) {
  if (a.universe() != p.size()) throw SizeMismatch("revision input over a different world space");
  if (a.empty()) throw InconsistentInput();
  std::vector<std::size_t> score(p.size());
  for (World x = 0; x < p.size(); ++x) score[x] = a.contains(x) ? p.plus(x) : p.minus(x);
  return Tpo::from_ranks(score);
}

Tpo poi_revise(const PoiAssignment& p, const WorldSet& a) {
  return naturalise(nonprioritised_poi_revise(p, a), a);
}

WorldSet belief_set(const Tpo& t) { return min_worlds(t, WorldSet::all(t.size())); }

const Tpo* FixtureTable::find(const WorldSet& a) const {
  for (const auto& [input, posterior] : entries) {
    if (input == a) return &posterior;
  }
  return nullptr;
}

RevisionOperator RevisionOperator::natural() { return RevisionOperator(OperatorKind::natural); }
RevisionOperator RevisionOperator::lexicographic() {
  return RevisionOperator(OperatorKind::lexicographic);
}
RevisionOperator RevisionOperator::restrained() {
  return RevisionOperator(OperatorKind::restrained);
}
RevisionOperator RevisionOperator::reverse_lex() {
  return RevisionOperator(OperatorKind::reverse_lex);
}
RevisionOperator RevisionOperator::nonprioritised_poi() {
  return RevisionOperator(OperatorKind::nonprioritised_poi);
}
RevisionOperator RevisionOperator::poi() { return RevisionOperator(OperatorKind::poi); }

RevisionOperator RevisionOperator::fixture(FixtureTable table) {
  for (const auto& [input, posterior] : table.entries) {
    if (input.empty()) throw InconsistentInput();
    if (input.universe() != table.prior.size() || posterior.size() != table.prior.size()) {
      throw SizeMismatch("fixture entry over a different world space");
    }
  }
  RevisionOperator op(OperatorKind::fixture);
  op.table_ = std::make_shared<const FixtureTable>(std::move(table));
  return op;
}

RevisionOperator RevisionOperator::derived(const RevisionOperator& star) {
  RevisionOperator op(OperatorKind::derived);
  op.base_ = std::make_shared<const RevisionOperator>(star);
  return op;
}

std::string RevisionOperator::name() const {
  switch (kind_) {
    case OperatorKind::natural: return "natural";
    case OperatorKind::lexicographic: return "lex";
    case OperatorKind::restrained: return "restrained";
    case OperatorKind::reverse_lex: return "revlex";
    case OperatorKind::nonprioritised_poi: return "poi-circ";
    case OperatorKind::poi: return "poi";
    case OperatorKind::fixture: return "fixture";
    case OperatorKind::derived: return "derived(" + base_->name() + ")";
  }
  return "?";
}

bool RevisionOperator::accepts(const State& s) const {
  switch (kind_) {
    case OperatorKind::nonprioritised_poi:
    case OperatorKind::poi: return s.is_poi();
    case OperatorKind::fixture: return s.tpo() == table_->prior;
    case OperatorKind::derived: return base_->accepts(s);
    default: return true;
  }
}

Tpo RevisionOperator::revise(const State& s, const WorldSet& a) const {
  if (!accepts(s)) {
    throw StateKindError(kind_ == OperatorKind::fixture
                             ? "fixture operator applied to a prior it does not record"
                             : "operator " + name() + " needs a POI state");
  }
  switch (kind_) {
    case OperatorKind::natural: return natural_revise(s.tpo(), a);
    case OperatorKind::lexicographic: return lex_revise(s.tpo(), a);
    case OperatorKind::restrained: return restrained_revise(s.tpo(), a);
    case OperatorKind::reverse_lex: return reverse_lex_revise(s.tpo(), a);
    case OperatorKind::nonprioritised_poi: return nonprioritised_poi_revise(s.poi(), a);
    case OperatorKind::poi: return poi_revise(s.poi(), a);
    case OperatorKind::fixture: {
      if (a.empty()) throw InconsistentInput();
      if (const Tpo* t = table_->find(a)) return *t;
      throw FixtureLookupError("fixture has no revision recorded for input mask " +
                               std::to_string(a.bits()));
    }
    case OperatorKind::derived: return derived_circ(*base_, s, a);
  }
  throw Error("unreachable operator kind");
}

bool cond_belief(const RevisionOperator& op, const State& s, const WorldSet& a,
                 const WorldSet& b) {
  return belief_set(op.revise(s, a)).subset_of(b);
}

Tpo derived_circ(const RevisionOperator& star, const State& s, const WorldSet& a) {
  const std::size_t n = s.size();
  if (a.universe() != n) throw SizeMismatch("revision input over a different world space");
  if (a.empty()) throw InconsistentInput();
  // One posterior per pair input; pairs share inputs, so cache by mask.
  std::vector<std::optional<Tpo>> cache(n * n);
  auto post = [&](World x, World y) -> const Tpo& {
    auto& slot = cache[std::min(x, y) * n + std::max(x, y)];
    if (!slot) slot = star.revise(s, a | WorldSet::of(n, {x, y}).complement());
    return *slot;
  };
  return tpo_from_relation(n, [&](World x, World y) { return post(x, y).leq(x, y); });
}

bool agree(const WorldSet& a, const WorldSet& b, World x, World y) {
  auto cls = [&](const WorldSet& s) {
    const bool xy = s.contains(x) || !s.contains(y);
    const bool yx = s.contains(y) || !s.contains(x);
    return std::pair{xy, yx};
  };
  return cls(a) == cls(b);
}

}  // namespace poirev
