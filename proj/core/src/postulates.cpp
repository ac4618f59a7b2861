#include "poirev/postulates.hpp"

#include "poirev/enumerate.hpp"
#include "poirev/error.hpp"

namespace poirev {

namespace {

constexpr std::size_t kDenseLimit = 16;

}  // namespace

Evaluator::Evaluator(RevisionOperator op, State s)
    : op_(std::move(op)), state_(std::move(s)), n_(state_.size()), prior_(state_.tpo()) {
  if (n_ <= kDenseLimit) dense_.resize(std::size_t{1} << n_);
}

const Tpo& Evaluator::post(const WorldSet& a) {
  if (a.universe() != n_) throw SizeMismatch("revision input over a different world space");
  if (a.empty()) throw InconsistentInput();
  if (!dense_.empty()) {
    auto& slot = dense_[a.bits()];
    if (!slot) slot = op_.revise(state_, a);
    return *slot;
  }
  auto it = sparse_.find(a.bits());
  if (it == sparse_.end()) it = sparse_.emplace(a.bits(), op_.revise(state_, a)).first;
  return it->second;
}

std::optional<bool> check_instance(const PostulateInfo& p, Evaluator& ev, const Bindings& b,
                                   Trace* trace) {
  for (std::size_t i = 0; i < p.sentence_vars.size(); ++i) {
    if (b.s[i].universe() != ev.size()) throw ArityMismatch("binding over the wrong world space");
    if (b.s[i].empty()) throw InconsistentInput();
  }
  for (std::size_t i = 0; i < p.world_vars.size(); ++i) {
    if (b.w[i] >= ev.size()) throw ArityMismatch("world binding out of range");
  }
  return p.predicate(ev, b, trace);
}

std::optional<bool> check_instance(std::string_view id, const RevisionOperator& op,
                                   const State& s, const std::vector<NamedBinding>& bindings,
                                   Trace* trace) {
  const PostulateInfo& p = postulate(id);
  if (bindings.size() != p.sentence_vars.size() + p.world_vars.size()) {
    throw ArityMismatch(p.id + " takes " + std::to_string(p.sentence_vars.size()) +
                        " sentence and " + std::to_string(p.world_vars.size()) +
                        " world variables");
  }
  Bindings b;
  std::vector<bool> seen_s(p.sentence_vars.size()), seen_w(p.world_vars.size());
  for (const auto& nb : bindings) {
    bool placed = false;
    for (std::size_t i = 0; i < p.sentence_vars.size() && !placed; ++i) {
      if (p.sentence_vars[i] == nb.var && nb.set && !seen_s[i]) {
        b.s[i] = *nb.set;
        seen_s[i] = placed = true;
      }
    }
    for (std::size_t i = 0; i < p.world_vars.size() && !placed; ++i) {
      if (p.world_vars[i] == nb.var && nb.world && !seen_w[i]) {
        b.w[i] = *nb.world;
        seen_w[i] = placed = true;
      }
    }
    if (!placed) throw ArityMismatch("unexpected binding '" + nb.var + "' for " + p.id);
  }
  Evaluator ev(op, s);
  return check_instance(p, ev, b, trace);
}

std::size_t instance_count(const PostulateInfo& p, std::size_t n) {
  std::size_t total = 1;
  const std::size_t sets = (std::size_t{1} << n) - 1;
  for (std::size_t i = 0; i < p.sentence_vars.size(); ++i) total *= sets;
  for (std::size_t i = 0; i < p.world_vars.size(); ++i) total *= n;
  return total;
}

VerifyResult verify_all(const PostulateInfo& p, Evaluator& ev, std::optional<std::size_t> budget) {
  const std::size_t n = ev.size();
  check_bound(Domain::verify, n);
  const std::size_t ks = p.sentence_vars.size();
  const std::size_t kw = p.world_vars.size();
  const std::uint64_t top = universe_mask(n);

  VerifyResult out;
  Bindings b;
  for (std::size_t i = 0; i < ks; ++i) b.s[i] = WorldSet(n, 1);
  for (std::size_t i = 0; i < kw; ++i) b.w[i] = 0;

  // Odometer over (sentence vars..., world vars...), last variable fastest.
  auto advance = [&]() {
    for (std::size_t i = kw; i-- > 0;) {
      if (++b.w[i] < n) return true;
      b.w[i] = 0;
    }
    for (std::size_t i = ks; i-- > 0;) {
      if (b.s[i].bits() < top) {
        b.s[i] = WorldSet(n, b.s[i].bits() + 1);
        return true;
      }
      b.s[i] = WorldSet(n, 1);
    }
    return false;
  };

  do {
    if (budget && out.instances >= *budget) {
      out.exhausted = true;
      return out;
    }
    ++out.instances;
    std::optional<bool> r;
    try {
      r = p.predicate(ev, b, nullptr);
    } catch (const FixtureLookupError&) {
      r = std::nullopt;
    } catch (const InconsistentInput&) {
      r = std::nullopt;
    }
    if (!r) {
      ++out.skipped;
      continue;
    }
    if (!*r) {
      Witness w{p.id, ev.state(), b, {}};
      p.predicate(ev, b, &w.trace);
      out.witness = std::move(w);
      return out;
    }
  } while (advance());
  return out;
}

std::optional<Witness> verify(std::string_view id, const RevisionOperator& op, const State& s) {
  Evaluator ev(op, s);
  return verify_all(postulate(id), ev).witness;
}

bool overrules(const RevisionOperator& op, const State& s, const WorldSet& a, const WorldSet& b) {
  return !min_worlds(op.revise(s, a), b).subset_of(a);
}

bool strictly_overrules(const RevisionOperator& op, const State& s, const WorldSet& a,
                        const WorldSet& b) {
  return min_worlds(op.revise(s, a), b).subset_of(a.complement());
}

}  // namespace poirev
