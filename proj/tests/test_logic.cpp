#include <gtest/gtest.h>

#include <random>

#include "poirev/error.hpp"
#include "poirev/logic.hpp"

using namespace poirev;

namespace {

// Direct truth-table evaluation over the sentence tree.
bool truth(const Sentence& s, const std::vector<bool>& v) {
  switch (s.kind()) {
    case Connective::atom: return v[s.atom_index()];
    case Connective::top: return true;
    case Connective::bottom: return false;
    case Connective::negation: return !truth(s.operand(), v);
    case Connective::conjunction: return truth(s.lhs(), v) && truth(s.rhs(), v);
    case Connective::exclusive_or: return truth(s.lhs(), v) != truth(s.rhs(), v);
    case Connective::disjunction: return truth(s.lhs(), v) || truth(s.rhs(), v);
    case Connective::implication: return !truth(s.lhs(), v) || truth(s.rhs(), v);
    case Connective::biconditional: return truth(s.lhs(), v) == truth(s.rhs(), v);
  }
  return false;
}

Sentence random_sentence(std::mt19937& rng, std::size_t atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
  const int k = pick(rng);
  if (k == 0) return Sentence::atom(std::uniform_int_distribution<std::size_t>(0, atoms - 1)(rng));
  if (k == 1) return std::bernoulli_distribution(0.5)(rng) ? Sentence::top() : Sentence::bottom();
  if (k == 2) return Sentence::atom(std::uniform_int_distribution<std::size_t>(0, atoms - 1)(rng));
  if (k == 3) return Sentence::negation(random_sentence(rng, atoms, depth - 1));
  static const Connective ops[] = {Connective::conjunction, Connective::exclusive_or,
                                   Connective::disjunction, Connective::implication,
                                   Connective::biconditional};
  return Sentence::binary(ops[k - 4], random_sentence(rng, atoms, depth - 1),
                          random_sentence(rng, atoms, depth - 1));
}

}  // namespace

TEST(Logic, PropositionalWorldIdsPutFirstAtomInHighBit) {
  const auto space = WorldSpace::propositional(AtomTable({"A", "C"}));
  ASSERT_EQ(space.size(), 4u);
  EXPECT_EQ(space.name(2), "10");
  EXPECT_EQ(space.name(1), "01");
  EXPECT_EQ(space.models_of("A & ~C"), WorldSet::of(4, {2}));
  EXPECT_EQ(space.models_of("A"), WorldSet::of(4, {2, 3}));
  EXPECT_EQ(space.lookup("11"), 3u);
}

TEST(Logic, AbstractWorldsDoubleAsAtoms) {
  const auto space = WorldSpace::abstract({"x", "y", "z"});
  EXPECT_EQ(space.models_of("x | z"), WorldSet::of(3, {0, 2}));
  EXPECT_EQ(space.models_of("~y"), WorldSet::of(3, {0, 2}));
  EXPECT_EQ(space.models_of("x & y"), WorldSet::none(3));
  EXPECT_EQ(space.format(WorldSet::of(3, {0, 2})), "{x, z}");
}

TEST(Logic, PrecedenceAndAssociativity) {
  const AtomTable t({"a", "b", "c"});
  EXPECT_EQ(parse_sentence("a | b & c", t), parse_sentence("a | (b & c)", t));
  EXPECT_EQ(parse_sentence("a -> b -> c", t), parse_sentence("a -> (b -> c)", t));
  EXPECT_EQ(parse_sentence("a ^ b | c", t), parse_sentence("(a ^ b) | c", t));
  EXPECT_EQ(parse_sentence("~a & b", t), parse_sentence("(~a) & b", t));
  EXPECT_EQ(parse_sentence("a <-> b -> c", t), parse_sentence("a <-> (b -> c)", t));
  EXPECT_EQ(to_string(parse_sentence("(a -> b) -> c", t), t), "(a -> b) -> c");
  EXPECT_EQ(to_string(parse_sentence("a & (b & c)", t), t), "a & (b & c)");
}

TEST(Logic, Errors) {
  const AtomTable t({"a", "b"});
  EXPECT_THROW(parse_sentence("a &", t), ParseError);
  EXPECT_THROW(parse_sentence("(a", t), ParseError);
  EXPECT_THROW(parse_sentence("a b", t), ParseError);
  EXPECT_THROW(parse_sentence("q", t), UnknownAtomError);
  EXPECT_THROW(AtomTable({"a", "a"}), Error);
  EXPECT_THROW(WorldSpace::propositional(AtomTable({"a", "b", "c", "d", "e", "f", "g"})), Error);
}

TEST(Logic, RandomSentencesMatchTruthTablesAndRoundTrip) {
  std::mt19937 rng(7);
  const AtomTable atoms({"p", "q", "r"});
  const auto space = WorldSpace::propositional(atoms);
  for (int i = 0; i < 2000; ++i) {
    const Sentence s = random_sentence(rng, 3, 4);
    const std::string text = to_string(s, atoms);
    const Sentence back = parse_sentence(text, atoms);
    ASSERT_EQ(back, s) << text;
    const WorldSet m = models(s, space);
    for (World w = 0; w < 8; ++w) {
      const std::vector<bool> v{((w >> 2) & 1) != 0, ((w >> 1) & 1) != 0, (w & 1) != 0};
      ASSERT_EQ(m.contains(w), truth(s, v)) << text << " at " << space.name(w);
    }
  }
}

TEST(Logic, WorldSetAlgebra) {
  const auto a = WorldSet::of(4, {0, 1});
  const auto b = WorldSet::of(4, {1, 2});
  EXPECT_EQ(a | b, WorldSet::of(4, {0, 1, 2}));
  EXPECT_EQ(a & b, WorldSet::of(4, {1}));
  EXPECT_EQ(a - b, WorldSet::of(4, {0}));
  EXPECT_EQ(a ^ b, WorldSet::of(4, {0, 2}));
  EXPECT_EQ(a.complement(), WorldSet::of(4, {2, 3}));
  EXPECT_TRUE(WorldSet::of(4, {1}).subset_of(a));
  EXPECT_THROW((void)(a | WorldSet::of(3, {0})), SizeMismatch);
}
