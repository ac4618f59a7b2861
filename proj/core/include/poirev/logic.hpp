#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poirev/world.hpp"

namespace poirev {

/// Ordered list of propositional atom names.
class AtomTable {
 public:
  AtomTable() = default;
  explicit AtomTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

bool is_identifier(std::string_view text);

enum class Connective {
  atom,
  top,
  bottom,
  negation,
  conjunction,
  exclusive_or,
  disjunction,
  implication,
  biconditional,
};

/// Immutable propositional sentence over the atoms of some AtomTable.
class Sentence {
 public:
  static Sentence atom(std::size_t index);
  static Sentence top();
  static Sentence bottom();
  static Sentence negation(Sentence operand);
  static Sentence binary(Connective op, Sentence lhs, Sentence rhs);

  Connective kind() const noexcept;
  std::size_t atom_index() const;
  const Sentence& operand() const;
  const Sentence& lhs() const;
  const Sentence& rhs() const;

  friend bool operator==(const Sentence& a, const Sentence& b);

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the grammar
///   iff   := imp ("<->" imp)*
///   imp   := or ("->" imp)?          (right associative)
///   or    := xor ("|" xor)*
///   xor   := and ("^" and)*
///   and   := unary ("&" unary)*
///   unary := "~" unary | "(" iff ")" | "T" | "F" | atom
Sentence parse_sentence(std::string_view text, const AtomTable& atoms);

/// Prints with the minimum parentheses needed for parse_sentence to rebuild the same tree.
std::string to_string(const Sentence& s, const AtomTable& atoms);

enum class WorldMode { abstract, propositional };

/// The outcome space W together with the vocabulary sentences are written in.
///
/// In propositional mode the worlds are all valuations of the atoms; world id bit
/// (k-1-i) holds the value of atom i, so world "10" over [A, C] is id 2.
/// In abstract mode each world is named and doubles as an atom true exactly at itself.
class WorldSpace {
 public:
  static WorldSpace abstract(std::vector<std::string> names);
  static WorldSpace propositional(AtomTable atoms);

  WorldMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(World w) const { return names_.at(w); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<World> find(std::string_view name) const;
  /// Like find, but throws UnknownAtomError naming the missing world.
  World lookup(std::string_view name) const;

  const AtomTable& atoms() const noexcept { return atoms_; }
  WorldSet atom_models(std::size_t atom) const;
  WorldSet all() const { return WorldSet::all(size()); }

  Sentence parse(std::string_view text) const { return parse_sentence(text, atoms_); }
  /// Parses a sentence and returns its model set.
  WorldSet models_of(std::string_view text) const;

  std::string format(const WorldSet& s) const;

  friend bool operator==(const WorldSpace& a, const WorldSpace& b) {
    return a.mode_ == b.mode_ && a.names_ == b.names_;
  }

 private:
  WorldMode mode_ = WorldMode::abstract;
  std::vector<std::string> names_;
  AtomTable atoms_;
};

WorldSet models(const Sentence& s, const WorldSpace& space);
WorldSet models(const Sentence& s, const AtomTable& atoms);

}  // namespace poirev
