#include "poirev/logic.hpp"

#include <cctype>
#include <set>

#include "poirev/error.hpp"

namespace poirev {

bool is_identifier(std::string_view text) {
  if (text.empty() || std::isalpha(static_cast<unsigned char>(text.front())) == 0) return false;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return true;
}

AtomTable::AtomTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw Error("invalid atom name '" + n + "'");
    if (n == "T" || n == "F") throw Error("atom name '" + n + "' is reserved for a constant");
    if (!seen.insert(n).second) throw Error("duplicate atom name '" + n + "'");
  }
}

std::optional<std::size_t> AtomTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

struct Sentence::Node {
  Connective kind;
  std::size_t atom = 0;
  std::optional<Sentence> lhs;
  std::optional<Sentence> rhs;
};

Sentence Sentence::atom(std::size_t index) {
  return Sentence(std::make_shared<const Node>(Node{Connective::atom, index, {}, {}}));
}

Sentence Sentence::top() { return Sentence(std::make_shared<const Node>(Node{Connective::top, 0, {}, {}})); }

Sentence Sentence::bottom() {
  return Sentence(std::make_shared<const Node>(Node{Connective::bottom, 0, {}, {}}));
}

Sentence Sentence::negation(Sentence operand) {
  return Sentence(
      std::make_shared<const Node>(Node{Connective::negation, 0, std::move(operand), {}}));
}

Sentence Sentence::binary(Connective op, Sentence lhs, Sentence rhs) {
  if (op == Connective::atom || op == Connective::top || op == Connective::bottom ||
      op == Connective::negation) {
    throw Error("Sentence::binary needs a binary connective");
  }
  return Sentence(std::make_shared<const Node>(Node{op, 0, std::move(lhs), std::move(rhs)}));
}

Connective Sentence::kind() const noexcept { return node_->kind; }

std::size_t Sentence::atom_index() const {
  if (node_->kind != Connective::atom) throw Error("not an atom");
  return node_->atom;
}

const Sentence& Sentence::operand() const {
  if (node_->kind != Connective::negation) throw Error("not a negation");
  return *node_->lhs;
}

const Sentence& Sentence::lhs() const {
  if (!node_->rhs) throw Error("not a binary sentence");
  return *node_->lhs;
}

const Sentence& Sentence::rhs() const {
  if (!node_->rhs) throw Error("not a binary sentence");
  return *node_->rhs;
}

bool operator==(const Sentence& a, const Sentence& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::atom:
      return a.atom_index() == b.atom_index();
    case Connective::top:
    case Connective::bottom:
      return true;
    case Connective::negation:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

enum class Tok { ident, lparen, rparen, neg, conj, xor_, disj, imp, iff, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) != 0 || s[j] == '_')) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::lparen, s.substr(i, 1), i}); ++i; continue;
      case ')': out.push_back({Tok::rparen, s.substr(i, 1), i}); ++i; continue;
      case '~': out.push_back({Tok::neg, s.substr(i, 1), i}); ++i; continue;
      case '&': out.push_back({Tok::conj, s.substr(i, 1), i}); ++i; continue;
      case '^': out.push_back({Tok::xor_, s.substr(i, 1), i}); ++i; continue;
      case '|': out.push_back({Tok::disj, s.substr(i, 1), i}); ++i; continue;
      default: break;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::imp, s.substr(i, 2), i});
      i += 2;
    } else if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::iff, s.substr(i, 3), i});
      i += 3;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::end, {}, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const AtomTable& atoms) : toks_(tokenize(text)), atoms_(atoms) {}

  Sentence parse() {
    Sentence s = iff();
    if (peek().kind != Tok::end) throw ParseError("unexpected token '" + std::string(peek().text) + "'", peek().pos);
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Sentence iff() {
    Sentence s = imp();
    while (accept(Tok::iff)) s = Sentence::binary(Connective::biconditional, s, imp());
    return s;
  }
  Sentence imp() {
    Sentence s = disj();
    if (accept(Tok::imp)) return Sentence::binary(Connective::implication, s, imp());
    return s;
  }
  Sentence disj() {
    Sentence s = exor();
    while (accept(Tok::disj)) s = Sentence::binary(Connective::disjunction, s, exor());
    return s;
  }
  Sentence exor() {
    Sentence s = conj();
    while (accept(Tok::xor_)) s = Sentence::binary(Connective::exclusive_or, s, conj());
    return s;
  }
  Sentence conj() {
    Sentence s = unary();
    while (accept(Tok::conj)) s = Sentence::binary(Connective::conjunction, s, unary());
    return s;
  }
  Sentence unary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::neg:
        ++pos_;
        return Sentence::negation(unary());
      case Tok::lparen: {
        ++pos_;
        Sentence s = iff();
        if (!accept(Tok::rparen)) throw ParseError("expected ')'", peek().pos);
        return s;
      }
      case Tok::ident: {
        ++pos_;
        if (t.text == "T") return Sentence::top();
        if (t.text == "F") return Sentence::bottom();
        if (auto i = atoms_.find(t.text)) return Sentence::atom(*i);
        throw UnknownAtomError(std::string(t.text));
      }
      case Tok::end:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected token '" + std::string(t.text) + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const AtomTable& atoms_;
};

int precedence(Connective c) {
  switch (c) {
    case Connective::biconditional: return 1;
    case Connective::implication: return 2;
    case Connective::disjunction: return 3;
    case Connective::exclusive_or: return 4;
    case Connective::conjunction: return 5;
    case Connective::negation: return 6;
    default: return 7;
  }
}

std::string_view symbol(Connective c) {
  switch (c) {
    case Connective::biconditional: return " <-> ";
    case Connective::implication: return " -> ";
    case Connective::disjunction: return " | ";
    case Connective::exclusive_or: return " ^ ";
    case Connective::conjunction: return " & ";
    default: return "";
  }
}

void print(const Sentence& s, const AtomTable& atoms, std::string& out) {
  auto child = [&](const Sentence& c, bool parens) {
    if (parens) out += '(';
    print(c, atoms, out);
    if (parens) out += ')';
  };
  const int p = precedence(s.kind());
  switch (s.kind()) {
    case Connective::atom: out += atoms.name(s.atom_index()); return;
    case Connective::top: out += 'T'; return;
    case Connective::bottom: out += 'F'; return;
    case Connective::negation:
      out += '~';
      child(s.operand(), precedence(s.operand().kind()) < p);
      return;
    default: break;
  }
  // Right-associative implication needs parentheses on a same-level left child;
  // the left-associative connectives need them on a same-level right child.
  const bool right_assoc = s.kind() == Connective::implication;
  const int lp = precedence(s.lhs().kind());
  const int rp = precedence(s.rhs().kind());
  child(s.lhs(), lp < p || (right_assoc && lp == p));
  out += symbol(s.kind());
  child(s.rhs(), rp < p || (!right_assoc && rp == p));
}

std::uint64_t eval_bits(const Sentence& s, const WorldSpace& space) {
  const std::uint64_t all = space.all().bits();
  switch (s.kind()) {
    case Connective::atom:
      if (s.atom_index() >= space.atoms().size()) throw Error("atom index out of range");
      return space.atom_models(s.atom_index()).bits();
    case Connective::top: return all;
    case Connective::bottom: return 0;
    case Connective::negation: return ~eval_bits(s.operand(), space) & all;
    default: break;
  }
  const std::uint64_t a = eval_bits(s.lhs(), space);
  const std::uint64_t b = eval_bits(s.rhs(), space);
  switch (s.kind()) {
    case Connective::conjunction: return a & b;
    case Connective::disjunction: return a | b;
    case Connective::exclusive_or: return a ^ b;
    case Connective::implication: return (~a | b) & all;
    case Connective::biconditional: return ~(a ^ b) & all;
    default: throw Error("unreachable connective");
  }
}

}  // namespace

Sentence parse_sentence(std::string_view text, const AtomTable& atoms) {
  return Parser(text, atoms).parse();
}

std::string to_string(const Sentence& s, const AtomTable& atoms) {
  std::string out;
  print(s, atoms, out);
  return out;
}

WorldSpace WorldSpace::abstract(std::vector<std::string> names) {
  if (names.empty()) throw Error("a world space needs at least one world");
  if (names.size() > kMaxWorlds) throw DomainTooLarge("too many worlds");
  WorldSpace ws;
  ws.mode_ = WorldMode::abstract;
  ws.atoms_ = AtomTable(names);
  ws.names_ = std::move(names);
  return ws;
}

WorldSpace WorldSpace::propositional(AtomTable atoms) {
  if (atoms.size() == 0) throw Error("propositional mode needs at least one atom");
  if (atoms.size() > 6) throw DomainTooLarge("propositional mode supports at most 6 atoms");
  WorldSpace ws;
  ws.mode_ = WorldMode::propositional;
  const std::size_t k = atoms.size();
  const std::size_t n = std::size_t{1} << k;
  ws.names_.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::string bits(k, '0');
    for (std::size_t i = 0; i < k; ++i) {
      if (((w >> (k - 1 - i)) & 1U) != 0) bits[i] = '1';
    }
    ws.names_.push_back(std::move(bits));
  }
  ws.atoms_ = std::move(atoms);
  return ws;
}

std::optional<World> WorldSpace::find(std::string_view name) const {
  for (World w = 0; w < names_.size(); ++w) {
    if (names_[w] == name) return w;
  }
  return std::nullopt;
}

World WorldSpace::lookup(std::string_view name) const {
  if (auto w = find(name)) return *w;
  throw UnknownAtomError(std::string(name));
}

WorldSet WorldSpace::atom_models(std::size_t atom) const {
  if (atom >= atoms_.size()) throw Error("atom index out of range");
  if (mode_ == WorldMode::abstract) return WorldSet::single(size(), atom);
  const std::size_t k = atoms_.size();
  std::uint64_t bits = 0;
  for (World w = 0; w < size(); ++w) {
    if (((w >> (k - 1 - atom)) & 1U) != 0) bits |= std::uint64_t{1} << w;
  }
  return {size(), bits};
}

WorldSet WorldSpace::models_of(std::string_view text) const { return models(parse(text), *this); }

std::string WorldSpace::format(const WorldSet& s) const {
  std::string out = "{";
  bool first = true;
  for (World w : s.members()) {
    if (!first) out += ", ";
    out += name(w);
    first = false;
  }
  return out + "}";
}

WorldSet models(const Sentence& s, const WorldSpace& space) {
  return {space.size(), eval_bits(s, space)};
}

WorldSet models(const Sentence& s, const AtomTable& atoms) {
  return models(s, WorldSpace::propositional(atoms));
}

}  // namespace poirev
