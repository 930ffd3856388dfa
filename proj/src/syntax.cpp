#include "alcmod/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace alcmod {

Name concept_name(std::string text) {
  return Name{std::move(text), NameKind::Concept, NameOrigin::Input};
}
Name role_name(std::string text) {
  return Name{std::move(text), NameKind::Role, NameOrigin::Input};
}
Name definer_name(std::string text) {
  return Name{std::move(text), NameKind::Concept, NameOrigin::Definer};
}

// ---------------------------------------------------------------------------
// Concept

struct Concept::Node {
  Tag tag;
  Name name;                   // Atom name or quantifier role
  std::vector<Concept> kids;   // Not/Exists/Forall: 1; And/Or: >= 2
};

namespace {

const std::shared_ptr<const Concept::Node>& top_node() {
  static const auto n = std::make_shared<const Concept::Node>(
      Concept::Node{Concept::Tag::Top, {}, {}});
  return n;
}
const std::shared_ptr<const Concept::Node>& bottom_node() {
  static const auto n = std::make_shared<const Concept::Node>(
      Concept::Node{Concept::Tag::Bottom, {}, {}});
  return n;
}

}  // namespace

Concept::Concept() : node_(top_node()) {}
Concept::Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Concept Concept::top() { return Concept(top_node()); }
Concept Concept::bottom() { return Concept(bottom_node()); }

Concept Concept::atom(Name n) {
  assert(n.kind == NameKind::Concept);
  return Concept(std::make_shared<const Node>(Node{Tag::Atom, std::move(n), {}}));
}

Concept Concept::negate(Concept c) {
  switch (c.tag()) {
    case Tag::Not: return c.child();  // ¬¬C = C
    case Tag::Top: return bottom();
    case Tag::Bottom: return top();
    default:
      return Concept(std::make_shared<const Node>(
          Node{Tag::Not, {}, std::vector<Concept>{std::move(c)}}));
  }
}

namespace {

// flatten one level of the same connective, drop duplicates
std::vector<Concept> flatten_nary(Concept::Tag tag, std::vector<Concept> parts) {
  std::vector<Concept> flat;
  for (auto& p : parts) {
    if (p.tag() == tag) {
      for (const auto& q : p.parts()) flat.push_back(q);
    } else {
      flat.push_back(std::move(p));
    }
  }
  std::vector<Concept> uniq;
  for (auto& p : flat) {
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end())
      uniq.push_back(std::move(p));
  }
  return uniq;
}

}  // namespace

Concept Concept::conj(std::vector<Concept> parts) {
  auto uniq = flatten_nary(Tag::And, std::move(parts));
  if (uniq.empty()) return top();
  if (uniq.size() == 1) return uniq.front();
  return Concept(std::make_shared<const Node>(Node{Tag::And, {}, std::move(uniq)}));
}
Concept Concept::disj(std::vector<Concept> parts) {
  auto uniq = flatten_nary(Tag::Or, std::move(parts));
  if (uniq.empty()) return bottom();
  if (uniq.size() == 1) return uniq.front();
  return Concept(std::make_shared<const Node>(Node{Tag::Or, {}, std::move(uniq)}));
}

Concept Concept::exists(Name role, Concept filler) {
  assert(role.kind == NameKind::Role);
  return Concept(std::make_shared<const Node>(
      Node{Tag::Exists, std::move(role), std::vector<Concept>{std::move(filler)}}));
}
Concept Concept::forall(Name role, Concept filler) {
  assert(role.kind == NameKind::Role);
  return Concept(std::make_shared<const Node>(
      Node{Tag::Forall, std::move(role), std::vector<Concept>{std::move(filler)}}));
}

Concept::Tag Concept::tag() const { return node_->tag; }

const Name& Concept::atom_name() const {
  assert(tag() == Tag::Atom);
  return node_->name;
}
const Name& Concept::role() const {
  assert(tag() == Tag::Exists || tag() == Tag::Forall);
  return node_->name;
}
const Concept& Concept::child() const {
  assert(node_->kids.size() == 1);
  return node_->kids.front();
}
std::span<const Concept> Concept::parts() const {
  assert(tag() == Tag::And || tag() == Tag::Or);
  return node_->kids;
}

std::strong_ordering Concept::compare(const Concept& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = node_->tag <=> other.node_->tag; c != 0) return c;
  if (auto c = node_->name <=> other.node_->name; c != 0) return c;
  const auto& a = node_->kids;
  const auto& b = other.node_->kids;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i].compare(b[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t Concept::hash() const {
  std::size_t h = static_cast<std::size_t>(node_->tag) * 1099511628211ull;
  h ^= std::hash<std::string>{}(node_->name.text) + 0x9e3779b97f4a7c15ull;
  for (const auto& k : node_->kids) h = h * 31 + k.hash();
  return h;
}

// ---------------------------------------------------------------------------
// nnf / simplify

Concept nnf(const Concept& c) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
    case Concept::Tag::Atom:
      return c;
    case Concept::Tag::And:
    case Concept::Tag::Or: {
      std::vector<Concept> parts;
      for (const auto& p : c.parts()) parts.push_back(nnf(p));
      return c.tag() == Concept::Tag::And ? Concept::conj(std::move(parts))
                                          : Concept::disj(std::move(parts));
    }
    case Concept::Tag::Exists:
      return Concept::exists(c.role(), nnf(c.child()));
    case Concept::Tag::Forall:
      return Concept::forall(c.role(), nnf(c.child()));
    case Concept::Tag::Not: {
      const Concept& b = c.child();
      switch (b.tag()) {
        case Concept::Tag::Top: return Concept::bottom();
        case Concept::Tag::Bottom: return Concept::top();
        case Concept::Tag::Atom: return c;
        case Concept::Tag::Not: return nnf(b.child());
        case Concept::Tag::And: {
          std::vector<Concept> parts;
          for (const auto& p : b.parts())
            parts.push_back(nnf(Concept::negate(p)));
          return Concept::disj(std::move(parts));
        }
        case Concept::Tag::Or: {
          std::vector<Concept> parts;
          for (const auto& p : b.parts())
            parts.push_back(nnf(Concept::negate(p)));
          return Concept::conj(std::move(parts));
        }
        case Concept::Tag::Exists:
          return Concept::forall(b.role(), nnf(Concept::negate(b.child())));
        case Concept::Tag::Forall:
          return Concept::exists(b.role(), nnf(Concept::negate(b.child())));
      }
    }
  }
  throw std::logic_error("nnf: unreachable");
}

Concept simplify_concept(const Concept& c) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
    case Concept::Tag::Atom:
      return c;
    case Concept::Tag::Not:
      return Concept::negate(simplify_concept(c.child()));
    case Concept::Tag::Exists: {
      Concept f = simplify_concept(c.child());
      if (f.is_bottom()) return Concept::bottom();
      return Concept::exists(c.role(), std::move(f));
    }
    case Concept::Tag::Forall: {
      Concept f = simplify_concept(c.child());
      if (f.is_top()) return Concept::top();
      return Concept::forall(c.role(), std::move(f));
    }
    case Concept::Tag::And: {
      std::vector<Concept> parts;
      for (const auto& p : c.parts()) {
        Concept s = simplify_concept(p);
        if (s.is_bottom()) return Concept::bottom();
        if (s.is_top()) continue;
        parts.push_back(std::move(s));
      }
      return Concept::conj(std::move(parts));
    }
    case Concept::Tag::Or: {
      std::vector<Concept> parts;
      for (const auto& p : c.parts()) {
        Concept s = simplify_concept(p);
        if (s.is_top()) return Concept::top();
        if (s.is_bottom()) continue;
        parts.push_back(std::move(s));
      }
      return Concept::disj(std::move(parts));
    }
  }
  throw std::logic_error("simplify_concept: unreachable");
}

// ---------------------------------------------------------------------------
// Ontology

void Ontology::add(Axiom ax) { add(std::move(ax), axioms.size()); }
void Ontology::add(Axiom ax, std::size_t statement) {
  axioms.push_back(std::move(ax));
  statement_of.push_back(statement);
}

// ---------------------------------------------------------------------------
// Signature / length

void collect_signature(const Concept& c, Signature& out) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
      return;
    case Concept::Tag::Atom:
      out.insert(c.atom_name());
      return;
    case Concept::Tag::Not:
      collect_signature(c.child(), out);
      return;
    case Concept::Tag::Exists:
    case Concept::Tag::Forall:
      out.insert(c.role());
      collect_signature(c.child(), out);
      return;
    case Concept::Tag::And:
    case Concept::Tag::Or:
      for (const auto& p : c.parts()) collect_signature(p, out);
      return;
  }
}

Signature signature_of(const Concept& c) {
  Signature s;
  collect_signature(c, s);
  return s;
}
Signature signature_of(const Axiom& a) {
  Signature s;
  collect_signature(a.lhs, s);
  collect_signature(a.rhs, s);
  return s;
}
Signature signature_of(const Ontology& o) {
  Signature s;
  for (const auto& a : o.axioms) {
    collect_signature(a.lhs, s);
    collect_signature(a.rhs, s);
  }
  return s;
}

std::size_t length(const Concept& c) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
    case Concept::Tag::Atom:
      return 1;
    case Concept::Tag::Not:
      return length(c.child());
    case Concept::Tag::Exists:
    case Concept::Tag::Forall:
      return length(c.child()) + 1;
    case Concept::Tag::And:
    case Concept::Tag::Or: {
      std::size_t n = 0;
      for (const auto& p : c.parts()) n += length(p);
      return n;
    }
  }
  throw std::logic_error("length: unreachable");
}

std::size_t length(const Axiom& a) { return length(a.lhs) + length(a.rhs); }

std::size_t length(const Ontology& o) {
  std::size_t n = 0;
  for (const auto& a : o.axioms) n += length(a);
  return n;
}

// ---------------------------------------------------------------------------
// Literals and clauses

Literal Literal::pos(Name a) {
  assert(a.kind == NameKind::Concept);
  return Literal{Kind::Pos, std::move(a), {}, Concept::top()};
}
Literal Literal::neg(Name a) {
  assert(a.kind == NameKind::Concept);
  return Literal{Kind::Neg, std::move(a), {}, Concept::top()};
}
Literal Literal::ex(Name role, Concept filler) {
  assert(role.kind == NameKind::Role);
  return Literal{Kind::Ex, {}, std::move(role), std::move(filler)};
}
Literal Literal::all(Name role, Concept filler) {
  assert(role.kind == NameKind::Role);
  return Literal{Kind::All, {}, std::move(role), std::move(filler)};
}

std::optional<Name> Literal::filler_atom() const {
  if (is_quantified() && filler.is_atom()) return filler.atom_name();
  return std::nullopt;
}

Concept Literal::to_concept() const {
  switch (kind) {
    case Kind::Pos: return Concept::atom(atom);
    case Kind::Neg: return Concept::negate(Concept::atom(atom));
    case Kind::Ex: return Concept::exists(role_name, filler);
    case Kind::All: return Concept::forall(role_name, filler);
  }
  throw std::logic_error("Literal::to_concept: unreachable");
}

std::strong_ordering Literal::compare(const Literal& other) const {
  if (auto c = kind <=> other.kind; c != 0) return c;
  if (auto c = atom <=> other.atom; c != 0) return c;
  if (auto c = role_name <=> other.role_name; c != 0) return c;
  return filler.compare(other.filler);
}

bool Clause::contains(const Literal& l) const {
  return std::binary_search(lits.begin(), lits.end(), l);
}

bool Clause::all_neg_definers() const {
  if (lits.empty()) return false;
  return std::all_of(lits.begin(), lits.end(),
                     [](const Literal& l) { return l.is_neg_definer(); });
}

Concept Clause::to_concept() const {
  std::vector<Concept> parts;
  parts.reserve(lits.size());
  for (const auto& l : lits) parts.push_back(l.to_concept());
  return Concept::disj(std::move(parts));
}

Axiom Clause::to_axiom() const { return Axiom{Concept::top(), to_concept()}; }

std::optional<LiteralSet> canonical_clause(std::vector<Literal> in) {
  std::vector<Literal> lits;
  for (auto& l : in) {
    if (l.is_quantified()) {
      Concept f = simplify_concept(l.filler);
      if (l.kind == Literal::Kind::Ex && f.is_bottom()) continue;  // ∃r.⊥ ≡ ⊥
      if (l.kind == Literal::Kind::All && f.is_top()) return std::nullopt;  // ∀r.⊤ ≡ ⊤
      l.filler = std::move(f);
    }
    lits.push_back(std::move(l));
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (const auto& l : lits) {
    if (l.kind == Literal::Kind::Pos &&
        std::binary_search(lits.begin(), lits.end(), Literal::neg(l.atom)))
      return std::nullopt;  // excluded middle
  }
  return lits;
}

bool subsumes(const LiteralSet& sub, const LiteralSet& sup) {
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

Signature signature_of_literals(const LiteralSet& lits) {
  Signature s;
  for (const auto& l : lits) {
    if (l.is_quantified()) {
      s.insert(l.role_name);
      collect_signature(l.filler, s);
    } else {
      s.insert(l.atom);
    }
  }
  return s;
}

}  // namespace alcmod
