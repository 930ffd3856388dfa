#ifndef ALCMOD_SYNTAX_HPP
#define ALCMOD_SYNTAX_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace alcmod {

// ---------------------------------------------------------------------------
// Names

enum class NameKind : std::uint8_t { Concept, Role };
enum class NameOrigin : std::uint8_t { Input, Definer, PlaceholderBottom };

// Reserved prefix for definer names introduced during normalization.
inline constexpr const char* kDefinerPrefix = "_D";

struct Name {
  std::string text;
  NameKind kind = NameKind::Concept;
  NameOrigin origin = NameOrigin::Input;

  bool is_definer() const { return origin == NameOrigin::Definer; }

  // Names compare by (kind, text); origin is derived metadata.
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.text <=> b.text;
  }
  friend bool operator==(const Name& a, const Name& b) {
    return a.kind == b.kind && a.text == b.text;
  }
};

Name concept_name(std::string text);
Name role_name(std::string text);
Name definer_name(std::string text);

// ---------------------------------------------------------------------------
// Concepts

// Immutable ALC concept tree. And/Or are n-ary and flattened at construction;
// double negation collapses; single-member And/Or unwrap.
class Concept {
 public:
  enum class Tag : std::uint8_t { Top, Bottom, Atom, Not, And, Or, Exists, Forall };

  Concept();  // Top

  static Concept top();
  static Concept bottom();
  static Concept atom(Name n);
  static Concept negate(Concept c);
  static Concept conj(std::vector<Concept> parts);
  static Concept disj(std::vector<Concept> parts);
  static Concept exists(Name role, Concept filler);
  static Concept forall(Name role, Concept filler);

  Tag tag() const;
  const Name& atom_name() const;   // Atom
  const Name& role() const;        // Exists/Forall
  const Concept& child() const;    // Not body or quantifier filler
  std::span<const Concept> parts() const;  // And/Or members

  bool is_top() const { return tag() == Tag::Top; }
  bool is_bottom() const { return tag() == Tag::Bottom; }
  bool is_atom() const { return tag() == Tag::Atom; }

  std::strong_ordering compare(const Concept& other) const;
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
    return a.compare(b);
  }
  friend bool operator==(const Concept& a, const Concept& b) {
    return a.compare(b) == 0;
  }

  std::size_t hash() const;

  struct Node;

 private:
  explicit Concept(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Negation normal form: negation only on atoms, ¬¬C = C, ¬⊤ = ⊥.
Concept nnf(const Concept& c);

// Constant folding and affordances for readable output: ∃r.⊥ → ⊥, ∀r.⊤ → ⊤,
// unit elimination in ⊓/⊔, member dedup. Logically equivalence-preserving.
Concept simplify_concept(const Concept& c);

// ---------------------------------------------------------------------------
// Axioms and ontologies

struct Axiom {
  Concept lhs;
  Concept rhs;  // lhs ⊑ rhs

  friend bool operator==(const Axiom&, const Axiom&) = default;
  friend std::strong_ordering operator<=>(const Axiom& a, const Axiom& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

struct Ontology {
  std::vector<Axiom> axioms;
  // Source statement index per axiom; the two halves of an EquivalentClasses
  // statement share one. Defaults to the axiom's own position.
  std::vector<std::size_t> statement_of;

  std::size_t size() const { return axioms.size(); }
  void add(Axiom ax);
  void add(Axiom ax, std::size_t statement);
};

// ---------------------------------------------------------------------------
// Signatures

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;

  bool contains(const Name& n) const {
    return n.kind == NameKind::Concept ? concepts.count(n.text) > 0
                                       : roles.count(n.text) > 0;
  }
  bool contains_concept(const std::string& t) const { return concepts.count(t) > 0; }
  bool contains_role(const std::string& t) const { return roles.count(t) > 0; }
  void insert(const Name& n) {
    (n.kind == NameKind::Concept ? concepts : roles).insert(n.text);
  }
  std::size_t size() const { return concepts.size() + roles.size(); }
  bool empty() const { return concepts.empty() && roles.empty(); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_of(const Concept& c);
Signature signature_of(const Axiom& a);
Signature signature_of(const Ontology& o);
void collect_signature(const Concept& c, Signature& out);

// ---------------------------------------------------------------------------
// Length metric

std::size_t length(const Concept& c);
std::size_t length(const Axiom& a);
std::size_t length(const Ontology& o);

// ---------------------------------------------------------------------------
// Normal-form literals and clauses

// A clause is ⊤ ⊑ L₁ ⊔ … ⊔ Lₙ kept as a sorted duplicate-free literal set.
// Fillers of Ex/All are definer atoms in freshly clausified ontologies but may
// become arbitrary concepts through definer inlining.
struct Literal {
  enum class Kind : std::uint8_t { Pos, Neg, Ex, All };

  Kind kind;
  Name atom;       // Pos/Neg
  Name role_name;  // Ex/All
  Concept filler;  // Ex/All

  static Literal pos(Name a);
  static Literal neg(Name a);
  static Literal ex(Name role, Concept filler);
  static Literal all(Name role, Concept filler);

  bool is_quantified() const { return kind == Kind::Ex || kind == Kind::All; }
  bool is_neg_definer() const { return kind == Kind::Neg && atom.is_definer(); }
  // Atom filler, if the filler is a plain concept name.
  std::optional<Name> filler_atom() const;
  Concept to_concept() const;

  std::strong_ordering compare(const Literal& other) const;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    return a.compare(b);
  }
  friend bool operator==(const Literal& a, const Literal& b) {
    return a.compare(b) == 0;
  }
};

using LiteralSet = std::vector<Literal>;  // invariant: sorted, duplicate-free

struct Clause {
  std::uint64_t id = 0;
  LiteralSet lits;

  bool contains(const Literal& l) const;
  bool is_empty() const { return lits.empty(); }
  // True when every literal is a negative definer literal (and there is one).
  bool all_neg_definers() const;
  Concept to_concept() const;      // the disjunction
  Axiom to_axiom() const;          // ⊤ ⊑ disjunction
};

// Sorts and deduplicates; simplifies quantified fillers; drops ∃r.⊥ literals.
// Returns nullopt when the clause is tautological (Pos(A) with Neg(A), a ⊤
// disjunct, or a ∀r.⊤ literal).
std::optional<LiteralSet> canonical_clause(std::vector<Literal> lits);

// Literal-set inclusion (both canonical).
bool subsumes(const LiteralSet& sub, const LiteralSet& sup);

Signature signature_of_literals(const LiteralSet& lits);

}  // namespace alcmod

#endif  // ALCMOD_SYNTAX_HPP
