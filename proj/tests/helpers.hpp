#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "alcmod/parser.hpp"
#include "alcmod/syntax.hpp"

namespace testutil {

using namespace alcmod;

inline Ontology ont(const std::string& text) { return parse_ontology(text); }

inline Signature sig(const std::string& text) { return parse_signature(text); }

inline Concept cpt(const std::string& text) {
  Ontology o = parse_ontology("SubClassOf(owl:Thing " + text + ")");
  return o.axioms.front().rhs;
}

inline Axiom axm(const std::string& text) {
  Ontology o = parse_ontology(text);
  return o.axioms.front();
}

// Renames every name starting with `from_prefix` in `c` by applying `rename`.
inline Concept rename_prefixed(const Concept& c,
                               const std::map<std::string, std::string>& table) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
      return c;
    case Concept::Tag::Atom: {
      auto it = table.find(c.atom_name().text);
      if (it == table.end()) return c;
      return Concept::atom(Name{it->second, NameKind::Concept, c.atom_name().origin});
    }
    case Concept::Tag::Not:
      return Concept::negate(rename_prefixed(c.child(), table));
    case Concept::Tag::And:
    case Concept::Tag::Or: {
      std::vector<Concept> parts;
      for (const auto& p : c.parts()) parts.push_back(rename_prefixed(p, table));
      return c.tag() == Concept::Tag::And ? Concept::conj(std::move(parts))
                                          : Concept::disj(std::move(parts));
    }
    case Concept::Tag::Exists:
      return Concept::exists(c.role(), rename_prefixed(c.child(), table));
    case Concept::Tag::Forall:
      return Concept::forall(c.role(), rename_prefixed(c.child(), table));
  }
  return c;
}

// Builds a concept whose names spelled DvK stand for internal definer names
// (the parser reserves that prefix, so test fixtures spell them Dv1, Dv2, …).
inline Concept defs(const std::string& text) {
  Concept c = cpt(text);
  Signature s = signature_of(c);
  std::map<std::string, std::string> table;
  for (const auto& n : s.concepts)
    if (n.rfind("Dv", 0) == 0) table[n] = kDefinerPrefix + n.substr(2);
  return rename_prefixed(c, table);
}

// Recursively sorts the children of ⊓/⊔ so that comparisons ignore the
// (semantically irrelevant) construction order.
inline Concept canon(const Concept& c) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
    case Concept::Tag::Atom:
      return c;
    case Concept::Tag::Not:
      return Concept::negate(canon(c.child()));
    case Concept::Tag::And:
    case Concept::Tag::Or: {
      std::vector<Concept> parts;
      for (const auto& p : c.parts()) parts.push_back(canon(p));
      std::sort(parts.begin(), parts.end());
      return c.tag() == Concept::Tag::And ? Concept::conj(std::move(parts))
                                          : Concept::disj(std::move(parts));
    }
    case Concept::Tag::Exists:
      return Concept::exists(c.role(), canon(c.child()));
    case Concept::Tag::Forall:
      return Concept::forall(c.role(), canon(c.child()));
  }
  return c;
}

inline bool same_concept(const Concept& a, const Concept& b) {
  return canon(a) == canon(b);
}

// Set equality of axioms regardless of order (of the axioms and of ⊓/⊔
// children inside them).
inline bool same_axioms(std::vector<Axiom> a, std::vector<Axiom> b) {
  for (auto& ax : a) ax = Axiom{canon(ax.lhs), canon(ax.rhs)};
  for (auto& ax : b) ax = Axiom{canon(ax.lhs), canon(ax.rhs)};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline std::vector<std::string> sorted_axiom_strings(const std::vector<Axiom>& axs) {
  std::vector<std::string> out;
  for (const auto& a : axs) out.push_back(serialize_axiom(a));
  std::sort(out.begin(), out.end());
  return out;
}

// Do two clause sets match under some bijective renaming of definer names?
// Small inputs only: tries definer bijections with backtracking over clause
// matching; both sides are concepts ⊤ ⊑ C rendered from clauses.
inline std::vector<std::string> definer_names_in(const std::vector<Concept>& cs) {
  std::vector<std::string> names;
  for (const auto& c : cs) {
    Signature s = signature_of(c);
    for (const auto& n : s.concepts)
      if (n.rfind(kDefinerPrefix, 0) == 0 &&
          std::find(names.begin(), names.end(), n) == names.end())
        names.push_back(n);
  }
  return names;
}

inline bool match_up_to_definers(std::vector<Concept> actual,
                                 std::vector<Concept> expected) {
  if (actual.size() != expected.size()) return false;
  std::vector<std::string> from = definer_names_in(actual);
  std::vector<std::string> to = definer_names_in(expected);
  if (from.size() != to.size()) return false;
  std::sort(to.begin(), to.end());
  do {
    std::map<std::string, std::string> table;
    for (std::size_t i = 0; i < from.size(); ++i) table[from[i]] = to[i];
    std::vector<Concept> renamed;
    for (const auto& c : actual) renamed.push_back(canon(rename_prefixed(c, table)));
    std::sort(renamed.begin(), renamed.end());
    std::vector<Concept> want;
    for (const auto& c : expected) want.push_back(canon(c));
    std::sort(want.begin(), want.end());
    if (renamed == want) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

}  // namespace testutil

#endif  // TESTS_HELPERS_HPP
