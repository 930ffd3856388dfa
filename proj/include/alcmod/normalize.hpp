#ifndef ALCMOD_NORMALIZE_HPP
#define ALCMOD_NORMALIZE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alcmod/syntax.hpp"

namespace alcmod {

// ---------------------------------------------------------------------------
// Clause ids and provenance

// Hands out clause ids and records, for every clause, either the input axiom
// indices it was clausified from (roots) or the clause ids it was derived
// from (premises). Reverse reachability over this graph recovers the input
// axioms responsible for a set of surviving clauses.
class Provenance {
 public:
  std::uint64_t fresh_id() { return next_id_++; }

  void set_roots(std::uint64_t id, std::vector<std::size_t> axiom_indices) {
    roots_[id] = std::move(axiom_indices);
  }
  void set_premises(std::uint64_t id, std::vector<std::uint64_t> premise_ids) {
    premises_[id] = std::move(premise_ids);
  }

  // All input axiom indices reachable backwards from `ids`.
  std::set<std::size_t> trace_to_axioms(const std::vector<std::uint64_t>& ids) const;

 private:
  std::uint64_t next_id_ = 1;
  std::map<std::uint64_t, std::vector<std::size_t>> roots_;
  std::map<std::uint64_t, std::vector<std::uint64_t>> premises_;
};

// ---------------------------------------------------------------------------
// Normal form

// Positive occurrence of a definer: the unique literal Qr.D.
struct DefinerOccurrence {
  Name role;
  Literal::Kind quantifier = Literal::Kind::Ex;  // Ex or All
  std::uint64_t clause_id = 0;
};

struct NormalizedOntology {
  std::vector<Clause> clauses;
  // Definer name -> the concept it replaced (definer-free, from the input).
  std::map<std::string, Concept> definition;
  // Definer name -> its unique positive occurrence in `clauses`.
  std::map<std::string, DefinerOccurrence> positive_occurrence;
  Provenance provenance;

  const Concept& definition_of(const std::string& definer) const;
};

// Clausifies an ontology into normal form: ⊤ ⊑ L₁ ⊔ … ⊔ Lₙ with every role
// restriction's filler replaced by a fresh definer name (one per occurrence),
// negation normal form, disjunction distributed over conjunction, and
// tautologies dropped. Definers are named with kDefinerPrefix plus a counter.
NormalizedOntology clausify(const Ontology& o);

// ---------------------------------------------------------------------------
// Definer nesting order

// nested_below[D] holds D' when some clause ¬D ⊔ C has D' in sig(C), i.e. D'
// is introduced inside the definition of D. `above` is the reflexive
// transitive closure in the other direction: above[D] = all definers whose
// definitions (transitively) contain D, plus D itself.
struct DefinerOrder {
  std::map<std::string, std::set<std::string>> nested_below;
  std::map<std::string, std::set<std::string>> above;
  bool acyclic = true;
};

DefinerOrder definer_order(const std::vector<Clause>& clauses);

// Roles r such that some literal Qr.A occurs in the clauses, per concept name A
// appearing as an atomic filler.
std::map<std::string, std::set<std::string>> filler_roles(const std::vector<Clause>& clauses);

}  // namespace alcmod

#endif  // ALCMOD_NORMALIZE_HPP
