#ifndef ALCMOD_MODULE_BUILDER_HPP
#define ALCMOD_MODULE_BUILDER_HPP

#include <chrono>

#include "alcmod/forgetting.hpp"
#include "alcmod/oracle.hpp"
#include "alcmod/parser.hpp"
#include "alcmod/saturation.hpp"

namespace alcmod {

struct PipelineOptions {
  std::chrono::milliseconds subsumption_budget{10000};
  std::chrono::milliseconds conflict_budget{0};     // 0 = unlimited
  std::chrono::milliseconds definer_budget{10000};  // interpolant elimination
  OracleOptions oracle;
};

// Removes clauses whose literal set strictly includes another clause's, and
// literal-identical duplicates. Returns false if the budget expired first.
bool delete_subsumed(std::vector<Clause>& clauses, std::chrono::milliseconds budget);

// Replaces every definer atom, at literal level and inside fillers, by its
// recorded definition.
Concept substitute_definers(const Concept& c,
                            const std::map<std::string, Concept>& definition);
std::vector<Axiom> substitute_definers(const std::vector<Clause>& clauses,
                                       const std::map<std::string, Concept>& definition);

// Readability rewriting of ⊤ ⊑ D₁ ⊔ … ⊔ Dₙ axioms: negated disjuncts move to
// the left-hand side as conjuncts (plain names first), a quantified disjunct
// over a negated filler moves left under the dual quantifier — that rewrite
// is double-checked with the tableau and kept only when equivalent — and
// tautologies are dropped. Order-stable.
std::vector<Axiom> simplify_axioms(const std::vector<Axiom>& axioms,
                                   const OracleOptions& oracle = {});

// Conflict-clause elimination: each all-negative-definer clause combines with
// the clauses carrying its members' positive occurrences under one common
// role into a conclusion extended with Qr.⊥ (Q existential when one of the
// occurrences is); afterwards every all-negative-definer clause is deleted.
void op1_conflict_elim(ClauseStore& store, Provenance& prov);

// Definer propagation: a definer D whose negative occurrences each sit in a
// clause ¬D ⊔ C_j with definer-free C_j is inlined at its positive
// occurrences as Qr.(C₂ ⊓ … ⊓ Cₙ) — or ⊤ when it has no negative
// occurrences — and its clauses are removed. Runs to a fixpoint. When
// `raw_rewrites` is given, each rewritten clause's literal disjuncts are
// recorded before tautology removal.
void op2_definer_propagation(ClauseStore& store, Provenance& prov,
                             std::vector<std::vector<Concept>>* raw_rewrites = nullptr);

// ---------------------------------------------------------------------------
// End products

struct ModuleResult {
  std::vector<Axiom> axioms;       // the module, after substitution/simplification
  std::vector<Clause> clauses;     // surviving clauses before definer substitution
  NormalizedOntology norm;         // provenance and definitions live here
  RunReport report;
};

ModuleResult general_module(const Ontology& o, const Signature& sigma,
                            const PipelineOptions& opts = {});
ModuleResult general_module_opt(const Ontology& o, const Signature& sigma,
                                const PipelineOptions& opts = {});

// Subset of the input axioms that the surviving optimized-module clauses
// trace back to through the inference provenance.
struct DeductiveResult {
  Ontology module;                  // axioms of `o`, input order
  std::vector<std::size_t> indices; // their positions in `o`
  RunReport report;
};

DeductiveResult deductive_module(const Ontology& o, const Signature& sigma,
                                 const PipelineOptions& opts = {});

// Uniform interpolant: eliminates the remaining definers after the optimized
// pipeline. Exact when that needs no approximation; Approximate when a cyclic
// definer had to be replaced by its definition (which may reintroduce non-Σ
// names); GeneralModuleOnly when the elimination budget ran out, in which
// case the optimized general module is returned unchanged.
ModuleResult uniform_interpolant(const Ontology& o, const Signature& sigma,
                                 const PipelineOptions& opts = {});

}  // namespace alcmod

#endif  // ALCMOD_MODULE_BUILDER_HPP
