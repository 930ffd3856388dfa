#ifndef ALCMOD_SATURATION_HPP
#define ALCMOD_SATURATION_HPP

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcmod/normalize.hpp"
#include "alcmod/syntax.hpp"

namespace alcmod {

// Wall-clock budget for saturation loops. A zero duration means no limit.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget) {
    if (budget.count() > 0) at_ = std::chrono::steady_clock::now() + budget;
  }
  bool expired() const {
    return at_ && std::chrono::steady_clock::now() > *at_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

// Clause set with forward and backward subsumption on insert.
class ClauseStore {
 public:
  ClauseStore() = default;
  explicit ClauseStore(std::vector<Clause> clauses)
      : clauses_(std::move(clauses)) {}

  // Adds unless an existing clause subsumes it; drops existing clauses it
  // subsumes. Returns true when the clause went in.
  bool add(Clause cl);
  bool contains_subsumer(const LiteralSet& lits) const;

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::vector<Clause> take() { return std::move(clauses_); }

  template <typename Pred>
  void erase_if(Pred pred) {
    std::erase_if(clauses_, pred);
  }

 private:
  std::vector<Clause> clauses_;
};

// All binary resolvents on concept name `atom` between clauses of the store.
// Canonicalized; tautologies dropped; premises recorded in `prov`.
std::vector<Clause> a_rule_resolvents(const std::vector<Clause>& clauses,
                                      const std::string& atom, Provenance& prov);

// Applies the role-propagation rule to a fixpoint: an all-negative-definer
// clause ¬E₁ ⊔ … ⊔ ¬Eₘ combines with clauses carrying the matching positive
// occurrences ∃r.E / ∀r.E under one shared role r (at most one existential;
// when none of the Eᵢ has one, any clause with an ∃r literal supplies the
// successor). The conclusion is the union of the premises' remaining
// literals. `only_role` restricts r. Returns false when the deadline expired
// before the fixpoint.
bool r_rule_saturate(ClauseStore& store, const std::optional<std::string>& only_role,
                     Provenance& prov, const Deadline& deadline = {});

// ---------------------------------------------------------------------------
// Conflict sets

// Minimal sets of definers {D₁, …, Dₙ} such that ⊤ ⊑ ¬D₁ ⊔ … ⊔ ¬Dₙ follows
// from the normal form. Computed by eliminating every non-definer concept
// name (resolve, then discard), then saturating with the role-propagation
// rule across all roles, then keeping the subset-minimal all-negative-definer
// clauses. An empty set member means the ontology is inconsistent.
struct ConflictSets {
  std::vector<std::set<std::string>> sets;
  // Clause id of a derivation of each set, in the ontology's provenance graph.
  std::vector<std::uint64_t> derivation_ids;
  bool budget_exceeded = false;
};

ConflictSets conflict_sets(NormalizedOntology& norm,
                           std::chrono::milliseconds budget = std::chrono::milliseconds(0));

// ---------------------------------------------------------------------------
// Role isolation

// Definition-filtered clause set plus conflict clauses: keeps a clause iff,
// for each of its negative definer literals ¬D, every definer whose
// definition transitively contains D (D itself included) only occurs under
// Σ-roles; then adds ¬D₁ ⊔ … ⊔ ¬Dₙ for each minimal conflict set whose
// definers' positive occurrences survive the filter under one common non-Σ
// role with at most one existential occurrence.
struct RoleIsolation {
  std::vector<Clause> clauses;      // filtered clauses then conflict clauses
  std::size_t filtered_count = 0;   // how many of `clauses` came from the filter
  bool conflict_budget_exceeded = false;
  // Non-Σ roles the caller must treat as kept when the conflict computation
  // was cut short (forgetting them would no longer be justified).
  std::set<std::string> widened_roles;
};

RoleIsolation role_isolate(NormalizedOntology& norm, const Signature& sigma,
                           std::chrono::milliseconds conflict_budget = std::chrono::milliseconds(0));

// Structural check: every clause either consists solely of negative literals
// over names whose occurrences use a non-Σ role somewhere, or mentions such
// names not at all outside role restrictions.
bool is_role_isolated(const std::vector<Clause>& clauses, const Signature& sigma);

}  // namespace alcmod

#endif  // ALCMOD_SATURATION_HPP
