#ifndef ALCMOD_ORACLE_HPP
#define ALCMOD_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "alcmod/syntax.hpp"

namespace alcmod {

enum class SatResult { Sat, Unsat, ResourceExceeded };

struct OracleOptions {
  std::size_t max_nodes = 100000;
};

// Tableau satisfiability of `c` with respect to the TBox `o` (axiom
// internalization, subset blocking on ancestors). Deterministic. Returns
// ResourceExceeded once more than max_nodes tableau nodes have been created.
SatResult is_satisfiable(const Concept& c, const Ontology& o,
                         const OracleOptions& opts = {});

// O ⊨ C ⊑ D, decided as unsatisfiability of C ⊓ ¬D w.r.t. O.
// nullopt when the node budget ran out.
std::optional<bool> entails(const Ontology& o, const Axiom& ax,
                            const OracleOptions& opts = {});

// Sampled Σ-inseparability check between two ontologies: tests a batch of
// seeded random Σ-axioms plus every axiom of either ontology whose signature
// is inside Σ. Finding a witness proves separability; not finding one is only
// evidence for inseparability.
struct InseparabilityReport {
  bool separable = false;
  std::optional<Axiom> witness;      // entailed by exactly one side
  std::size_t samples_checked = 0;
  bool resource_exceeded = false;    // some sample was inconclusive
};

InseparabilityReport inseparable_sampled(const Ontology& a, const Ontology& b,
                                         const Signature& sigma,
                                         std::uint64_t seed,
                                         std::size_t samples = 200,
                                         const OracleOptions& opts = {});

// Seeded random Σ-concept: uniform choice among the available constructors,
// recursion continues with probability 1/2 per level.
class ConceptSampler {
 public:
  ConceptSampler(const Signature& sigma, std::uint64_t seed);
  Concept concept_sample();
  Axiom axiom_sample();

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace alcmod

#endif  // ALCMOD_ORACLE_HPP
