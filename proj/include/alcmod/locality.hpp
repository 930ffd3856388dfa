#ifndef ALCMOD_LOCALITY_HPP
#define ALCMOD_LOCALITY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "alcmod/syntax.hpp"

namespace alcmod {

// Syntactic locality of one axiom: non-Σ names are replaced by a constant
// (⊥-variant: concepts by ⊥, restrictions over non-Σ roles by ⊥/⊤ according
// to polarity; ⊤-variant dually) and the axiom is local when the transformed
// statement is a syntactic tautology.
bool is_bot_local(const Axiom& ax, const Signature& sigma);
bool is_top_local(const Axiom& ax, const Signature& sigma);

// Nested ⊤⊥*-module: alternates ⊥- and ⊤-locality extraction until the axiom
// set stops shrinking. Indices refer to positions in `o`.
struct LocalityModule {
  Ontology module;
  std::vector<std::size_t> indices;
};

LocalityModule extract_star_module(const Ontology& o, const Signature& sigma);

// Frequency-weighted signature sample of `count` names, drawn without
// replacement with a seeded generator.
struct SignatureTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Signature sample_signature(const Ontology& o, std::size_t count, std::uint64_t seed);

}  // namespace alcmod

#endif  // ALCMOD_LOCALITY_HPP
