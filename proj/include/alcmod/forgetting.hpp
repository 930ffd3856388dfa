#ifndef ALCMOD_FORGETTING_HPP
#define ALCMOD_FORGETTING_HPP

#include "alcmod/saturation.hpp"

namespace alcmod {

// Eliminates every role outside Σ from a role-isolated clause set: saturates
// with the role-propagation rule per such role, then removes every clause
// still mentioning it. Returns false when the deadline cut saturation short
// (the store is then left with the offending roles still present).
bool forget_roles(ClauseStore& store, const Signature& sigma, Provenance& prov,
                  const Deadline& deadline = {});

// Eliminates every non-definer concept name outside Σ: resolves exhaustively
// on each (cheapest occurrence count first), then deletes its clauses.
// Finishes with a cleanup pass dropping clauses over names outside Σ —
// definers included — that no longer occur inside any role restriction.
bool forget_concepts(ClauseStore& store, const Signature& sigma, Provenance& prov,
                     const Deadline& deadline = {});

}  // namespace alcmod

#endif  // ALCMOD_FORGETTING_HPP
