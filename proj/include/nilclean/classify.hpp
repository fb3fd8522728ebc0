#pragma once

#include <optional>
#include <vector>

#include "nilclean/ideal.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

bool is_idempotent(const FiniteRing& ring, Index x);
bool is_idempotent(const FiniteRing& ring, Elem x);

/// Least k >= 1 with x^k = 0, if any.
std::optional<Index> is_nilpotent(const FiniteRing& ring, Index x);
std::optional<Index> is_nilpotent(const FiniteRing& ring, Elem x);

bool is_unit(const FiniteRing& ring, Index x);
bool is_central(const FiniteRing& ring, Index x);
bool is_boolean_ring(const FiniteRing& ring);

/// True when every member of `ideal` is idempotent.
bool is_boolean_ideal(const Ideal& ideal);

// Memoized classifier sets. The first call fills the ring's cache.
const ElementSet& units(const FiniteRing& ring);
const ElementSet& idempotents(const FiniteRing& ring);
const ElementSet& nilpotents(const FiniteRing& ring);
const ElementSet& center(const FiniteRing& ring);
const ElementSet& jacobson_set(const FiniteRing& ring);

/// Per-element nilpotency index, 0 where the element is not nilpotent.
const std::vector<Index>& nil_indices(const FiniteRing& ring);

/// J(R) = {x : 1 - r x is a unit for every r}. Throws InternalInvariantViolation
/// if the computed set is not closed as an ideal.
Ideal jacobson_radical(const RingPtr& ring);

/// Memo-free recomputations, used to cross-check the caches.
namespace fresh {
ElementSet units(const FiniteRing& ring);
ElementSet idempotents(const FiniteRing& ring);
ElementSet nilpotents(const FiniteRing& ring);
ElementSet center(const FiniteRing& ring);
ElementSet jacobson(const FiniteRing& ring);
}  // namespace fresh

inline constexpr std::size_t kDefaultMaxCompleteSet = 4;

/// Sets {e1..ek}, k <= max_size, of nonzero central idempotents that are pairwise
/// orthogonal and sum to one. Each set is sorted; the list is in lexicographic order.
std::vector<std::vector<Index>> complete_orthogonal_central_sets(
    const FiniteRing& ring, std::size_t max_size = kDefaultMaxCompleteSet);

}  // namespace nilclean
