#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nilclean/ideal.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

enum class DecompositionKind { Clean, NilClean };

std::string_view to_string(DecompositionKind kind) noexcept;

/// element = idempotent + second, where second is a unit (clean) or nilpotent (nil clean).
struct Decomposition {
  Index element = 0;
  Index idempotent = 0;
  Index second = 0;
  DecompositionKind kind = DecompositionKind::NilClean;
  bool commutes = false;
  std::optional<Index> nil_index;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// True when `d` satisfies every invariant of its kind in `ring`.
bool is_valid(const FiniteRing& ring, const Decomposition& d);

/// All (e, x - e) with e idempotent and x - e nilpotent, by idempotent index.
std::vector<Decomposition> nil_clean_decompositions(const FiniteRing& ring, Index x);
/// All (e, x - e) with e idempotent and x - e a unit, by idempotent index.
std::vector<Decomposition> clean_decompositions(const FiniteRing& ring, Index x);

/// Keeps decompositions whose parts commute.
std::vector<Decomposition> strongly_filter(std::vector<Decomposition> decompositions);

/// Nil clean decompositions of x whose parts both lie in `ideal`.
std::vector<Decomposition> decomposition_within_ideal(const Ideal& ideal, Index x);

struct LiftResult {
  Index idempotent;
  std::vector<Index> iterates;  // a, f(a), f(f(a)), ... ending at the idempotent
  Index bound;                  // ceil(log2 nu) + 1, nu = nil index of a - a^2
};

/// Iterates t -> 3t^2 - 2t^3 from a. NotAlmostIdempotent if a - a^2 is not nilpotent.
LiftResult lift_idempotent_traced(const FiniteRing& ring, Index a);
Index lift_idempotent(const FiniteRing& ring, Index a);

/// Idempotent e with e - x in `nil_ideal`. PreconditionViolated unless the
/// ideal is nil and x^2 - x lies in it.
Index lift_idempotent_mod_nil(const Ideal& nil_ideal, Index x);

// ---------------------------------------------------------------------------
// Ideal-level predicates. Idempotents and second parts range over all of R.

enum class IdealProperty {
  Clean,
  NilClean,
  StronglyClean,
  StronglyNilClean,
  UniquelyNilClean,
  UniquelyStronglyNilClean,
  UniquelyStronglyClean,
  Nil,
};

std::string_view to_string(IdealProperty p) noexcept;
std::optional<IdealProperty> ideal_property_from_string(std::string_view name);

struct IdealVerdict {
  bool holds = true;
  std::optional<Index> witness;  // smallest failing element
  Index witness_count = 0;       // decompositions found for the witness
};

IdealVerdict check_ideal(const Ideal& ideal, IdealProperty property);

bool is_clean_ideal(const Ideal& ideal);
bool is_nil_clean_ideal(const Ideal& ideal);
bool is_strongly_clean_ideal(const Ideal& ideal);
bool is_strongly_nil_clean_ideal(const Ideal& ideal);
/// Exactly one idempotent e with a - e nilpotent, for each a.
bool is_uniquely_nil_clean_ideal(const Ideal& ideal);
/// Exactly one commuting nil clean decomposition, for each a.
bool is_uniquely_strongly_nil_clean_ideal(const Ideal& ideal);
bool is_uniquely_strongly_clean_ideal(const Ideal& ideal);

bool is_nil_clean_ring(const RingPtr& ring);

}  // namespace nilclean
