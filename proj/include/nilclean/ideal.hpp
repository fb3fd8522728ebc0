#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilclean/element_set.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

/// A two-sided ideal of a specific ring. Values are immutable; every public
/// construction path verifies the ideal axioms.
class Ideal {
 public:
  /// Throws NotAnIdeal (with the violated closure property) when `members`
  /// is not a two-sided ideal of `ring`.
  static Ideal from_members(RingPtr ring, ElementSet members,
                            std::optional<std::vector<Index>> generators = std::nullopt);

  static Ideal zero(RingPtr ring);
  static Ideal whole(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::optional<std::vector<Index>>& generators() const noexcept { return generators_; }

  Index size() const noexcept { return members_.size(); }
  bool contains(Index x) const { return members_.contains(x); }
  std::vector<Index> elements() const { return members_.members(); }
  bool is_zero() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == ring_->order(); }

  /// Same ring (by identity, or by canonical spec for spec-built rings) and same members.
  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  Ideal(RingPtr ring, ElementSet members, std::optional<std::vector<Index>> generators)
      : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {}

  RingPtr ring_;
  ElementSet members_;
  std::optional<std::vector<Index>> generators_;
};

/// Reason `members` fails to be a two-sided ideal, or nullopt if it is one.
std::optional<std::string> ideal_violation(const FiniteRing& ring, const ElementSet& members);

}  // namespace nilclean
