#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilclean/element_set.hpp"
#include "nilclean/error.hpp"

namespace nilclean {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// How a ring was built. A structure computes the ring operations on canonical
/// indices; FiniteRing materializes them into tables when the order is small.
class Structure {
 public:
  virtual ~Structure() = default;

  virtual Index order() const = 0;
  virtual Index zero() const = 0;
  virtual Index one() const = 0;
  virtual Index add(Index x, Index y) const = 0;
  virtual Index mul(Index x, Index y) const = 0;
  virtual Index neg(Index x) const = 0;

  /// Canonical ring-spec string (parseable for every spec-built ring).
  virtual std::string spec() const = 0;

  /// Human readable rendering of an element; the index by default.
  virtual std::string render(Index x) const { return std::to_string(x); }
};

/// Ring given by explicit Cayley tables. No axioms are checked here; run
/// verify_axioms before trusting an imported table.
class TableStructure final : public Structure {
 public:
  TableStructure(Index order, std::vector<Index> add, std::vector<Index> mul, Index zero,
                 Index one);

  Index order() const override { return order_; }
  Index zero() const override { return zero_; }
  Index one() const override { return one_; }
  Index add(Index x, Index y) const override { return add_[std::size_t{x} * order_ + y]; }
  Index mul(Index x, Index y) const override { return mul_[std::size_t{x} * order_ + y]; }
  Index neg(Index x) const override { return neg_[x]; }
  std::string spec() const override { return "Table(" + std::to_string(order_) + ")"; }

 private:
  Index order_;
  std::vector<Index> add_, mul_, neg_;
  Index zero_, one_;
};

/// Element handle bound to one ring.
struct Elem {
  const FiniteRing* ring = nullptr;
  Index index = 0;

  friend bool operator==(const Elem&, const Elem&) = default;
};

/// Fill-once caches owned by a ring. Filled by the classify module; each slot
/// is guarded by its own once_flag so concurrent readers are safe.
struct ClassifierMemo {
  std::once_flag units_once, idempotents_once, nilpotents_once, center_once, jacobson_once,
      commutative_once;
  ElementSet units, idempotents, nilpotents, center, jacobson;
  std::vector<Index> nil_index;  // 0 = not nilpotent
  bool commutative = false;
};

/// Immutable finite unital ring over the canonical indices 0..order-1.
class FiniteRing {
 public:
  static constexpr Index kDefaultTableThreshold = 1024;

  /// Rejects the zero ring. Tables are materialized when order <= table_threshold.
  static RingPtr create(std::shared_ptr<const Structure> structure,
                        Index table_threshold = kDefaultTableThreshold);

  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  Index order() const noexcept { return order_; }
  Index zero_index() const noexcept { return zero_; }
  Index one_index() const noexcept { return one_; }
  Elem zero() const noexcept { return {this, zero_}; }
  Elem one() const noexcept { return {this, one_}; }
  Elem elem(Index i) const;

  const Structure& structure() const noexcept { return *structure_; }
  const std::shared_ptr<const Structure>& structure_ptr() const noexcept { return structure_; }
  std::string spec() const { return structure_->spec(); }
  std::string render(Index x) const { return structure_->render(x); }
  bool has_tables() const noexcept { return !add_.empty(); }

  // Index-level arithmetic for hot loops; callers guarantee indices are in range.
  Index add(Index x, Index y) const {
    return add_.empty() ? structure_->add(x, y) : add_[std::size_t{x} * order_ + y];
  }
  Index mul(Index x, Index y) const {
    return mul_.empty() ? structure_->mul(x, y) : mul_[std::size_t{x} * order_ + y];
  }
  Index neg(Index x) const { return neg_[x]; }
  Index sub(Index x, Index y) const { return add(x, neg(y)); }
  Index pow(Index x, std::uint64_t k) const;

  // Checked element-level arithmetic.
  Elem add(Elem x, Elem y) const;
  Elem mul(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem sub(Elem x, Elem y) const;
  Elem pow(Elem x, std::uint64_t k) const;

  ClassifierMemo& memo() const noexcept { return memo_; }

 private:
  explicit FiniteRing(std::shared_ptr<const Structure> structure, Index table_threshold);
  void check_owner(Elem x) const;

  std::shared_ptr<const Structure> structure_;
  Index order_, zero_, one_;
  std::vector<Index> add_, mul_, neg_;
  mutable ClassifierMemo memo_;
};

RingPtr make_table_ring(Index order, std::vector<Index> add, std::vector<Index> mul, Index zero,
                        Index one);

bool is_commutative(const FiniteRing& ring);

/// A map between the index sets of two rings (quotient projections, corner embeddings).
struct RingMap {
  RingPtr domain;
  RingPtr codomain;
  std::vector<Index> images;

  Index operator()(Index x) const { return images[x]; }
};

// ---------------------------------------------------------------------------
// Axiom verification

enum class Axiom : std::uint8_t {
  Closure,
  AddAssociative,
  AddCommutative,
  AddIdentity,
  AddInverse,
  MulAssociative,
  MulIdentity,
  LeftDistributive,
  RightDistributive,
};
inline constexpr std::size_t kAxiomCount = 9;

std::string_view to_string(Axiom axiom) noexcept;

struct AxiomViolation {
  Axiom axiom;
  Index x, y, z;
};

struct AxiomReport {
  std::uint64_t triples_checked = 0;
  std::vector<AxiomViolation> violations;  // at most one per axiom, in Axiom order

  bool ok() const noexcept { return violations.empty(); }
  std::string describe(const FiniteRing& ring) const;
};

struct AxiomMode {
  static constexpr Index kExhaustiveLimit = 64;

  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0x5eed;

  static AxiomMode full() { return {}; }
  static AxiomMode sampled(std::uint64_t count, std::uint64_t seed = 0x5eed) {
    return {false, count, seed};
  }
};

/// Exhaustive mode is only permitted for order <= 64 (ExhaustiveTooLarge otherwise).
AxiomReport verify_axioms(const FiniteRing& ring, AxiomMode mode);

/// Exhaustive up to the limit, sampled(100000) above.
AxiomReport verify_axioms(const FiniteRing& ring);

}  // namespace nilclean
