#pragma once

// Element-scan kernels. Each kernel exists twice: `serial` is the reference
// implementation kept for testing, `parallel` splits the outer element loop
// across OpenMP threads. Both produce identical output for every input.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean::kernels {

/// What the second summand of a decomposition must be.
enum class SecondPart : std::uint8_t { Nilpotent, Unit };

struct DecompositionQuery {
  std::span<const Index> elements;     // elements to decompose
  std::span<const Index> idempotents;  // candidate idempotents, ascending
  const ElementSet* second = nullptr;  // set the second summand must lie in
  bool require_commuting = false;
};

struct AxiomScan {
  std::uint64_t triples = 0;
  std::array<std::optional<AxiomViolation>, kAxiomCount> first{};
};

namespace serial {

std::vector<std::uint8_t> unit_flags(const FiniteRing& ring);
std::vector<Index> nil_indices(const FiniteRing& ring);
std::vector<std::uint8_t> center_flags(const FiniteRing& ring);
std::vector<std::uint8_t> jacobson_flags(const FiniteRing& ring, const ElementSet& units);
std::vector<Index> decomposition_counts(const FiniteRing& ring, const DecompositionQuery& q);
AxiomScan exhaustive_axioms(const FiniteRing& ring);

}  // namespace serial

namespace parallel {

std::vector<std::uint8_t> unit_flags(const FiniteRing& ring);
std::vector<Index> nil_indices(const FiniteRing& ring);
std::vector<std::uint8_t> center_flags(const FiniteRing& ring);
std::vector<std::uint8_t> jacobson_flags(const FiniteRing& ring, const ElementSet& units);
std::vector<Index> decomposition_counts(const FiniteRing& ring, const DecompositionQuery& q);
AxiomScan exhaustive_axioms(const FiniteRing& ring);

}  // namespace parallel

/// Least k >= 1 with x^k = 0, or 0 when x is not nilpotent. Decided from
/// x^(2^m) with 2^m >= order, then a binary search on the index.
Index nilpotency_index(const FiniteRing& ring, Index x);

/// Bounds the OpenMP team size; n <= 0 restores the runtime default.
void set_thread_limit(int n);

/// Applies NILCLEAN_THREADS when set to a positive integer. Returns the value used (0 if unset).
int apply_thread_limit_from_env();

bool openmp_enabled() noexcept;

}  // namespace nilclean::kernels
