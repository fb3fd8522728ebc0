// OpenMP kernels. The outer element loop is split across threads; every
// iteration writes only its own output slot, so results match the serial
// kernels exactly regardless of scheduling.

#include <cstdint>

#include "../internal.hpp"
#include "nilclean/kernels.hpp"

namespace nilclean::kernels::parallel {

namespace {
// Below this many outer iterations the team startup costs more than it saves.
constexpr std::int64_t kMinParallel = 64;
}  // namespace

std::vector<std::uint8_t> unit_flags(const FiniteRing& ring) {
  const std::int64_t n = ring.order();
  const Index one = ring.one_index();
  std::vector<std::uint8_t> flags(n, 0);
#pragma omp parallel for schedule(dynamic, 16) if (n >= kMinParallel)
  for (std::int64_t x = 0; x < n; ++x) {
    const auto xi = static_cast<Index>(x);
    for (Index y = 0; y < n; ++y) {
      if (ring.mul(xi, y) == one && ring.mul(y, xi) == one) {
        flags[x] = 1;
        break;
      }
    }
  }
  return flags;
}

std::vector<Index> nil_indices(const FiniteRing& ring) {
  const std::int64_t n = ring.order();
  std::vector<Index> out(n);
#pragma omp parallel for schedule(static) if (n >= kMinParallel)
  for (std::int64_t x = 0; x < n; ++x) out[x] = nilpotency_index(ring, static_cast<Index>(x));
  return out;
}

std::vector<std::uint8_t> center_flags(const FiniteRing& ring) {
  const std::int64_t n = ring.order();
  std::vector<std::uint8_t> flags(n, 1);
#pragma omp parallel for schedule(dynamic, 16) if (n >= kMinParallel)
  for (std::int64_t x = 0; x < n; ++x) {
    const auto xi = static_cast<Index>(x);
    for (Index r = 0; r < n; ++r) {
      if (ring.mul(xi, r) != ring.mul(r, xi)) {
        flags[x] = 0;
        break;
      }
    }
  }
  return flags;
}

std::vector<std::uint8_t> jacobson_flags(const FiniteRing& ring, const ElementSet& units) {
  const std::int64_t n = ring.order();
  const Index one = ring.one_index();
  std::vector<std::uint8_t> flags(n, 1);
#pragma omp parallel for schedule(dynamic, 16) if (n >= kMinParallel)
  for (std::int64_t x = 0; x < n; ++x) {
    const auto xi = static_cast<Index>(x);
    for (Index r = 0; r < n; ++r) {
      if (!units.contains(ring.sub(one, ring.mul(r, xi)))) {
        flags[x] = 0;
        break;
      }
    }
  }
  return flags;
}

std::vector<Index> decomposition_counts(const FiniteRing& ring, const DecompositionQuery& q) {
  const auto m = static_cast<std::int64_t>(q.elements.size());
  std::vector<Index> counts(m, 0);
#pragma omp parallel for schedule(dynamic, 8) if (m >= kMinParallel)
  for (std::int64_t i = 0; i < m; ++i) {
    const Index x = q.elements[i];
    Index c = 0;
    for (Index e : q.idempotents) {
      const Index rest = ring.sub(x, e);
      if (!q.second->contains(rest)) continue;
      if (q.require_commuting && ring.mul(e, rest) != ring.mul(rest, e)) continue;
      ++c;
    }
    counts[i] = c;
  }
  return counts;
}

AxiomScan exhaustive_axioms(const FiniteRing& ring) {
  const std::int64_t n = ring.order();
  using Slots = std::array<std::optional<AxiomViolation>, kAxiomCount>;
  std::vector<Slots> per_x(n);
#pragma omp parallel for schedule(dynamic, 1) if (n >= 16)
  for (std::int64_t x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        detail::check_axiom_triple(ring, static_cast<Index>(x), y, z, per_x[x]);
      }
    }
  }
  // Reduce in x order so the reported witness is the lexicographically first triple.
  AxiomScan scan;
  scan.triples = static_cast<std::uint64_t>(n) * n * n;
  for (const auto& slots : per_x) {
    for (std::size_t a = 0; a < kAxiomCount; ++a) {
      if (!scan.first[a] && slots[a]) scan.first[a] = slots[a];
    }
  }
  return scan;
}

}  // namespace nilclean::kernels::parallel
