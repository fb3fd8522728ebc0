// Reference kernels: plain loops, no threading.

#include "../internal.hpp"
#include "nilclean/kernels.hpp"

namespace nilclean::kernels::serial {

std::vector<std::uint8_t> unit_flags(const FiniteRing& ring) {
  const Index n = ring.order();
  const Index one = ring.one_index();
  std::vector<std::uint8_t> flags(n, 0);
  // One pass over pairs; a two-sided inverse pair marks both ends.
  for (Index x = 0; x < n; ++x) {
    if (flags[x]) continue;
    for (Index y = 0; y < n; ++y) {
      if (ring.mul(x, y) == one && ring.mul(y, x) == one) {
        flags[x] = flags[y] = 1;
        break;
      }
    }
  }
  return flags;
}

std::vector<Index> nil_indices(const FiniteRing& ring) {
  std::vector<Index> out(ring.order());
  for (Index x = 0; x < ring.order(); ++x) out[x] = nilpotency_index(ring, x);
  return out;
}

std::vector<std::uint8_t> center_flags(const FiniteRing& ring) {
  const Index n = ring.order();
  std::vector<std::uint8_t> flags(n, 1);
  for (Index x = 0; x < n; ++x) {
    for (Index r = 0; r < n; ++r) {
      if (ring.mul(x, r) != ring.mul(r, x)) {
        flags[x] = 0;
        break;
      }
    }
  }
  return flags;
}

std::vector<std::uint8_t> jacobson_flags(const FiniteRing& ring, const ElementSet& units) {
  const Index n = ring.order();
  const Index one = ring.one_index();
  std::vector<std::uint8_t> flags(n, 1);
  for (Index x = 0; x < n; ++x) {
    for (Index r = 0; r < n; ++r) {
      if (!units.contains(ring.sub(one, ring.mul(r, x)))) {
        flags[x] = 0;
        break;
      }
    }
  }
  return flags;
}

std::vector<Index> decomposition_counts(const FiniteRing& ring, const DecompositionQuery& q) {
  std::vector<Index> counts(q.elements.size(), 0);
  for (std::size_t i = 0; i < q.elements.size(); ++i) {
    const Index x = q.elements[i];
    for (Index e : q.idempotents) {
      const Index rest = ring.sub(x, e);
      if (!q.second->contains(rest)) continue;
      if (q.require_commuting && ring.mul(e, rest) != ring.mul(rest, e)) continue;
      ++counts[i];
    }
  }
  return counts;
}

AxiomScan exhaustive_axioms(const FiniteRing& ring) {
  AxiomScan scan;
  const Index n = ring.order();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) detail::check_axiom_triple(ring, x, y, z, scan.first);
    }
  }
  scan.triples = std::uint64_t{n} * n * n;
  return scan;
}

}  // namespace nilclean::kernels::serial
