#include "nilclean/classify.hpp"

#include <algorithm>
#include <functional>

#include "nilclean/kernels.hpp"

namespace nilclean {

namespace {

ElementSet from_flags(const std::vector<std::uint8_t>& flags) {
  ElementSet s(static_cast<Index>(flags.size()));
  for (Index i = 0; i < flags.size(); ++i) {
    if (flags[i]) s.insert(i);
  }
  return s;
}

void fill_nilpotents(const FiniteRing& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.nilpotents_once, [&] {
    memo.nil_index = kernels::parallel::nil_indices(ring);
    memo.nilpotents = ElementSet(ring.order());
    for (Index x = 0; x < ring.order(); ++x) {
      if (memo.nil_index[x] != 0) memo.nilpotents.insert(x);
    }
  });
}

}  // namespace

bool is_idempotent(const FiniteRing& ring, Index x) { return ring.mul(x, x) == x; }

bool is_idempotent(const FiniteRing& ring, Elem x) {
  return ring.mul(x, x) == x;
}

std::optional<Index> is_nilpotent(const FiniteRing& ring, Index x) {
  const Index k = kernels::nilpotency_index(ring, x);
  if (k == 0) return std::nullopt;
  return k;
}

std::optional<Index> is_nilpotent(const FiniteRing& ring, Elem x) {
  ring.add(x, ring.zero());  // ownership check
  return is_nilpotent(ring, x.index);
}

bool is_unit(const FiniteRing& ring, Index x) { return units(ring).contains(x); }

bool is_central(const FiniteRing& ring, Index x) { return center(ring).contains(x); }

bool is_boolean_ring(const FiniteRing& ring) {
  return idempotents(ring).size() == ring.order();
}

bool is_boolean_ideal(const Ideal& ideal) {
  return ideal.members().is_subset_of(idempotents(*ideal.ring()));
}

const ElementSet& units(const FiniteRing& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.units_once,
                 [&] { memo.units = from_flags(kernels::parallel::unit_flags(ring)); });
  return memo.units;
}

const ElementSet& idempotents(const FiniteRing& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.idempotents_once, [&] { memo.idempotents = fresh::idempotents(ring); });
  return memo.idempotents;
}

const ElementSet& nilpotents(const FiniteRing& ring) {
  fill_nilpotents(ring);
  return ring.memo().nilpotents;
}

const std::vector<Index>& nil_indices(const FiniteRing& ring) {
  fill_nilpotents(ring);
  return ring.memo().nil_index;
}

const ElementSet& center(const FiniteRing& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.center_once,
                 [&] { memo.center = from_flags(kernels::parallel::center_flags(ring)); });
  return memo.center;
}

const ElementSet& jacobson_set(const FiniteRing& ring) {
  auto& memo = ring.memo();
  const ElementSet& u = units(ring);
  std::call_once(memo.jacobson_once, [&] {
    memo.jacobson = from_flags(kernels::parallel::jacobson_flags(ring, u));
  });
  return memo.jacobson;
}

Ideal jacobson_radical(const RingPtr& ring) {
  const ElementSet& members = jacobson_set(*ring);
  if (auto why = ideal_violation(*ring, members)) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "computed Jacobson radical of " + ring->spec() + " is not an ideal: " + *why);
  }
  return Ideal::from_members(ring, members);
}

namespace fresh {

ElementSet units(const FiniteRing& ring) {
  return from_flags(kernels::serial::unit_flags(ring));
}

ElementSet idempotents(const FiniteRing& ring) {
  ElementSet s(ring.order());
  for (Index x = 0; x < ring.order(); ++x) {
    if (ring.mul(x, x) == x) s.insert(x);
  }
  return s;
}

ElementSet nilpotents(const FiniteRing& ring) {
  auto idx = kernels::serial::nil_indices(ring);
  ElementSet s(ring.order());
  for (Index x = 0; x < ring.order(); ++x) {
    if (idx[x]) s.insert(x);
  }
  return s;
}

ElementSet center(const FiniteRing& ring) {
  return from_flags(kernels::serial::center_flags(ring));
}

ElementSet jacobson(const FiniteRing& ring) {
  return from_flags(kernels::serial::jacobson_flags(ring, fresh::units(ring)));
}

}  // namespace fresh

std::vector<std::vector<Index>> complete_orthogonal_central_sets(const FiniteRing& ring,
                                                                 std::size_t max_size) {
  std::vector<Index> candidates;
  (idempotents(ring) & center(ring)).for_each([&](Index e) {
    if (e != ring.zero_index()) candidates.push_back(e);
  });

  // Depth-first over increasing index sequences: each set is produced once,
  // already sorted, and the output comes out in lexicographic order.
  std::vector<std::vector<Index>> out;
  std::vector<Index> chosen;
  std::function<void(std::size_t, Index)> extend = [&](std::size_t from, Index sum) {
    if (!chosen.empty() && sum == ring.one_index()) out.push_back(chosen);
    if (chosen.size() == max_size) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Index e = candidates[i];
      bool orthogonal = true;
      for (Index f : chosen) {
        if (ring.mul(e, f) != ring.zero_index()) {
          orthogonal = false;
          break;
        }
      }
      if (!orthogonal) continue;
      chosen.push_back(e);
      extend(i + 1, ring.add(sum, e));
      chosen.pop_back();
    }
  };
  extend(0, ring.zero_index());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nilclean
