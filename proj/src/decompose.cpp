#include "nilclean/decompose.hpp"

#include <bit>

#include "nilclean/classify.hpp"
#include "nilclean/ideals.hpp"
#include "nilclean/kernels.hpp"

namespace nilclean {

std::string_view to_string(DecompositionKind kind) noexcept {
  return kind == DecompositionKind::Clean ? "clean" : "nil-clean";
}

bool is_valid(const FiniteRing& ring, const Decomposition& d) {
  const Index n = ring.order();
  if (d.element >= n || d.idempotent >= n || d.second >= n) return false;
  if (!is_idempotent(ring, d.idempotent)) return false;
  if (ring.add(d.idempotent, d.second) != d.element) return false;
  const bool commutes =
      ring.mul(d.idempotent, d.second) == ring.mul(d.second, d.idempotent);
  if (commutes != d.commutes) return false;
  if (d.kind == DecompositionKind::Clean) {
    if (d.nil_index) return false;
    for (Index y = 0; y < n; ++y) {
      if (ring.mul(d.second, y) == ring.one_index() && ring.mul(y, d.second) == ring.one_index()) {
        return true;
      }
    }
    return false;
  }
  // Re-derive the index by plain iteration rather than trusting the caches.
  if (!d.nil_index || *d.nil_index == 0) return false;
  const Index k = *d.nil_index;
  if (ring.pow(d.second, k) != ring.zero_index()) return false;
  return k == 1 || ring.pow(d.second, k - 1) != ring.zero_index();
}

namespace {

std::vector<Decomposition> decompositions(const FiniteRing& ring, Index x,
                                          DecompositionKind kind) {
  if (x >= ring.order()) {
    throw Error(ErrorKind::BadParameter, "element " + std::to_string(x) + " out of range");
  }
  const auto& nil_idx = nil_indices(ring);
  const ElementSet& second_set =
      kind == DecompositionKind::Clean ? units(ring) : nilpotents(ring);
  std::vector<Decomposition> out;
  idempotents(ring).for_each([&](Index e) {
    const Index rest = ring.sub(x, e);
    if (!second_set.contains(rest)) return;
    Decomposition d;
    d.element = x;
    d.idempotent = e;
    d.second = rest;
    d.kind = kind;
    d.commutes = ring.mul(e, rest) == ring.mul(rest, e);
    if (kind == DecompositionKind::NilClean) d.nil_index = nil_idx[rest];
    out.push_back(d);
  });
  return out;
}

}  // namespace

std::vector<Decomposition> nil_clean_decompositions(const FiniteRing& ring, Index x) {
  return decompositions(ring, x, DecompositionKind::NilClean);
}

std::vector<Decomposition> clean_decompositions(const FiniteRing& ring, Index x) {
  return decompositions(ring, x, DecompositionKind::Clean);
}

std::vector<Decomposition> strongly_filter(std::vector<Decomposition> decompositions) {
  std::erase_if(decompositions, [](const Decomposition& d) { return !d.commutes; });
  return decompositions;
}

std::vector<Decomposition> decomposition_within_ideal(const Ideal& ideal, Index x) {
  auto all = nil_clean_decompositions(*ideal.ring(), x);
  std::erase_if(all, [&](const Decomposition& d) {
    return !ideal.contains(d.idempotent) || !ideal.contains(d.second);
  });
  return all;
}

// ---------------------------------------------------------------------------
// Idempotent lifting

LiftResult lift_idempotent_traced(const FiniteRing& ring, Index a) {
  if (a >= ring.order()) throw Error(ErrorKind::BadParameter, "element out of range");
  const Index defect = ring.sub(a, ring.mul(a, a));
  const Index nu = kernels::nilpotency_index(ring, defect);
  if (nu == 0) {
    throw Error(ErrorKind::NotAlmostIdempotent,
                ring.render(a) + " - " + ring.render(a) + "^2 is not nilpotent");
  }
  // Each step squares t - t^2 up to a unit factor, halving its nilpotency index.
  const auto bound = static_cast<Index>(std::bit_width(nu - 1) + 1);

  LiftResult result{a, {a}, bound};
  Index t = a;
  while (ring.mul(t, t) != t) {
    if (result.iterates.size() - 1 >= bound) {
      throw Error(ErrorKind::InternalInvariantViolation,
                  "idempotent lifting exceeded its iteration bound");
    }
    const Index t2 = ring.mul(t, t);
    const Index t3 = ring.mul(t2, t);
    Index three_t2 = ring.add(ring.add(t2, t2), t2);
    Index two_t3 = ring.add(t3, t3);
    t = ring.sub(three_t2, two_t3);
    result.iterates.push_back(t);
  }
  result.idempotent = t;
  return result;
}

Index lift_idempotent(const FiniteRing& ring, Index a) {
  return lift_idempotent_traced(ring, a).idempotent;
}

Index lift_idempotent_mod_nil(const Ideal& nil_ideal, Index x) {
  const FiniteRing& ring = *nil_ideal.ring();
  if (!is_nil_ideal(nil_ideal)) {
    throw Error(ErrorKind::PreconditionViolated, "ideal is not nil");
  }
  if (x >= ring.order() || !nil_ideal.contains(ring.sub(ring.mul(x, x), x))) {
    throw Error(ErrorKind::PreconditionViolated,
                "x^2 - x does not lie in the ideal for x = " + std::to_string(x));
  }
  const Index e = lift_idempotent(ring, x);
  if (!nil_ideal.contains(ring.sub(e, x))) {
    throw Error(ErrorKind::InternalInvariantViolation, "lifted idempotent left the coset");
  }
  return e;
}

// ---------------------------------------------------------------------------
// Ideal predicates

std::string_view to_string(IdealProperty p) noexcept {
  switch (p) {
    case IdealProperty::Clean: return "clean";
    case IdealProperty::NilClean: return "nil-clean";
    case IdealProperty::StronglyClean: return "strongly-clean";
    case IdealProperty::StronglyNilClean: return "strongly-nil-clean";
    case IdealProperty::UniquelyNilClean: return "uniquely-nil-clean";
    case IdealProperty::UniquelyStronglyNilClean: return "uniquely-strongly-nil-clean";
    case IdealProperty::UniquelyStronglyClean: return "uniquely-strongly-clean";
    case IdealProperty::Nil: return "nil";
  }
  return "unknown";
}

std::optional<IdealProperty> ideal_property_from_string(std::string_view name) {
  for (auto p : {IdealProperty::Clean, IdealProperty::NilClean, IdealProperty::StronglyClean,
                 IdealProperty::StronglyNilClean, IdealProperty::UniquelyNilClean,
                 IdealProperty::UniquelyStronglyNilClean, IdealProperty::UniquelyStronglyClean,
                 IdealProperty::Nil}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

IdealVerdict check_ideal(const Ideal& ideal, IdealProperty property) {
  const FiniteRing& ring = *ideal.ring();
  const auto elements = ideal.elements();
  IdealVerdict verdict;

  if (property == IdealProperty::Nil) {
    const auto& nil = nilpotents(ring);
    for (Index x : elements) {
      if (!nil.contains(x)) {
        verdict.holds = false;
        verdict.witness = x;
        break;
      }
    }
    return verdict;
  }

  const bool clean = property == IdealProperty::Clean || property == IdealProperty::StronglyClean ||
                     property == IdealProperty::UniquelyStronglyClean;
  const bool commuting = property == IdealProperty::StronglyClean ||
                         property == IdealProperty::StronglyNilClean ||
                         property == IdealProperty::UniquelyStronglyNilClean ||
                         property == IdealProperty::UniquelyStronglyClean;
  const bool unique = property == IdealProperty::UniquelyNilClean ||
                      property == IdealProperty::UniquelyStronglyNilClean ||
                      property == IdealProperty::UniquelyStronglyClean;

  const auto idem = idempotents(ring).members();
  kernels::DecompositionQuery q;
  q.elements = elements;
  q.idempotents = idem;
  q.second = clean ? &units(ring) : &nilpotents(ring);
  q.require_commuting = commuting;
  const auto counts = kernels::parallel::decomposition_counts(ring, q);

  for (std::size_t i = 0; i < elements.size(); ++i) {
    const bool ok = unique ? counts[i] == 1 : counts[i] >= 1;
    if (!ok) {
      verdict.holds = false;
      verdict.witness = elements[i];
      verdict.witness_count = counts[i];
      break;
    }
  }
  return verdict;
}

bool is_clean_ideal(const Ideal& i) { return check_ideal(i, IdealProperty::Clean).holds; }
bool is_nil_clean_ideal(const Ideal& i) { return check_ideal(i, IdealProperty::NilClean).holds; }
bool is_strongly_clean_ideal(const Ideal& i) {
  return check_ideal(i, IdealProperty::StronglyClean).holds;
}
bool is_strongly_nil_clean_ideal(const Ideal& i) {
  return check_ideal(i, IdealProperty::StronglyNilClean).holds;
}
bool is_uniquely_nil_clean_ideal(const Ideal& i) {
  return check_ideal(i, IdealProperty::UniquelyNilClean).holds;
}
bool is_uniquely_strongly_nil_clean_ideal(const Ideal& i) {
  return check_ideal(i, IdealProperty::UniquelyStronglyNilClean).holds;
}
bool is_uniquely_strongly_clean_ideal(const Ideal& i) {
  return check_ideal(i, IdealProperty::UniquelyStronglyClean).holds;
}

bool is_nil_clean_ring(const RingPtr& ring) { return is_nil_clean_ideal(Ideal::whole(ring)); }

}  // namespace nilclean
