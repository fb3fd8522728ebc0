#include "nilclean/ideals.hpp"

#include <algorithm>
#include <unordered_set>

#include "nilclean/classify.hpp"

namespace nilclean {

// ---------------------------------------------------------------------------
// Ideal value type

std::optional<std::string> ideal_violation(const FiniteRing& ring, const ElementSet& members) {
  if (members.universe() != ring.order()) return "member set universe does not match ring order";
  if (!members.contains(ring.zero_index())) return "does not contain zero";
  std::optional<std::string> why;
  const Index n = ring.order();
  members.for_each([&](Index a) {
    if (why) return;
    if (!members.contains(ring.neg(a))) {
      why = "not closed under negation at " + ring.render(a);
      return;
    }
    for (Index r = 0; r < n; ++r) {
      if (!members.contains(ring.mul(r, a))) {
        why = "not closed under left multiplication: " + ring.render(r) + " * " + ring.render(a);
        return;
      }
      if (!members.contains(ring.mul(a, r))) {
        why = "not closed under right multiplication: " + ring.render(a) + " * " + ring.render(r);
        return;
      }
    }
  });
  if (why) return why;
  members.for_each([&](Index a) {
    if (why) return;
    members.for_each([&](Index b) {
      if (!why && !members.contains(ring.add(a, b))) {
        why = "not closed under addition: " + ring.render(a) + " + " + ring.render(b);
      }
    });
  });
  return why;
}

Ideal Ideal::from_members(RingPtr ring, ElementSet members,
                          std::optional<std::vector<Index>> generators) {
  if (auto why = ideal_violation(*ring, members)) {
    throw Error(ErrorKind::NotAnIdeal, "not an ideal of " + ring->spec() + ": " + *why);
  }
  return Ideal(std::move(ring), std::move(members), std::move(generators));
}

Ideal Ideal::zero(RingPtr ring) {
  ElementSet m(ring->order());
  m.insert(ring->zero_index());
  return Ideal(std::move(ring), std::move(m), std::vector<Index>{});
}

Ideal Ideal::whole(RingPtr ring) {
  auto m = ElementSet::all(ring->order());
  const Index one = ring->one_index();
  return Ideal(std::move(ring), std::move(m), std::vector<Index>{one});
}

bool operator==(const Ideal& a, const Ideal& b) {
  const bool same_ring =
      a.ring_ == b.ring_ ||
      (a.ring_->spec() == b.ring_->spec() &&
       dynamic_cast<const TableStructure*>(&a.ring_->structure()) == nullptr);
  return same_ring && a.members_ == b.members_;
}

// ---------------------------------------------------------------------------
// Generation and enumeration

namespace {

// Additive subgroup generated by `seeds`, grown one cyclic subgroup at a time.
ElementSet additive_closure(const FiniteRing& ring, const ElementSet& seeds) {
  ElementSet closure(ring.order());
  closure.insert(ring.zero_index());
  std::vector<Index> current{ring.zero_index()};
  seeds.for_each([&](Index s) {
    if (closure.contains(s)) return;
    std::vector<Index> multiples;
    for (Index m = ring.zero_index();;) {
      multiples.push_back(m);
      m = ring.add(m, s);
      if (m == ring.zero_index()) break;
    }
    std::vector<Index> next;
    for (Index c : current) {
      for (Index m : multiples) {
        const Index v = ring.add(c, m);
        if (!closure.contains(v)) {
          closure.insert(v);
          next.push_back(v);
        }
      }
    }
    current.insert(current.end(), next.begin(), next.end());
  });
  return closure;
}

Ideal unchecked_generated(const RingPtr& ring, std::span<const Index> gens) {
  const FiniteRing& r = *ring;
  ElementSet seeds(r.order());
  for (Index g : gens) {
    if (g >= r.order()) {
      throw Error(ErrorKind::BadParameter, "generator " + std::to_string(g) + " out of range");
    }
    for (Index left = 0; left < r.order(); ++left) {
      const Index lg = r.mul(left, g);
      for (Index right = 0; right < r.order(); ++right) seeds.insert(r.mul(lg, right));
    }
  }
  return Ideal::from_members(ring, additive_closure(r, seeds),
                             std::vector<Index>(gens.begin(), gens.end()));
}

ElementSet sum_set(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
  ElementSet out(ring.order());
  a.for_each([&](Index x) { b.for_each([&](Index y) { out.insert(ring.add(x, y)); }); });
  return out;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorKind::ElementRingMismatch, "ideals belong to different rings");
  }
}

}  // namespace

Ideal ideal_generated(const RingPtr& ring, std::span<const Index> gens) {
  return unchecked_generated(ring, gens);
}

Ideal ideal_generated(const RingPtr& ring, std::initializer_list<Index> gens) {
  return unchecked_generated(ring, std::span<const Index>(gens.begin(), gens.size()));
}

std::vector<Ideal> all_ideals(const RingPtr& ring, std::size_t cap) {
  const FiniteRing& r = *ring;
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> found;
  auto add_set = [&](ElementSet s) {
    if (seen.insert(s).second) {
      found.push_back(std::move(s));
      if (found.size() > cap) {
        throw Error(ErrorKind::CapExceeded, ring->spec() + " has more than " +
                                                std::to_string(cap) + " ideals");
      }
      return true;
    }
    return false;
  };

  for (Index x = 0; x < r.order(); ++x) {
    const Index g[] = {x};
    add_set(unchecked_generated(ring, g).members());
  }
  // Close under pairwise sums; every ideal is a finite sum of principal ideals.
  std::size_t done = 0;
  while (done < found.size()) {
    const std::size_t end = found.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
        add_set(sum_set(r, found[i], found[j]));
      }
    }
    done = end;
  }

  std::sort(found.begin(), found.end(), size_then_lex_less);
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Ideal::from_members(ring, std::move(s)));
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::from_members(a.ring(), sum_set(*a.ring(), a.members(), b.members()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const FiniteRing& r = *a.ring();
  ElementSet products(r.order());
  a.members().for_each(
      [&](Index x) { b.members().for_each([&](Index y) { products.insert(r.mul(x, y)); }); });
  // Products of ideal elements are already closed under outer multiplication.
  return Ideal::from_members(a.ring(), additive_closure(r, products));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::from_members(a.ring(), a.members() & b.members());
}

bool is_nil_ideal(const Ideal& ideal) {
  return ideal.members().is_subset_of(nilpotents(*ideal.ring()));
}

Ideal image_ideal(const RingMap& projection, const Ideal& ideal) {
  if (ideal.ring() != projection.domain) {
    throw Error(ErrorKind::ElementRingMismatch, "ideal does not live in the map's domain");
  }
  ElementSet image(projection.codomain->order());
  ideal.members().for_each([&](Index x) { image.insert(projection(x)); });
  return Ideal::from_members(projection.codomain, std::move(image));
}

Ideal corner_ideal(const CornerRing& corner, const Ideal& ideal) {
  const RingPtr& ambient = corner.embedding.codomain;
  if (ideal.ring() != ambient) {
    throw Error(ErrorKind::ElementRingMismatch, "ideal does not live in the ambient ring");
  }
  const auto& cs = dynamic_cast<const CornerStructure&>(corner.ring->structure());
  std::vector<Index> local_of(ambient->order(), ambient->order());
  for (Index i = 0; i < cs.members().size(); ++i) local_of[cs.members()[i]] = i;

  const Index e = corner.idempotent;
  ElementSet out(corner.ring->order());
  ideal.members().for_each([&](Index x) {
    const Index exe = ambient->mul(ambient->mul(e, x), e);
    out.insert(local_of[exe]);
  });
  return Ideal::from_members(corner.ring, std::move(out));
}

Ideal corner_ideal(const RingPtr& ring, Index e, const Ideal& ideal) {
  return corner_ideal(make_corner(ring, e), ideal);
}

Ideal product_ideal(const RingPtr& product, std::span<const Ideal> parts) {
  const auto* ps = dynamic_cast<const ProductStructure*>(&product->structure());
  if (!ps || ps->parts().size() != parts.size()) {
    throw Error(ErrorKind::BadParameter, "product_ideal needs one ideal per product factor");
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].ring() != ps->parts()[k]) {
      throw Error(ErrorKind::ElementRingMismatch, "factor ideal belongs to a different ring");
    }
  }
  ElementSet out(product->order());
  for (Index x = 0; x < product->order(); ++x) {
    const auto coords = ps->decode(x);
    bool inside = true;
    for (std::size_t k = 0; k < coords.size() && inside; ++k) inside = parts[k].contains(coords[k]);
    if (inside) out.insert(x);
  }
  return Ideal::from_members(product, std::move(out));
}

Ideal triangular_ideal(const RingPtr& triangular, const Ideal& base_ideal) {
  const auto* ts = dynamic_cast<const TriangularStructure*>(&triangular->structure());
  if (!ts) throw Error(ErrorKind::BadParameter, "not a triangular matrix ring");
  if (ts->base() != base_ideal.ring()) {
    throw Error(ErrorKind::ElementRingMismatch, "ideal is not over the base ring");
  }
  ElementSet out(triangular->order());
  for (Index x = 0; x < triangular->order(); ++x) {
    const auto entries = ts->decode(x);
    if (std::all_of(entries.begin(), entries.end(),
                    [&](Index v) { return base_ideal.contains(v); })) {
      out.insert(x);
    }
  }
  return Ideal::from_members(triangular, std::move(out));
}

Ideal triangular_corner_ideal(const RingPtr& triangular, const Ideal& top, const Ideal& bottom) {
  const auto* ts = dynamic_cast<const TriangularStructure*>(&triangular->structure());
  if (!ts || ts->dim() != 2) throw Error(ErrorKind::BadParameter, "not a 2x2 triangular ring");
  if (ts->base() != top.ring() || ts->base() != bottom.ring()) {
    throw Error(ErrorKind::ElementRingMismatch, "ideals are not over the base ring");
  }
  ElementSet out(triangular->order());
  for (Index x = 0; x < triangular->order(); ++x) {
    if (top.contains(ts->entry(x, 0, 0)) && bottom.contains(ts->entry(x, 1, 1))) out.insert(x);
  }
  return Ideal::from_members(triangular, std::move(out));
}

ElementSet idealization_submodule(const IdealizationStructure& s, Index d) {
  const Index m = s.module_modulus();
  if (d == 0 || m % d != 0) {
    throw Error(ErrorKind::BadParameter, "submodule step must divide the module order");
  }
  ElementSet out(m);
  for (Index a = 0; a < m; a += d) out.insert(a);
  return out;
}

ElementSet idealization_pairs(const RingPtr& idealization, const Ideal& base_ideal,
                              const ElementSet& submodule) {
  const auto* s = dynamic_cast<const IdealizationStructure*>(&idealization->structure());
  if (!s) throw Error(ErrorKind::BadParameter, "not an idealization ring");
  if (base_ideal.ring()->order() != s->ring_modulus() ||
      submodule.universe() != s->module_modulus()) {
    throw Error(ErrorKind::BadParameter, "ideal or submodule has the wrong size");
  }
  ElementSet out(idealization->order());
  base_ideal.members().for_each(
      [&](Index r) { submodule.for_each([&](Index a) { out.insert(s->encode(r, a)); }); });
  return out;
}

MoritaBlocks morita_projections(const MoritaZeroStructure& s, const ElementSet& members) {
  MoritaBlocks b{ElementSet(s.a()), ElementSet(s.g()), ElementSet(s.g()), ElementSet(s.b())};
  members.for_each([&](Index v) {
    const auto e = s.decode(v);
    b.top_left.insert(e.r);
    b.top_right.insert(e.x);
    b.bottom_left.insert(e.y);
    b.bottom_right.insert(e.s);
  });
  return b;
}

ElementSet morita_block_set(const MoritaZeroStructure& s, const MoritaBlocks& blocks) {
  ElementSet out(s.order());
  blocks.top_left.for_each([&](Index r) {
    blocks.top_right.for_each([&](Index x) {
      blocks.bottom_left.for_each([&](Index y) {
        blocks.bottom_right.for_each([&](Index sv) { out.insert(s.encode({r, x, y, sv})); });
      });
    });
  });
  return out;
}

}  // namespace nilclean
