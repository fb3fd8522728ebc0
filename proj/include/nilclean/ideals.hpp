#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nilclean/constructors.hpp"
#include "nilclean/ideal.hpp"

namespace nilclean {

inline constexpr std::size_t kDefaultIdealCap = 512;

/// Least two-sided ideal containing `gens`: additive closure of {r g s}.
Ideal ideal_generated(const RingPtr& ring, std::span<const Index> gens);
Ideal ideal_generated(const RingPtr& ring, std::initializer_list<Index> gens);

/// Every two-sided ideal, found by closing the principal ideals under pairwise
/// sums. Ordered by size, then by sorted member list. CapExceeded past `cap`.
std::vector<Ideal> all_ideals(const RingPtr& ring, std::size_t cap = kDefaultIdealCap);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Ideal generated by all products ab, a in `a`, b in `b`.
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

bool is_nil_ideal(const Ideal& ideal);

/// {pi(x) : x in I} as an ideal of pi's codomain.
Ideal image_ideal(const RingMap& projection, const Ideal& ideal);

/// {e x e : x in I} as an ideal of the corner ring eRe.
Ideal corner_ideal(const CornerRing& corner, const Ideal& ideal);
Ideal corner_ideal(const RingPtr& ring, Index e, const Ideal& ideal);

/// I_1 x ... x I_k inside a ring built by make_product.
Ideal product_ideal(const RingPtr& product, std::span<const Ideal> parts);

/// T_n(I): triangular matrices with every entry in I, inside T_n(R).
Ideal triangular_ideal(const RingPtr& triangular, const Ideal& base_ideal);

/// (I R; 0 K) inside T_2(R): top-left in I, bottom-right in K, top-right free.
Ideal triangular_corner_ideal(const RingPtr& triangular, const Ideal& top, const Ideal& bottom);

/// Submodule d*Z_m of the module in an idealization ring Z_n(Z_m).
ElementSet idealization_submodule(const IdealizationStructure& s, Index d);

/// I(N) = {(r, a) : r in I, a in N} as a member set (not necessarily an ideal).
ElementSet idealization_pairs(const RingPtr& idealization, const Ideal& base_ideal,
                              const ElementSet& submodule);

/// Projections of a subset of a zero-pairing Morita ring onto its four blocks.
struct MoritaBlocks {
  ElementSet top_left, top_right, bottom_left, bottom_right;
};
MoritaBlocks morita_projections(const MoritaZeroStructure& s, const ElementSet& members);

/// Member set of the block matrix set (A1 M1; N1 B1).
ElementSet morita_block_set(const MoritaZeroStructure& s, const MoritaBlocks& blocks);

}  // namespace nilclean
