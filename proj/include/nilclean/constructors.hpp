#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nilclean/ideal.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

inline constexpr Index kDefaultOrderCap = 4096;

struct BuildOptions {
  Index order_cap = kDefaultOrderCap;
  Index table_threshold = FiniteRing::kDefaultTableThreshold;
};

// ---------------------------------------------------------------------------
// Ring families

RingPtr make_zmod(std::uint64_t n, const BuildOptions& opts = {});
RingPtr make_product(std::vector<RingPtr> parts, const BuildOptions& opts = {});
RingPtr make_upper_triangular(RingPtr base, unsigned n, const BuildOptions& opts = {});
/// Z_n x Z_m with (r,a)(s,b) = (rs, rb + sa); requires m | n.
RingPtr make_idealization(std::uint64_t n, std::uint64_t m, const BuildOptions& opts = {});
/// Formal matrices (r x; y s), r in Z_a, s in Z_b, x,y in Z_g, both pairings zero; g | gcd(a,b).
RingPtr make_morita_zero(std::uint64_t a, std::uint64_t b, std::uint64_t g,
                         const BuildOptions& opts = {});

struct QuotientRing {
  RingPtr ring;
  RingMap projection;  // surjection R -> R/I
};

/// Coset ring R/I. Each coset is represented by its smallest member index and
/// quotient indices follow the order of those representatives.
QuotientRing make_quotient(const Ideal& ideal, const BuildOptions& opts = {});

struct CornerRing {
  RingPtr ring;
  RingMap embedding;  // eRe -> R
  Index idempotent;
};

/// eRe for a nonzero central idempotent e; NotCentralIdempotent otherwise.
CornerRing make_corner(const RingPtr& ring, Index e, const BuildOptions& opts = {});

// ---------------------------------------------------------------------------
// Structures. Exposed so that callers can encode and decode structured elements.

class ZmodStructure final : public Structure {
 public:
  explicit ZmodStructure(Index n) : n_(n) {}
  Index modulus() const noexcept { return n_; }

  Index order() const override { return n_; }
  Index zero() const override { return 0; }
  Index one() const override { return 1 % n_; }
  Index add(Index x, Index y) const override;
  Index mul(Index x, Index y) const override;
  Index neg(Index x) const override { return x == 0 ? 0 : n_ - x; }
  std::string spec() const override { return "Z" + std::to_string(n_); }

 private:
  Index n_;
};

/// Tuples in lexicographic (big-endian mixed radix) order.
class ProductStructure final : public Structure {
 public:
  explicit ProductStructure(std::vector<RingPtr> parts);

  const std::vector<RingPtr>& parts() const noexcept { return parts_; }
  Index encode(std::span<const Index> coords) const;
  std::vector<Index> decode(Index x) const;

  Index order() const override { return order_; }
  Index zero() const override { return zero_; }
  Index one() const override { return one_; }
  Index add(Index x, Index y) const override;
  Index mul(Index x, Index y) const override;
  Index neg(Index x) const override;
  std::string spec() const override;
  std::string render(Index x) const override;

 private:
  template <class Op>
  Index componentwise(Index x, Index y, Op op) const;

  std::vector<RingPtr> parts_;
  std::vector<Index> stride_;
  Index order_, zero_, one_;
};

/// Upper triangular n x n matrices; entries (i,j), i <= j, in row-major order,
/// first entry most significant.
class TriangularStructure final : public Structure {
 public:
  TriangularStructure(RingPtr base, unsigned n);

  const RingPtr& base() const noexcept { return base_; }
  unsigned dim() const noexcept { return n_; }
  /// Position of entry (i,j) in the entry list.
  std::size_t slot(unsigned i, unsigned j) const;
  Index encode(std::span<const Index> entries) const;
  std::vector<Index> decode(Index x) const;
  Index entry(Index x, unsigned i, unsigned j) const { return decode(x)[slot(i, j)]; }

  Index order() const override { return order_; }
  Index zero() const override { return 0; }
  Index one() const override { return one_; }
  Index add(Index x, Index y) const override;
  Index mul(Index x, Index y) const override;
  Index neg(Index x) const override;
  std::string spec() const override;
  std::string render(Index x) const override;

 private:
  RingPtr base_;
  unsigned n_;
  std::size_t slots_;
  Index order_, one_;
};

/// Pairs (r, a), index r*m + a.
class IdealizationStructure final : public Structure {
 public:
  IdealizationStructure(Index n, Index m) : n_(n), m_(m) {}

  Index ring_modulus() const noexcept { return n_; }
  Index module_modulus() const noexcept { return m_; }
  Index encode(Index r, Index a) const { return r * m_ + a; }
  std::pair<Index, Index> decode(Index x) const { return {x / m_, x % m_}; }

  Index order() const override { return n_ * m_; }
  Index zero() const override { return 0; }
  Index one() const override { return encode(1 % n_, 0); }
  Index add(Index x, Index y) const override;
  Index mul(Index x, Index y) const override;
  Index neg(Index x) const override;
  std::string spec() const override;
  std::string render(Index x) const override;

 private:
  Index n_, m_;
};

/// Matrices (r x; y s): r in Z_a top-left, x in Z_g top-right, y in Z_g
/// bottom-left, s in Z_b bottom-right. Index ((r*g + x)*g + y)*b + s.
class MoritaZeroStructure final : public Structure {
 public:
  struct Entries {
    Index r, x, y, s;
    friend bool operator==(const Entries&, const Entries&) = default;
  };

  MoritaZeroStructure(Index a, Index b, Index g) : a_(a), b_(b), g_(g) {}

  Index a() const noexcept { return a_; }
  Index b() const noexcept { return b_; }
  Index g() const noexcept { return g_; }
  Index encode(const Entries& e) const { return ((e.r * g_ + e.x) * g_ + e.y) * b_ + e.s; }
  Entries decode(Index v) const;

  Index order() const override { return a_ * b_ * g_ * g_; }
  Index zero() const override { return 0; }
  Index one() const override { return encode({1 % a_, 0, 0, 1 % b_}); }
  Index add(Index x, Index y) const override;
  Index mul(Index x, Index y) const override;
  Index neg(Index x) const override;
  std::string spec() const override;
  std::string render(Index x) const override;

 private:
  Index a_, b_, g_;
};

class QuotientStructure final : public Structure {
 public:
  QuotientStructure(RingPtr base, std::vector<Index> generators, std::vector<Index> representatives,
                    std::vector<Index> coset_of);

  const RingPtr& base() const noexcept { return base_; }
  const std::vector<Index>& representatives() const noexcept { return reps_; }
  Index project(Index x) const { return coset_of_[x]; }

  Index order() const override { return static_cast<Index>(reps_.size()); }
  Index zero() const override { return coset_of_[base_->zero_index()]; }
  Index one() const override { return coset_of_[base_->one_index()]; }
  Index add(Index x, Index y) const override { return coset_of_[base_->add(reps_[x], reps_[y])]; }
  Index mul(Index x, Index y) const override { return coset_of_[base_->mul(reps_[x], reps_[y])]; }
  Index neg(Index x) const override { return coset_of_[base_->neg(reps_[x])]; }
  std::string spec() const override;
  std::string render(Index x) const override;

 private:
  RingPtr base_;
  std::vector<Index> gens_, reps_, coset_of_;
};

class CornerStructure final : public Structure {
 public:
  CornerStructure(RingPtr ambient, Index idempotent, std::vector<Index> members);

  const RingPtr& ambient() const noexcept { return ambient_; }
  Index idempotent() const noexcept { return e_; }
  const std::vector<Index>& members() const noexcept { return members_; }
  Index embed(Index x) const { return members_[x]; }

  Index order() const override { return static_cast<Index>(members_.size()); }
  Index zero() const override { return local(ambient_->zero_index()); }
  Index one() const override { return local(e_); }
  Index add(Index x, Index y) const override { return local(ambient_->add(members_[x], members_[y])); }
  Index mul(Index x, Index y) const override { return local(ambient_->mul(members_[x], members_[y])); }
  Index neg(Index x) const override { return local(ambient_->neg(members_[x])); }
  std::string spec() const override;
  std::string render(Index x) const override { return ambient_->render(members_[x]); }

 private:
  Index local(Index ambient_index) const;

  RingPtr ambient_;
  Index e_;
  std::vector<Index> members_;
  std::vector<Index> local_of_;
};

// ---------------------------------------------------------------------------
// Ring-spec mini-language

/// Copyable owning box, for recursive spec nodes.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& o) : ptr_(std::make_unique<T>(*o.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& o) { ptr_ = std::make_unique<T>(*o.ptr_); return *this; }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

struct RingSpec;

struct ZmodSpec {
  std::uint64_t n;
  friend bool operator==(const ZmodSpec&, const ZmodSpec&) = default;
};
struct ProductSpec {
  std::vector<RingSpec> parts;
  friend bool operator==(const ProductSpec&, const ProductSpec&);
};
struct TriSpec {
  unsigned n;
  Box<RingSpec> base;
  friend bool operator==(const TriSpec&, const TriSpec&) = default;
};
struct IdealizationSpec {
  std::uint64_t n, m;
  friend bool operator==(const IdealizationSpec&, const IdealizationSpec&) = default;
};
struct MoritaZeroSpec {
  std::uint64_t a, b, g;
  friend bool operator==(const MoritaZeroSpec&, const MoritaZeroSpec&) = default;
};
struct QuotientSpec {
  Box<RingSpec> base;
  std::vector<Index> generators;
  friend bool operator==(const QuotientSpec&, const QuotientSpec&) = default;
};
struct CornerSpec {
  Box<RingSpec> base;
  Index idempotent;
  friend bool operator==(const CornerSpec&, const CornerSpec&) = default;
};

struct RingSpec {
  std::variant<ZmodSpec, ProductSpec, TriSpec, IdealizationSpec, MoritaZeroSpec, QuotientSpec,
               CornerSpec>
      node;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Grammar (whitespace-insensitive):
///   spec  := atom ('x' atom)*
///   atom  := 'Z' n | 'T' n '(' spec ')' | 'Id(' n ',' m ')' | 'MZ(' a ',' b ',' g ')'
///          | 'Q(' spec ';' '[' gens ']' ')' | 'C(' spec ';' e ')' | '(' spec ')'
RingSpec parse_ring_spec(std::string_view text);

/// Canonical text; parse_ring_spec(to_string(s)) == s.
std::string to_string(const RingSpec& spec);

/// Checks parameter constraints (BadParameter) without building anything.
void validate(const RingSpec& spec);

RingPtr build_ring(const RingSpec& spec, const BuildOptions& opts = {});
RingPtr build_ring(std::string_view spec_text, const BuildOptions& opts = {});

}  // namespace nilclean
