#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace nilclean {

using Index = std::uint32_t;

/// Packed membership set over the element indices 0..universe-1 of one ring.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(Index universe) : bits_(universe) {}

  static ElementSet all(Index universe) {
    ElementSet s(universe);
    s.bits_.set();
    return s;
  }

  template <class Range>
  static ElementSet of(Index universe, const Range& members) {
    ElementSet s(universe);
    for (auto m : members) s.insert(static_cast<Index>(m));
    return s;
  }

  Index universe() const noexcept { return static_cast<Index>(bits_.size()); }
  Index size() const noexcept { return static_cast<Index>(bits_.count()); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Index i) const { return bits_.test(i); }
  void insert(Index i) { bits_.set(i); }
  void erase(Index i) { bits_.reset(i); }

  bool is_subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }

  ElementSet& operator|=(const ElementSet& o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(const ElementSet& o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(const ElementSet& o) { bits_ -= o.bits_; return *this; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

  /// Calls f(i) for each member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(static_cast<Index>(i));
    }
  }

  /// Smallest member, or universe() when empty.
  Index first() const {
    auto i = bits_.find_first();
    return i == Bits::npos ? universe() : static_cast<Index>(i);
  }

  std::vector<Index> members() const {
    std::vector<Index> out;
    out.reserve(size());
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = bits_.size();
    for_each([&](Index i) { h = h * 1000003u ^ (i + 0x9e3779b9u); });
    return h;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

/// Orders sets by cardinality, then by their sorted member lists.
bool size_then_lex_less(const ElementSet& a, const ElementSet& b);

}  // namespace nilclean

template <>
struct std::hash<nilclean::ElementSet> {
  std::size_t operator()(const nilclean::ElementSet& s) const noexcept { return s.hash(); }
};
