#include "nilclean/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "internal.hpp"
#include "nilclean/kernels.hpp"

namespace nilclean {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ElementRingMismatch: return "ElementRingMismatch";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotCentralIdempotent: return "NotCentralIdempotent";
    case ErrorKind::NotAlmostIdempotent: return "NotAlmostIdempotent";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool size_then_lex_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// ---------------------------------------------------------------------------

TableStructure::TableStructure(Index order, std::vector<Index> add, std::vector<Index> mul,
                               Index zero, Index one)
    : order_(order), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
  const std::size_t cells = std::size_t{order} * order;
  if (order == 0 || add_.size() != cells || mul_.size() != cells) {
    throw Error(ErrorKind::BadParameter, "table dimensions do not match order");
  }
  if (zero >= order || one >= order) {
    throw Error(ErrorKind::BadParameter, "zero/one index out of range");
  }
  for (Index v : add_) {
    if (v >= order) throw Error(ErrorKind::BadParameter, "add table entry out of range");
  }
  for (Index v : mul_) {
    if (v >= order) throw Error(ErrorKind::BadParameter, "mul table entry out of range");
  }
  // A missing inverse maps to zero; verify_axioms reports it.
  neg_.assign(order, zero);
  for (Index x = 0; x < order; ++x) {
    for (Index y = 0; y < order; ++y) {
      if (add_[std::size_t{x} * order + y] == zero) {
        neg_[x] = y;
        break;
      }
    }
  }
}

RingPtr make_table_ring(Index order, std::vector<Index> add, std::vector<Index> mul, Index zero,
                        Index one) {
  return FiniteRing::create(
      std::make_shared<TableStructure>(order, std::move(add), std::move(mul), zero, one));
}

// ---------------------------------------------------------------------------

RingPtr FiniteRing::create(std::shared_ptr<const Structure> structure, Index table_threshold) {
  if (!structure) throw Error(ErrorKind::BadParameter, "null ring structure");
  if (structure->order() < 2) {
    throw Error(ErrorKind::BadParameter, "the zero ring is not supported (order must be >= 2)");
  }
  if (structure->zero() == structure->one()) {
    throw Error(ErrorKind::BadParameter, "zero and one coincide");
  }
  return RingPtr(new FiniteRing(std::move(structure), table_threshold));
}

FiniteRing::FiniteRing(std::shared_ptr<const Structure> structure, Index table_threshold)
    : structure_(std::move(structure)),
      order_(structure_->order()),
      zero_(structure_->zero()),
      one_(structure_->one()) {
  neg_.resize(order_);
  for (Index x = 0; x < order_; ++x) neg_[x] = structure_->neg(x);
  if (order_ <= table_threshold) {
    const std::size_t n = order_;
    add_.resize(n * n);
    mul_.resize(n * n);
    for (Index x = 0; x < order_; ++x) {
      for (Index y = 0; y < order_; ++y) {
        add_[x * n + y] = structure_->add(x, y);
        mul_[x * n + y] = structure_->mul(x, y);
      }
    }
  }
}

Elem FiniteRing::elem(Index i) const {
  if (i >= order_) {
    throw Error(ErrorKind::BadParameter,
                "element index " + std::to_string(i) + " out of range for order " +
                    std::to_string(order_));
  }
  return {this, i};
}

Index FiniteRing::pow(Index x, std::uint64_t k) const {
  Index result = one_;
  Index base = x;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

void FiniteRing::check_owner(Elem x) const {
  if (x.ring != this) {
    throw Error(ErrorKind::ElementRingMismatch, "element belongs to a different ring");
  }
}

Elem FiniteRing::add(Elem x, Elem y) const {
  check_owner(x);
  check_owner(y);
  return {this, add(x.index, y.index)};
}

Elem FiniteRing::mul(Elem x, Elem y) const {
  check_owner(x);
  check_owner(y);
  return {this, mul(x.index, y.index)};
}

Elem FiniteRing::neg(Elem x) const {
  check_owner(x);
  return {this, neg(x.index)};
}

Elem FiniteRing::sub(Elem x, Elem y) const {
  check_owner(x);
  check_owner(y);
  return {this, sub(x.index, y.index)};
}

Elem FiniteRing::pow(Elem x, std::uint64_t k) const {
  check_owner(x);
  return {this, pow(x.index, k)};
}

bool is_commutative(const FiniteRing& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.commutative_once, [&] {
    bool commutative = true;
    const Index n = ring.order();
    for (Index x = 0; x < n && commutative; ++x) {
      for (Index y = x + 1; y < n; ++y) {
        if (ring.mul(x, y) != ring.mul(y, x)) {
          commutative = false;
          break;
        }
      }
    }
    memo.commutative = commutative;
  });
  return memo.commutative;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::Closure: return "closure";
    case Axiom::AddAssociative: return "additive associativity";
    case Axiom::AddCommutative: return "additive commutativity";
    case Axiom::AddIdentity: return "additive identity";
    case Axiom::AddInverse: return "additive inverse";
    case Axiom::MulAssociative: return "multiplicative associativity";
    case Axiom::MulIdentity: return "multiplicative identity";
    case Axiom::LeftDistributive: return "left distributivity";
    case Axiom::RightDistributive: return "right distributivity";
  }
  return "unknown";
}

std::string AxiomReport::describe(const FiniteRing& ring) const {
  if (ok()) return "all axioms hold (" + std::to_string(triples_checked) + " triples)";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) out << "; ";
    out << to_string(v.axiom) << " fails at (" << ring.render(v.x) << ", " << ring.render(v.y)
        << ", " << ring.render(v.z) << ")";
  }
  return out.str();
}

namespace {

// Checks every axiom on one triple; records the first failure per axiom.
void check_triple(const FiniteRing& r, Index x, Index y, Index z,
                  std::array<std::optional<AxiomViolation>, kAxiomCount>& first) {
  auto fail = [&](Axiom a) {
    auto& slot = first[static_cast<std::size_t>(a)];
    if (!slot) slot = AxiomViolation{a, x, y, z};
  };
  const Index n = r.order();
  if (r.add(x, y) >= n || r.mul(x, y) >= n || r.neg(x) >= n) {
    fail(Axiom::Closure);
    return;
  }
  const Index zero = r.zero_index();
  const Index one = r.one_index();
  if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) fail(Axiom::AddAssociative);
  if (r.add(x, y) != r.add(y, x)) fail(Axiom::AddCommutative);
  if (r.add(x, zero) != x) fail(Axiom::AddIdentity);
  if (r.add(x, r.neg(x)) != zero) fail(Axiom::AddInverse);
  if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) fail(Axiom::MulAssociative);
  if (r.mul(x, one) != x || r.mul(one, x) != x) fail(Axiom::MulIdentity);
  if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z))) fail(Axiom::LeftDistributive);
  if (r.mul(r.add(y, z), x) != r.add(r.mul(y, x), r.mul(z, x))) fail(Axiom::RightDistributive);
}

}  // namespace

AxiomReport verify_axioms(const FiniteRing& ring, AxiomMode mode) {
  AxiomReport report;
  if (mode.exhaustive) {
    if (ring.order() > AxiomMode::kExhaustiveLimit) {
      throw Error(ErrorKind::ExhaustiveTooLarge,
                  "exhaustive axiom check requires order <= " +
                      std::to_string(AxiomMode::kExhaustiveLimit) + ", got " +
                      std::to_string(ring.order()));
    }
    auto scan = kernels::parallel::exhaustive_axioms(ring);
    report.triples_checked = scan.triples;
    for (auto& v : scan.first) {
      if (v) report.violations.push_back(*v);
    }
    return report;
  }

  std::array<std::optional<AxiomViolation>, kAxiomCount> first{};
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<Index> pick(0, ring.order() - 1);
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    const Index x = pick(rng), y = pick(rng), z = pick(rng);
    check_triple(ring, x, y, z, first);
  }
  report.triples_checked = mode.samples;
  for (auto& v : first) {
    if (v) report.violations.push_back(*v);
  }
  return report;
}

AxiomReport verify_axioms(const FiniteRing& ring) {
  if (ring.order() <= AxiomMode::kExhaustiveLimit) return verify_axioms(ring, AxiomMode::full());
  return verify_axioms(ring, AxiomMode::sampled(100000));
}

namespace detail {
void check_axiom_triple(const FiniteRing& r, Index x, Index y, Index z,
                        std::array<std::optional<AxiomViolation>, kAxiomCount>& first) {
  check_triple(r, x, y, z, first);
}
}  // namespace detail

}  // namespace nilclean
