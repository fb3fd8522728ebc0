#include "nilclean/constructors.hpp"

#include <numeric>
#include <sstream>

#include "nilclean/classify.hpp"
#include "nilclean/ideals.hpp"

namespace nilclean {

namespace {

Index checked_order(std::uint64_t order, const BuildOptions& opts, const std::string& what) {
  if (order > opts.order_cap) {
    throw Error(ErrorKind::OrderCapExceeded, what + " has order " + std::to_string(order) +
                                                 ", above the cap " +
                                                 std::to_string(opts.order_cap));
  }
  return static_cast<Index>(order);
}

// Saturating multiply so cap checks cannot overflow.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

Index mod_add(Index x, Index y, Index n) {
  const std::uint64_t s = std::uint64_t{x} + y;
  return static_cast<Index>(s >= n ? s - n : s);
}

Index mod_mul(Index x, Index y, Index n) {
  return static_cast<Index>(std::uint64_t{x} * y % n);
}

Index mod_neg(Index x, Index n) { return x == 0 ? 0 : n - x; }

}  // namespace

// ---------------------------------------------------------------------------
// Z_n

Index ZmodStructure::add(Index x, Index y) const { return mod_add(x, y, n_); }
Index ZmodStructure::mul(Index x, Index y) const { return mod_mul(x, y, n_); }

RingPtr make_zmod(std::uint64_t n, const BuildOptions& opts) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "Z_n needs n >= 2");
  const Index order = checked_order(n, opts, "Z" + std::to_string(n));
  return FiniteRing::create(std::make_shared<ZmodStructure>(order), opts.table_threshold);
}

// ---------------------------------------------------------------------------
// Direct products

ProductStructure::ProductStructure(std::vector<RingPtr> parts) : parts_(std::move(parts)) {
  stride_.resize(parts_.size());
  std::uint64_t stride = 1;
  for (std::size_t k = parts_.size(); k-- > 0;) {
    stride_[k] = static_cast<Index>(stride);
    stride *= parts_[k]->order();
  }
  order_ = static_cast<Index>(stride);
  std::vector<Index> zeros, ones;
  for (const auto& p : parts_) {
    zeros.push_back(p->zero_index());
    ones.push_back(p->one_index());
  }
  zero_ = encode(zeros);
  one_ = encode(ones);
}

Index ProductStructure::encode(std::span<const Index> coords) const {
  Index x = 0;
  for (std::size_t k = 0; k < parts_.size(); ++k) x += coords[k] * stride_[k];
  return x;
}

std::vector<Index> ProductStructure::decode(Index x) const {
  std::vector<Index> coords(parts_.size());
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    coords[k] = x / stride_[k];
    x %= stride_[k];
  }
  return coords;
}

template <class Op>
Index ProductStructure::componentwise(Index x, Index y, Op op) const {
  Index out = 0;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    const Index xk = x / stride_[k], yk = y / stride_[k];
    x %= stride_[k];
    y %= stride_[k];
    out += op(*parts_[k], xk, yk) * stride_[k];
  }
  return out;
}

Index ProductStructure::add(Index x, Index y) const {
  return componentwise(x, y, [](const FiniteRing& r, Index a, Index b) { return r.add(a, b); });
}

Index ProductStructure::mul(Index x, Index y) const {
  return componentwise(x, y, [](const FiniteRing& r, Index a, Index b) { return r.mul(a, b); });
}

Index ProductStructure::neg(Index x) const {
  return componentwise(x, 0, [](const FiniteRing& r, Index a, Index) { return r.neg(a); });
}

std::string ProductStructure::spec() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += "x";
    const bool nested = dynamic_cast<const ProductStructure*>(&parts_[k]->structure()) != nullptr;
    out += nested ? "(" + parts_[k]->spec() + ")" : parts_[k]->spec();
  }
  return out;
}

std::string ProductStructure::render(Index x) const {
  const auto c = decode(x);
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ",";
    out += parts_[k]->render(c[k]);
  }
  return out + ")";
}

RingPtr make_product(std::vector<RingPtr> parts, const BuildOptions& opts) {
  if (parts.empty()) throw Error(ErrorKind::BadParameter, "a product needs at least one factor");
  std::uint64_t order = 1;
  for (const auto& p : parts) order = mul_sat(order, p->order());
  checked_order(order, opts, "product");
  return FiniteRing::create(std::make_shared<ProductStructure>(std::move(parts)),
                            opts.table_threshold);
}

// ---------------------------------------------------------------------------
// Upper triangular matrices

TriangularStructure::TriangularStructure(RingPtr base, unsigned n)
    : base_(std::move(base)), n_(n), slots_(n * (n + 1) / 2) {
  std::uint64_t order = 1;
  for (std::size_t k = 0; k < slots_; ++k) order *= base_->order();
  order_ = static_cast<Index>(order);
  std::vector<Index> id(slots_, base_->zero_index());
  for (unsigned i = 0; i < n_; ++i) id[slot(i, i)] = base_->one_index();
  one_ = encode(id);
}

std::size_t TriangularStructure::slot(unsigned i, unsigned j) const {
  // Rows before i hold n + (n-1) + ... + (n-i+1) entries.
  return i * n_ - i * (i - 1) / 2 + (j - i);
}

Index TriangularStructure::encode(std::span<const Index> entries) const {
  Index x = 0;
  for (std::size_t k = 0; k < slots_; ++k) x = x * base_->order() + entries[k];
  return x;
}

std::vector<Index> TriangularStructure::decode(Index x) const {
  std::vector<Index> e(slots_);
  for (std::size_t k = slots_; k-- > 0;) {
    e[k] = x % base_->order();
    x /= base_->order();
  }
  return e;
}

Index TriangularStructure::add(Index x, Index y) const {
  auto a = decode(x);
  const auto b = decode(y);
  for (std::size_t k = 0; k < slots_; ++k) a[k] = base_->add(a[k], b[k]);
  return encode(a);
}

Index TriangularStructure::neg(Index x) const {
  auto a = decode(x);
  for (auto& v : a) v = base_->neg(v);
  return encode(a);
}

Index TriangularStructure::mul(Index x, Index y) const {
  const auto a = decode(x);
  const auto b = decode(y);
  std::vector<Index> c(slots_, base_->zero_index());
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = i; j < n_; ++j) {
      Index acc = base_->zero_index();
      for (unsigned k = i; k <= j; ++k) {
        acc = base_->add(acc, base_->mul(a[slot(i, k)], b[slot(k, j)]));
      }
      c[slot(i, j)] = acc;
    }
  }
  return encode(c);
}

std::string TriangularStructure::spec() const {
  return "T" + std::to_string(n_) + "(" + base_->spec() + ")";
}

std::string TriangularStructure::render(Index x) const {
  const auto e = decode(x);
  std::string out = "[";
  for (unsigned i = 0; i < n_; ++i) {
    if (i) out += ",";
    out += "[";
    for (unsigned j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += j < i ? base_->render(base_->zero_index()) : base_->render(e[slot(i, j)]);
    }
    out += "]";
  }
  return out + "]";
}

RingPtr make_upper_triangular(RingPtr base, unsigned n, const BuildOptions& opts) {
  if (n < 2 || n > 3) throw Error(ErrorKind::BadParameter, "triangular size must be 2 or 3");
  std::uint64_t order = 1;
  for (unsigned k = 0; k < n * (n + 1) / 2; ++k) order = mul_sat(order, base->order());
  checked_order(order, opts, "T" + std::to_string(n) + "(" + base->spec() + ")");
  return FiniteRing::create(std::make_shared<TriangularStructure>(std::move(base), n),
                            opts.table_threshold);
}

// ---------------------------------------------------------------------------
// Idealization Z_n(Z_m)

Index IdealizationStructure::add(Index x, Index y) const {
  const auto [r, a] = decode(x);
  const auto [s, b] = decode(y);
  return encode(mod_add(r, s, n_), mod_add(a, b, m_));
}

Index IdealizationStructure::mul(Index x, Index y) const {
  const auto [r, a] = decode(x);
  const auto [s, b] = decode(y);
  // Z_n acts on Z_m through reduction mod m (m | n).
  return encode(mod_mul(r, s, n_), mod_add(mod_mul(r % m_, b, m_), mod_mul(s % m_, a, m_), m_));
}

Index IdealizationStructure::neg(Index x) const {
  const auto [r, a] = decode(x);
  return encode(mod_neg(r, n_), mod_neg(a, m_));
}

std::string IdealizationStructure::spec() const {
  return "Id(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
}

std::string IdealizationStructure::render(Index x) const {
  const auto [r, a] = decode(x);
  return "(" + std::to_string(r) + "," + std::to_string(a) + ")";
}

RingPtr make_idealization(std::uint64_t n, std::uint64_t m, const BuildOptions& opts) {
  if (n < 2 || m < 1 || n % m != 0) {
    throw Error(ErrorKind::BadParameter, "idealization Id(n,m) needs n >= 2 and m | n");
  }
  const Index order = checked_order(mul_sat(n, m), opts, "Id(" + std::to_string(n) + "," +
                                                             std::to_string(m) + ")");
  (void)order;
  return FiniteRing::create(
      std::make_shared<IdealizationStructure>(static_cast<Index>(n), static_cast<Index>(m)),
      opts.table_threshold);
}

// ---------------------------------------------------------------------------
// Zero-pairing Morita context

MoritaZeroStructure::Entries MoritaZeroStructure::decode(Index v) const {
  Entries e;
  e.s = v % b_;
  v /= b_;
  e.y = v % g_;
  v /= g_;
  e.x = v % g_;
  e.r = v / g_;
  return e;
}

Index MoritaZeroStructure::add(Index p, Index q) const {
  const auto u = decode(p), v = decode(q);
  return encode({mod_add(u.r, v.r, a_), mod_add(u.x, v.x, g_), mod_add(u.y, v.y, g_),
                 mod_add(u.s, v.s, b_)});
}

Index MoritaZeroStructure::mul(Index p, Index q) const {
  const auto u = decode(p), v = decode(q);
  // (r x; y s)(r' x'; y' s') with both pairings x*y' and y*x' identically zero.
  return encode({mod_mul(u.r, v.r, a_),
                 mod_add(mod_mul(u.r % g_, v.x, g_), mod_mul(u.x, v.s % g_, g_), g_),
                 mod_add(mod_mul(u.y, v.r % g_, g_), mod_mul(u.s % g_, v.y, g_), g_),
                 mod_mul(u.s, v.s, b_)});
}

Index MoritaZeroStructure::neg(Index p) const {
  const auto u = decode(p);
  return encode({mod_neg(u.r, a_), mod_neg(u.x, g_), mod_neg(u.y, g_), mod_neg(u.s, b_)});
}

std::string MoritaZeroStructure::spec() const {
  return "MZ(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(g_) + ")";
}

std::string MoritaZeroStructure::render(Index v) const {
  const auto e = decode(v);
  std::ostringstream out;
  out << "[[" << e.r << "," << e.x << "],[" << e.y << "," << e.s << "]]";
  return out.str();
}

RingPtr make_morita_zero(std::uint64_t a, std::uint64_t b, std::uint64_t g,
                         const BuildOptions& opts) {
  if (a < 1 || b < 1 || g < 1 || std::gcd(a, b) % g != 0) {
    throw Error(ErrorKind::BadParameter, "MZ(a,b,g) needs g | gcd(a,b)");
  }
  checked_order(mul_sat(mul_sat(a, b), mul_sat(g, g)), opts,
                "MZ(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(g) +
                    ")");
  return FiniteRing::create(
      std::make_shared<MoritaZeroStructure>(static_cast<Index>(a), static_cast<Index>(b),
                                            static_cast<Index>(g)),
      opts.table_threshold);
}

// ---------------------------------------------------------------------------
// Quotients

QuotientStructure::QuotientStructure(RingPtr base, std::vector<Index> generators,
                                     std::vector<Index> representatives,
                                     std::vector<Index> coset_of)
    : base_(std::move(base)),
      gens_(std::move(generators)),
      reps_(std::move(representatives)),
      coset_of_(std::move(coset_of)) {}

std::string QuotientStructure::spec() const {
  std::string out = "Q(" + base_->spec() + ";[";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens_[i]);
  }
  return out + "])";
}

std::string QuotientStructure::render(Index x) const { return base_->render(reps_[x]) + "+I"; }

QuotientRing make_quotient(const Ideal& ideal, const BuildOptions& opts) {
  const RingPtr& base = ideal.ring();
  const FiniteRing& r = *base;
  if (auto why = ideal_violation(r, ideal.members())) {
    throw Error(ErrorKind::NotAnIdeal, "cannot form a quotient: " + *why);
  }
  if (ideal.is_whole()) {
    throw Error(ErrorKind::BadParameter, "quotient by the whole ring is the zero ring");
  }
  const auto members = ideal.elements();
  std::vector<Index> coset_of(r.order(), r.order());
  std::vector<Index> reps;
  for (Index x = 0; x < r.order(); ++x) {
    if (coset_of[x] != r.order()) continue;
    const auto q = static_cast<Index>(reps.size());
    reps.push_back(x);  // smallest index in its coset
    for (Index i : members) coset_of[r.add(x, i)] = q;
  }
  std::vector<Index> gens;
  if (ideal.generators()) {
    gens = *ideal.generators();
  } else {
    gens = members;
  }
  auto structure = std::make_shared<QuotientStructure>(base, std::move(gens), std::move(reps),
                                                       coset_of);
  checked_order(structure->order(), opts, "quotient");
  auto ring = FiniteRing::create(structure, opts.table_threshold);
  return {ring, RingMap{base, ring, std::move(coset_of)}};
}

// ---------------------------------------------------------------------------
// Corner rings

CornerStructure::CornerStructure(RingPtr ambient, Index idempotent, std::vector<Index> members)
    : ambient_(std::move(ambient)), e_(idempotent), members_(std::move(members)) {
  local_of_.assign(ambient_->order(), ambient_->order());
  for (Index i = 0; i < members_.size(); ++i) local_of_[members_[i]] = i;
}

Index CornerStructure::local(Index ambient_index) const {
  const Index i = local_of_[ambient_index];
  if (i == ambient_->order()) {
    throw Error(ErrorKind::InternalInvariantViolation, "corner ring is not closed");
  }
  return i;
}

std::string CornerStructure::spec() const {
  return "C(" + ambient_->spec() + ";" + std::to_string(e_) + ")";
}

CornerRing make_corner(const RingPtr& ring, Index e, const BuildOptions& opts) {
  const FiniteRing& r = *ring;
  if (e >= r.order() || e == r.zero_index() || !is_idempotent(r, e) || !is_central(r, e)) {
    throw Error(ErrorKind::NotCentralIdempotent,
                (e < r.order() ? r.render(e) : std::to_string(e)) +
                    " is not a nonzero central idempotent of " + r.spec());
  }
  ElementSet corner(r.order());
  for (Index x = 0; x < r.order(); ++x) corner.insert(r.mul(r.mul(e, x), e));
  auto members = corner.members();
  std::vector<Index> images = members;
  auto structure = std::make_shared<CornerStructure>(ring, e, std::move(members));
  checked_order(structure->order(), opts, "corner");
  if (structure->order() < 2) {
    throw Error(ErrorKind::NotCentralIdempotent, "corner ring is trivial");
  }
  auto corner_ring = FiniteRing::create(structure, opts.table_threshold);
  return {corner_ring, RingMap{corner_ring, ring, std::move(images)}, e};
}

}  // namespace nilclean
