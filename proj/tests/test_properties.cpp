#include <gtest/gtest.h>

#include <random>

#include "nilclean/classify.hpp"
#include "nilclean/constructors.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/ideals.hpp"
#include "oracles.hpp"

using namespace nilclean;

namespace {

constexpr int kCases = 60;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

  /// Random spec whose ring order stays at or below `budget`.
  RingSpec spec(std::uint64_t budget, int depth = 0) {
    const auto pick = depth >= 2 ? 0 : below(7);
    switch (pick) {
      case 1:
        if (budget >= 4) {
          const auto a = between(2, std::min<std::uint64_t>(budget / 2, 12));
          auto left = spec(a, depth + 1);
          const auto left_order = build_ring(left)->order();
          if (budget / left_order >= 2) {
            return RingSpec{ProductSpec{{left, spec(budget / left_order, depth + 1)}}};
          }
        }
        break;
      case 2:
        if (budget >= 8) {
          const Index q = budget >= 64 ? Index(between(2, 4)) : 2;
          return RingSpec{TriSpec{2, RingSpec{ZmodSpec{q}}}};
        }
        break;
      case 3:
        if (budget >= 4) {
          const auto m = between(2, 4);
          const auto n = m * between(1, std::max<std::uint64_t>(1, budget / (m * m)));
          if (n * m <= budget) return RingSpec{IdealizationSpec{n, m}};
        }
        break;
      case 4:
        if (budget >= 8) {
          const auto g = between(1, 2);
          const auto a = g * between(1, 2), b = g * between(1, 2);
          if (a * b * g * g <= budget && a * b > 1) return RingSpec{MoritaZeroSpec{a, b, g}};
        }
        break;
      case 5:
        if (budget >= 4) {
          const auto base = spec(budget, depth + 1);
          const auto r = build_ring(base);
          const Index g = Index(below(r->order()));
          if (!ideal_generated(r, {g}).is_whole()) return RingSpec{QuotientSpec{base, {g}}};
        }
        break;
      case 6: {
        const auto base = spec(budget, depth + 1);
        const auto r = build_ring(base);
        const auto idem = idempotents(*r).members();
        std::vector<Index> central;
        for (Index e : idem) {
          if (e != r->zero_index() && is_central(*r, e)) central.push_back(e);
        }
        return RingSpec{CornerSpec{base, central[below(central.size())]}};
      }
      default:
        break;
    }
    return RingSpec{ZmodSpec{between(2, std::min<std::uint64_t>(budget, 64))}};
  }

  RingPtr ring(std::uint64_t budget) { return build_ring(spec(budget)); }

  Index element(const FiniteRing& r) { return Index(below(r.order())); }

  Ideal ideal(const RingPtr& r) {
    std::vector<Index> gens;
    for (auto k = below(3); k > 0; --k) gens.push_back(element(*r));
    return ideal_generated(r, gens);
  }

  /// Uniform choice among the ideals other than R itself.
  Ideal proper_ideal(const RingPtr& r) {
    auto list = all_ideals(r);
    list.pop_back();
    return list[below(list.size())];
  }

 private:
  std::mt19937_64 rng_;
};

class Properties : public ::testing::TestWithParam<int> {
 protected:
  Gen gen{0x1234u + static_cast<std::uint64_t>(GetParam()) * 7919u};
};

}  // namespace

TEST_P(Properties, SpecRoundTripAndAxioms) {
  const auto s = gen.spec(64);
  const auto text = to_string(s);
  ASSERT_EQ(parse_ring_spec(text), s) << text;
  const auto r = build_ring(s);
  EXPECT_EQ(r->spec(), text);
  const auto report = verify_axioms(*r, AxiomMode::full());
  EXPECT_TRUE(report.ok()) << text << ": " << report.describe(*r);
}

TEST_P(Properties, PowerLaws) {
  const auto r = gen.ring(256);
  for (int i = 0; i < 20; ++i) {
    const Index x = gen.element(*r);
    const auto a = gen.below(40), b = gen.below(40);
    EXPECT_EQ(r->pow(x, a + b), r->mul(r->pow(x, a), r->pow(x, b))) << r->spec();
    EXPECT_EQ(r->pow(r->pow(x, a), b), r->pow(x, a * b)) << r->spec();
  }
}

TEST_P(Properties, MemoMatchesFresh) {
  const auto r = gen.ring(128);
  EXPECT_EQ(units(*r), fresh::units(*r)) << r->spec();
  EXPECT_EQ(idempotents(*r), fresh::idempotents(*r)) << r->spec();
  EXPECT_EQ(nilpotents(*r), fresh::nilpotents(*r)) << r->spec();
  EXPECT_EQ(center(*r), fresh::center(*r)) << r->spec();
  EXPECT_EQ(jacobson_set(*r), fresh::jacobson(*r)) << r->spec();
}

TEST_P(Properties, GeneratedIdealsAreIdealsAndMatchClosure) {
  const auto r = gen.ring(64);
  const Index a = gen.element(*r), b = gen.element(*r);
  const auto i = ideal_generated(r, {a, b});
  EXPECT_EQ(i.elements(), oracle::closure(*r, {a, b})) << r->spec();
  EXPECT_TRUE(oracle::is_ideal(*r, i.elements()));
  EXPECT_TRUE(i.contains(a) && i.contains(b));
}

TEST_P(Properties, QuotientProjectionIsAHomomorphism) {
  const auto r = gen.ring(64);
  const auto i = gen.proper_ideal(r);
  const auto q = make_quotient(i);
  EXPECT_EQ(q.ring->order() * i.size(), r->order());
  for (int k = 0; k < 50; ++k) {
    const Index x = gen.element(*r), y = gen.element(*r);
    EXPECT_EQ(q.projection(r->add(x, y)), q.ring->add(q.projection(x), q.projection(y)));
    EXPECT_EQ(q.projection(r->mul(x, y)), q.ring->mul(q.projection(x), q.projection(y)));
    EXPECT_EQ(q.projection(x) == q.projection(y), i.contains(r->sub(x, y)));
  }
}

TEST_P(Properties, IdealizationUnitsComeFromUnitsOfTheBase) {
  const Index m = Index(gen.between(2, 6));
  const Index n = m * Index(gen.between(1, 6));
  const auto r = make_idealization(n, m);
  const auto zn = make_zmod(n);
  const auto& s = dynamic_cast<const IdealizationStructure&>(r->structure());
  for (int k = 0; k < 30; ++k) {
    const Index x = gen.element(*r);
    EXPECT_EQ(is_unit(*r, x), is_unit(*zn, s.decode(x).first)) << r->spec() << " " << x;
  }
}

TEST_P(Properties, MoritaOffDiagonalProductsVanish) {
  const Index g = Index(gen.between(1, 3));
  const auto r = make_morita_zero(g * gen.between(1, 3), g * gen.between(2, 3), g);
  const auto& s = dynamic_cast<const MoritaZeroStructure&>(r->structure());
  for (int k = 0; k < 40; ++k) {
    const auto p = s.decode(gen.element(*r)), q = s.decode(gen.element(*r));
    const auto prod = s.decode(r->mul(s.encode({0, p.x, p.y, 0}), s.encode({0, q.x, q.y, 0})));
    EXPECT_EQ(prod.r, 0u);
    EXPECT_EQ(prod.s, 0u);
  }
}

TEST_P(Properties, DecompositionsSumToTheElement) {
  const auto r = gen.ring(128);
  for (int k = 0; k < 10; ++k) {
    const Index x = gen.element(*r);
    for (const auto& d : nil_clean_decompositions(*r, x)) {
      EXPECT_EQ(r->add(d.idempotent, d.second), x);
      EXPECT_TRUE(is_valid(*r, d));
    }
    for (const auto& d : clean_decompositions(*r, x)) {
      EXPECT_EQ(r->add(d.idempotent, d.second), x);
      EXPECT_TRUE(is_unit(*r, d.second));
    }
  }
}

TEST_P(Properties, NilCleanIdealsAreClean) {
  const auto r = gen.ring(64);
  const auto i = gen.ideal(r);
  if (is_nil_clean_ideal(i)) {
    EXPECT_TRUE(is_clean_ideal(i)) << r->spec();
  }
  if (check_ideal(i, IdealProperty::Nil).holds) {
    EXPECT_TRUE(is_nil_clean_ideal(i)) << r->spec();
  }
}

TEST_P(Properties, LiftingProducesIdempotents) {
  const auto r = gen.ring(128);
  for (int k = 0; k < 20; ++k) {
    const Index a = gen.element(*r);
    if (!is_nilpotent(*r, r->sub(a, r->mul(a, a)))) continue;
    const Index e = lift_idempotent(*r, a);
    EXPECT_TRUE(is_idempotent(*r, e));
    EXPECT_TRUE(is_nilpotent(*r, r->sub(a, e)));
  }
}

TEST_P(Properties, JacobsonIsAnIdealOfQuasiRegularElements) {
  const auto r = gen.ring(128);
  const auto j = jacobson_radical(r);
  EXPECT_TRUE(oracle::is_ideal(*r, j.elements()));
  for (Index x : j.elements()) EXPECT_TRUE(is_unit(*r, r->sub(r->one_index(), x)));
}

INSTANTIATE_TEST_SUITE_P(Random, Properties, ::testing::Range(0, kCases));
