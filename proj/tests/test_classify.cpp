#include <gtest/gtest.h>

#include "nilclean/classify.hpp"
#include "nilclean/constructors.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/ideals.hpp"
#include "oracles.hpp"

using namespace nilclean;

namespace {

const std::vector<std::string> kRings = {"Z2",      "Z4",       "Z6",        "Z8",     "Z12",
                                         "Z27",     "Z4xZ3",    "Z2xZ2xZ2",  "T2(Z2)", "T2(Z3)",
                                         "T3(Z2)",  "Id(4,2)",  "Id(8,4)",   "MZ(4,2,2)",
                                         "Q(Z12;[4])", "C(Z12;4)"};

std::vector<Index> flagged(const std::vector<bool>& flags) {
  std::vector<Index> out;
  for (Index i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST(Classify, UnitExamples) {
  EXPECT_EQ(units(*build_ring("Z6")).members(), (std::vector<Index>{1, 5}));
  EXPECT_EQ(units(*build_ring("Z4")).members(), (std::vector<Index>{1, 3}));
  EXPECT_TRUE(is_unit(*build_ring("Z7"), 3));
  EXPECT_FALSE(is_unit(*build_ring("Z8"), 2));
}

TEST(Classify, NilpotentExamples) {
  auto z8 = build_ring("Z8");
  EXPECT_EQ(is_nilpotent(*z8, 2), std::optional<Index>{3});
  EXPECT_EQ(is_nilpotent(*z8, 4), std::optional<Index>{2});
  EXPECT_EQ(is_nilpotent(*z8, 0), std::optional<Index>{1});
  EXPECT_EQ(is_nilpotent(*z8, 3), std::nullopt);
  EXPECT_EQ(is_nilpotent(*z8, z8->elem(6)), std::optional<Index>{3});
}

TEST(Classify, MatchesOracleOnEveryTestRing) {
  for (const auto& spec : kRings) {
    auto r = build_ring(spec);
    EXPECT_EQ(units(*r).members(), flagged(oracle::unit_flags(*r))) << spec;
    EXPECT_EQ(idempotents(*r).members(), flagged(oracle::idempotent_flags(*r))) << spec;
    EXPECT_EQ(nilpotents(*r).members(), flagged(oracle::nilpotent_flags(*r))) << spec;
    for (Index x = 0; x < r->order(); ++x) {
      EXPECT_EQ(is_nilpotent(*r, x), oracle::nil_index(*r, x)) << spec << " " << x;
      EXPECT_EQ(nil_indices(*r)[x], oracle::nil_index(*r, x).value_or(0)) << spec << " " << x;
    }
  }
}

TEST(Classify, CenterMatchesPairScan) {
  for (const auto& spec : kRings) {
    auto r = build_ring(spec);
    std::vector<Index> expected;
    for (Index x = 0; x < r->order(); ++x) {
      bool central = true;
      for (Index y = 0; y < r->order() && central; ++y) central = r->mul(x, y) == r->mul(y, x);
      if (central) expected.push_back(x);
    }
    EXPECT_EQ(center(*r).members(), expected) << spec;
  }
}

TEST(Classify, JacobsonExamples) {
  EXPECT_EQ(jacobson_radical(build_ring("Z12")).elements(), (std::vector<Index>{0, 6}));
  EXPECT_EQ(jacobson_radical(build_ring("Z6")).elements(), (std::vector<Index>{0}));
  EXPECT_EQ(jacobson_radical(build_ring("Z8")).elements(), (std::vector<Index>{0, 2, 4, 6}));
  // J(T2(Z2)) is the strictly upper triangular part.
  auto t = build_ring("T2(Z2)");
  const auto& s = dynamic_cast<const TriangularStructure&>(t->structure());
  EXPECT_EQ(jacobson_radical(t).elements(),
            (std::vector<Index>{0, s.encode(std::vector<Index>{0, 1, 0})}));
}

TEST(Classify, JacobsonOfZnIsTheRadicalMultiples) {
  for (Index n = 2; n <= 72; ++n) {
    auto r = make_zmod(n);
    EXPECT_EQ(jacobson_set(*r).members(), oracle::radical_multiples(n)) << n;
    EXPECT_EQ(nilpotents(*r).members(), oracle::radical_multiples(n)) << n;
  }
}

TEST(Classify, JacobsonIsTheLargestQuasiRegularIdeal) {
  // Oracle: J is the intersection of the maximal ideals for commutative rings,
  // and the set of x with 1 - r x s a unit for all r, s in general.
  for (const auto& spec : kRings) {
    auto r = build_ring(spec);
    const auto unit = oracle::unit_flags(*r);
    std::vector<Index> expected;
    for (Index x = 0; x < r->order(); ++x) {
      bool ok = true;
      for (Index a = 0; a < r->order() && ok; ++a) {
        ok = unit[r->sub(r->one_index(), r->mul(a, x))];
      }
      if (ok) expected.push_back(x);
    }
    EXPECT_EQ(jacobson_set(*r).members(), expected) << spec;
    EXPECT_TRUE(oracle::is_ideal(*r, expected)) << spec;
  }
}

TEST(Classify, BooleanRings) {
  EXPECT_TRUE(is_boolean_ring(*build_ring("Z2")));
  EXPECT_TRUE(is_boolean_ring(*build_ring("Z2xZ2xZ2")));
  EXPECT_FALSE(is_boolean_ring(*build_ring("Z4")));
  EXPECT_FALSE(is_boolean_ring(*build_ring("Z6")));
  EXPECT_TRUE(is_boolean_ideal(ideal_generated(build_ring("Z6"), {3})));
  EXPECT_FALSE(is_boolean_ideal(ideal_generated(build_ring("Z6"), {2})));
}

TEST(Classify, CompleteOrthogonalSets) {
  const auto z6 = complete_orthogonal_central_sets(*build_ring("Z6"));
  EXPECT_EQ(z6, (std::vector<std::vector<Index>>{{1}, {3, 4}}));
  EXPECT_EQ(complete_orthogonal_central_sets(*build_ring("Z4")),
            (std::vector<std::vector<Index>>{{1}}));
  const auto boolean8 = complete_orthogonal_central_sets(*build_ring("Z2xZ2xZ2"));
  // One singleton, three pairs, one triple.
  EXPECT_EQ(boolean8.size(), 5u);
}

TEST(Classify, CompleteSetsSatisfyTheDefinition) {
  for (const auto& spec : kRings) {
    auto r = build_ring(spec);
    for (const auto& set : complete_orthogonal_central_sets(*r)) {
      Index sum = r->zero_index();
      for (std::size_t i = 0; i < set.size(); ++i) {
        EXPECT_NE(set[i], r->zero_index());
        EXPECT_EQ(r->mul(set[i], set[i]), set[i]);
        EXPECT_TRUE(is_central(*r, set[i]));
        for (std::size_t j = 0; j < set.size(); ++j) {
          if (i != j) {
            EXPECT_EQ(r->mul(set[i], set[j]), r->zero_index()) << spec;
          }
        }
        sum = r->add(sum, set[i]);
      }
      EXPECT_EQ(sum, r->one_index()) << spec;
    }
  }
}

TEST(Classify, MemoMatchesFreshComputation) {
  for (const auto& spec : kRings) {
    auto r = build_ring(spec);
    EXPECT_EQ(units(*r), fresh::units(*r)) << spec;
    EXPECT_EQ(idempotents(*r), fresh::idempotents(*r)) << spec;
    EXPECT_EQ(nilpotents(*r), fresh::nilpotents(*r)) << spec;
    EXPECT_EQ(center(*r), fresh::center(*r)) << spec;
    EXPECT_EQ(jacobson_set(*r), fresh::jacobson(*r)) << spec;
    // A second call returns the same cached object.
    EXPECT_EQ(&units(*r), &units(*r));
  }
}

TEST(Classify, NilCleanRings) {
  EXPECT_TRUE(is_nil_clean_ring(build_ring("Z2")));
  EXPECT_TRUE(is_nil_clean_ring(build_ring("Z8")));
  EXPECT_TRUE(is_nil_clean_ring(build_ring("T2(Z2)")));
  EXPECT_FALSE(is_nil_clean_ring(build_ring("Z3")));
  EXPECT_FALSE(is_nil_clean_ring(build_ring("Z6")));
  EXPECT_FALSE(is_nil_clean_ring(build_ring("Z9")));
}
