#include <gtest/gtest.h>

#include "nilclean/classify.hpp"
#include "nilclean/constructors.hpp"
#include "nilclean/kernels.hpp"
#include "oracles.hpp"

using namespace nilclean;

namespace {

const char* const kRings[] = {"Z2",   "Z12",      "Z64",       "Z4xZ3",   "T2(Z4)", "T3(Z2)",
                              "Id(8,4)", "MZ(4,2,2)", "Q(Z24;[8])", "C(Z12;4)", "Z97"};

void expect_same_scan(const kernels::AxiomScan& a, const kernels::AxiomScan& b) {
  EXPECT_EQ(a.triples, b.triples);
  for (std::size_t i = 0; i < kAxiomCount; ++i) {
    ASSERT_EQ(a.first[i].has_value(), b.first[i].has_value()) << i;
    if (!a.first[i]) continue;
    EXPECT_EQ(a.first[i]->x, b.first[i]->x);
    EXPECT_EQ(a.first[i]->y, b.first[i]->y);
    EXPECT_EQ(a.first[i]->z, b.first[i]->z);
  }
}

class ThreadLimit {
 public:
  explicit ThreadLimit(int n) { kernels::set_thread_limit(n); }
  ~ThreadLimit() { kernels::set_thread_limit(0); }
};

}  // namespace

TEST(Kernels, SerialAndParallelAgree) {
  for (int threads : {1, 2, 4}) {
    ThreadLimit limit(threads);
    for (auto spec : kRings) {
      auto r = build_ring(spec);
      EXPECT_EQ(kernels::serial::unit_flags(*r), kernels::parallel::unit_flags(*r)) << spec;
      EXPECT_EQ(kernels::serial::nil_indices(*r), kernels::parallel::nil_indices(*r)) << spec;
      EXPECT_EQ(kernels::serial::center_flags(*r), kernels::parallel::center_flags(*r)) << spec;
      const auto& u = units(*r);
      EXPECT_EQ(kernels::serial::jacobson_flags(*r, u), kernels::parallel::jacobson_flags(*r, u))
          << spec;

      const auto elems = ElementSet::all(r->order()).members();
      const auto idems = idempotents(*r).members();
      for (const ElementSet* second : {&nilpotents(*r), &units(*r)}) {
        for (bool commuting : {false, true}) {
          kernels::DecompositionQuery q{elems, idems, second, commuting};
          EXPECT_EQ(kernels::serial::decomposition_counts(*r, q),
                    kernels::parallel::decomposition_counts(*r, q))
              << spec;
        }
      }
      if (r->order() <= AxiomMode::kExhaustiveLimit) {
        expect_same_scan(kernels::serial::exhaustive_axioms(*r),
                         kernels::parallel::exhaustive_axioms(*r));
      }
    }
  }
}

TEST(Kernels, AgreeOnABrokenTable) {
  auto z6 = build_ring("Z6");
  std::vector<Index> add, mul;
  for (Index x = 0; x < 6; ++x) {
    for (Index y = 0; y < 6; ++y) {
      add.push_back(z6->add(x, y));
      mul.push_back(z6->mul(x, y));
    }
  }
  mul[4 * 6 + 5] = 3;
  auto bad = make_table_ring(6, add, mul, 0, 1);
  ThreadLimit limit(3);
  const auto s = kernels::serial::exhaustive_axioms(*bad);
  expect_same_scan(s, kernels::parallel::exhaustive_axioms(*bad));
  EXPECT_TRUE(s.first[static_cast<std::size_t>(Axiom::MulAssociative)].has_value());
}

TEST(Kernels, DecompositionCountsMatchOracle) {
  for (auto spec : kRings) {
    auto r = build_ring(spec);
    const auto elems = ElementSet::all(r->order()).members();
    const auto idems = idempotents(*r).members();
    const auto nil = oracle::nilpotent_flags(*r);
    kernels::DecompositionQuery q{elems, idems, &nilpotents(*r), false};
    const auto counts = kernels::parallel::decomposition_counts(*r, q);
    for (Index x = 0; x < r->order(); ++x) {
      EXPECT_EQ(counts[x], oracle::pairs(*r, x, nil).size()) << spec << " " << x;
    }
  }
}

TEST(Kernels, NilpotencyIndexMatchesNaiveIteration) {
  for (auto spec : kRings) {
    auto r = build_ring(spec);
    for (Index x = 0; x < r->order(); ++x) {
      EXPECT_EQ(kernels::nilpotency_index(*r, x), oracle::nil_index(*r, x).value_or(0))
          << spec << " " << x;
    }
  }
  for (Index n = 1; n <= 10; ++n) {
    EXPECT_EQ(kernels::nilpotency_index(*make_zmod(Index{1} << n), 2 % (Index{1} << n)), n);
  }
}

TEST(Kernels, ThreadLimitFromEnvironment) {
  ::setenv("NILCLEAN_THREADS", "2", 1);
  EXPECT_EQ(kernels::apply_thread_limit_from_env(), 2);
  ::setenv("NILCLEAN_THREADS", "zero", 1);
  EXPECT_EQ(kernels::apply_thread_limit_from_env(), 0);
  ::unsetenv("NILCLEAN_THREADS");
  EXPECT_EQ(kernels::apply_thread_limit_from_env(), 0);
  kernels::set_thread_limit(0);
}
