#include <gtest/gtest.h>

#include <algorithm>

#include "nilclean/constructors.hpp"
#include "nilclean/theorems.hpp"
#include "oracles.hpp"

using namespace nilclean;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InternalInvariantViolation;
}

CheckConfig family_of(std::vector<std::string> specs) {
  auto cfg = CheckConfig::defaults();
  cfg.family = std::move(specs);
  return cfg;
}

bool nil_clean_by_pairs(const FiniteRing& r, const std::vector<Index>& members) {
  const auto nil = oracle::nilpotent_flags(r);
  return std::all_of(members.begin(), members.end(),
                     [&](Index x) { return !oracle::pairs(r, x, nil).empty(); });
}

}  // namespace

TEST(Theorems, RegistryHasTwentySevenChecksInIdOrder) {
  const auto& checks = registered_checks();
  ASSERT_EQ(checks.size(), 27u);
  EXPECT_TRUE(std::is_sorted(checks.begin(), checks.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (auto id : {"TTT1", "mmm", "main", "complete_set", "corner", "lift_mod_nil", "fin_prod",
                  "TT1", "RM1", "morita_zero_iff", "tri_cor", "strong_iff"}) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& c) { return c.id == id; });
    ASSERT_NE(it, checks.end()) << id;
    EXPECT_TRUE(it->iff) << id;
  }
}

TEST(Theorems, DefaultFamilyHasNoCounterexamples) {
  const auto reports = run_all(CheckConfig::defaults());
  ASSERT_EQ(reports.size(), 27u);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].id, registered_checks()[i].id);
    EXPECT_EQ(reports[i].verdict, Verdict::Verified)
        << reports[i].id << (reports[i].witness ? ": " + reports[i].witness->reason : "");
    EXPECT_GT(reports[i].hypotheses_met, 0u) << reports[i].id;
    EXPECT_LE(reports[i].hypotheses_met, reports[i].instances_tested) << reports[i].id;
    EXPECT_FALSE(reports[i].millis.has_value());
  }
}

TEST(Theorems, L1CountsMatchOracle) {
  const auto report = run_check("L1", family_of({"Z6", "Z12", "Z8"}));
  std::size_t ideals = 0, nil_clean = 0;
  for (Index n : {6u, 12u, 8u}) {
    auto r = make_zmod(n);
    for (const auto& members : oracle::divisor_lattice(n)) {
      ++ideals;
      nil_clean += nil_clean_by_pairs(*r, members);
    }
  }
  EXPECT_EQ(report.instances_tested, ideals);
  EXPECT_EQ(report.hypotheses_met, nil_clean);
  EXPECT_EQ(report.verdict, Verdict::Verified);
  ASSERT_FALSE(report.notes.empty());
  EXPECT_NE(report.notes.front().find("{0,2,4}"), std::string::npos);
}

TEST(Theorems, CommutativeOnlyChecksAreVacuousOnTriangularRings) {
  const auto report = run_check("mmm", family_of({"T2(Z2)"}));
  EXPECT_EQ(report.verdict, Verdict::Vacuous);
  EXPECT_EQ(report.hypotheses_met, 0u);
}

TEST(Theorems, TriangularTransferOnSmallBases) {
  const auto report = run_check("TT1", family_of({"T2(Z2)", "T2(Z4)", "T3(Z2)", "Z6"}));
  EXPECT_EQ(report.verdict, Verdict::Verified);
  // One instance per ideal of each base ring: Z2, Z4, Z2.
  EXPECT_EQ(report.instances_tested, 2u + 3u + 2u);
}

TEST(Theorems, EmptyFamilyIsVacuousEverywhere) {
  for (const auto& r : run_all(family_of({}))) {
    EXPECT_EQ(r.verdict, Verdict::Vacuous) << r.id;
    EXPECT_EQ(r.hypotheses_met, 0u) << r.id;
  }
}

TEST(Theorems, UnknownIdsAreRejected) {
  EXPECT_EQ(kind_of([] { run_check("T99", CheckConfig::defaults()); }), ErrorKind::UnknownCheck);
  EXPECT_EQ(kind_of([] { run_checks({"L1", "T99"}, CheckConfig::defaults()); }),
            ErrorKind::UnknownCheck);
}

TEST(Theorems, CorruptedRingFailsTheAxiomGate) {
  auto z4 = make_zmod(4);
  std::vector<Index> add, mul;
  for (Index x = 0; x < 4; ++x) {
    for (Index y = 0; y < 4; ++y) {
      add.push_back(z4->add(x, y));
      mul.push_back(z4->mul(x, y));
    }
  }
  mul[2 * 4 + 3] = 1;
  auto cfg = family_of({"Z2"});
  cfg.extra_rings.push_back(make_table_ring(4, add, mul, 0, 1));
  EXPECT_EQ(kind_of([&] { run_all(cfg); }), ErrorKind::AxiomViolation);
  EXPECT_EQ(kind_of([&] { run_check("L1", cfg); }), ErrorKind::AxiomViolation);
}

TEST(Theorems, ImportedTableRingsJoinTheFamily) {
  auto z6 = make_zmod(6);
  std::vector<Index> add, mul;
  for (Index x = 0; x < 6; ++x) {
    for (Index y = 0; y < 6; ++y) {
      add.push_back(z6->add(x, y));
      mul.push_back(z6->mul(x, y));
    }
  }
  auto cfg = family_of({});
  cfg.extra_rings.push_back(make_table_ring(6, add, mul, 0, 1));
  const auto report = run_check("L1", cfg);
  EXPECT_EQ(report.instances_tested, 4u);
  EXPECT_EQ(report.verdict, Verdict::Verified);
}

TEST(Theorems, TimingIsOptIn) {
  auto cfg = family_of({"Z4"});
  cfg.timing = true;
  const auto report = run_check("PPP1", cfg);
  ASSERT_TRUE(report.millis.has_value());
  EXPECT_GE(*report.millis, 0.0);
}

TEST(Theorems, ExplorationCoversTriangularRings) {
  const auto reports = explore_noncommutative(CheckConfig::defaults());
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) {
    EXPECT_GT(r.instances_tested, 0u);
    EXPECT_NE(r.verdict, Verdict::Error) << r.id;
    ASSERT_FALSE(r.notes.empty());
  }
}

TEST(Theorems, NilIndexGrowth) {
  const auto report = run_check("nilindex_growth", family_of({"Z2"}));
  EXPECT_EQ(report.verdict, Verdict::Verified);
  EXPECT_EQ(report.instances_tested, 14u);
}

TEST(Theorems, VerdictNamesRoundTrip) {
  for (auto v : {Verdict::Verified, Verdict::Counterexample, Verdict::Vacuous, Verdict::Error}) {
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  }
}
