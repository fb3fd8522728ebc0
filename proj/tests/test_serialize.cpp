#include <gtest/gtest.h>

#include "nilclean/constructors.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/ideals.hpp"
#include "nilclean/serialize.hpp"

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

}  // namespace

TEST(Serialize, IdealShape) {
  const auto i = ideal_generated(make_zmod(6), {2});
  const auto j = to_json(i);
  EXPECT_EQ(j["ring"], "Z6");
  EXPECT_EQ(j["members"], Json::parse("[0,2,4]"));
  EXPECT_EQ(j["generators"], Json::parse("[2]"));
}

TEST(Serialize, IdealRoundTrip) {
  for (auto spec : {"Z12", "T2(Z4)", "Id(8,2)", "MZ(4,2,2)", "Q(Z12;[4])", "C(Z6;3)"}) {
    for (const auto& ideal : all_ideals(build_ring(spec))) {
      const auto back = ideal_from_json(to_json(ideal));
      EXPECT_EQ(back, ideal) << spec;
      EXPECT_EQ(back.ring()->spec(), spec);
    }
  }
}

TEST(Serialize, IdealRejectsNonIdeal) {
  const auto j = Json::parse(R"({"ring": "Z6", "members": [0, 2]})");
  EXPECT_EQ(kind_of([&] { ideal_from_json(j); }), ErrorKind::NotAnIdeal);
  EXPECT_EQ(kind_of([] { ideal_from_json(Json::parse(R"({"ring": "Zq", "members": [0]})")); }),
            ErrorKind::ParseError);
}

TEST(Serialize, DecompositionRoundTrip) {
  auto r = build_ring("T2(Z4)");
  for (Index x = 0; x < r->order(); x += 5) {
    for (const auto& d : nil_clean_decompositions(*r, x)) {
      EXPECT_EQ(decomposition_from_json(to_json(d)), d);
    }
    for (const auto& d : clean_decompositions(*r, x)) {
      const auto j = to_json(d);
      EXPECT_TRUE(j["nil_index"].is_null());
      EXPECT_EQ(j["kind"], "clean");
      EXPECT_EQ(decomposition_from_json(j), d);
    }
  }
}

TEST(Serialize, ReportRoundTrip) {
  TheoremReport r;
  r.id = "L1";
  r.paper_result = "every nil clean ideal is a clean ideal";
  r.instances_tested = 12;
  r.hypotheses_met = 7;
  r.verdict = Verdict::Counterexample;
  r.witness = Witness{"Z6", {0, 2, 4}, 2, "no decomposition"};
  r.notes = {"a note"};
  EXPECT_EQ(report_from_json(to_json(r)), r);
  r.witness->element.reset();
  r.millis = 1.5;
  r.notes.clear();
  EXPECT_EQ(report_from_json(to_json(r)), r);
  const auto j = to_json(r);
  for (auto key : {"id", "paper_result", "instances_tested", "hypotheses_met", "verdict", "millis"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Serialize, TableRoundTrip) {
  for (auto spec : {"Z6", "T2(Z2)", "MZ(2,2,2)"}) {
    auto r = build_ring(spec);
    auto back = table_ring_from_json(table_to_json(*r));
    ASSERT_EQ(back->order(), r->order());
    EXPECT_EQ(back->zero_index(), r->zero_index());
    EXPECT_EQ(back->one_index(), r->one_index());
    for (Index x = 0; x < r->order(); ++x) {
      for (Index y = 0; y < r->order(); ++y) {
        ASSERT_EQ(back->add(x, y), r->add(x, y));
        ASSERT_EQ(back->mul(x, y), r->mul(x, y));
      }
    }
  }
}

TEST(Serialize, MalformedTables) {
  for (auto text : {R"({"order": 2})", R"({"order": 2, "zero": 0, "one": 1, "add": [[0,1],[1]], "mul": [[0,0],[0,1]]})",
                    R"({"order": 2, "zero": 0, "one": 5, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]]})",
                    R"({"order": 2, "zero": 0, "one": 1, "add": [[0,1],[1,7]], "mul": [[0,0],[0,1]]})",
                    R"([1, 2])"}) {
    EXPECT_EQ(kind_of([&] { table_ring_from_json(Json::parse(text)); }), ErrorKind::BadParameter)
        << text;
  }
}

TEST(Serialize, DumpIsStable) {
  const auto j = Json::parse(R"({"b": [1, 2], "a": null})");
  EXPECT_EQ(dump(j), "{\n  \"a\": null,\n  \"b\": [\n    1,\n    2\n  ]\n}\n");
}
