#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horace/limits.hpp"
#include "horace/parse.hpp"

using namespace horace;

TEST_CASE("double point degenerating onto a line") {
  // I = (x, y-t)^2: one trace condition at order 2, two at order 1
  EngineInput in = make_engine_input(parse_ideal("(x,y-t)^2"), {2, 1});
  LimitResult r = run_plan_checked(in, {{YVar::Y, YVar::Y}, {2, 1}});
  CHECK(r.res0 == 3);
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[0].tr == 1);
  CHECK(r.levels[0].res == 2);
  CHECK(r.levels[0].deficiency == 0);
  CHECK(r.levels[1].tr == 2);
  CHECK(r.levels[1].res == 0);
  CHECK(r.levels[1].deficiency == 0);
  CHECK(r.final_res.colength() == 0);
}

TEST_CASE("plans are validated") {
  EngineInput in = make_engine_input(parse_ideal("(x,y-t)^2"), {2});
  TruncIdeal I = in.build();
  CHECK_THROWS_AS(iterate_plan(I, {{YVar::Y}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(iterate_plan(I, {{YVar::Y, YVar::Y}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(iterate_plan(I, {{YVar::Y}, {0}}), std::invalid_argument);
}

TEST_CASE("non-flat families are rejected") {
  EngineInput in = make_engine_input(parse_ideal("(t)"), {2});
  CHECK_THROWS_AS(iterate_plan(in.build(), {{YVar::Y}, {2}}), FlatnessError);
  // t-torsion hidden in a binomial generator
  EngineInput in2 = make_engine_input(parse_ideal("(x^2, ty)"), {2});
  CHECK_THROWS_AS(iterate_plan(in2.build(), {{YVar::Y}, {2}}), FlatnessError);
}

TEST_CASE("zero truncation order gives the whole ring") {
  EngineInput in = make_engine_input(parse_ideal("(x,y-t)^2"), {2});
  auto chain = hres_chain(in.build(), {YVar::Y}, {0});
  REQUIRE(chain.size() == 2);
  CHECK(chain[1].colength() == 0);
}

TEST_CASE("safe truncation order for a vertical translation") {
  // a fully vertical family loses one order per level
  EngineInput in = make_engine_input(parse_ideal("(x,y-t)^3"), {4});
  CHECK(max_safe_p_checked(in, {YVar::Y, YVar::Y}, {4}) == 3);
}

TEST_CASE("safe truncation order for the quartic family") {
  EngineInput in = make_engine_input(parse_ideal("(x+y+t, x^2)^4"), {8, 7});
  CHECK(max_safe_p_checked(in, {YVar::Y, YVar::Y, YVar::X}, {8, 7}) == 5);
}

TEST_CASE("deficiency ledger of the quartic family") {
  EngineInput in = make_engine_input(parse_ideal("(x+y+t, x^2)^4"), {8, 7, 5});
  // the three accounting methods must agree internally (the report throws
  // on any disagreement), and the safe plan has no deficiency
  DeficiencyReport ok = deficiency_checked(in, {{YVar::Y, YVar::Y, YVar::X},
                                                {8, 7, 5}});
  CHECK(ok.direct == 0);
  EngineInput in2 = make_engine_input(parse_ideal("(x+y+t, x^2)^4"), {8, 7, 6});
  DeficiencyReport bad = deficiency_checked(in2, {{YVar::Y, YVar::Y, YVar::X},
                                                  {8, 7, 6}});
  CHECK(bad.direct == 1);
}

TEST_CASE("trace value statistic") {
  EngineInput in = make_engine_input(parse_ideal("(x,y-t)^2"), {2});
  CHECK(val_of(in.build(), {YVar::Y}, {2}, 1) == 1);
}

TEST_CASE("empty plan returns the central fiber") {
  EngineInput in = make_engine_input(parse_ideal("(x,y-t)^2"), {2});
  LimitResult r = iterate_plan(in.build(), {{}, {}});
  CHECK(r.res0 == 3);
  CHECK(r.final_res.colength() == 3);
  CHECK(r.levels.empty());
}
