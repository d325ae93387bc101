#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horace/pipeline.hpp"

using namespace horace;

namespace {
bool all_claims(const StepCertificate& c) {
  return c.colength_identity && c.sandwich && c.length_drop &&
         c.min_step_drop && c.traces_increasing && c.next_consistent &&
         (!c.top_stair_guard || c.top_stair);
}
}  // namespace

TEST_CASE("consistency of system types") {
  CHECK(consistent({3, Staircase::e1(36, 3), 1}));
  CHECK(consistent({16, Staircase::parse("55,25"), 8}));
  // c too small to absorb the contact conditions
  CHECK_FALSE(consistent({1, Staircase::parse("12,9,6,3"), 1}));
}

TEST_CASE("first elimination step of the 36-point chain") {
  StepCertificate c = step({3, Staircase::e1(36, 3), 1});
  CHECK(c.kind == StepKind::Step);
  CHECK(c.mu == 3);
  CHECK(c.tr == std::vector<long>{1, 2, 3});
  CHECK(c.after.c == 6);
  CHECK(c.after.r == 2);
  CHECK(c.after.E.lengths() == std::vector<long>{99, 65, 31});
  CHECK(all_claims(c));
  // every condition is accounted for
  CHECK(Staircase::e1(36, 3).colength() ==
        c.after.E.colength() + (1 + 2 + 3) + 3 * 3);
}

TEST_CASE("a step below the decision gate still certifies") {
  StepCertificate c = step({2, Staircase::e1(16, 2), 1});
  CHECK(c.mu == 2);
  CHECK(c.after.c == 4);
  CHECK(c.after.E.lengths() == std::vector<long>{26, 12});
  CHECK(c.after.E.colength() == 38);
  CHECK(all_claims(c));
}

TEST_CASE("a trivial step keeps the system and raises the contact order") {
  StepCertificate c = step({4, Staircase::parse("20,10"), 1});
  CHECK(c.kind == StepKind::TrivStep);
  CHECK(c.mu == 0);
  CHECK(c.after.c == 4);
  CHECK(c.after.E == Staircase::parse("20,10"));
  CHECK(c.after.r == 2);
}

TEST_CASE("top stair drop needs the largest trace at the height") {
  // mu = 3 with traces (1,2,3) below the height 4: the top row drops by
  // mu*r = 15 rather than mu*r + 1, so the extra-drop claim must not fire
  StepCertificate c = step({20, Staircase::parse("196,137,78,19"), 5});
  CHECK(c.mu == 3);
  CHECK(c.after.E.lengths() == std::vector<long>{178, 120, 62, 4});
  CHECK_FALSE(c.top_stair_guard);
  CHECK(all_claims(c));
}

TEST_CASE("height-two and k-fold transitions") {
  StepCertificate a = height2_step(8, Staircase::parse("20,5"), 4);
  CHECK(a.kind == StepKind::Height2);
  CHECK(a.after.c == 9);
  CHECK(a.after.E.lengths() == std::vector<long>{15, 1});

  StepCertificate b = height2_step(8, Staircase::parse("20,9"), 4);
  CHECK(b.after.c == 10);
  CHECK(b.after.E.lengths() == std::vector<long>{10});

  StepCertificate k = kstep(6, Staircase::parse("40,30"), 3, 3);
  CHECK(k.kind == StepKind::KStep);
  CHECK(k.after.c == 10);
  CHECK(k.after.E.lengths() == std::vector<long>{22, 14});
}

TEST_CASE("endgame predicates") {
  CHECK(bottom_predicate(10, Staircase::parse("12,5")));
  CHECK(regheight2_predicate(16, Staircase::parse("55,25")));
  CHECK_FALSE(regheight2_predicate(2, Staircase::parse("3,1")));
  CHECK(goesto2_check(36, 3, 5));
}

TEST_CASE("unloaded classes stay below the traces") {
  UnloadingReport r = unloading_check(Staircase::e1(36, 3), 1, 3);
  CHECK(r.all_ok);
  CHECK(r.mu == 3);
  CHECK(!r.rows.empty());
  for (const auto& row : r.rows) CHECK(row.fe < row.trace);
}

TEST_CASE("mu bookkeeping across contact orders") {
  for (const auto& claim : rmin_checks(36, 3, 4)) {
    CAPTURE(claim.name);
    CAPTURE(claim.detail);
    if (claim.applicable) CHECK(claim.pass);
  }
  for (const auto& claim : rmin_checks(16, 2, 2)) {
    CAPTURE(claim.name);
    CAPTURE(claim.detail);
    if (claim.applicable) CHECK(claim.pass);
  }
}

TEST_CASE("full decision for 36 triple points") {
  Verdict v = decide_regular(36, 3);
  CHECK(v.status == VerdictStatus::Regular);
  CHECK(v.final_type.c == 16);
  CHECK(v.final_type.E.lengths() == std::vector<long>{55, 25});
  CHECK(v.final_type.r == 8);
  CHECK(v.regheight2);
  for (const auto& c : v.chain)
    if (c.kind == StepKind::Step) CHECK(all_claims(c));
}

TEST_CASE("inputs outside the decision gate are rejected") {
  Verdict small = decide_regular(16, 2);
  CHECK(small.status == VerdictStatus::HypothesisFailure);
  Verdict tight = decide_regular(35, 3);
  CHECK(tight.status == VerdictStatus::HypothesisFailure);
}
