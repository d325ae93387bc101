#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horace/staircase.hpp"

using namespace horace;

TEST_CASE("lengths, heights and colength") {
  Staircase E = Staircase::parse("12,9,6,3");
  CHECK(E.height() == 4);
  CHECK(E.ell0() == 12);
  CHECK(E.colength() == 30);
  // column heights: number of stairs longer than the column index
  CHECK(E.h(0) == 4);
  CHECK(E.h(2) == 4);
  CHECK(E.h(3) == 3);
  CHECK(E.h(5) == 3);
  CHECK(E.h(6) == 2);
  CHECK(E.h(8) == 2);
  CHECK(E.h(9) == 1);
  CHECK(E.h(11) == 1);
  CHECK(E.h(12) == 0);
  CHECK(E.ell_hat(0) == 3);
  CHECK(E.ell_hat(3) == 3);  // top stair against the empty row above
  CHECK(E.ell_hat_min() == 3);
  CHECK(E.gentle());

  // empty staircase corner cases
  Staircase empty;
  CHECK(empty.colength() == 0);
  CHECK(empty.height() == 0);
  CHECK(empty.ell_hat_min() == Staircase::kInfinity);
}

TEST_CASE("non-increasing lengths are required") {
  CHECK_THROWS(Staircase::from_lengths({3, 4}));
  CHECK_THROWS(Staircase::from_lengths({3, 0, 1}));
  CHECK(Staircase::from_lengths({3, 3}).colength() == 6);
}

TEST_CASE("initial staircase of the n-point system") {
  Staircase E = Staircase::e1(36, 3);
  CHECK(E.lengths() == std::vector<long>{105, 70, 35});
  CHECK(E.colength() == 210);  // (36-1) * 3*(3+1)/2
  Staircase F = Staircase::e1(64, 4);
  CHECK(F.lengths() == std::vector<long>{252, 189, 126, 63});
  CHECK(F.colength() == 630);  // (64-1) * 4*(4+1)/2
}

TEST_CASE("gentleness is strict decrease of the stair lengths") {
  CHECK(Staircase::parse("2,1").gentle());
  CHECK(Staircase::parse("5,3,2").gentle());
  CHECK_FALSE(Staircase::parse("4,3,3").gentle());
  CHECK_FALSE(Staircase::parse("3,3").gentle());
}

TEST_CASE("translation tau and containment") {
  Staircase E = Staircase::parse("12,9,6,3");
  CHECK(E.tau(3).lengths() == std::vector<long>{9, 6, 3});
  CHECK(E.tau(12).lengths() == std::vector<long>{});
  CHECK(E.tau(5).lengths() == std::vector<long>{7, 4, 1});
  // shifting left enlarges the staircase as a subset of the quadrant
  CHECK(E.tau(3).contains(E));
  CHECK_FALSE(E.contains(E.tau(3)));
  CHECK(E.contains(E));
}

TEST_CASE("clamping the first differences keeps the top stair") {
  CHECK(Staircase::parse("12,9,6,3").tilde(3).lengths() ==
        std::vector<long>{3, 3, 3, 3});
  CHECK(Staircase::parse("40,30,20,10").tilde(3).lengths() ==
        std::vector<long>{31, 24, 17, 10});
  CHECK(Staircase::parse("5,1").tilde(2).lengths() == std::vector<long>{3, 1});
}

TEST_CASE("slice deletion and first-difference decrement agree") {
  Staircase E = Staircase::parse("12,9,6,3");
  // complement has columns of heights 4 (x3), 3 (x3), 2 (x3), 1 (x3)
  CHECK(E.can_delete_slice(2));
  CHECK(E.delete_slice(2).lengths() == std::vector<long>{11, 8, 6, 3});
  CHECK(E.delete_slice(2) == E.decrement_ell_hat(1));
  CHECK(E.delete_slice(4) == E.decrement_ell_hat(3));
  CHECK(E.delete_slice(4).lengths() == std::vector<long>{11, 8, 5, 2});
  CHECK_FALSE(Staircase::parse("3,3").can_delete_slice(1));  // no column of height 1
  CHECK_THROWS(Staircase::parse("3,3").delete_slice(1));
  // colength always drops by the height of the deleted slice
  CHECK(E.delete_slice(3).colength() == E.colength() - 3);
}

TEST_CASE("contact index and r-gentleness") {
  Staircase E = Staircase::parse("12,9,6,3");
  // ell_hat = (3,3,3,3): first index with ell_hat <= r
  CHECK(E.h_r(3) == 0);
  CHECK(E.h_r(2) == 4);  // never <= 2 below the end
  CHECK(E.r_gentle(3));
  Staircase F = Staircase::parse("10,4,3,2");
  // ell_hat = (6,1,1,2)
  CHECK(F.h_r(1) == 1);
  CHECK_FALSE(F.r_gentle(1));  // 1,1 then 2 increases past h_r
  Staircase G = Staircase::parse("10,4,3,1");
  // ell_hat = (6,1,2,1): still not 1-gentle
  CHECK_FALSE(G.r_gentle(1));
  Staircase H = Staircase::parse("10,4,3,2,1");
  // ell_hat = (6,1,1,1,1): non-increasing from h_r(1) = 1 on
  CHECK(H.r_gentle(1));
}

TEST_CASE("round trips") {
  Staircase E = Staircase::parse("7,5,2");
  CHECK(Staircase::parse(E.to_string()) == E);
  CHECK(Staircase::from_lengths(E.lengths()) == E);
}
