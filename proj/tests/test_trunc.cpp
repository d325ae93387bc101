#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "horace/trunc.hpp"

using namespace horace;

namespace {

IPoly mono(int a, int b, int c, u64 coeff = 1) {
  return {{Mono{a, b, c}, coeff}};
}

TruncIdeal make(const TruncRing& ring, const std::vector<IPoly>& gens) {
  return ideal_from_generators(ring, gens);
}

}  // namespace

TEST_CASE("window size and the zero ideal") {
  TruncRing ring(kDefaultPrime, 3, 2, coord_plain());
  TruncIdeal zero = make(ring, {});
  CHECK(zero.colength() == 12);  // 6 monomials in (u,v) times 2 powers of t
  CHECK(ring.in_window(Mono{2, 0, 1}));
  CHECK_FALSE(ring.in_window(Mono{2, 1, 0}));
  CHECK_FALSE(ring.in_window(Mono{0, 0, 2}));
}

TEST_CASE("user-coordinate rewriting") {
  // plain coordinates: v = y
  TruncRing plain(kDefaultPrime, 4, 2, coord_plain());
  UPoly f{{{1, 0, 0}, 1}, {{0, 1, 0}, 2}};  // x + 2y
  IPoly g = plain.to_internal(f);
  CHECK(g == IPoly{{Mono{1, 0, 0}, 1}, {Mono{0, 1, 0}, 2}});

  // v = x + y + t makes that linear form a single monomial
  TruncRing tw(kDefaultPrime, 4, 2, coord_xyt());
  UPoly xyt{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}};
  CHECK(tw.to_internal(xyt) == mono(0, 1, 0));
  // y = -u + v - t
  CHECK(tw.y_poly() == IPoly{{Mono{1, 0, 0}, kDefaultPrime - 1},
                             {Mono{0, 1, 0}, 1},
                             {Mono{0, 0, 1}, kDefaultPrime - 1}});
  CHECK(tw.x_poly() == mono(1, 0, 0));
}

TEST_CASE("principal monomial ideals and colon by a monomial") {
  TruncRing ring(kDefaultPrime, 5, 3, coord_plain());
  TruncIdeal u2 = make(ring, {mono(2, 0, 0)});
  TruncIdeal u1 = make(ring, {mono(1, 0, 0)});
  CHECK(u1.colength() == 15);  // a = 0 survivors: 5 v-powers times 3 t-powers
  // the colon picks up the top-degree slab (its u-multiples leave the
  // window), so the exact answer is (u) plus the degree-4 monomials
  CHECK(ideal_colon_mono(u2, Mono{1, 0, 0}) ==
        make(ring, {mono(1, 0, 0), mono(0, 4, 0)}));
  CHECK(ideal_colon_mono(u2, Mono{0, 0, 0}) == u2);
  CHECK(u1.contains(u2));
  CHECK_FALSE(u2.contains(u1));
}

TEST_CASE("colon by a polynomial") {
  TruncRing ring(kDefaultPrime, 4, 1, coord_plain());
  TruncIdeal m2 = make(ring, {mono(2, 0, 0), mono(1, 1, 0), mono(0, 2, 0)});
  TruncIdeal m1 = make(ring, {mono(1, 0, 0), mono(0, 1, 0)});
  IPoly upv{{Mono{1, 0, 0}, 1}, {Mono{0, 1, 0}, 1}};  // u + v
  CHECK(ideal_colon(m2, upv) == m1);
  // colon by a unit is the identity
  CHECK(ideal_colon(m2, mono(0, 0, 0)) == m2);
}

TEST_CASE("image at t = 0") {
  TruncRing ring(kDefaultPrime, 3, 2, coord_plain());
  // (t): every element vanishes at t = 0
  XYIdeal z = set_t_zero(make(ring, {mono(0, 0, 1)}));
  CHECK(z.colength() == 6);
  CHECK(z.space().rank() == 0);

  // (u^2, v + ut): the t = 0 image is (u^2, v)
  TruncIdeal I = make(ring, {mono(2, 0, 0),
                             IPoly{{Mono{0, 1, 0}, 1}, {Mono{1, 0, 1}, 1}}});
  XYIdeal z2 = set_t_zero(I);
  CHECK(z2.colength() == 2);  // classes of 1 and u
  CHECK(z2 == xy_staircase_ideal(z2.frame(), {2}));
}

TEST_CASE("staircase ideals in a shared two-variable frame") {
  TruncRing ring(kDefaultPrime, 4, 1, coord_plain());
  TruncIdeal I = make(ring, {mono(2, 0, 0), mono(0, 1, 0)});
  XYIdeal z = set_t_zero(I);
  CHECK(z == xy_staircase_ideal(z.frame(), {2}));
  XYIdeal bigger = xy_staircase_ideal(z.frame(), {1});
  CHECK_FALSE(z == bigger);
  CHECK(bigger.contains(z));
  // staircases that do not contain the frame's monomial backbone are refused
  CHECK_THROWS(xy_staircase_ideal(z.frame(), {1, 1}));
}

TEST_CASE("order filtration of a two-variable ideal") {
  TruncRing ring(kDefaultPrime, 4, 1, coord_plain());
  TruncIdeal m2 = make(ring, {mono(2, 0, 0), mono(1, 1, 0), mono(0, 2, 0)});
  XYIdeal z = set_t_zero(m2);
  CHECK(z.inside_max_power(2));
  CHECK_FALSE(z.inside_max_power(3));
  XYIdeal zero = set_t_zero(make(ring, {mono(0, 0, 0)}));
  CHECK(zero.inside_max_power(0));
}

TEST_CASE("canonical spans agree across coordinate choices") {
  // the ideal (y, x^2) expressed in two working coordinate systems
  UPoly y{{{0, 1, 0}, 1}};
  UPoly x2{{{2, 0, 0}, 1}};
  TruncRing a(kDefaultPrime, 4, 2, coord_plain());
  TruncRing b(kDefaultPrime, 4, 2, coord_xyt());
  TruncIdeal Ia = make(a, {a.to_internal(y), a.to_internal(x2)});
  TruncIdeal Ib = make(b, {b.to_internal(y), b.to_internal(x2)});
  CHECK(Ia.colength() == Ib.colength());
  CHECK(xy_canonical(set_t_zero(Ia)) == xy_canonical(set_t_zero(Ib)));
}

TEST_CASE("dominant parts pick the lowest t-order of each basis element") {
  TruncRing ring(kDefaultPrime, 4, 3, coord_xyt());
  UPoly f{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}};  // x + y + t = v
  // u t + v^2 has dominant part v^2
  TruncIdeal I = make(ring, {IPoly{{Mono{1, 0, 1}, 1}, {Mono{0, 2, 0}, 1}}});
  TruncIdeal D = dominant_ideal(I, f);
  CHECK(D.contains_poly(mono(0, 2, 0)));
  CHECK_FALSE(I.contains_poly(mono(0, 2, 0)));
}

TEST_CASE("transverse-parameter independence of staircase ideals") {
  // generators f^{e1} v^{e2} over the stair corners; for strictly decreasing
  // stair lengths the ideal is the same for f = u and f = u + v.
  auto fam = [](const TruncRing& ring, const std::vector<long>& len, bool shear) {
    std::vector<IPoly> gens;
    auto ell = [&](long i) { return i < (long)len.size() ? len[i] : 0L; };
    for (long i = 0; i <= (long)len.size(); ++i) {
      long e1 = ell(i);
      IPoly g;
      mpz_class bin = 1;
      for (long k = 0; k <= (shear ? e1 : 0); ++k) {
        g[Mono{(int)(e1 - k), (int)(k + i), 0}] =
            mpz_class(bin % (long)kDefaultPrime).get_ui();
        bin = bin * (e1 - k) / (k + 1);
      }
      gens.push_back(g);
    }
    return ideal_from_generators(ring, gens);
  };
  for (std::vector<long> len : {std::vector<long>{2, 1},
                                std::vector<long>{4, 2, 1},
                                std::vector<long>{5, 3, 2}}) {
    TruncRing ring(kDefaultPrime, (int)len[0] + 2, 1, coord_plain());
    CHECK(fam(ring, len, false) == fam(ring, len, true));
  }
  // with a repeated stair length the two ideals differ
  TruncRing ring(kDefaultPrime, 6, 1, coord_plain());
  std::vector<long> rep{4, 3, 3};
  CHECK_FALSE(fam(ring, rep, false) == fam(ring, rep, true));
}

TEST_CASE("row spaces reduce and compare") {
  RowSpace s(kDefaultPrime, 3);
  CHECK(s.insert({0, 1, 2}));
  CHECK(s.insert({1, 0, 0}));
  CHECK_FALSE(s.insert({1, 1, 2}));  // dependent
  CHECK(s.rank() == 2);
  CHECK(s.contains({2, 3, 6}));
  CHECK_FALSE(s.contains({0, 0, 1}));
  CHECK(s.free_coords() == std::vector<int>{2});
}
