#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "horace/field.hpp"

namespace horace {

// Working coordinates of the truncated ring are (u, v, t) with u = x and
// v a unit-linear substitute chosen so that the ideals of interest have a
// large monomial part.  The original variable y is recovered as
//   y = alpha*u + beta*v + gamma*t,  beta != 0.
struct Coord {
  i64 alpha = 0, beta = 1, gamma = 0;
  bool operator==(const Coord& o) const {
    return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
  }
};

inline Coord coord_plain() { return {0, 1, 0}; }        // v = y
inline Coord coord_xyt() { return {-1, 1, -1}; }        // v = x + y + t
inline Coord coord_y_minus_t() { return {0, 1, 1}; }    // v = y - t
inline Coord coord_y_plus_t() { return {0, 1, -1} ; }   // v = y + t

struct Mono {
  int a = 0, b = 0, c = 0;  // u^a v^b t^c
  bool operator==(const Mono& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Fixed total order on monomials: total degree in (u, v), then v-exponent,
// then t-exponent.
struct MonoLess {
  bool operator()(const Mono& x, const Mono& y) const {
    if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
};

// Sparse polynomial in the working coordinates, coefficients in F_p.
using IPoly = std::map<Mono, u64, MonoLess>;

// Sparse polynomial in the user variables (x, y, t), integer coefficients.
using UPoly = std::map<std::array<int, 3>, i64>;

UPoly upoly_mul(const UPoly& f, const UPoly& g);
UPoly upoly_pow(const UPoly& f, int e);
UPoly upoly_var(int which);  // 0 -> x, 1 -> y, 2 -> t

class TruncRing {
 public:
  TruncRing(u64 p, int nxy, int pt, Coord coord);

  u64 p() const { return p_; }
  int nxy() const { return nxy_; }
  int pt() const { return pt_; }
  const Coord& coord() const { return coord_; }

  bool in_window(const Mono& m) const {
    return m.a + m.b < nxy_ && m.c < pt_;
  }

  // Rewrite a user polynomial in working coordinates (monomials outside the
  // window are dropped; they lie in the truncation ideal).
  IPoly to_internal(const UPoly& f) const;
  // y and x as internal polynomials
  IPoly y_poly() const;
  IPoly x_poly() const;

  bool operator==(const TruncRing& o) const {
    return p_ == o.p_ && nxy_ == o.nxy_ && pt_ == o.pt_ && coord_ == o.coord_;
  }

 private:
  u64 p_;
  int nxy_, pt_;
  Coord coord_;
};

// Monomial ideal in (u, v, t), minimal generators kept as an antichain.
// Window truncation monomials are implicit members.
class MonoIdeal {
 public:
  void add_gen(const Mono& g);
  bool contains(const Mono& m, int nxy, int pt) const;
  const std::vector<Mono>& gens() const { return gens_; }
  bool operator==(const MonoIdeal& o) const;

 private:
  std::vector<Mono> gens_;
};

// Reduced row echelon subspace of F_p^dim.
class RowSpace {
 public:
  RowSpace() = default;
  RowSpace(u64 p, int dim) : p_(p), dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  u64 prime() const { return p_; }

  void reduce(std::vector<u64>& v) const;
  bool insert(std::vector<u64> v);  // true if the span grew
  bool contains(std::vector<u64> v) const;
  bool contains_space(const RowSpace& other) const;
  const std::vector<std::vector<u64>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<int> free_coords() const;  // non-pivot coordinates

  bool operator==(const RowSpace& o) const {
    return pivots_ == o.pivots_ && rows_ == o.rows_;
  }

 private:
  u64 p_ = kDefaultPrime;
  int dim_ = 0;
  std::vector<int> pivots_;                 // strictly increasing
  std::vector<std::vector<u64>> rows_;      // rows_[k] has pivot pivots_[k]
};

// Shared context for all ideals compared within one computation: the ring,
// the monomial backbone, and its standard monomials (the complement of the
// backbone inside the window).
struct Frame {
  TruncRing ring;
  MonoIdeal backbone;
  std::vector<Mono> smons;                    // sorted by MonoLess
  std::map<Mono, int, MonoLess> sindex;

  int dim() const { return static_cast<int>(smons.size()); }
  int index_of(const Mono& m) const {
    auto it = sindex.find(m);
    return it == sindex.end() ? -1 : it->second;
  }
};

using FramePtr = std::shared_ptr<const Frame>;

FramePtr make_frame(const TruncRing& ring, const std::vector<Mono>& mono_gens);

// Ideal of the truncated ring containing its frame's backbone:
// I = backbone + span(V), with V a subspace of the standard monomial span.
class TruncIdeal {
 public:
  TruncIdeal() = default;
  TruncIdeal(FramePtr f, RowSpace v) : frame_(std::move(f)), v_(std::move(v)) {}

  const FramePtr& frame() const { return frame_; }
  const RowSpace& space() const { return v_; }
  long colength() const { return frame_->dim() - v_.rank(); }

  bool contains_poly(const IPoly& g) const;
  bool contains(const TruncIdeal& other) const;  // works across frames
  bool operator==(const TruncIdeal& o) const;

 private:
  FramePtr frame_;
  RowSpace v_;
};

// Two-variable counterpart at t = 0, coordinates (u, vbar).
struct XMono {
  int a = 0, b = 0;
  bool operator==(const XMono& o) const { return a == o.a && b == o.b; }
};
struct XMonoLess {
  bool operator()(const XMono& x, const XMono& y) const {
    if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
    return x.b < y.b;
  }
};

struct XYFrame {
  u64 p;
  int nxy;
  Coord coord;                     // y = alpha*u + beta*vbar at t = 0
  std::vector<XMono> gens;         // monomial backbone, antichain
  std::vector<XMono> smons;
  std::map<XMono, int, XMonoLess> sindex;
  int dim() const { return static_cast<int>(smons.size()); }
  int index_of(const XMono& m) const {
    auto it = sindex.find(m);
    return it == sindex.end() ? -1 : it->second;
  }
  bool mono_in(const XMono& m) const;
};

using XYFramePtr = std::shared_ptr<const XYFrame>;

class XYIdeal {
 public:
  XYIdeal() = default;
  XYIdeal(XYFramePtr f, RowSpace v) : frame_(std::move(f)), v_(std::move(v)) {}
  const XYFramePtr& frame() const { return frame_; }
  const RowSpace& space() const { return v_; }
  long colength() const { return frame_->dim() - v_.rank(); }
  bool contains(const XYIdeal& other) const;
  bool operator==(const XYIdeal& o) const;
  // True when every element has (x, y)-order >= k.
  bool inside_max_power(int k) const;

 private:
  XYFramePtr frame_;
  RowSpace v_;
};

// ---- operations ----

// Build an ideal from generators; single-term generators seed the backbone.
TruncIdeal ideal_from_generators(const TruncRing& ring,
                                 const std::vector<IPoly>& gens);

// I + (g), same frame.
TruncIdeal ideal_add_poly(const TruncIdeal& I, const IPoly& g);

// Sum of ideals sharing a frame.
TruncIdeal ideal_sum(const TruncIdeal& a, const TruncIdeal& b);

// Colon ideal (I : g), exact in the truncated ring.
TruncIdeal ideal_colon(const TruncIdeal& I, const IPoly& g);
TruncIdeal ideal_colon_mono(const TruncIdeal& I, const Mono& g);

// Image in the two-variable ring at t = 0.
XYIdeal set_t_zero(const TruncIdeal& I);

// Monomial staircase ideal expressed in the same XY frame (for comparisons
// of a computed residual against a predicted staircase).
XYIdeal xy_staircase_ideal(const XYFramePtr& f, const std::vector<long>& lengths);

// Univariate image of an XY ideal modulo (x) or modulo (y): the trace ring.
// Returns the RREF span inside k[w]/(w^nxy).
RowSpace xy_mod_variable(const XYIdeal& I, bool mod_x);

// Re-express an XY ideal as a subspace over the plain (x, y) monomial basis
// of the window, for comparisons across coordinate choices.
RowSpace xy_canonical(const XYIdeal& I);

// Dominant part: ideal generated by the minimal-t-order parts of the stored
// basis (backbone generators and echelon rows).  The working coordinate v
// must equal the supplied unit f (checked via the ring's coordinate data).
TruncIdeal dominant_ideal(const TruncIdeal& I, const UPoly& f);

}  // namespace horace
