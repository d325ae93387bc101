#include "horace/trunc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace horace {

namespace {

bool divides(const Mono& d, const Mono& m) {
  return d.a <= m.a && d.b <= m.b && d.c <= m.c;
}

Mono mono_mul(const Mono& x, const Mono& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c};
}

// C(n, k) mod p via a small Pascal triangle (exponents stay < ~100 here).
u64 binom_mod(int n, int k, u64 p) {
  if (k < 0 || k > n) return 0;
  std::vector<u64> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] = addm(row[j], row[j - 1], p);
  return row[k];
}

}  // namespace

UPoly upoly_mul(const UPoly& f, const UPoly& g) {
  UPoly r;
  for (const auto& [mf, cf] : f)
    for (const auto& [mg, cg] : g) {
      std::array<int, 3> m = {mf[0] + mg[0], mf[1] + mg[1], mf[2] + mg[2]};
      r[m] += cf * cg;
      if (r[m] == 0) r.erase(m);
    }
  return r;
}

UPoly upoly_pow(const UPoly& f, int e) {
  UPoly r = {{{0, 0, 0}, 1}};
  for (int i = 0; i < e; ++i) r = upoly_mul(r, f);
  return r;
}

UPoly upoly_var(int which) {
  std::array<int, 3> m = {0, 0, 0};
  m[which] = 1;
  return {{m, 1}};
}

TruncRing::TruncRing(u64 p, int nxy, int pt, Coord coord)
    : p_(p), nxy_(nxy), pt_(pt), coord_(coord) {
  if (nxy < 1 || pt < 1) throw std::invalid_argument("window must be positive");
  if (modval(coord.beta, p) == 0)
    throw std::invalid_argument("coordinate change must be invertible");
}

IPoly TruncRing::y_poly() const {
  IPoly r;
  if (coord_.alpha) r[{1, 0, 0}] = modval(coord_.alpha, p_);
  r[{0, 1, 0}] = modval(coord_.beta, p_);
  if (coord_.gamma) r[{0, 0, 1}] = modval(coord_.gamma, p_);
  return r;
}

IPoly TruncRing::x_poly() const { return {{{1, 0, 0}, 1}}; }

IPoly TruncRing::to_internal(const UPoly& f) const {
  const IPoly y = y_poly();
  IPoly r;
  for (const auto& [m, c] : f) {
    // x^m0 * y^m1 * t^m2 with y expanded in working coordinates
    IPoly term = {{{m[0], 0, m[2]}, modval(c, p_)}};
    for (int j = 0; j < m[1]; ++j) {
      IPoly next;
      for (const auto& [tm, tc] : term)
        for (const auto& [ym, yc] : y) {
          Mono mm = mono_mul(tm, ym);
          u64& slot = next[mm];
          slot = addm(slot, mulm(tc, yc, p_), p_);
        }
      term = std::move(next);
    }
    for (const auto& [tm, tc] : term) {
      if (tc == 0 || !in_window(tm)) continue;
      u64& slot = r[tm];
      slot = addm(slot, tc, p_);
    }
  }
  for (auto it = r.begin(); it != r.end();)
    it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

void MonoIdeal::add_gen(const Mono& g) {
  for (const Mono& e : gens_)
    if (divides(e, g)) return;
  std::erase_if(gens_, [&](const Mono& e) { return divides(g, e); });
  gens_.push_back(g);
}

bool MonoIdeal::contains(const Mono& m, int nxy, int pt) const {
  if (m.a + m.b >= nxy || m.c >= pt) return true;
  for (const Mono& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonoIdeal::operator==(const MonoIdeal& o) const {
  auto key = [](std::vector<Mono> v) {
    std::sort(v.begin(), v.end(), MonoLess{});
    return v;
  };
  return key(gens_) == key(o.gens_);
}

void RowSpace::reduce(std::vector<u64>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const u64 c = v[pivots_[k]];
    if (c == 0) continue;
    const auto& row = rows_[k];
    for (int j = 0; j < dim_; ++j)
      if (row[j]) v[j] = subm(v[j], mulm(c, row[j], p_), p_);
  }
}

bool RowSpace::insert(std::vector<u64> v) {
  reduce(v);
  int piv = -1;
  for (int j = 0; j < dim_; ++j)
    if (v[j]) { piv = j; break; }
  if (piv < 0) return false;
  const u64 inv = invm(v[piv], p_);
  for (int j = piv; j < dim_; ++j) v[j] = mulm(v[j], inv, p_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const u64 c = rows_[k][piv];
    if (c == 0) continue;
    auto& row = rows_[k];
    for (int j = piv; j < dim_; ++j)
      if (v[j]) row[j] = subm(row[j], mulm(c, v[j], p_), p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const std::size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RowSpace::contains(std::vector<u64> v) const {
  reduce(v);
  for (u64 x : v)
    if (x) return false;
  return true;
}

bool RowSpace::contains_space(const RowSpace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<int> RowSpace::free_coords() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int j = 0; j < dim_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

FramePtr make_frame(const TruncRing& ring, const std::vector<Mono>& mono_gens) {
  auto f = std::make_shared<Frame>(Frame{ring, {}, {}, {}});
  for (const Mono& g : mono_gens)
    if (ring.in_window(g)) f->backbone.add_gen(g);
  for (int d = 0; d < ring.nxy(); ++d)
    for (int a = d; a >= 0; --a) {
      // iterate in MonoLess order: degree, then b ascending
      const int b = d - a;
      for (int c = 0; c < ring.pt(); ++c) {
        Mono m{a, b, c};
        if (!f->backbone.contains(m, ring.nxy(), ring.pt())) f->smons.push_back(m);
      }
    }
  std::sort(f->smons.begin(), f->smons.end(), MonoLess{});
  for (int i = 0; i < static_cast<int>(f->smons.size()); ++i)
    f->sindex[f->smons[i]] = i;
  if (f->smons.size() > 200000)
    throw std::runtime_error("truncation window too large");
  return f;
}

namespace {

// Normal form of a polynomial: its standard-monomial coordinates.
std::vector<u64> normal_form(const Frame& f, const IPoly& g) {
  std::vector<u64> v(f.dim(), 0);
  const u64 p = f.ring.p();
  for (const auto& [m, c] : g) {
    int idx = f.index_of(m);
    if (idx >= 0) v[idx] = addm(v[idx], c, p);
  }
  return v;
}

IPoly mono_shift(const IPoly& g, const Mono& u, const TruncRing& ring) {
  IPoly r;
  for (const auto& [m, c] : g) {
    Mono mm = mono_mul(m, u);
    if (ring.in_window(mm)) r[mm] = c;
  }
  return r;
}

// Span of all monomial multiples of g inside the ideal, added to V.
void add_generator_span(const Frame& f, RowSpace& V, const IPoly& g) {
  std::set<Mono, MonoLess> cands;
  for (const Mono& s : f.smons)
    for (const auto& [m, c] : g)
      if (divides(m, s)) cands.insert({s.a - m.a, s.b - m.b, s.c - m.c});
  for (const Mono& u : cands)
    V.insert(normal_form(f, mono_shift(g, u, f.ring)));
}

}  // namespace

TruncIdeal ideal_from_generators(const TruncRing& ring,
                                 const std::vector<IPoly>& gens) {
  std::vector<Mono> mono_gens;
  std::vector<IPoly> rest;
  for (const IPoly& g : gens) {
    if (g.empty()) continue;
    if (g.size() == 1)
      mono_gens.push_back(g.begin()->first);
    else
      rest.push_back(g);
  }
  FramePtr f = make_frame(ring, mono_gens);
  RowSpace V(ring.p(), f->dim());
  for (const IPoly& g : rest) add_generator_span(*f, V, g);
  return TruncIdeal(f, std::move(V));
}

TruncIdeal ideal_add_poly(const TruncIdeal& I, const IPoly& g) {
  RowSpace V = I.space();
  add_generator_span(*I.frame(), V, g);
  return TruncIdeal(I.frame(), std::move(V));
}

TruncIdeal ideal_sum(const TruncIdeal& a, const TruncIdeal& b) {
  if (a.frame() != b.frame() && !(a.frame()->backbone == b.frame()->backbone &&
                                  a.frame()->ring == b.frame()->ring))
    throw std::invalid_argument("ideal_sum: frames differ");
  RowSpace V = a.space();
  for (const auto& r : b.space().rows()) V.insert(r);
  return TruncIdeal(a.frame(), std::move(V));
}

TruncIdeal ideal_colon_mono(const TruncIdeal& I, const Mono& g) {
  const Frame& f = *I.frame();
  const int D = f.dim();
  const u64 p = f.ring.p();
  const RowSpace& V = I.space();
  // s -> g*s is a partial injection of standard monomials; coordinates whose
  // image leaves the standard span are unconstrained.
  std::vector<int> img(D, -1);
  std::vector<char> in_image(D, 0);
  RowSpace result(p, D);
  for (int s = 0; s < D; ++s) {
    Mono gs = mono_mul(f.smons[s], g);
    if (!f.ring.in_window(gs) ||
        f.backbone.contains(gs, f.ring.nxy(), f.ring.pt())) {
      std::vector<u64> e(D, 0);
      e[s] = 1;
      result.insert(std::move(e));
    } else {
      img[s] = f.index_of(gs);
      in_image[img[s]] = 1;
    }
  }
  // Rows of V supported entirely on image coordinates pull back to colon
  // elements.  Echelonize V with non-image coordinates first to extract the
  // intersection with the image span.
  std::vector<int> order;
  for (int j = 0; j < D; ++j)
    if (!in_image[j]) order.push_back(j);
  for (int j = 0; j < D; ++j)
    if (in_image[j]) order.push_back(j);
  std::vector<std::vector<u64>> rows;
  for (const auto& r : V.rows()) {
    std::vector<u64> w(D);
    for (int j = 0; j < D; ++j) w[j] = r[order[j]];
    rows.push_back(std::move(w));
  }
  const int nfree = D - static_cast<int>(std::count(in_image.begin(), in_image.end(), 1));
  // forward elimination on permuted coordinates
  std::size_t rank = 0;
  for (int col = 0; col < D && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const u64 inv = invm(rows[rank][col], p);
    for (int j = col; j < D; ++j) rows[rank][j] = mulm(rows[rank][j], inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank) continue;
      const u64 c = rows[i][col];
      if (!c) continue;
      for (int j = col; j < D; ++j)
        rows[i][j] = subm(rows[i][j], mulm(c, rows[rank][j], p), p);
    }
    ++rank;
  }
  // Collect rows with pivot inside the image block and pull them back.
  std::vector<int> preimage_of(D, -1);
  for (int s = 0; s < D; ++s)
    if (img[s] >= 0) preimage_of[img[s]] = s;
  for (std::size_t i = 0; i < rank; ++i) {
    int lead = -1;
    for (int j = 0; j < D; ++j)
      if (rows[i][j]) { lead = j; break; }
    if (lead < nfree) continue;  // touches a non-image coordinate
    bool clean = true;
    std::vector<u64> back(D, 0);
    for (int j = nfree; j < D; ++j) {
      if (!rows[i][j]) continue;
      const int s = preimage_of[order[j]];
      if (s < 0) { clean = false; break; }
      back[s] = rows[i][j];
    }
    if (clean) result.insert(std::move(back));
  }
  return TruncIdeal(I.frame(), std::move(result));
}

TruncIdeal ideal_colon(const TruncIdeal& I, const IPoly& g) {
  if (g.empty()) throw std::invalid_argument("colon by zero");
  if (g.size() == 1 && g.begin()->second != 0) {
    // monomial times a unit
    return ideal_colon_mono(I, g.begin()->first);
  }
  const Frame& f = *I.frame();
  const int D = f.dim();
  const u64 p = f.ring.p();
  const RowSpace& V = I.space();
  const std::vector<int> freec = V.free_coords();
  const int q = static_cast<int>(freec.size());
  std::vector<int> freepos(D, -1);
  for (int j = 0; j < q; ++j) freepos[freec[j]] = j;
  // position of each coordinate among V's pivots, for fast reduction
  std::vector<int> pivrow(D, -1);
  for (std::size_t k = 0; k < V.pivots().size(); ++k) pivrow[V.pivots()[k]] = static_cast<int>(k);

  struct PivCol {
    int pos;                  // leading free coordinate
    std::vector<u64> qv;      // length q, normalized
    std::vector<u64> comb;    // length D
  };
  std::vector<PivCol> stored;
  std::vector<int> stored_at(q, -1);
  RowSpace result(p, D);

  for (int s = 0; s < D; ++s) {
    // w = NF(g * smons[s]) reduced modulo V, in free coordinates
    std::vector<u64> w(q, 0);
    for (const auto& [m, c] : g) {
      Mono mm = mono_mul(f.smons[s], m);
      if (!f.ring.in_window(mm) ||
          f.backbone.contains(mm, f.ring.nxy(), f.ring.pt()))
        continue;
      const int idx = f.index_of(mm);
      if (pivrow[idx] >= 0) {
        const auto& row = V.rows()[pivrow[idx]];
        for (int j = 0; j < q; ++j)
          if (row[freec[j]]) w[j] = subm(w[j], mulm(c, row[freec[j]], p), p);
      } else {
        w[freepos[idx]] = addm(w[freepos[idx]], c, p);
      }
    }
    std::vector<u64> comb(D, 0);
    comb[s] = 1;
    for (int j = 0; j < q; ++j) {
      if (!w[j]) continue;
      const int k = stored_at[j];
      if (k < 0) continue;
      const u64 c = w[j];
      const auto& pc = stored[k];
      for (int t = j; t < q; ++t)
        if (pc.qv[t]) w[t] = subm(w[t], mulm(c, pc.qv[t], p), p);
      for (int t = 0; t < D; ++t)
        if (pc.comb[t]) comb[t] = subm(comb[t], mulm(c, pc.comb[t], p), p);
    }
    int lead = -1;
    for (int j = 0; j < q; ++j)
      if (w[j]) { lead = j; break; }
    if (lead < 0) {
      result.insert(std::move(comb));
    } else {
      const u64 inv = invm(w[lead], p);
      for (int j = lead; j < q; ++j) w[j] = mulm(w[j], inv, p);
      for (int t = 0; t < D; ++t) comb[t] = mulm(comb[t], inv, p);
      stored_at[lead] = static_cast<int>(stored.size());
      stored.push_back({lead, std::move(w), std::move(comb)});
    }
  }
  return TruncIdeal(I.frame(), std::move(result));
}

bool TruncIdeal::contains_poly(const IPoly& g) const {
  return v_.contains(normal_form(*frame_, g));
}

bool TruncIdeal::contains(const TruncIdeal& other) const {
  const Frame& fo = *other.frame();
  if (frame_ == other.frame() ||
      (frame_->ring == fo.ring && frame_->backbone == fo.backbone))
    return v_.contains_space(other.space());
  if (!(frame_->ring == fo.ring))
    throw std::invalid_argument("contains: rings differ");
  for (const Mono& g : fo.backbone.gens()) {
    if (!frame_->ring.in_window(g)) continue;
    if (!contains_poly(IPoly{{g, 1}})) return false;
  }
  for (const auto& r : other.space().rows()) {
    IPoly g;
    for (int j = 0; j < fo.dim(); ++j)
      if (r[j]) g[fo.smons[j]] = r[j];
    if (!contains_poly(g)) return false;
  }
  return true;
}

bool TruncIdeal::operator==(const TruncIdeal& o) const {
  if (frame_ == o.frame_ ||
      (frame_->ring == o.frame_->ring && frame_->backbone == o.frame_->backbone))
    return v_ == o.space();
  return colength() == o.colength() && contains(o) && o.contains(*this);
}

bool XYFrame::mono_in(const XMono& m) const {
  if (m.a + m.b >= nxy) return true;
  for (const XMono& g : gens)
    if (g.a <= m.a && g.b <= m.b) return true;
  return false;
}

XYIdeal set_t_zero(const TruncIdeal& I) {
  const Frame& f = *I.frame();
  auto xf = std::make_shared<XYFrame>();
  xf->p = f.ring.p();
  xf->nxy = f.ring.nxy();
  xf->coord = f.ring.coord();
  for (const Mono& g : f.backbone.gens())
    if (g.c == 0) {
      // keep an antichain
      XMono m{g.a, g.b};
      bool skip = false;
      for (const XMono& e : xf->gens)
        if (e.a <= m.a && e.b <= m.b) { skip = true; break; }
      if (!skip) {
        std::erase_if(xf->gens, [&](const XMono& e) {
          return m.a <= e.a && m.b <= e.b;
        });
        xf->gens.push_back(m);
      }
    }
  for (const Mono& s : f.smons)
    if (s.c == 0) xf->smons.push_back({s.a, s.b});
  std::sort(xf->smons.begin(), xf->smons.end(), XMonoLess{});
  for (int i = 0; i < static_cast<int>(xf->smons.size()); ++i)
    xf->sindex[xf->smons[i]] = i;
  RowSpace V(xf->p, xf->dim());
  for (const auto& r : I.space().rows()) {
    std::vector<u64> v(xf->dim(), 0);
    bool nonzero = false;
    for (int j = 0; j < f.dim(); ++j) {
      if (!r[j] || f.smons[j].c != 0) continue;
      v[xf->index_of({f.smons[j].a, f.smons[j].b})] = r[j];
      nonzero = true;
    }
    if (nonzero) V.insert(std::move(v));
  }
  return XYIdeal(xf, std::move(V));
}

bool XYIdeal::contains(const XYIdeal& other) const {
  const XYFrame& a = *frame_;
  const XYFrame& b = *other.frame();
  if (!(a.p == b.p && a.nxy == b.nxy && a.coord == b.coord))
    throw std::invalid_argument("XYIdeal::contains: frames incompatible");
  auto in_this = [&](const std::vector<std::pair<XMono, u64>>& poly) {
    std::vector<u64> v(a.dim(), 0);
    for (const auto& [m, c] : poly) {
      if (a.mono_in(m)) continue;
      const int idx = a.index_of(m);
      v[idx] = addm(v[idx], c, a.p);
    }
    return v_.contains(std::move(v));
  };
  for (const XMono& g : b.gens) {
    if (g.a + g.b >= a.nxy) continue;
    // all monomial multiples of g must be present; multiples either stay in
    // b's backbone or need checking, and backbone membership in a is enough
    for (int i = 0; i + g.a + g.b < a.nxy; ++i)
      for (int j = 0; i + j + g.a + g.b < a.nxy; ++j)
        if (!in_this({{XMono{g.a + i, g.b + j}, 1}})) return false;
  }
  for (const auto& r : other.space().rows()) {
    std::vector<std::pair<XMono, u64>> poly;
    for (int j = 0; j < b.dim(); ++j)
      if (r[j]) poly.emplace_back(b.smons[j], r[j]);
    if (!in_this(poly)) return false;
  }
  return true;
}

bool XYIdeal::operator==(const XYIdeal& o) const {
  const XYFrame& a = *frame_;
  const XYFrame& b = *o.frame();
  if (frame_ == o.frame_ ||
      (a.p == b.p && a.nxy == b.nxy && a.coord == b.coord && a.gens == b.gens &&
       a.smons == b.smons))
    return v_ == o.space();
  return colength() == o.colength() && contains(o) && o.contains(*this);
}

bool XYIdeal::inside_max_power(int k) const {
  const XYFrame& f = *frame_;
  for (const XMono& g : f.gens)
    if (g.a + g.b < k) return false;
  if (f.nxy < k) return false;
  for (const auto& r : v_.rows())
    for (int j = 0; j < f.dim(); ++j)
      if (r[j] && f.smons[j].a + f.smons[j].b < k) return false;
  return true;
}

XYIdeal xy_staircase_ideal(const XYFramePtr& f, const std::vector<long>& lengths) {
  auto ell = [&](int i) {
    return (i >= 0 && i < static_cast<int>(lengths.size())) ? lengths[i] : 0L;
  };
  for (const XMono& g : f->gens)
    if (g.a < ell(g.b))
      throw std::invalid_argument("staircase does not contain the frame backbone");
  RowSpace V(f->p, f->dim());
  for (int j = 0; j < f->dim(); ++j)
    if (f->smons[j].a >= ell(f->smons[j].b)) {
      std::vector<u64> e(f->dim(), 0);
      e[j] = 1;
      V.insert(std::move(e));
    }
  return XYIdeal(f, std::move(V));
}

RowSpace xy_mod_variable(const XYIdeal& I, bool mod_x) {
  const XYFrame& f = *I.frame();
  const int N = f.nxy;
  const u64 p = f.p;
  RowSpace span(p, N);
  // ratio used when killing y: vbar == -(alpha/beta) * u
  const u64 ratio = mulm(modval(-f.coord.alpha, p),
                         invm(modval(f.coord.beta, p), p), p);
  auto image_mono = [&](const XMono& m) -> std::pair<int, u64> {
    if (mod_x) {
      if (m.a > 0) return {-1, 0};
      return {m.b, 1};
    }
    return {m.a + m.b, powm(ratio, m.b, p)};
  };
  std::vector<std::vector<u64>> work;
  for (const XMono& g : f.gens) {
    auto [deg, c] = image_mono(g);
    if (deg < 0 || deg >= N || c == 0) continue;
    std::vector<u64> v(N, 0);
    v[deg] = c;
    work.push_back(std::move(v));
  }
  for (const auto& r : I.space().rows()) {
    std::vector<u64> v(N, 0);
    bool nz = false;
    for (int j = 0; j < f.dim(); ++j) {
      if (!r[j]) continue;
      auto [deg, c] = image_mono(f.smons[j]);
      if (deg < 0 || deg >= N || c == 0) continue;
      v[deg] = addm(v[deg], mulm(r[j], c, p), p);
      nz = true;
    }
    if (nz) work.push_back(std::move(v));
  }
  // close under multiplication by the surviving variable
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (span.insert(work[i])) {
      std::vector<u64> sh(N, 0);
      bool nz = false;
      for (int j = 0; j + 1 < N; ++j)
        if (work[i][j]) { sh[j + 1] = work[i][j]; nz = true; }
      if (nz) work.push_back(std::move(sh));
    }
  }
  return span;
}

RowSpace xy_canonical(const XYIdeal& I) {
  const XYFrame& f = *I.frame();
  const int N = f.nxy;
  const u64 p = f.p;
  // basis of the plain (x, y) window, same ordering convention
  std::vector<XMono> basis;
  for (int d = 0; d < N; ++d)
    for (int b = 0; b <= d; ++b) basis.push_back({d - b, b});
  std::map<XMono, int, XMonoLess> bidx;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) bidx[basis[i]] = i;
  const u64 binv = invm(modval(f.coord.beta, p), p);
  const u64 nalpha = modval(-f.coord.alpha, p);
  // u^a vbar^b -> x^a ((y - alpha x)/beta)^b
  auto expand = [&](const XMono& m) {
    std::vector<std::pair<XMono, u64>> out;
    const u64 scale = powm(binv, m.b, p);
    for (int k = 0; k <= m.b; ++k) {
      const u64 c = mulm(mulm(binom_mod(m.b, k, p), powm(nalpha, m.b - k, p), p),
                         scale, p);
      if (c) out.push_back({XMono{m.a + m.b - k, k}, c});
    }
    return out;
  };
  RowSpace span(p, static_cast<int>(basis.size()));
  auto add_poly = [&](const std::vector<std::pair<XMono, u64>>& terms) {
    std::vector<u64> v(basis.size(), 0);
    for (const auto& [m, c] : terms) {
      for (const auto& [bm, bc] : expand(m)) {
        if (bm.a + bm.b >= N) continue;
        const int i = bidx[bm];
        v[i] = addm(v[i], mulm(c, bc, p), p);
      }
    }
    span.insert(std::move(v));
  };
  for (const XMono& m : basis)
    if (f.mono_in(m) && m.a + m.b < N) add_poly({{m, 1}});
  for (const auto& r : I.space().rows()) {
    std::vector<std::pair<XMono, u64>> terms;
    for (int j = 0; j < f.dim(); ++j)
      if (r[j]) terms.emplace_back(f.smons[j], r[j]);
    add_poly(terms);
  }
  return span;
}

TruncIdeal dominant_ideal(const TruncIdeal& I, const UPoly& f) {
  const TruncRing& ring = I.frame()->ring;
  // f must be the ring's working coordinate v = (y - alpha x - gamma t)/beta.
  UPoly expected;
  expected[{0, 1, 0}] = 1;
  if (ring.coord().alpha) expected[{1, 0, 0}] = -ring.coord().alpha;
  if (ring.coord().gamma) expected[{0, 0, 1}] = -ring.coord().gamma;
  UPoly scaled;
  for (const auto& [m, c] : f) scaled[m] = c * ring.coord().beta;
  if (scaled != expected)
    throw std::invalid_argument(
        "dominant_ideal: f does not match the ring's working coordinate");
  std::vector<IPoly> gens;
  for (const Mono& g : I.frame()->backbone.gens()) gens.push_back({{g, 1}});
  for (const auto& r : I.space().rows()) {
    int minc = INT32_MAX;
    for (int j = 0; j < I.frame()->dim(); ++j)
      if (r[j]) minc = std::min(minc, I.frame()->smons[j].c);
    IPoly lead;
    for (int j = 0; j < I.frame()->dim(); ++j)
      if (r[j] && I.frame()->smons[j].c == minc) lead[I.frame()->smons[j]] = r[j];
    if (!lead.empty()) gens.push_back(std::move(lead));
  }
  return ideal_from_generators(ring, gens);
}

}  // namespace horace
