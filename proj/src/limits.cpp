#include "horace/limits.hpp"

#include <limits>
#include <string>

namespace horace {

namespace {

IPoly ipoly_mul(const TruncRing& ring, const IPoly& f, const IPoly& g) {
  IPoly r;
  for (const auto& [mf, cf] : f)
    for (const auto& [mg, cg] : g) {
      Mono m{mf.a + mg.a, mf.b + mg.b, mf.c + mg.c};
      if (!ring.in_window(m)) continue;
      u64& slot = r[m];
      slot = addm(slot, mulm(cf, cg, ring.p()), ring.p());
    }
  for (auto it = r.begin(); it != r.end();)
    it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

IPoly t_power(int p) { return {{Mono{0, 0, p}, 1}}; }

}  // namespace

IPoly yvar_poly(const TruncRing& ring, YVar y) {
  return y == YVar::X ? ring.x_poly() : ring.y_poly();
}

TraceData trace_of(const TruncIdeal& J, YVar y, int p) {
  const TruncRing& ring = J.frame()->ring;
  TruncIdeal K = ideal_add_poly(J, yvar_poly(ring, y));
  TruncIdeal L = p >= 2 ? ideal_colon_mono(K, Mono{0, 0, p - 1}) : K;
  XYIdeal Z = set_t_zero(L);
  RowSpace span = xy_mod_variable(Z, /*mod_x=*/y == YVar::X);
  TraceData out{span, ring.nxy() - span.rank()};
  return out;
}

TruncIdeal hres_step(const TruncIdeal& J, YVar y, int p) {
  const TruncRing& ring = J.frame()->ring;
  TruncIdeal K = ideal_add_poly(J, t_power(p));
  return ideal_colon(K, yvar_poly(ring, y));
}

std::vector<TruncIdeal> hres_chain(const TruncIdeal& I,
                                   const std::vector<YVar>& ys,
                                   const std::vector<int>& ps) {
  std::vector<TruncIdeal> chain{I};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] <= 0) {
      // t^0 = 1: the extended ideal is the whole ring, and so is its colon
      TruncIdeal whole = ideal_add_poly(chain.back(), IPoly{{Mono{0, 0, 0}, 1}});
      chain.push_back(std::move(whole));
    } else {
      chain.push_back(hres_step(chain.back(), ys[i], ps[i]));
    }
  }
  return chain;
}

LimitResult iterate_plan(const TruncIdeal& I, const LimitPlan& plan,
                         bool check_closed_form) {
  const std::size_t m = plan.ps.size();
  if (plan.ys.size() != m)
    throw std::invalid_argument("plan: ys and ps lengths differ");
  for (std::size_t i = 0; i < m; ++i) {
    if (plan.ps[i] < 1) throw std::invalid_argument("plan: p must be positive");
    if (i && plan.ps[i] > plan.ps[i - 1])
      throw std::invalid_argument("plan: p must be non-increasing");
  }
  const TruncRing& ring = I.frame()->ring;
  // Within the truncation, (I : t) always picks up the top t-slab (its
  // t-multiples leave the window), so compare against I + (t^(pt-1)).
  if (!(ideal_colon_mono(I, Mono{0, 0, 1}) ==
        ideal_add_poly(I, t_power(ring.pt() - 1))))
    throw FlatnessError("family is not flat: (I : t) != I");

  LimitResult out;
  out.res0 = set_t_zero(I).colength();
  out.chain.push_back(I);
  long tr_sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    TraceData tr = trace_of(out.chain.back(), plan.ys[i], plan.ps[i]);
    TruncIdeal H = hres_step(out.chain.back(), plan.ys[i], plan.ps[i]);
    if (check_closed_form) {
      // (I + (t^{p_1}, y_1 t^{p_2}, ..., y_1..y_i t^{p_{i+1}})) : (y_1..y_{i+1})
      TruncIdeal cf = I;
      IPoly prod = {{Mono{0, 0, 0}, 1}};
      for (std::size_t k = 0; k <= i; ++k) {
        cf = ideal_add_poly(cf, ipoly_mul(ring, prod, t_power(plan.ps[k])));
        prod = ipoly_mul(ring, prod, yvar_poly(ring, plan.ys[k]));
      }
      for (std::size_t k = 0; k <= i; ++k)
        cf = ideal_colon(cf, yvar_poly(ring, plan.ys[k]));
      if (!(cf == H))
        throw ClosedFormMismatch("closed-form residual differs at level " +
                                 std::to_string(i + 1));
    }
    XYIdeal res = set_t_zero(H);
    tr_sum += tr.colength;
    LimitLevel lvl;
    lvl.tr = tr.colength;
    lvl.res = res.colength();
    lvl.hres = H.colength();
    lvl.deficiency = out.res0 - (lvl.res + tr_sum);
    out.levels.push_back(lvl);
    out.chain.push_back(std::move(H));
    if (i + 1 == m) out.final_res = std::move(res);
  }
  if (m == 0) out.final_res = set_t_zero(I);
  return out;
}

DeficiencyReport deficiency_report(const TruncIdeal& I, const LimitPlan& plan) {
  const std::size_t m = plan.ps.size();
  LimitResult main = iterate_plan(I, plan, /*check_closed_form=*/false);
  std::vector<int> ps1(plan.ps);
  for (int& p : ps1) p -= 1;
  std::vector<TruncIdeal> chain1 = hres_chain(I, plan.ys, ps1);

  DeficiencyReport rep;
  rep.direct = m ? main.levels.back().deficiency : 0;
  for (std::size_t j = 0; j < m; ++j) {
    const int pj1 = plan.ps[j] - 1;
    auto extend = [&](const TruncIdeal& J) {
      TruncIdeal K = pj1 > 0 ? ideal_add_poly(J, t_power(pj1))
                             : ideal_add_poly(J, IPoly{{Mono{0, 0, 0}, 1}});
      return ideal_add_poly(K, yvar_poly(I.frame()->ring, plan.ys[j]));
    };
    TruncIdeal A = extend(chain1[j]);
    TruncIdeal B = extend(main.chain[j]);
    if (!A.contains(B))
      throw DeficiencyMismatch("expected containment failed at level " +
                               std::to_string(j + 1));
    rep.claim1.push_back(B.colength() - A.colength());

    long s = 0;
    for (int q = 1; q <= pj1; ++q) {
      TraceData ta = trace_of(main.chain[j], plan.ys[j], q);
      TraceData tb = trace_of(chain1[j], plan.ys[j], q);
      s += ta.colength - tb.colength;
    }
    rep.claim2.push_back(s);
  }
  long s1 = 0, s2 = 0;
  for (std::size_t j = 0; j < m; ++j) {
    s1 += rep.claim1[j];
    s2 += rep.claim2[j];
    if (rep.claim1[j] != rep.claim2[j])
      throw DeficiencyMismatch("per-level correction terms disagree at level " +
                               std::to_string(j + 1));
  }
  if (s1 != rep.direct || s2 != rep.direct)
    throw DeficiencyMismatch("correction sums disagree with the direct value");
  return rep;
}

int max_safe_p(const TruncIdeal& I, const std::vector<YVar>& ys,
               const std::vector<int>& ps_prefix) {
  const std::size_t i = ps_prefix.size();
  if (i == 0) throw std::invalid_argument("max_safe_p: empty prefix");
  if (ys.size() < i + 1)
    throw std::invalid_argument("max_safe_p: need the next direction");
  std::vector<YVar> pre_ys(ys.begin(), ys.begin() + i);
  std::vector<TruncIdeal> H = hres_chain(I, pre_ys, ps_prefix);
  std::vector<int> ps1(ps_prefix);
  for (int& p : ps1) p -= 1;
  std::vector<TruncIdeal> H1 = hres_chain(I, pre_ys, ps1);
  // The number of conditions is preserved by appending p_{i+1} = p iff the
  // two trace ideals agree for every order q < p; the answer is therefore
  // the first disagreement index itself (capped at p_i).
  for (int q = 1; q <= ps_prefix[i - 1]; ++q) {
    TraceData ta = trace_of(H[i], ys[i], q);
    TraceData tb = trace_of(H1[i], ys[i], q);
    if (!(ta.span == tb.span)) return q;
  }
  return ps_prefix[i - 1];
}

long val_of(const TruncIdeal& I, const std::vector<YVar>& ys,
            const std::vector<int>& ps, int i) {
  if (i < 1 || i > static_cast<int>(ps.size()))
    throw std::invalid_argument("val: level out of range");
  std::vector<YVar> pre_ys(ys.begin(), ys.begin() + (i - 1));
  std::vector<int> pre_ps(ps.begin(), ps.begin() + (i - 1));
  std::vector<TruncIdeal> H = hres_chain(I, pre_ys, pre_ps);
  long best = std::numeric_limits<long>::min();
  for (int q = 1; q <= ps[i - 1]; ++q) {
    TraceData t = trace_of(H[i - 1], ys[i - 1], q);
    best = std::max(best, t.colength + q - ps[i - 1]);
  }
  return best;
}

TruncIdeal EngineInput::build(int extra_nxy, int extra_pt) const {
  TruncRing ring(prime, nxy + extra_nxy, pt + extra_pt, coord);
  std::vector<IPoly> g;
  for (const Mono& m : mono_gens)
    if (ring.in_window(m)) g.push_back({{m, 1}});
  for (const UPoly& f : gens) g.push_back(ring.to_internal(f));
  return ideal_from_generators(ring, g);
}

namespace {

void compare_ledgers(const LimitResult& a, const LimitResult& b) {
  bool ok = a.res0 == b.res0 && a.levels.size() == b.levels.size();
  for (std::size_t i = 0; ok && i < a.levels.size(); ++i)
    ok = a.levels[i].tr == b.levels[i].tr && a.levels[i].res == b.levels[i].res &&
         a.levels[i].hres == b.levels[i].hres &&
         a.levels[i].deficiency == b.levels[i].deficiency;
  if (!ok)
    throw TruncationInstability(
        "ledger changed when the truncation window was enlarged");
}

}  // namespace

LimitResult run_plan_checked(const EngineInput& in, const LimitPlan& plan) {
  LimitResult a = iterate_plan(in.build(), plan);
  LimitResult b = iterate_plan(in.build(2, 1), plan);
  compare_ledgers(a, b);
  return a;
}

DeficiencyReport deficiency_checked(const EngineInput& in, const LimitPlan& plan) {
  DeficiencyReport a = deficiency_report(in.build(), plan);
  DeficiencyReport b = deficiency_report(in.build(2, 1), plan);
  if (a.direct != b.direct || a.claim1 != b.claim1 || a.claim2 != b.claim2)
    throw TruncationInstability(
        "deficiency changed when the truncation window was enlarged");
  return a;
}

int max_safe_p_checked(const EngineInput& in, const std::vector<YVar>& ys,
                       const std::vector<int>& ps_prefix) {
  int a = max_safe_p(in.build(), ys, ps_prefix);
  int b = max_safe_p(in.build(2, 1), ys, ps_prefix);
  if (a != b)
    throw TruncationInstability(
        "q changed when the truncation window was enlarged");
  return a;
}

}  // namespace horace
