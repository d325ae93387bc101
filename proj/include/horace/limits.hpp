#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "horace/trunc.hpp"

namespace horace {

// The degeneration directions used by the specialization engine.
enum class YVar { X, Y };

struct LimitPlan {
  std::vector<YVar> ys;
  std::vector<int> ps;  // positive, non-increasing
};

struct TraceData {
  RowSpace span;   // subspace of k[w]/(w^nxy)
  long colength = 0;
};

struct LimitLevel {
  long tr = 0;          // trace colength at this level
  long res = 0;         // residual colength at t = 0
  long hres = 0;        // colength of the horizontal residual
  long deficiency = 0;  // res0 - (res + sum of traces so far)
};

struct LimitResult {
  long res0 = 0;
  std::vector<LimitLevel> levels;
  XYIdeal final_res;
  std::vector<TruncIdeal> chain;  // chain[0] = I, chain[i] = i-th residual
};

struct DeficiencyReport {
  long direct = 0;
  std::vector<long> claim1;  // per-level quotient dimensions
  std::vector<long> claim2;  // per-level trace-difference sums
};

class FlatnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ClosedFormMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DeficiencyMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class TruncationInstability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IPoly yvar_poly(const TruncRing& ring, YVar y);

// Tr(J, y, p) = ((J + (y)) : t^(p-1)) at t = 0, modulo (y).
TraceData trace_of(const TruncIdeal& J, YVar y, int p);

// (J + (t^p)) : y
TruncIdeal hres_step(const TruncIdeal& J, YVar y, int p);

// Full iteration with the flatness proxy and the closed-form cross-check.
LimitResult iterate_plan(const TruncIdeal& I, const LimitPlan& plan,
                         bool check_closed_form = true);

// Residual chain without validation; p entries may be zero (t^0 = 1).
std::vector<TruncIdeal> hres_chain(const TruncIdeal& I,
                                   const std::vector<YVar>& ys,
                                   const std::vector<int>& ps);

// Deficiency computed three ways; throws DeficiencyMismatch if they differ.
DeficiencyReport deficiency_report(const TruncIdeal& I, const LimitPlan& plan);

// Largest next truncation order that keeps the number of conditions:
// scan q = 1..p_i comparing trace ideals of the plan against the shifted
// plan; the answer is one less than the first disagreement.
int max_safe_p(const TruncIdeal& I, const std::vector<YVar>& ys,
               const std::vector<int>& ps_prefix);

// max over q of tr(p(q, i), i) + q - p_i.
long val_of(const TruncIdeal& I, const std::vector<YVar>& ys,
            const std::vector<int>& ps, int i);

// Input recipe that can be rebuilt in an enlarged window for the
// truncation-stability check.
struct EngineInput {
  u64 prime = kDefaultPrime;
  Coord coord;
  int nxy = 0, pt = 0;
  std::vector<Mono> mono_gens;  // generators already monomial in (u, v, t)
  std::vector<UPoly> gens;      // remaining generators, user variables

  TruncIdeal build(int extra_nxy = 0, int extra_pt = 0) const;
};

// Stability-checked wrappers: every exported number is recomputed with the
// window enlarged to (nxy + 2, pt + 1); disagreement raises
// TruncationInstability.
LimitResult run_plan_checked(const EngineInput& in, const LimitPlan& plan);
DeficiencyReport deficiency_checked(const EngineInput& in, const LimitPlan& plan);
int max_safe_p_checked(const EngineInput& in, const std::vector<YVar>& ys,
                       const std::vector<int>& ps_prefix);

}  // namespace horace
