#include "horace/monomial_limits.hpp"

#include <numeric>
#include <sstream>

namespace horace {

EngineInput family_input(const Staircase& E, int p1, bool vertical, u64 prime) {
  EngineInput in;
  in.prime = prime;
  in.coord = vertical ? coord_y_plus_t() : coord_xyt();
  in.nxy = static_cast<int>(E.ell0() + E.height()) + 2;
  in.pt = p1 + 1;
  for (long i = 0; i < E.height(); ++i)
    if (i == 0 || E.ell(i) < E.ell(i - 1))
      in.mono_gens.push_back(
          Mono{static_cast<int>(E.ell(i)), static_cast<int>(i), 0});
  in.mono_gens.push_back(Mono{0, static_cast<int>(E.height()), 0});
  return in;
}

long sigma_blocks(const std::vector<long>& m, long i) {
  if (i < 1) throw std::invalid_argument("sigma: i must be >= 1");
  long k = 0, partial = 0;
  while (k < static_cast<long>(m.size()) && partial + m[k] <= i - 1)
    partial += m[k++];
  return i - 1 - k;
}

std::vector<long> block_offsets(const std::vector<long>& m) {
  std::vector<long> n(m.size() + 1, 0);  // n[j] for 1-based j
  for (std::size_t j = 2; j <= m.size(); ++j) n[j] = n[j - 1] + m[j - 2] - 1;
  return n;
}

std::vector<YVar> y_seq(const std::vector<long>& m) {
  std::vector<YVar> ys;
  for (long mj : m) {
    if (mj < 1) throw std::invalid_argument("block lengths must be positive");
    ys.push_back(YVar::Y);
    for (long k = 1; k < mj; ++k) ys.push_back(YVar::X);
  }
  return ys;
}

Staircase colon_formula(const Staircase& E, const std::vector<long>& m, long i) {
  if (i == 0) return E;
  return E.tau(sigma_blocks(m, i));
}

long trace_formula_x(const Staircase& E) { return E.height(); }

YTraceFormula trace_formula_y(const Staircase& E, long p) {
  if (!E.gentle()) throw std::invalid_argument("staircase is not gentle");
  bool stair = false;
  for (long i = 0; i < E.height(); ++i) stair = stair || E.ell(i) == p;
  if (!stair) throw std::invalid_argument("p is not a stair length");
  long k = E.h(p - 1);
  return YTraceFormula{k, E.delete_slice(k)};
}

namespace {

[[noreturn]] void fail_hyp(int idx, const std::string& ineq) {
  std::ostringstream os;
  os << "hypothesis " << idx << " fails: " << ineq;
  throw HypothesisFailure(idx, os.str());
}

}  // namespace

StcresPlan stcres_plan(const Staircase& E, const std::vector<long>& tr,
                       const std::vector<long>& m) {
  const long mu = static_cast<long>(m.size());
  if (mu == 0 || tr.size() != m.size())
    throw std::invalid_argument("tr and m must be non-empty of equal length");
  for (long i = 0; i < mu; ++i) {
    if (tr[i] < 1 || (i && tr[i] <= tr[i - 1]))
      throw std::invalid_argument("tr must be strictly increasing and positive");
    if (m[i] < 1) throw std::invalid_argument("block lengths must be positive");
  }
  std::vector<long> n = block_offsets(m);  // n[j], 1-based
  const long total = std::accumulate(m.begin(), m.end(), 0L);

  for (long i = 1; i < mu; ++i) {
    if (E.ell_hat(tr[i - 1] - 1) < tr[i - 1] + 1) {
      std::ostringstream os;
      os << "ell_hat(" << tr[i - 1] - 1 << ") = " << E.ell_hat(tr[i - 1] - 1)
         << " < tr_" << i << " + 1 = " << tr[i - 1] + 1;
      fail_hyp(1, os.str());
    }
    if (E.ell(tr[i - 1] - 1) - E.ell(tr[i] - 1) < E.h(n[i])) {
      std::ostringstream os;
      os << "ell(" << tr[i - 1] - 1 << ") - ell(" << tr[i] - 1 << ") = "
         << E.ell(tr[i - 1] - 1) - E.ell(tr[i] - 1) << " < h_E(" << n[i]
         << ") = " << E.h(n[i]);
      fail_hyp(2, os.str());
    }
  }
  if (E.ell(tr[mu - 1] - 1) <= n[mu]) {
    std::ostringstream os;
    os << "ell(" << tr[mu - 1] - 1 << ") = " << E.ell(tr[mu - 1] - 1)
       << " <= n_" << mu << " = " << n[mu];
    fail_hyp(3, os.str());
  }
  if (E.ell(tr[mu - 1]) > n[mu] && E.ell_hat(tr[mu - 1] - 1) < tr[mu - 1] + 1) {
    std::ostringstream os;
    os << "ell(" << tr[mu - 1] << ") > n_" << mu << " but ell_hat("
       << tr[mu - 1] - 1 << ") = " << E.ell_hat(tr[mu - 1] - 1) << " < tr_"
       << mu << " + 1 = " << tr[mu - 1] + 1;
    fail_hyp(4, os.str());
  }

  // The explicit truncation sequence: y positions first, then the entry
  // right after each y (skipped when it is itself a y position), then the
  // tail of ones, then descending fill.
  std::vector<long> ps(total + 1, -1);  // 1-based
  for (long j = 1; j < mu; ++j) ps[n[j] + j] = E.ell(tr[j - 1] - 1) - n[j];
  ps[n[mu] + mu] =
      E.ell(tr[mu - 1]) > n[mu] ? E.ell(tr[mu - 1] - 1) - n[mu] : 1;
  for (long j = 1; j < mu; ++j) {
    long pos = n[j] + j + 1;
    if (ps[pos] < 0) ps[pos] = E.ell(tr[j - 1] - 1) - n[j] - E.h(n[j]);
  }
  for (long i = n[mu] + mu + 1; i <= total; ++i)
    if (ps[i] < 0) ps[i] = 1;
  for (long i = 1; i <= total; ++i)
    if (ps[i] < 0) ps[i] = ps[i - 1] - 1;
  for (long i = 1; i <= total; ++i) {
    if (ps[i] < 1 || (i > 1 && ps[i] > ps[i - 1])) {
      std::ostringstream os;
      os << "emitted truncation sequence infeasible at position " << i
         << " (value " << ps[i] << ")";
      throw HypothesisFailure(0, os.str());
    }
  }

  StcresPlan plan;
  plan.mu = mu;
  plan.m = total;
  plan.ys = y_seq(m);
  for (long i = 1; i <= total; ++i) plan.ps.push_back(static_cast<int>(ps[i]));
  long j = 0;  // number of y entries among positions 1..i
  for (long i = 1; i <= total; ++i) {
    if (j < mu && i == n[j + 1] + j + 1) {
      ++j;
      plan.expected_tr.push_back(tr[j - 1]);
    } else {
      plan.expected_tr.push_back(E.h(i - j - 1));
    }
  }
  Staircase flat = E;
  for (long i = 0; i < mu; ++i) flat = flat.decrement_ell_hat(tr[i] - 1);
  plan.e_prime = flat.tau(total - mu);

  long tr_sum = std::accumulate(plan.expected_tr.begin(),
                                plan.expected_tr.end(), 0L);
  if (E.colength() != plan.e_prime.colength() + tr_sum)
    throw std::logic_error("condition count not preserved by the plan");
  return plan;
}

StcresVerification verify_stcres(const Staircase& E, const std::vector<long>& tr,
                                 const std::vector<long>& m, u64 prime) {
  StcresVerification out;
  out.plan = stcres_plan(E, tr, m);
  EngineInput in = family_input(E, out.plan.ps[0], /*vertical=*/false, prime);
  LimitPlan lp{out.plan.ys, out.plan.ps};
  LimitResult run = run_plan_checked(in, lp);
  std::ostringstream os;
  if (run.res0 != E.colength()) {
    os << "initial colength " << run.res0 << " != " << E.colength();
    out.detail = os.str();
    return out;
  }
  for (std::size_t i = 0; i < run.levels.size(); ++i) {
    if (run.levels[i].tr != out.plan.expected_tr[i]) {
      os << "trace " << i + 1 << ": engine " << run.levels[i].tr
         << " != predicted " << out.plan.expected_tr[i];
      out.detail = os.str();
      return out;
    }
  }
  if (run.levels.back().deficiency != 0) {
    os << "deficiency " << run.levels.back().deficiency << " != 0";
    out.detail = os.str();
    return out;
  }
  XYIdeal predicted =
      xy_staircase_ideal(run.final_res.frame(), out.plan.e_prime.lengths());
  if (!(run.final_res == predicted)) {
    out.detail = "final residual differs from the predicted staircase ideal";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace horace
