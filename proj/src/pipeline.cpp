#include "horace/pipeline.hpp"

#include <sstream>
#include <string>

namespace horace {

namespace {

long isqrt_floor(long n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative number");
  if (n < 2) return n;
  long x = n / 2;
  for (;;) {
    long y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

long binom2(long k) { return k * (k - 1) / 2; }  // binom(k, 2)

struct MuData {
  long mu = 0;
  std::vector<long> s, tr;  // values for i = 1..mu (plus the failing i)
};

MuData compute_mu(const Staircase& E, long r, long c) {
  MuData d;
  for (long i = 1;; ++i) {
    long si = 0;
    for (long j = r * (i - 1); j <= i * r - 1; ++j) si += E.h(j);
    long tri = c + i - si;
    d.s.push_back(si);
    d.tr.push_back(tri);
    if (E.ell(tri - 1) > r * i)
      d.mu = i;
    else
      break;
  }
  return d;
}

Staircase height2_from(long l0, long l1) {
  std::vector<long> v;
  if (l0 > 0) v.push_back(l0);
  if (l1 > 0) v.push_back(l1);
  return Staircase::from_lengths(std::move(v));
}

[[noreturn]] void fail(const std::string& msg) {
  throw PipelineHypothesisFailure(msg);
}

}  // namespace

bool consistent(const SystemType& t) {
  if (t.E.ell_hat_min() < t.r + 1 && !t.E.r_gentle(t.r))
    throw std::invalid_argument("consistency undefined: staircase not r-gentle");
  long hr = t.E.h_r(t.r);
  return t.c >= t.E.ell(hr) + t.r * hr;
}

StepCertificate step(const SystemType& t) {
  const Staircase& E = t.E;
  const long r = t.r, c = t.c;
  long hr = E.h_r(r);
  if (!consistent(t)) fail("type is not consistent");
  if (E.ell_hat_min() < r + hr + 1) {
    std::ostringstream os;
    os << "minimal stair difference " << E.ell_hat_min() << " < r + h^r + 1 = "
       << r + hr + 1;
    fail(os.str());
  }
  if (hr < 2) {
    std::ostringstream os;
    os << "h^r = " << hr << " < 2";
    fail(os.str());
  }

  MuData md = compute_mu(E, r, c);
  StepCertificate cert;
  cert.before = t;
  cert.mu = md.mu;
  cert.s.assign(md.s.begin(), md.s.begin() + md.mu);
  cert.tr.assign(md.tr.begin(), md.tr.begin() + md.mu);
  cert.kind = md.mu == 0 ? StepKind::TrivStep : StepKind::Step;

  Staircase flat = E;
  for (long i = 0; i < md.mu; ++i) flat = flat.decrement_ell_hat(md.tr[i] - 1);
  Staircase ep = flat.tau(md.mu * r);
  cert.after = SystemType{c + md.mu, ep, r + 1};

  cert.colength_identity =
      ep.colength() + md.mu * c + binom2(md.mu + 1) == E.colength();
  cert.sandwich = ep.contains(E.tau(md.mu * r)) && E.tau(md.mu * (r + 1)).contains(ep);
  cert.length_drop = ep.ell0() == E.ell0() - md.mu * (r + 1);
  cert.min_step_drop = ep.ell_hat_min() >= E.ell_hat_min() - 1;
  // The top row loses mu*r columns plus one deleted slice exactly when the
  // largest trace equals the height (traces increase and never exceed it).
  cert.top_stair_guard = md.mu >= 1 && md.tr[md.mu - 1] == E.height() &&
                         E.ell(E.height() - 1) > md.mu * r + 1;
  cert.top_stair = !cert.top_stair_guard ||
                   (ep.height() == E.height() &&
                    ep.ell(ep.height() - 1) ==
                        E.ell(E.height() - 1) - (md.mu * r + 1));
  cert.traces_increasing = true;
  for (long i = 1; i < md.mu; ++i)
    cert.traces_increasing = cert.traces_increasing && cert.tr[i - 1] < cert.tr[i];
  cert.next_consistent = consistent(cert.after);

  std::ostringstream bad;
  if (!cert.colength_identity) bad << " colength-identity";
  if (!cert.sandwich) bad << " sandwich";
  if (!cert.length_drop) bad << " length-drop";
  if (!cert.min_step_drop) bad << " min-step-drop";
  if (!cert.top_stair) bad << " top-stair";
  if (!cert.traces_increasing) bad << " traces-increasing";
  if (!cert.next_consistent) bad << " next-consistent";
  if (!bad.str().empty())
    throw std::logic_error("step bookkeeping failed at r = " +
                           std::to_string(r) + " on E = " + E.to_string() +
                           ":" + bad.str());
  return cert;
}

UnloadingReport unloading_check(const Staircase& E, long r, long c) {
  UnloadingReport rep;
  rep.r = r;
  rep.c = c;
  MuData md = compute_mu(E, r, c);
  rep.mu = md.mu;
  const long m = md.mu * (r + 1);
  // k0 per range index j = 0..mu; n_j = (j-1) r for j >= 1, n_0 = 0.
  for (long j = 0; j <= md.mu; ++j) {
    long hprev = j >= 1 ? E.h(r * (j - 1)) : E.height();
    long hcur = E.h(r * j);
    rep.k0.push_back(hprev == hcur ? 0 : E.ell(hprev - 1) - r * (j - 1));
  }
  rep.all_ok = true;
  for (long i = 1; i <= m; ++i) {
    long jr = i == 1 ? 0 : (i - 2) / (r + 1) + 1;  // range index
    long njr = jr >= 1 ? (jr - 1) * r : 0;
    std::vector<long> di;
    for (long k = 0; k < r; ++k)
      di.push_back(k - rep.k0[jr] <= i - (njr + jr + 1) ? E.h(jr * r)
                                                        : E.h(jr * r) - 1);
    rep.d.push_back(std::move(di));

    UnloadingRow row;
    row.i = i;
    if ((i - 1) % (r + 1) == 0) {  // contact direction of block j
      long j = (i - 1) / (r + 1) + 1;
      row.j = j;
      row.fe = c + j;
      row.trace = c + j + 1;
    } else {
      row.j = jr;
      row.fe = E.h(jr * r) - 1;
      row.trace = E.h(i - jr);
    }
    row.ok = row.fe < row.trace;
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

StepCertificate height2_step(long c, const Staircase& E, long s) {
  if (E.height() > 2) fail("staircase height exceeds two");
  if (c != 2 * s) fail("intersection number must equal 2s");
  if (E.ell_hat(0) < s + 2) fail("first stair difference below s + 2");
  if (E.ell(1) < s) fail("second stair length below s");
  StepCertificate cert;
  cert.kind = StepKind::Height2;
  cert.before = SystemType{c, E, s};
  if (E.ell(1) <= 2 * s - 2) {
    cert.mu = 1;
    cert.after =
        SystemType{c + 1, height2_from(E.ell0() - s - 1, E.ell(1) - s), s + 1};
  } else {
    cert.mu = 2;
    cert.after = SystemType{
        c + 2, height2_from(E.ell0() - 2 * s - 2, E.ell(1) - 2 * s - 1), s + 1};
  }
  cert.next_consistent = consistent(cert.after);
  if (!cert.next_consistent)
    throw std::logic_error("height-two step produced inconsistent type");
  return cert;
}

StepCertificate kstep(long c, const Staircase& E, long s, long k) {
  if (E.height() > 2) fail("staircase height exceeds two");
  if (c != 2 * s) fail("intersection number must equal 2s");
  if (k < 1) fail("k must be positive");
  if (E.ell_hat(0) < s + 2 * k - 2) fail("first stair difference too small");
  if (E.ell0() < (2 * s + k) * (k - 1)) fail("first stair length too small");
  if (E.ell(1) < (2 * s + k - 1) * (k - 1)) fail("second stair length too small");
  StepCertificate cert;
  cert.kind = StepKind::KStep;
  cert.before = SystemType{c, E, s};
  cert.mu = 2 * (k - 1);
  cert.after = SystemType{c + 2 * (k - 1),
                          height2_from(E.ell0() - (2 * s + k) * (k - 1),
                                       E.ell(1) - (2 * s + k - 1) * (k - 1)),
                          s + k - 1};
  cert.next_consistent = consistent(cert.after);
  if (!cert.next_consistent)
    throw std::logic_error("k-step produced inconsistent type");
  return cert;
}

bool bottom_predicate(long c, const Staircase& E) {
  if (E.height() > 2) throw std::invalid_argument("height exceeds two");
  return E.ell0() > c && 2 * E.ell(1) <= c;
}

bool regheight2_predicate(long c, const Staircase& E) {
  if (E.height() > 2) throw std::invalid_argument("height exceeds two");
  long a = 2 * E.ell_hat(0) + c - 2;
  return a > 0 && a * a > 9 * (4 * E.ell(1) + c * c);
}

bool goesto2_check(long n, long e, long r) {
  long a = 4 * r * r + 2 * r + e * (2 * e * n - 3 * e - n);
  long b = e * (n - 1) * (2 * e - 1);
  return a <= 0 || a * a <= 3 * b * b;
}

bool goal2_generic_chain(long n, long e, long r) {
  long x = n - r;
  long s0 = isqrt_floor(n);
  long p = 8 * x + 4 * e * s0 - 10;
  if (p <= 0) return false;
  long q = 16 * n * e * (e + 1) - 32 * x - 16 * e * s0 + 8;
  if (q <= 0) return true;
  return p * p > 9 * q;
}

Verdict decide_regular(long n, long e) {
  Verdict v;
  if (e <= 2 || n < 4 * e * e) {
    v.status = VerdictStatus::HypothesisFailure;
    std::ostringstream os;
    os << "requires e > 2 and n >= 4e^2; got n = " << n << ", e = " << e;
    if (e <= 2) os << " (multiplicities up to two are settled classically)";
    v.detail = os.str();
    return v;
  }
  SystemType t{e, Staircase::e1(n, e), 1};
  long guard = 0;
  while (t.E.height() > 2) {
    if (++guard > n + 10) {
      v.status = VerdictStatus::Undecided;
      v.detail = "specialization chain did not reach height two";
      v.final_type = t;
      return v;
    }
    try {
      StepCertificate cert = step(t);
      t = cert.after;
      v.chain.push_back(std::move(cert));
    } catch (const PipelineHypothesisFailure& ex) {
      v.status = VerdictStatus::Undecided;
      v.detail = std::string("step hypothesis failed at r = ") +
                 std::to_string(t.r) + ": " + ex.what();
      v.final_type = t;
      return v;
    }
  }
  v.final_type = t;
  v.regheight2 = regheight2_predicate(t.c, t.E);
  v.bottom = bottom_predicate(t.c, t.E);
  v.goal2_chain = goal2_generic_chain(n, e, t.r);
  if (v.regheight2 || v.bottom) {
    v.status = VerdictStatus::Regular;
  } else {
    v.status = VerdictStatus::Undecided;
    v.detail = "height-two endgame predicates failed";
  }
  return v;
}

std::vector<RminClaim> rmin_checks(long n, long e, long r) {
  std::vector<RminClaim> out;
  Staircase e1 = Staircase::e1(n, e);
  SystemType t{e, e1, 1};
  std::vector<long> mus;  // mu_1, mu_2, ...
  bool reached_r = r == 1;
  while (t.r < r) {
    try {
      StepCertificate cert = step(t);
      mus.push_back(cert.mu);
      t = cert.after;
    } catch (const PipelineHypothesisFailure&) {
      break;
    } catch (const std::invalid_argument&) {
      break;
    }
    if (t.r == r) reached_r = true;
  }
  long m_sum = 0;
  for (long mu : mus) m_sum += mu;

  RminClaim a{"min stair difference >= n - r", reached_r, false, ""};
  if (reached_r) a.pass = t.E.ell_hat_min() >= n - r;
  out.push_back(a);

  RminClaim b{"(r-1)(r+2)e >= 2(n-1)(e - h)", reached_r, false, ""};
  if (reached_r)
    b.pass = (r - 1) * (r + 2) * e >= 2 * (n - 1) * (e - t.E.height());
  out.push_back(b);

  RminClaim cclaim{"colength drop = eM + binom(M+1,2)", reached_r, false, ""};
  if (reached_r) {
    long drop = e1.colength() - t.E.colength();
    cclaim.pass = drop == e * m_sum + binom2(m_sum + 1);
    std::ostringstream os;
    os << "drop " << drop << ", M " << m_sum;
    cclaim.detail = os.str();
  }
  out.push_back(cclaim);

  bool small_r = binom2(r) * e + r < n - 1;
  RminClaim d{"small r: chain defined with mu_i = e", small_r, false, ""};
  if (small_r) {
    d.pass = reached_r;
    for (long mu : mus) d.pass = d.pass && mu == e;
  }
  out.push_back(d);

  RminClaim f{"large r: colength drop >= e(n-1)/2", !small_r && reached_r,
              false, ""};
  if (f.applicable)
    f.pass = 2 * (e1.colength() - t.E.colength()) >= e * (n - 1);
  out.push_back(f);
  return out;
}

}  // namespace horace
