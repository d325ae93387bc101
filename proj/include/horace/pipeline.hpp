#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "horace/staircase.hpp"

namespace horace {

// A degeneration state: c is the intersection number of the divisor class
// with the exceptional curve, E the contact staircase, r the contact order.
struct SystemType {
  long c = 0;
  Staircase E;
  long r = 1;
};

class PipelineHypothesisFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// c >= ell_E(h^r) + r * h^r.  Throws if E is not r-gentle (the contact
// length formula is undefined then); the cheap sufficient condition
// ell_hat_min >= r+1 is tried before the full scan.
bool consistent(const SystemType& t);

enum class StepKind { Step, TrivStep, Height2, KStep };

struct StepCertificate {
  StepKind kind = StepKind::Step;
  SystemType before, after;
  long mu = 0;
  std::vector<long> s;   // s_i = sum of column heights over one r-window
  std::vector<long> tr;  // tr_i = c + i - s_i
  // verified claims (all must hold; a false entry aborts construction)
  bool colength_identity = false;  // claim 1
  bool sandwich = false;           // claim 2
  bool length_drop = false;        // claim 3
  bool min_step_drop = false;      // claim 4
  bool top_stair_guard = false;    // claim 5 guard active?
  bool top_stair = false;          // claim 5 conclusion (when guard active)
  bool traces_increasing = false;
  bool next_consistent = false;
};

// One elimination step: requires consistent(t), ell_hat_min >= r + h^r + 1
// and h^r >= 2.  mu = 0 degenerates to the trivial transition (same c, E).
StepCertificate step(const SystemType& t);

struct UnloadingRow {
  long i = 0, j = 0;
  long fe = 0;     // intersection number of the unloaded class
  long trace = 0;  // trace value it must stay strictly below
  bool ok = false;
};
struct UnloadingReport {
  long mu = 0, r = 0, c = 0;
  std::vector<long> k0;                 // per block index 0..mu(r+1)-1 range j
  std::vector<std::vector<long>> d;     // d^i_k, k = 0..r-1, per position
  std::vector<UnloadingRow> rows;
  bool all_ok = false;
};

// Re-derives the unloaded divisor classes of a step on (E, r, c) with the
// uniform block structure (each block = one contact direction followed by
// r slice directions) and verifies their intersection numbers stay strictly
// below the trace values.
UnloadingReport unloading_check(const Staircase& E, long r, long c);

// Height-two transitions (c must equal 2s).
StepCertificate height2_step(long c, const Staircase& E, long s);
StepCertificate kstep(long c, const Staircase& E, long s, long k);

bool bottom_predicate(long c, const Staircase& E);
bool regheight2_predicate(long c, const Staircase& E);

// With A = 4r^2 + 2r + e(2en - 3e - n) and B = e(n-1)(2e-1):
// true iff A <= 0 or A^2 <= 3 B^2.
bool goesto2_check(long n, long e, long r);

// The sufficient endgame inequality evaluated with the generic lower bound
// n - r in place of the first stair difference; exact via integer square
// roots (conservative: may return false when the real inequality holds).
bool goal2_generic_chain(long n, long e, long r);

enum class VerdictStatus { Regular, Undecided, HypothesisFailure };

struct Verdict {
  VerdictStatus status = VerdictStatus::Undecided;
  std::vector<StepCertificate> chain;
  SystemType final_type;
  bool regheight2 = false;
  bool bottom = false;
  bool goal2_chain = false;  // recorded, not required for the verdict
  std::string detail;
};

// Decide regularity of the n-point multiplicity-e system via the
// specialization chain.  Requires n >= 4e^2 and e > 2; other inputs yield
// a HypothesisFailure verdict.
Verdict decide_regular(long n, long e);

struct RminClaim {
  std::string name;
  bool applicable = false;
  bool pass = false;
  std::string detail;
};

// Consistency checks of the mu-sequence bookkeeping against a fresh
// pipeline run from (e, E1(n,e), 1).
std::vector<RminClaim> rmin_checks(long n, long e, long r);

}  // namespace horace
