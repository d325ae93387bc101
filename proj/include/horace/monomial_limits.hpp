#pragma once

#include <string>

#include "horace/limits.hpp"
#include "horace/staircase.hpp"

namespace horace {

class HypothesisFailure : public std::runtime_error {
 public:
  HypothesisFailure(int idx, const std::string& what)
      : std::runtime_error(what), index(idx) {}
  int index;  // 1..4 theorem hypotheses; 0 = emitted plan infeasible
};

// Generators x^{e1} f^{e2} over the minimal corners of E, working in
// coordinates where f is the second variable (so the ideal is monomial).
// vertical = true replaces f = x+y+t by f = y+t.
EngineInput family_input(const Staircase& E, int p1, bool vertical = false,
                         u64 prime = kDefaultPrime);

// Number of x entries among the first i entries of the block sequence,
// computed as i - 1 - max{ k : m_1 + ... + m_k <= i - 1 }.
long sigma_blocks(const std::vector<long>& m, long i);
std::vector<YVar> y_seq(const std::vector<long>& m);
std::vector<long> block_offsets(const std::vector<long>& m);  // n_j, 1-based

// tau(E, sigma_m(i)): the combinatorial value of I_t : y_1..y_i.
Staircase colon_formula(const Staircase& E, const std::vector<long>& m, long i);

// x-trace colength h(E); valid for every truncation order.
long trace_formula_x(const Staircase& E);

struct YTraceFormula {
  long colength;       // h_E(p-1)
  Staircase residual;  // slice of height h_E(p-1) deleted
};
// Requires E gentle and p a stair length of E.
YTraceFormula trace_formula_y(const Staircase& E, long p);

struct StcresPlan {
  std::vector<YVar> ys;
  std::vector<int> ps;
  std::vector<long> expected_tr;
  Staircase e_prime;
  long mu = 0, m = 0;
};

StcresPlan stcres_plan(const Staircase& E, const std::vector<long>& tr,
                       const std::vector<long>& m);

struct StcresVerification {
  bool ok = false;
  std::string detail;  // first mismatch, empty when ok
  StcresPlan plan;
};

StcresVerification verify_stcres(const Staircase& E, const std::vector<long>& tr,
                                 const std::vector<long>& m,
                                 u64 prime = kDefaultPrime);

}  // namespace horace
