#pragma once

#include <limits>
#include <string>
#include <vector>

#include "horace/field.hpp"

namespace horace {

// A staircase E in Z^2_{>=0}: a set closed under adding the positive quadrant,
// stored as the non-increasing sequence of stair lengths
//   len[i] = min { e : (e, i) in E },  i = 0 .. h-1,
// with len[i] > 0 and len[i] = 0 for i >= h.
class Staircase {
 public:
  Staircase() = default;  // the full quadrant (empty complement)

  static Staircase from_lengths(std::vector<long> lengths);
  static Staircase parse(const std::string& csv);  // "12,9,6,3"

  // E1(n, e): the staircase with constant first difference n-1,
  // len[i] = (n-1) * (e - i) for 0 <= i < e.
  static Staircase e1(long n, long e);

  long height() const { return static_cast<long>(len_.size()); }
  long ell(long i) const {  // stair length at row i
    return (i >= 0 && i < height()) ? len_[i] : 0;
  }
  long h(long i) const;        // column height at column i
  long ell_hat(long i) const { return ell(i) - ell(i + 1); }
  long ell0() const { return ell(0); }   // l(E)
  long colength() const;

  // min of ell_hat(i) over 0 <= i < height()-1 (the top stair is excluded);
  // +infinity sentinel when the range is empty.
  long ell_hat_min() const;
  static constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

  bool gentle() const;             // h(i) <= h(i+1) + 1 for all i
  long h_r(long r) const;          // min { i : ell_hat(i) <= r }
  bool r_gentle(long r) const;     // ell_hat non-increasing on [h_r(r), inf)

  Staircase tau(long k) const;           // lengths max(len - k, 0)
  Staircase tilde(long r) const;         // clamp first differences by r,
                                         // top stair length kept unchanged
  Staircase delete_slice(long k) const;  // remove one complement column of
                                         // height exactly k
  bool can_delete_slice(long k) const { return k >= 1 && ell(k - 1) > ell(k); }

  // Decrement the first difference ell_hat at index i by one; all lengths at
  // rows <= i drop by one.  Same effect as delete_slice(i + 1) when legal.
  Staircase decrement_ell_hat(long i) const;

  bool contains(const Staircase& other) const;  // E >= other as subsets of Z^2
  bool operator==(const Staircase& o) const { return len_ == o.len_; }

  const std::vector<long>& lengths() const { return len_; }
  std::string to_string() const;

 private:
  std::vector<long> len_;
};

}  // namespace horace
