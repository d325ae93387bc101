#include "horace/staircase.hpp"

#include <sstream>
#include <stdexcept>

namespace horace {

Staircase Staircase::from_lengths(std::vector<long> lengths) {
  while (!lengths.empty() && lengths.back() == 0) lengths.pop_back();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] <= 0) throw std::invalid_argument("stair lengths must be positive");
    if (i + 1 < lengths.size() && lengths[i] < lengths[i + 1])
      throw std::invalid_argument("stair lengths must be non-increasing");
  }
  Staircase s;
  s.len_ = std::move(lengths);
  return s;
}

Staircase Staircase::parse(const std::string& csv) {
  std::vector<long> v;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    v.push_back(std::stol(tok));
  }
  return from_lengths(std::move(v));
}

Staircase Staircase::e1(long n, long e) {
  if (n < 2 || e < 1) throw std::invalid_argument("e1: need n >= 2, e >= 1");
  std::vector<long> v(e);
  for (long i = 0; i < e; ++i) v[i] = (n - 1) * (e - i);
  return from_lengths(std::move(v));
}

long Staircase::h(long i) const {
  if (i < 0) return height();
  long k = 0;
  while (k < height() && len_[k] > i) ++k;
  return k;
}

long Staircase::colength() const {
  long s = 0;
  for (long l : len_) s += l;
  return s;
}

long Staircase::ell_hat_min() const {
  long m = kInfinity;
  for (long i = 0; i + 1 < height(); ++i) m = std::min(m, ell_hat(i));
  return m;
}

bool Staircase::gentle() const {
  for (long i = 0;; ++i) {
    if (h(i) == 0) return true;
    if (h(i) > h(i + 1) + 1) return false;
  }
}

long Staircase::h_r(long r) const {
  long i = 0;
  while (ell_hat(i) > r) ++i;  // ell_hat(i) = 0 for i >= height()
  return i;
}

bool Staircase::r_gentle(long r) const {
  for (long i = h_r(r); i < height(); ++i)
    if (ell_hat(i + 1) > ell_hat(i)) return false;
  return true;
}

Staircase Staircase::tau(long k) const {
  if (k < 0) throw std::invalid_argument("tau: negative shift");
  std::vector<long> v;
  v.reserve(len_.size());
  for (long l : len_) v.push_back(std::max(l - k, 0L));
  return from_lengths(std::move(v));
}

Staircase Staircase::tilde(long r) const {
  if (height() == 0) return *this;
  std::vector<long> v(height());
  v[height() - 1] = len_[height() - 1];  // top stair unchanged
  for (long i = height() - 2; i >= 0; --i)
    v[i] = v[i + 1] + std::max(ell_hat(i) - r, 0L);
  return from_lengths(std::move(v));
}

Staircase Staircase::delete_slice(long k) const {
  if (!can_delete_slice(k))
    throw std::invalid_argument("delete_slice: no complement column of height " +
                                std::to_string(k));
  std::vector<long> v(len_);
  for (long i = 0; i < k; ++i) v[i] -= 1;
  return from_lengths(std::move(v));
}

Staircase Staircase::decrement_ell_hat(long i) const {
  if (i < 0 || i >= height() || ell_hat(i) < 1)
    throw std::invalid_argument("decrement_ell_hat: first difference not positive");
  std::vector<long> v(len_);
  for (long j = 0; j <= i; ++j) v[j] -= 1;
  return from_lengths(std::move(v));
}

bool Staircase::contains(const Staircase& other) const {
  long n = std::max(height(), other.height());
  for (long i = 0; i < n; ++i)
    if (ell(i) > other.ell(i)) return false;
  return true;
}

std::string Staircase::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < len_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(len_[i]);
  }
  return s;
}

}  // namespace horace
