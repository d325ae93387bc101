#pragma once

#include <cstdint>
#include <stdexcept>

namespace horace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Default working prime: large enough that all binomial coefficients and
// intersection numbers appearing in the supported parameter ranges are
// nonzero mod p whenever they are nonzero over the integers.
inline constexpr u64 kDefaultPrime = 1000003;

inline u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 mulm(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

inline u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invm(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("division by zero mod p");
  return powm(a, p - 2, p);  // p prime
}

inline u64 modval(i64 v, u64 p) {
  i64 r = v % static_cast<i64>(p);
  if (r < 0) r += static_cast<i64>(p);
  return static_cast<u64>(r);
}

}  // namespace horace
