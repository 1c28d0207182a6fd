#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace modcurve {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline i64 mod_reduce(i64 a, i64 n) {
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 n) { return (a * b) % n; }

inline i64 pow_mod(i64 a, u64 e, i64 n) {
  i64 r = 1 % n;
  a = mod_reduce(a, n);
  while (e) {
    if (e & 1) r = mul_mod(r, a, n);
    a = mul_mod(a, a, n);
    e >>= 1;
  }
  return r;
}

// ax + by = g
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline i64 inv_mod(i64 a, i64 n) {
  i64 x, y;
  i64 g = ext_gcd(mod_reduce(a, n), n, x, y);
  if (g != 1) throw std::domain_error("inv_mod: not a unit");
  return mod_reduce(x, n);
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> f;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      f.push_back({p, e});
    }
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline i64 euler_phi(i64 n) {
  i64 r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline bool is_prime_power(i64 n, i64* prime = nullptr) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (prime) *prime = f[0].first;
  return true;
}

// |GL2(Z/nZ)| = n^4 prod_{p|n} (1-1/p)(1-1/p^2)
inline u64 gl2_order(i64 n) {
  if (n == 1) return 1;
  u64 r = 1;
  for (auto [p, e] : factorize(n)) {
    u64 pe = 1;
    for (int i = 0; i < e; ++i) pe *= static_cast<u64>(p);
    u64 q = static_cast<u64>(p);
    // p^(4e-3) * (p-1)^2 * (p+1)
    u64 t = pe * pe * pe * pe;
    t = t / q / q / q;
    r *= t * (q - 1) * (q - 1) * (q + 1);
  }
  return r;
}

inline u64 sl2_order(i64 n) { return gl2_order(n) / static_cast<u64>(euler_phi(n)); }

// Kronecker symbol (a|n), n arbitrary integer.
inline int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  int v = 0;
  while (n % 2 == 0) { n /= 2; ++v; }
  if (v % 2 == 1) {
    i64 am = mod_reduce(a, 8);
    if (am % 2 == 0) return 0;
    if (am == 3 || am == 5) sign = -sign;
  }
  a = mod_reduce(a, n);
  while (a != 0) {
    int w = 0;
    while (a % 2 == 0) { a /= 2; ++w; }
    if (w % 2 == 1 && (n % 8 == 3 || n % 8 == 5)) sign = -sign;
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    std::swap(a, n);
    a = mod_reduce(a, n);
  }
  return n == 1 ? sign : 0;
}

inline bool is_fundamental_discriminant(i64 d) {
  if (d == 1 || d == 0) return false;
  auto squarefree = [](i64 m) {
    if (m < 0) m = -m;
    for (i64 p = 2; p * p <= m; ++p)
      if (m % (p * p) == 0) return false;
    return true;
  };
  i64 r = mod_reduce(d, 4);
  if (r == 1) return squarefree(d);
  if (r == 0) {
    i64 q = d / 4;
    i64 qr = mod_reduce(q, 4);
    return (qr == 2 || qr == 3) && squarefree(q);
  }
  return false;
}

}  // namespace modcurve
