#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "modcurve/arith.hpp"

namespace modcurve {

// 2x2 matrix over Z/nZ, entries reduced to [0,n).  Packed into a u64 key
// (16 bits per entry) for set membership and deterministic ordering; this
// caps the supported modulus at 2^16-1, far above anything reachable here.
struct MatZN {
  i64 n = 1;
  i64 a = 0, b = 0, c = 0, d = 0;

  MatZN() = default;
  MatZN(i64 n_, i64 a_, i64 b_, i64 c_, i64 d_)
      : n(n_), a(mod_reduce(a_, n_)), b(mod_reduce(b_, n_)),
        c(mod_reduce(c_, n_)), d(mod_reduce(d_, n_)) {
    if (n_ < 1 || n_ >= (1 << 16)) throw std::domain_error("MatZN: bad modulus");
  }

  static MatZN identity(i64 n) { return {n, 1, 0, 0, 1}; }
  static MatZN minus_identity(i64 n) { return {n, -1, 0, 0, -1}; }

  u64 key() const {
    return (static_cast<u64>(a) << 48) | (static_cast<u64>(b) << 32) |
           (static_cast<u64>(c) << 16) | static_cast<u64>(d);
  }
  static MatZN from_key(u64 k, i64 n) {
    return {n, static_cast<i64>(k >> 48), static_cast<i64>((k >> 32) & 0xffff),
            static_cast<i64>((k >> 16) & 0xffff), static_cast<i64>(k & 0xffff)};
  }

  i64 det() const { return mod_reduce(a * d - b * c, n); }
  i64 trace() const { return mod_reduce(a + d, n); }

  MatZN operator*(const MatZN& o) const {
    return {n, a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  MatZN inverse() const {
    i64 di = inv_mod(det(), n);
    return {n, d * di, -b * di, -c * di, a * di};
  }
  MatZN transpose() const { return {n, a, c, b, d}; }
  MatZN reduced(i64 m) const { return {m, a, b, c, d}; }

  bool operator==(const MatZN& o) const {
    return n == o.n && a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const MatZN& o) const { return key() < o.key(); }

  bool is_identity() const { return a == 1 % n && b == 0 && c == 0 && d == 1 % n; }

  std::string str() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
           std::to_string(c) + "," + std::to_string(d) + "]]";
  }
};

// order of m in GL2(Z/nZ)
inline u64 element_order(const MatZN& m) {
  MatZN x = m;
  u64 k = 1;
  while (!x.is_identity()) {
    x = x * m;
    ++k;
    if (k > gl2_order(m.n)) throw std::logic_error("element_order: runaway");
  }
  return k;
}

}  // namespace modcurve
