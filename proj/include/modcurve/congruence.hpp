#pragma once

#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "modcurve/group.hpp"

namespace modcurve {

// Subgroup of SL2(Z/NZ); the congruence subgroup it describes is the full
// preimage in SL2(Z).  Plain convention: h in image(G); transpose convention
// (used by everything Siegel-related): h^t in image(G).
enum class Sl2Convention { plain, transpose };

inline GroupClass sl2_image(const GroupClass& g, Sl2Convention conv) {
  std::vector<u64> elems;
  i64 n = g.modulus();
  for (u64 k : g.elements()) {
    MatZN m = MatZN::from_key(k, n);
    if (m.det() != 1 % n) continue;
    elems.push_back(conv == Sl2Convention::plain ? k : m.transpose().key());
  }
  return GroupClass::from_elements(std::move(elems), n);
}

// all of SL2(Z/NZ), cached
inline const GroupClass& sl2_full(i64 n) {
  static std::mutex mu;
  static std::map<i64, GroupClass> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<MatZN> gens{MatZN(n, 1, 1, 0, 1), MatZN(n, 1, 0, 1, 1)};
    it = cache.emplace(n, GroupClass::close_subgroup(gens, n)).first;
  }
  return it->second;
}

struct CuspDatum {
  i64 a = 1, b = 0;     // representative primitive vector (column) mod N
  i64 width = 1;
  int orbit_id = 0;
};

// integer 2x2 with det 1; used for the SL2(Z) lifts A_j with A_j*infty = cusp
struct MatZ {
  i64 a = 1, b = 0, c = 0, d = 1;
  MatZ operator*(const MatZ& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  MatZ inverse() const { return {d, -b, -c, a}; }  // det 1
  MatZN mod(i64 n) const { return {n, a, b, c, d}; }
  MatZ transpose() const { return {a, c, b, d}; }
  i64 det() const { return a * d - b * c; }
};

// lift (a,b) mod N with gcd(a,b,N)=1 to a coprime integer pair
inline std::pair<i64, i64> lift_primitive(i64 a, i64 b, i64 n) {
  a = mod_reduce(a, n);
  b = mod_reduce(b, n);
  if (a == 0 && b == 0) throw std::invalid_argument("lift_primitive: zero vector");
  for (i64 t = 0; t < n; ++t) {
    i64 bb = b + t * n;
    i64 x, y;
    if (ext_gcd(a, bb, x, y) == 1) return {a, bb};
  }
  // a == 0 case handled by b lifts above unless gcd(a,n)>1 and b.. try shifting a
  for (i64 t = 0; t < n; ++t) {
    i64 aa = a + t * n;
    i64 x, y;
    if (ext_gcd(aa, b, x, y) == 1) return {aa, b};
  }
  throw std::logic_error("lift_primitive failed");
}

inline i64 floor_div(i64 x, i64 y) {
  i64 q = x / y, r = x % y;
  return (r != 0 && ((r < 0) != (y < 0))) ? q - 1 : q;
}

// A in SL2(Z) with first column (a,b); second column reduced modulo the
// first for a fixed tie-break
inline MatZ cusp_matrix(i64 a, i64 b, i64 n) {
  auto [aa, bb] = lift_primitive(a, b, n);
  i64 x, y;
  ext_gcd(aa, bb, x, y);  // aa*x + bb*y = 1
  i64 c2a = -y, c2b = x;  // det(aa, c2a; bb, c2b) = 1
  i64 q = bb != 0 ? floor_div(c2b, bb) : floor_div(c2a, aa);
  c2a -= q * aa;
  c2b -= q * bb;
  MatZ m{aa, c2a, bb, c2b};
  if (m.det() != 1) throw std::logic_error("cusp_matrix: det != 1");
  return m;
}

// Cusps of the congruence subgroup attached to H (which must contain -I for
// N > 2): orbits of +-H on the order-N vectors in (Z/N)^2, cusp (1,0) first.
inline std::vector<CuspDatum> cusps(const GroupClass& h) {
  i64 n = h.modulus();
  if (n > 2 && !h.contains(MatZN::minus_identity(n)))
    throw std::invalid_argument("cusps: -I not in H");
  auto pack = [n](i64 a, i64 b) { return static_cast<u64>(mod_reduce(a, n)) * static_cast<u64>(n) + static_cast<u64>(mod_reduce(b, n)); };
  std::vector<int> orbit(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::pair<i64, i64>> reps;
  auto explore = [&](i64 a0, i64 b0) {
    if (orbit[pack(a0, b0)] != -1) return;
    int id = static_cast<int>(reps.size());
    reps.push_back({a0, b0});
    std::vector<std::pair<i64, i64>> queue{{a0, b0}};
    orbit[pack(a0, b0)] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [a, b] = queue[head];
      auto push = [&](i64 aa, i64 bb) {
        u64 p = pack(aa, bb);
        if (orbit[p] == -1) {
          orbit[p] = id;
          queue.push_back({mod_reduce(aa, n), mod_reduce(bb, n)});
        }
      };
      for (const MatZN& g : h.generators()) {
        push(g.a * a + g.b * b, g.c * a + g.d * b);
        MatZN gi = g.inverse();
        push(gi.a * a + gi.b * b, gi.c * a + gi.d * b);
      }
      push(-a, -b);
    }
  };
  auto order_n = [&](i64 a, i64 b) {
    i64 x, y;
    return ext_gcd(ext_gcd(a, b, x, y), n, x, y) == 1;
  };
  if (n == 1) return {CuspDatum{0, 0, 1, 0}};
  explore(1, 0);
  for (i64 a = 0; a < n; ++a)
    for (i64 b = 0; b < n; ++b)
      if (order_n(a, b)) explore(a, b);
  std::vector<CuspDatum> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CuspDatum c;
    c.a = reps[i].first;
    c.b = reps[i].second;
    c.orbit_id = static_cast<int>(i);
    c.width = 0;
    out.push_back(c);
  }
  // widths
  for (CuspDatum& c : out) {
    MatZ aj = cusp_matrix(c.a, c.b, n);
    MatZN ajm = aj.mod(n);
    MatZN aji = ajm.inverse();
    for (i64 w = 1; w <= n; ++w) {
      if (n % w != 0) continue;
      MatZN conj = ajm * MatZN(n, 1, w, 0, 1) * aji;
      if (h.contains(conj)) { c.width = w; break; }
    }
    if (c.width == 0) throw std::logic_error("cusp width not found");
  }
  return out;
}

struct EllipticCounts {
  u64 nu2 = 0, nu3 = 0;
};

namespace detail {

// right-coset index map of H in SL2(Z/N): coset_of[elem index] for the cached
// full SL2 enumeration; returns number of cosets
struct CosetTable {
  std::unordered_map<u64, u32> elem_index;
  std::vector<u32> coset_of;
  std::vector<u64> coset_rep;
};

inline CosetTable coset_table(const GroupClass& h) {
  const GroupClass& sl2 = sl2_full(h.modulus());
  CosetTable t;
  t.elem_index.reserve(sl2.order() * 2);
  for (u64 i = 0; i < sl2.order(); ++i) t.elem_index.emplace(sl2.elements()[i], static_cast<u32>(i));
  t.coset_of.assign(sl2.order(), 0xffffffffu);
  for (u64 i = 0; i < sl2.order(); ++i) {
    if (t.coset_of[i] != 0xffffffffu) continue;
    u32 id = static_cast<u32>(t.coset_rep.size());
    MatZN g = MatZN::from_key(sl2.elements()[i], h.modulus());
    t.coset_rep.push_back(g.key());
    for (u64 hk : h.elements()) {
      MatZN hg = MatZN::from_key(hk, h.modulus()) * g;
      t.coset_of[t.elem_index.at(hg.key())] = id;
    }
  }
  return t;
}

}  // namespace detail

// nu2 = cosets of H in SL2 fixed by right multiplication by S, nu3 by ST;
// with -I in H these count the elliptic points of order 2 and 3.
inline EllipticCounts elliptic_counts(const GroupClass& h) {
  i64 n = h.modulus();
  if (n > 2 && !h.contains(MatZN::minus_identity(n)))
    throw std::invalid_argument("elliptic_counts: -I not in H");
  if (n == 1) return {1, 1};
  detail::CosetTable t = detail::coset_table(h);
  MatZN s(n, 0, -1, 1, 0), st(n, 0, -1, 1, 1);
  EllipticCounts e;
  for (u64 rep : t.coset_rep) {
    MatZN g = MatZN::from_key(rep, n);
    MatZN gi = g.inverse();
    if (h.contains(g * s * gi)) ++e.nu2;
    if (h.contains(g * st * gi)) ++e.nu3;
  }
  return e;
}

// genus of X_Gamma for the congruence subgroup attached to H (-I in H)
inline int genus(const GroupClass& h) {
  i64 n = h.modulus();
  if (n == 1) return 0;
  if (n > 2 && !h.contains(MatZN::minus_identity(n)))
    throw std::invalid_argument("genus: -I not in H");
  u64 mu = sl2_full(n).order() / h.order();   // = [PSL2 : Hbar] since -I in H
  EllipticCounts e = elliptic_counts(h);
  u64 ninf = cusps(h).size();
  // g = 1 + mu/12 - nu2/4 - nu3/3 - ninf/2, exact over /12
  i64 twelve_g = 12 + static_cast<i64>(mu) - 3 * static_cast<i64>(e.nu2) -
                 4 * static_cast<i64>(e.nu3) - 6 * static_cast<i64>(ninf);
  if (twelve_g % 12 != 0 || twelve_g < 0)
    throw std::logic_error("genus: non-integral or negative genus");
  return static_cast<int>(twelve_g / 12);
}

}  // namespace modcurve
