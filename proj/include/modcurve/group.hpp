#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "modcurve/matzn.hpp"

namespace modcurve {

namespace detail {

inline std::vector<u64> close_keys(const std::vector<MatZN>& gens, i64 n) {
  std::unordered_set<u64> seen;
  std::vector<MatZN> queue;
  MatZN id = MatZN::identity(n);
  seen.insert(id.key());
  queue.push_back(id);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    MatZN cur = queue[head];
    for (const MatZN& g : gens) {
      MatZN nx = cur * g;
      if (seen.insert(nx.key()).second) queue.push_back(nx);
    }
  }
  std::vector<u64> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Subgroup of GL2(Z/NZ) with full element enumeration.  Elements are kept as
// a sorted vector of packed keys; all derived data (order, index, level,
// admissibility flags, canonical key) is computed once on construction.
//
// Canonical key recipe (conjugation-invariant, stable across runs): FNV-1a
// over (modulus, order, level, -I flag, sorted det image, sorted multiset of
// (trace, det) pairs of all elements).
class GroupClass {
 public:
  GroupClass() = default;

  static GroupClass close_subgroup(const std::vector<MatZN>& gens, i64 n) {
    for (const MatZN& g : gens) {
      if (g.n != n) throw std::invalid_argument("close_subgroup: modulus mismatch");
      i64 x, y;
      if (ext_gcd(g.det(), n, x, y) != 1)
        throw std::invalid_argument("close_subgroup: generator determinant not a unit");
    }
    GroupClass g;
    g.modulus_ = n;
    g.generators_ = gens;
    g.elements_ = detail::close_keys(gens, n);
    g.finish();
    return g;
  }

  static GroupClass from_elements(std::vector<u64> elems, i64 n) {
    GroupClass g;
    g.modulus_ = n;
    std::sort(elems.begin(), elems.end());
    g.elements_ = std::move(elems);
    g.generators_ = g.find_generators();
    g.finish();
    return g;
  }

  static GroupClass full(i64 n) {
    std::vector<MatZN> gens = gl2_generators(n);
    return close_subgroup(gens, n);
  }

  i64 modulus() const { return modulus_; }
  u64 order() const { return elements_.size(); }
  u64 index() const { return index_; }
  i64 level() const { return level_; }
  const std::vector<MatZN>& generators() const { return generators_; }
  const std::vector<u64>& elements() const { return elements_; }
  bool contains(const MatZN& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m.key());
  }
  bool contains_key(u64 k) const {
    return std::binary_search(elements_.begin(), elements_.end(), k);
  }
  bool contains_minus_I() const { return has_minus_I_; }
  bool det_surjective() const { return det_surjective_; }
  u64 canonical_key() const { return canonical_key_; }

  MatZN element(std::size_t i) const { return MatZN::from_key(elements_[i], modulus_); }

  // image of the group in GL2(Z/MZ), M | N
  GroupClass reduce(i64 m) const {
    if (modulus_ % m != 0) throw std::invalid_argument("reduce: M does not divide N");
    if (m == modulus_) return *this;
    std::vector<MatZN> g;
    for (const MatZN& x : generators_) g.push_back(x.reduced(m));
    return close_subgroup(g, m);
  }

  // generating set of units of (Z/nZ)^x realized as diag(1,u), plus SL2 part
  static std::vector<MatZN> gl2_generators(i64 n) {
    std::vector<MatZN> gens;
    if (n == 1) return {MatZN::identity(1)};
    gens.push_back(MatZN(n, 1, 1, 0, 1));
    gens.push_back(MatZN(n, 1, 0, 1, 1));
    for (i64 u : unit_group_generators(n)) gens.push_back(MatZN(n, 1, 0, 0, u));
    return gens;
  }

  static std::vector<i64> unit_group_generators(i64 n) {
    if (n <= 2) return {1 % n};
    std::vector<i64> gens;
    for (auto [p, e] : factorize(n)) {
      i64 pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      std::vector<i64> local;
      if (p == 2) {
        if (pe >= 4) local.push_back(pe - 1);
        if (pe >= 8) local.push_back(5);
        if (pe == 4) local = {3};
        if (pe == 2) local = {1};
      } else {
        // smallest primitive root mod p^e
        i64 phi = pe / p * (p - 1);
        auto pf = factorize(phi);
        for (i64 g = 2;; ++g) {
          bool ok = true;
          for (auto [q, ee] : pf)
            if (pow_mod(g, phi / q, pe) == 1) { ok = false; break; }
          if (ok) { local.push_back(g); break; }
        }
      }
      // lift each local generator to a unit mod n congruent to 1 mod n/pe
      for (i64 u : local) {
        i64 rest = n / pe;
        // CRT: x = u mod pe, x = 1 mod rest
        i64 x = u;
        if (rest > 1) {
          i64 inv = inv_mod(pe % rest, rest);
          i64 t = mod_reduce((1 - u) % rest * inv % rest, rest);
          x = mod_reduce(u + pe * t, n);
        }
        gens.push_back(x);
      }
    }
    return gens;
  }

  // minimal generating sequence extracted greedily from the element list
  std::vector<MatZN> find_generators() const {
    std::vector<MatZN> gens;
    std::vector<u64> cur = detail::close_keys(gens, modulus_);
    while (cur.size() < elements_.size()) {
      for (u64 k : elements_) {
        if (!std::binary_search(cur.begin(), cur.end(), k)) {
          gens.push_back(MatZN::from_key(k, modulus_));
          break;
        }
      }
      cur = detail::close_keys(gens, modulus_);
    }
    return gens;
  }

  struct Admissibility {
    bool contains_minus_I = false;
    bool det_surjective = false;
    bool has_cc_element = false;
    bool all() const { return contains_minus_I && det_surjective && has_cc_element; }
  };

  Admissibility admissibility() const {
    Admissibility a;
    a.contains_minus_I = has_minus_I_;
    a.det_surjective = det_surjective_;
    a.has_cc_element = has_cc_element();
    return a;
  }

  // Contains an element GL2(Z/N)-conjugate to [1,0;0,-1] or [1,1;0,-1].
  // For odd N both model matrices are conjugate and a matrix is conjugate to
  // diag(1,-1) exactly when trace = 0 and det = -1 (it is then an involution
  // with free +-1 eigenspaces).  For 2-power N the two conjugation orbits are
  // computed once per modulus and cached.
  bool has_cc_element() const {
    if (modulus_ == 1) return true;
    if (modulus_ % 2 != 0) {
      i64 m1 = modulus_ - 1;
      for (u64 k : elements_) {
        MatZN x = MatZN::from_key(k, modulus_);
        if (x.trace() == 0 && x.det() == m1) return true;
      }
      return false;
    }
    const std::vector<u64>& orb = cc_orbit(modulus_);
    std::size_t i = 0, j = 0;
    while (i < elements_.size() && j < orb.size()) {
      if (elements_[i] == orb[j]) return true;
      if (elements_[i] < orb[j]) ++i; else ++j;
    }
    return false;
  }

  // conjugation orbit of the two complex-conjugation models, sorted keys
  static const std::vector<u64>& cc_orbit(i64 n) {
    static std::mutex mu;
    static std::map<i64, std::vector<u64>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<MatZN> gens = gl2_generators(n);
    std::unordered_set<u64> seen;
    std::vector<MatZN> queue;
    for (MatZN c : {MatZN(n, 1, 0, 0, -1), MatZN(n, 1, 1, 0, -1)}) {
      if (seen.insert(c.key()).second) queue.push_back(c);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      MatZN cur = queue[head];
      for (const MatZN& g : gens) {
        MatZN nx = g * cur * g.inverse();
        if (seen.insert(nx.key()).second) queue.push_back(nx);
      }
    }
    std::vector<u64> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return cache.emplace(n, std::move(out)).first->second;
  }

  std::vector<i64> det_image() const {
    std::unordered_set<i64> dets;
    for (u64 k : elements_) dets.insert(MatZN::from_key(k, modulus_).det());
    std::vector<i64> out(dets.begin(), dets.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void finish() {
    std::sort(elements_.begin(), elements_.end());
    u64 g = gl2_order(modulus_);
    if (g % elements_.size() != 0) throw std::logic_error("GroupClass: order does not divide |GL2|");
    index_ = g / elements_.size();
    has_minus_I_ = contains(MatZN::minus_identity(modulus_));
    det_surjective_ = det_image().size() == static_cast<std::size_t>(euler_phi(modulus_));
    level_ = compute_level();
    canonical_key_ = compute_key();
  }

  i64 compute_level() const {
    i64 lvl = modulus_;
    GroupClass cur = *this;
    bool changed = true;
    while (changed && lvl > 1) {
      changed = false;
      for (auto [p, e] : factorize(lvl)) {
        i64 m = lvl / p;
        GroupClass red = cur.reduce(m);
        u64 ker = gl2_order(lvl) / gl2_order(m);
        if (red.order() * ker == cur.order()) {
          cur = red;
          lvl = m;
          changed = true;
          break;
        }
      }
    }
    return lvl;
  }

  u64 compute_key() const {
    u64 h = 0xcbf29ce484222325ULL;
    auto mix = [&h](u64 v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
      }
    };
    mix(static_cast<u64>(modulus_));
    mix(order());
    mix(static_cast<u64>(level_));
    mix(has_minus_I_ ? 1 : 0);
    for (i64 d : det_image()) mix(static_cast<u64>(d));
    std::vector<u64> td;
    td.reserve(elements_.size());
    for (u64 k : elements_) {
      MatZN x = MatZN::from_key(k, modulus_);
      td.push_back((static_cast<u64>(x.trace()) << 20) | static_cast<u64>(x.det()));
    }
    std::sort(td.begin(), td.end());
    for (u64 v : td) mix(v);
    return h;
  }

  i64 modulus_ = 1;
  std::vector<MatZN> generators_;
  std::vector<u64> elements_{MatZN::identity(1).key()};
  u64 index_ = 1;
  i64 level_ = 1;
  bool has_minus_I_ = true;
  bool det_surjective_ = true;
  u64 canonical_key_ = 0;
};

// Representatives A_1=I, A_2, ... of the left cosets N_GL2(G)\GL2(Z/N),
// found by BFS over GL2 generators; deterministic.  The rep count is
// [GL2 : N(G)] <= [GL2 : G], so this is only usable for small index.
inline std::vector<MatZN> normalizer_coset_reps(const GroupClass& g) {
  i64 n = g.modulus();
  std::vector<MatZN> gl2gens = GroupClass::gl2_generators(n);
  auto normalizes = [&](const MatZN& b) {
    MatZN bi = b.inverse();
    for (const MatZN& x : g.generators())
      if (!g.contains(b * x * bi)) return false;
    return true;
  };
  std::vector<MatZN> reps{MatZN::identity(n)};
  std::vector<MatZN> queue{MatZN::identity(n)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    MatZN cur = queue[head];
    for (const MatZN& s : gl2gens) {
      MatZN cand = cur * s;
      bool known = false;
      for (const MatZN& r : reps) {
        if (normalizes(cand * r.inverse())) { known = true; break; }
      }
      if (!known) {
        reps.push_back(cand);
        queue.push_back(cand);
      }
    }
  }
  return reps;
}

namespace detail {

inline bool maps_generators_into(const GroupClass& g1, const GroupClass& g2, const MatZN& a) {
  MatZN ai = a.inverse();
  for (const MatZN& x : g1.generators())
    if (!g2.contains(a * x * ai)) return false;
  return true;
}

// all of GL2(Z/N) as matrices, BFS order; only for small moduli
inline std::vector<MatZN> all_gl2(i64 n) {
  GroupClass g = GroupClass::full(n);
  std::vector<MatZN> out;
  out.reserve(g.order());
  for (u64 k : g.elements()) out.push_back(MatZN::from_key(k, n));
  return out;
}

}  // namespace detail

// Deterministic conjugacy witness: A with A*G1*A^-1 = G2, if one exists.
// If A works then so does every element of N(G2)*A, so candidates only need
// to run over coset representatives of N_GL2(G2)\GL2 -- at most [GL2:G2]
// of them.  For large-index groups over small moduli we fall back to a
// scan of GL2.
inline std::optional<MatZN> is_conjugate(const GroupClass& g1, const GroupClass& g2) {
  if (g1.modulus() != g2.modulus())
    throw std::invalid_argument("is_conjugate: modulus mismatch");
  if (g1.order() != g2.order() || g1.level() != g2.level() ||
      g1.canonical_key() != g2.canonical_key())
    return std::nullopt;
  if (g1.index() > 4096) {
    if (gl2_order(g1.modulus()) > 8'000'000ULL)
      throw std::runtime_error("is_conjugate: group index too large for witness search");
    for (const MatZN& a : detail::all_gl2(g1.modulus()))
      if (detail::maps_generators_into(g1, g2, a)) return a;
    return std::nullopt;
  }
  for (const MatZN& r : normalizer_coset_reps(g2))
    if (detail::maps_generators_into(g1, g2, r)) return r;
  return std::nullopt;
}

// Is some conjugate of g1 a subgroup of g2?  Returns the conjugator.
// Containment A*G1*A^-1 <= G2 is invariant under left multiplication of A
// by N(G2), so coset reps of N(G2)\GL2 cover all possibilities.
inline std::optional<MatZN> conjugate_into(const GroupClass& g1, const GroupClass& g2) {
  if (g1.modulus() != g2.modulus())
    throw std::invalid_argument("conjugate_into: modulus mismatch");
  if (g2.order() % g1.order() != 0) return std::nullopt;
  if (g2.index() > 4096) {
    if (gl2_order(g2.modulus()) > 8'000'000ULL)
      throw std::runtime_error("conjugate_into: index too large for witness search");
    for (const MatZN& a : detail::all_gl2(g1.modulus()))
      if (detail::maps_generators_into(g1, g2, a)) return a;
    return std::nullopt;
  }
  for (const MatZN& r : normalizer_coset_reps(g2))
    if (detail::maps_generators_into(g1, g2, r)) return r;
  return std::nullopt;
}

}  // namespace modcurve
