#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modcurve/congruence.hpp"
#include "modcurve/group.hpp"

using namespace modcurve;

TEST_CASE("closure basics") {
  // empty generating set
  GroupClass t = GroupClass::close_subgroup({}, 3);
  CHECK(t.order() == 1);
  CHECK(t.index() == 48);

  // <-I> at N=5
  GroupClass mi = GroupClass::close_subgroup({MatZN::minus_identity(5)}, 5);
  CHECK(mi.order() == 2);

  // the 3B0-3a generators give index 4
  GroupClass g3b = GroupClass::close_subgroup({MatZN(3, 0, 1, 2, 1), MatZN(3, 1, 2, 0, 2)}, 3);
  CHECK(g3b.index() == 4);

  // rejected input: non-unit determinant
  CHECK_THROWS(GroupClass::close_subgroup({MatZN(4, 2, 0, 0, 1)}, 4));
}

TEST_CASE("reduction") {
  GroupClass g9 = GroupClass::full(9);
  GroupClass g3 = g9.reduce(3);
  CHECK(g3.order() == gl2_order(3));
  CHECK_THROWS(g9.reduce(2));

  // 9B0-9a reduces to a conjugate of 3B0-3a
  GroupClass g9b = GroupClass::close_subgroup(
      {MatZN(9, 1, 1, 0, 1), MatZN(9, 2, 0, 0, 5), MatZN(9, 1, 0, 0, 2)}, 9);
  GroupClass g3b = GroupClass::close_subgroup({MatZN(3, 0, 1, 2, 1), MatZN(3, 1, 2, 0, 2)}, 3);
  CHECK(is_conjugate(g9b.reduce(3), g3b).has_value());

  // identity reduction
  GroupClass same = g9b.reduce(9);
  CHECK(same.elements() == g9b.elements());
}

TEST_CASE("levels") {
  CHECK(GroupClass::full(8).level() == 1);

  GroupClass g9c = GroupClass::close_subgroup(
      {MatZN(9, 2, 0, 0, 5), MatZN(9, 4, 2, 3, 4), MatZN(9, 1, 0, 0, 2)}, 9);
  CHECK(g9c.level() == 9);

  // full preimage mod 9 of the 3B0-3a group has level 3
  GroupClass g3b = GroupClass::close_subgroup({MatZN(3, 0, 1, 2, 1), MatZN(3, 1, 2, 0, 2)}, 3);
  std::vector<u64> pre;
  GroupClass full9 = GroupClass::full(9);
  for (u64 k : full9.elements())
    if (g3b.contains(MatZN::from_key(k, 9).reduced(3))) pre.push_back(k);
  GroupClass lifted = GroupClass::from_elements(std::move(pre), 9);
  CHECK(lifted.level() == 3);
  CHECK(lifted.index() == g3b.index());
}

TEST_CASE("conjugacy") {
  GroupClass g = GroupClass::close_subgroup(
      {MatZN(5, 2, 0, 0, 3), MatZN(5, 1, 0, 1, 1), MatZN(5, 1, 0, 0, 2)}, 5);
  MatZN a(5, 1, 2, 0, 1);
  std::vector<MatZN> conj_gens;
  for (const MatZN& x : g.generators()) conj_gens.push_back(a * x * a.inverse());
  GroupClass gc = GroupClass::close_subgroup(conj_gens, 5);
  auto w = is_conjugate(g, gc);
  REQUIRE(w.has_value());
  MatZN wi = w->inverse();
  for (const MatZN& x : g.generators()) CHECK(gc.contains(*w * x * wi));

  // self-conjugacy yields a witness (identity is the first coset rep)
  auto self = is_conjugate(g, g);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());

  // 5D0-5a vs 5D0-5b are distinct classes
  GroupClass d5a = GroupClass::close_subgroup({MatZN(5, 4, 0, 1, 4), MatZN(5, 1, 0, 0, 2)}, 5);
  GroupClass d5b = GroupClass::close_subgroup({MatZN(5, 4, 0, 1, 4), MatZN(5, 2, 0, 0, 1)}, 5);
  CHECK(d5a.index() == 12);
  CHECK(d5b.index() == 12);
  CHECK(!is_conjugate(d5a, d5b).has_value());

  CHECK_THROWS(is_conjugate(g, GroupClass::full(3)));
}

TEST_CASE("admissibility flags") {
  auto adm_full = GroupClass::full(7).admissibility();
  CHECK(adm_full.contains_minus_I);
  CHECK(adm_full.det_surjective);
  CHECK(adm_full.has_cc_element);

  GroupClass mi = GroupClass::close_subgroup({MatZN::minus_identity(5)}, 5);
  auto adm = mi.admissibility();
  CHECK(adm.contains_minus_I);
  CHECK(!adm.det_surjective);

  // 2-power moduli use the cached conjugation orbits
  GroupClass g8 = GroupClass::full(8);
  CHECK(g8.admissibility().has_cc_element);
  GroupClass sl8 = sl2_image(g8, Sl2Convention::plain);
  CHECK(!sl8.admissibility().det_surjective);
}

TEST_CASE("lagrange and reduction homomorphism on random subgroups") {
  std::mt19937_64 rng(20240511);
  for (i64 n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}) {
    GroupClass full = GroupClass::full(n);
    for (int trial = 0; trial < 7; ++trial) {
      std::vector<MatZN> gens;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i)
        gens.push_back(MatZN::from_key(full.elements()[rng() % full.order()], n));
      GroupClass g = GroupClass::close_subgroup(gens, n);
      CHECK(gl2_order(n) % g.order() == 0);
      // close(reduce(gens)) == reduce(close(gens)) for each divisor
      for (i64 m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        std::vector<MatZN> rg;
        for (const MatZN& x : gens) rg.push_back(x.reduced(m));
        GroupClass a = GroupClass::close_subgroup(rg, m);
        GroupClass b = g.reduce(m);
        CHECK(a.elements() == b.elements());
      }
    }
  }
}

TEST_CASE("conjugacy is an equivalence on sampled groups") {
  std::mt19937_64 rng(7);
  GroupClass full = GroupClass::full(8);
  std::vector<GroupClass> gs;
  for (int i = 0; i < 6; ++i) {
    std::vector<MatZN> gens{MatZN::minus_identity(8)};
    for (int j = 0; j < 2; ++j)
      gens.push_back(MatZN::from_key(full.elements()[rng() % full.order()], 8));
    gs.push_back(GroupClass::close_subgroup(gens, 8));
  }
  for (auto& a : gs) {
    for (auto& b : gs) {
      auto w1 = is_conjugate(a, b);
      auto w2 = is_conjugate(b, a);
      CHECK(w1.has_value() == w2.has_value());
      if (w1) {
        // witness validity by direct set equality
        MatZN w = *w1, wi = w1->inverse();
        std::vector<u64> img;
        for (u64 k : a.elements()) img.push_back((w * MatZN::from_key(k, 8) * wi).key());
        std::sort(img.begin(), img.end());
        CHECK(img == b.elements());
      }
    }
  }
}
