#include <doctest.h>

#include <algorithm>
#include <set>

#include "msat/error.hpp"
#include "msat/root_datum.hpp"
#include "test_util.hpp"

using namespace msat;
using msat_test::all_levis;
using msat_test::rand_int;
using msat_test::random_dominant;

TEST_CASE("standard builders and name parsing") {
  CHECK(build_standard("GL3")->cochar_rank() == 3);
  CHECK(build_standard("GL3")->num_simple() == 2);
  CHECK(build_standard("SL4")->cochar_rank() == 3);
  CHECK(build_standard("PGL2")->cochar_rank() == 1);
  CHECK(build_standard("Sp4")->cochar_rank() == 2);
  CHECK(build_standard("Sp6")->num_simple() == 3);
  CHECK(build_standard(Family::GL, 1)->num_simple() == 0);
  CHECK_THROWS_AS(build_standard("Sp3"), invalid_input);   // odd symplectic size
  CHECK_THROWS_AS(build_standard("SL1"), invalid_input);
  CHECK_THROWS_AS(build_standard("Xq7"), invalid_input);
  CHECK_THROWS_AS(build_standard("GL0"), invalid_input);
}

TEST_CASE("cartan matrices have the right shape") {
  auto gl3 = build_standard("GL3");
  CHECK(gl3->cartan(0, 0) == 2);
  CHECK(gl3->cartan(0, 1) == -1);
  auto sp4 = build_standard("Sp4");
  // C_2: <alpha_1, alpha_2^vee> = -1, <alpha_2, alpha_1^vee> = -2.
  CHECK(sp4->cartan(0, 0) == 2);
  CHECK(sp4->cartan(1, 1) == 2);
  CHECK((sp4->cartan(0, 1) * sp4->cartan(1, 0)) == 2);
  // All presentations of A_1 have the same 1x1 cartan matrix.
  for (const char* name : {"GL2", "SL2", "PGL2"})
    CHECK(build_standard(name)->cartan(0, 0) == 2);
}

TEST_CASE("positive root counts and ordering") {
  CHECK(build_standard("GL2")->positive_roots().size() == 1);
  CHECK(build_standard("GL4")->positive_roots().size() == 6);
  CHECK(build_standard("Sp4")->positive_roots().size() == 4);
  CHECK(build_standard("Sp6")->positive_roots().size() == 9);
  auto gl3 = build_standard("GL3");
  // Height 1 first, so the leading block is exactly the simple roots.
  std::set<IntVec> head(gl3->positive_roots().begin(), gl3->positive_roots().begin() + 2);
  CHECK(head == std::set<IntVec>{gl3->simple_root(0), gl3->simple_root(1)});
  for (const auto& r : gl3->positive_roots()) CHECK(gl3->is_positive_root(r));
  CHECK_FALSE(gl3->is_positive_root({-1, 1, 0}));
}

TEST_CASE("levi positive roots are the full set cut down") {
  auto gl4 = build_standard("GL4");
  for (const Levi& levi : all_levis(*gl4)) {
    auto sub = gl4->positive_roots_levi(levi);
    for (const auto& r : sub) CHECK(gl4->is_positive_root(r));
  }
  CHECK(gl4->positive_roots_levi(Levi::torus()).empty());
  CHECK(gl4->positive_roots_levi(Levi::full(3)).size() == 6);
  CHECK(gl4->positive_roots_levi(Levi{{0, 1}}).size() == 3);
  CHECK(gl4->positive_roots_levi(Levi{{0, 2}}).size() == 2);
}

TEST_CASE("check_levi rejects out-of-range indices") {
  auto gl3 = build_standard("GL3");
  CHECK_THROWS_AS(check_levi(*gl3, Levi{{2}}), invalid_input);
  CHECK_NOTHROW(check_levi(*gl3, Levi{{0, 1}}));
}

TEST_CASE("dominance and antidominance") {
  auto gl3 = build_standard("GL3");
  CHECK(is_dominant(*gl3, {2, 1, 0}));
  CHECK_FALSE(is_dominant(*gl3, {0, 1, 2}));
  CHECK(is_antidominant(*gl3, {0, 1, 2}));
  CHECK(is_dominant_levi(*gl3, Levi{{0}}, {1, 0, 5}));
  CHECK(is_antidominant_levi(*gl3, Levi{{0}}, {0, 1, -5}));
  // Torus Levi: everything is dominant.
  CHECK(is_dominant_levi(*gl3, Levi::torus(), {-3, 5, 1}));
}

TEST_CASE("dominance order is a partial order compatible with addition") {
  auto rd = build_standard("Sp4");
  for (int t = 0; t < 40; ++t) {
    Coweight a = random_dominant(*rd, 3), b = random_dominant(*rd, 3);
    CHECK(dominance_leq(*rd, a, a));
    if (dominance_leq(*rd, a, b) && dominance_leq(*rd, b, a)) CHECK(a == b);
    // mu <= lambda iff mu + c <= lambda + c.
    Coweight c = random_dominant(*rd, 2);
    CHECK(dominance_leq(*rd, a, b) ==
          dominance_leq(*rd, add(a, c), add(b, c)));
  }
}

TEST_CASE("dominant intervals are downward closed") {
  auto gl2 = build_standard("GL2");
  CHECK(dominant_interval(*gl2, {2, 0}) ==
        std::vector<Coweight>{{1, 1}, {2, 0}});
  auto gl3 = build_standard("GL3");
  CHECK(dominant_interval(*gl3, {2, 1, 0}) ==
        std::vector<Coweight>{{1, 1, 1}, {2, 1, 0}});
  CHECK(dominant_interval(*gl3, {1, 1, 0}) ==
        std::vector<Coweight>{{1, 1, 0}});

  for (const char* name : {"GL3", "Sp4", "SL3"}) {
    auto rd = build_standard(name);
    for (int t = 0; t < 10; ++t) {
      Coweight lam = random_dominant(*rd, 2);
      auto interval = dominant_interval(*rd, lam);
      CHECK(std::is_sorted(interval.begin(), interval.end()));
      CHECK(std::count(interval.begin(), interval.end(), lam) == 1);
      for (const auto& mu : interval) {
        CHECK(is_dominant(*rd, mu));
        CHECK(dominance_leq(*rd, mu, lam));
        // Downward closure: everything dominant below mu is also listed.
        for (const auto& nu : dominant_interval(*rd, mu))
          CHECK(std::count(interval.begin(), interval.end(), nu) == 1);
      }
    }
  }
}

TEST_CASE("levi intervals refine the full interval") {
  auto gl3 = build_standard("GL3");
  Levi levi{{0}};
  auto sub = dominant_interval_levi(*gl3, levi, {2, 0, 1});
  for (const auto& mu : sub) {
    CHECK(is_dominant_levi(*gl3, levi, mu));
    CHECK(dominance_leq_levi(*gl3, levi, mu, {2, 0, 1}));
  }
  CHECK(std::count(sub.begin(), sub.end(), Coweight{2, 0, 1}) == 1);
  CHECK(std::count(sub.begin(), sub.end(), Coweight{1, 1, 1}) == 1);
  // The torus interval is a single point.
  CHECK(dominant_interval_levi(*gl3, Levi::torus(), {0, 2, 1}).size() == 1);
}

TEST_CASE("weyl group basics") {
  auto gl3 = build_standard("GL3");
  CHECK(weyl_group_order(*gl3) == 6);
  CHECK(weyl_group_order(*build_standard("GL4")) == 24);
  CHECK(weyl_group_order(*build_standard("Sp4")) == 8);
  CHECK(weyl_group_order(*build_standard("Sp6")) == 48);
  CHECK(weyl_group_order(*build_standard("SL3")) == 6);

  WeylElement w0 = longest_element(*gl3);
  CHECK(w0.word.size() == gl3->positive_roots().size());
  CHECK(w0.apply({3, 1, 0}) == Coweight{0, 1, 3});
  CHECK(compose(*gl3, w0, w0).is_identity());

  // s_i acts as the reflection in alpha_i.
  for (int i = 0; i < gl3->num_simple(); ++i) {
    WeylElement s = simple_reflection(*gl3, i);
    for (int t = 0; t < 5; ++t) {
      Coweight mu = random_dominant(*gl3, 3);
      Coweight expect =
          sub(mu, scale(gl3->pairing(gl3->simple_root(i), mu), gl3->simple_coroot(i)));
      CHECK(s.apply(mu) == expect);
    }
  }
}

TEST_CASE("levi longest elements stabilize the levi root set") {
  auto sp4 = build_standard("Sp4");
  for (const Levi& levi : all_levis(*sp4)) {
    WeylElement w0l = longest_element_levi(*sp4, levi);
    CHECK(compose(*sp4, w0l, w0l).is_identity());
    CHECK(w0l.word.size() == sp4->positive_roots_levi(levi).size());
  }
  CHECK(longest_element_levi(*sp4, Levi::torus()).is_identity());
}

TEST_CASE("longest element sends dominant to antidominant") {
  for (const char* name : {"GL2", "GL3", "GL4", "SL3", "PGL3", "Sp4", "Sp6"}) {
    auto rd = build_standard(name);
    WeylElement w0 = longest_element(*rd);
    for (int t = 0; t < 10; ++t) {
      Coweight lam = random_dominant(*rd, 3);
      CHECK(is_antidominant(*rd, w0.apply(lam)));
    }
  }
}

TEST_CASE("two_rho pairs as the sum over positive roots") {
  auto sp4 = build_standard("Sp4");
  Coweight nu = {2, -1};
  Int expect = 0;
  for (const auto& a : sp4->positive_roots()) expect += sp4->pairing(a, nu);
  CHECK(two_rho(*sp4, nu) == expect);
  CHECK(two_rho_levi(*sp4, Levi::full(2), nu) == expect);
  CHECK(two_rho_levi(*sp4, Levi::torus(), nu) == 0);
}

TEST_CASE("translation lengths") {
  auto gl2 = build_standard("GL2");
  auto id2 = weyl_identity(*gl2);
  CHECK(length(*gl2, {{1, 0}, id2}) == 1);
  CHECK(length(*gl2, {{1, 1}, id2}) == 0);
  CHECK(length(*gl2, {{0, 1}, id2}) == 1);  // antidominant translation
  CHECK(is_length_zero(*gl2, {{1, 1}, id2}));
  CHECK_FALSE(is_length_zero(*gl2, {{1, 0}, id2}));

  auto gl3 = build_standard("GL3");
  auto id3 = weyl_identity(*gl3);
  CHECK(length(*gl3, {{2, 1, 0}, id3}) == 4);

  // For dominant lambda the length is <2rho, lambda>.
  for (const char* name : {"GL3", "Sp4"}) {
    auto rd = build_standard(name);
    auto id = weyl_identity(*rd);
    for (int t = 0; t < 20; ++t) {
      Coweight lam = random_dominant(*rd, 4);
      CHECK(length(*rd, {lam, id}) == two_rho(*rd, lam));
    }
  }

  // Conjugation-invariance under w0: l(t^{w0 lambda}) = l(t^lambda).
  auto w0 = longest_element(*gl3);
  for (int t = 0; t < 10; ++t) {
    Coweight lam = random_dominant(*gl3, 4);
    CHECK(length(*gl3, {w0.apply(lam), id3}) == length(*gl3, {lam, id3}));
  }

  // Nontrivial finite part: t^nu s_1 with <nu, alpha> = -1 generates the
  // length-zero subgroup.
  CHECK(length(*gl2, {{0, 0}, simple_reflection(*gl2, 0)}) == 1);
  CHECK(length(*gl2, {{1, 0}, simple_reflection(*gl2, 0)}) == 2);
  CHECK(is_length_zero(*gl2, {{0, 1}, simple_reflection(*gl2, 0)}));
}

TEST_CASE("component groups of the standard families") {
  // Full-Levi component group = X_* / Z-span of all coroots.
  auto check_group = [](const char* name, Int free_rank, const IntVec& torsion) {
    auto rd = build_standard(name);
    ComponentGroup cg = component_group(*rd, Levi::full(rd->num_simple()));
    CHECK(cg.free_rank == free_rank);
    CHECK(cg.torsion == torsion);
  };
  check_group("GL2", 1, {});
  check_group("GL3", 1, {});
  check_group("SL2", 0, {});   // coroot basis spans the lattice
  check_group("SL3", 0, {});
  check_group("PGL2", 0, {2});
  check_group("PGL3", 0, {3});
  check_group("Sp4", 0, {});

  // Torus Levi: the whole lattice survives.
  auto gl3 = build_standard("GL3");
  CHECK(component_group(*gl3, Levi::torus()).free_rank == 3);
  CHECK(component_group(*gl3, Levi{{0}}).free_rank == 2);

  // Labels separate components: nu and nu + coroot agree, others differ.
  ComponentGroup cg = component_group(*gl3, Levi::full(2));
  Coweight nu = {1, 0, 0};
  CHECK(cg.component_of(nu) == cg.component_of(add(nu, gl3->simple_coroot(0))));
  CHECK(cg.component_of(nu) != cg.component_of({1, 1, 0}));

  ComponentGroup pg = component_group(*build_standard("PGL2"), Levi::full(1));
  CHECK(pg.component_of({0}) != pg.component_of({1}));
  CHECK(pg.component_of({0}) == pg.component_of({2}));
}

TEST_CASE("parabolic degree is constant on levi components and additive") {
  auto gl3 = build_standard("GL3");
  Levi levi{{0}};
  CHECK(parabolic_degree(*gl3, Levi::full(2), {5, -2, 1}) == 0);
  for (int t = 0; t < 20; ++t) {
    Coweight nu(3);
    for (auto& x : nu) x = rand_int(-3, 3);
    Int base = parabolic_degree(*gl3, levi, nu);
    CHECK(parabolic_degree(*gl3, levi, add(nu, gl3->simple_coroot(0))) == base);
    Coweight mu(3);
    for (auto& x : mu) x = rand_int(-3, 3);
    CHECK(parabolic_degree(*gl3, levi, add(nu, mu)) ==
          base + parabolic_degree(*gl3, levi, mu));
  }
}

TEST_CASE("structural equality ignores the name") {
  auto gl2 = build_standard("GL2");
  BasedRootDatum copy("other", 2, {{1, -1}}, {{1, -1}});
  CHECK(gl2->structurally_equal(copy));
  CHECK_FALSE(gl2->structurally_equal(*build_standard("SL2")));
}
