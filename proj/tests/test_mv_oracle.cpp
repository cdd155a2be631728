#include <doctest.h>

#include <algorithm>
#include <set>

#include "msat/error.hpp"
#include "msat/mv_oracle.hpp"
#include "test_util.hpp"

using namespace msat;

namespace {

LaurentSeries mono(int deg) { return LaurentSeries{deg, {1}}; }

// Columns of the stored (t^a-scaled) basis, shifted back to lattice coordinates.
std::vector<std::vector<LaurentSeries>> unscaled_columns(const LatticePoint& l) {
  int n = l.window().n, a = l.window().a;
  std::vector<std::vector<LaurentSeries>> cols(n, std::vector<LaurentSeries>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      LaurentSeries s = l.basis()[i][j];
      if (!s.is_zero()) s.offset -= a;
      cols[j][i] = s;
    }
  return cols;
}

}  // namespace

TEST_CASE("window enumeration sizes") {
  CHECK(enumerate_lattices(TruncationWindow(2, 2, 1)).size() == 15);
  CHECK(enumerate_lattices(TruncationWindow(2, 3, 1)).size() == 23);
  CHECK(enumerate_lattices(TruncationWindow(2, 5, 2)).size() == 1169);
  CHECK(enumerate_lattices(TruncationWindow(1, 7, 1)).size() == 3);
}

TEST_CASE("enumerated lattices are distinct canonical forms") {
  TruncationWindow w(2, 4, 1);
  std::vector<LatticePoint> all = enumerate_lattices(w);
  std::set<LatticePoint> dedup(all.begin(), all.end());
  CHECK(dedup.size() == all.size());
  for (const LatticePoint& l : all) {
    CHECK(lattice_from_generators(w, unscaled_columns(l)) == l);
    // Iwasawa component reads off the diagonal.
    Coweight nu = l.iwasawa_component();
    for (int i = 0; i < w.n; ++i) CHECK(nu[i] == l.diag_valuations()[i] - w.a);
  }
}

TEST_CASE("generators describe a span, not a basis") {
  TruncationWindow w(2, 3, 1);
  for (const LatticePoint& l : enumerate_lattices(w)) {
    auto cols = unscaled_columns(l);
    auto extended = cols;
    extended.push_back(cols[0]);          // duplicate generator
    extended.push_back({mono(1), {}});    // t^a e_1 is already inside
    CHECK(lattice_from_generators(w, extended) == l);
  }
  // Unimodular column operations leave the lattice alone.
  std::vector<LaurentSeries> c0 = {mono(-1), mono(0)};
  std::vector<LaurentSeries> c1 = {{}, mono(1)};
  LatticePoint l = lattice_from_generators(w, {c0, c1});
  std::vector<LaurentSeries> c0_plus_c1 = {mono(-1), LaurentSeries{0, {1, 1}}};
  CHECK(lattice_from_generators(w, {c0_plus_c1, c1}) == l);
  CHECK(lattice_from_generators(w, {c1, c0}) == l);
}

TEST_CASE("relative position of diagonal lattices") {
  TruncationWindow w(3, 2, 2);
  CHECK(relative_position(diagonal_lattice(w, {1, -1, 0})) == Coweight{1, 0, -1});
  CHECK(relative_position(diagonal_lattice(w, {2, 2, -2})) == Coweight{2, 2, -2});
  LatticePoint base = diagonal_lattice(w, {1, 0, 0});
  LatticePoint target = diagonal_lattice(w, {2, 1, 1});
  CHECK(relative_position(target, base) == Coweight{1, 1, 1});
  CHECK(relative_position(base, base) == Coweight{0, 0, 0});
  CHECK(diagonal_lattice(w, {0, 0, 0}).iwasawa_component() == Coweight{0, 0, 0});
}

TEST_CASE("minuscule orbit counts for n = 2") {
  for (long long q : {2LL, 3LL, 4LL, 5LL}) {
    TruncationWindow w(2, q, 1);
    CHECK(mv_count(w, {1, 0}, {0, 1}, false) == 1);
    CHECK(mv_count(w, {1, 0}, {1, 0}, false) == static_cast<unsigned long long>(q));
    CHECK(mv_count(w, {1, 0}, {1, 1}, false) == 0);
    CHECK(mv_count(w, {1, 1}, {1, 1}, false) == 1);
    // Minuscule coweight: closure adds nothing.
    CHECK(mv_count(w, {1, 0}, {1, 0}, true) == mv_count(w, {1, 0}, {1, 0}, false));
  }
}

TEST_CASE("orbit table for lambda = (1,0)") {
  TruncationWindow w(2, 2, 1);
  std::vector<CountRow> rows = satake_transform_oracle(w, {1, 0}, false);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == CountRow{2, {1, 0}, {0, 1}, 1, 1});
  CHECK(rows[1] == CountRow{2, {1, 0}, {1, 0}, 2, 0});

  // Over F_4 the raw count q is divisible by p = 2 as well.
  std::vector<CountRow> rows4 = satake_transform_oracle(TruncationWindow(2, 4, 1), {1, 0}, false);
  REQUIRE(rows4.size() == 2);
  CHECK(rows4[1].raw == 4);
  CHECK(rows4[1].mod_p == 0);
  CHECK(rows4[0].mod_p == 1);
}

TEST_CASE("closure counts are sums over the dominance interval") {
  TruncationWindow w(2, 3, 2);
  for (Coweight lambda : std::vector<Coweight>{{2, 0}, {1, -1}, {2, -2}}) {
    std::vector<CountRow> closure = satake_transform_oracle(w, lambda, true);
    for (const CountRow& row : closure) {
      unsigned long long total = 0;
      for (Coweight mu : std::vector<Coweight>{lambda,
                                               {lambda[0] - 1, lambda[1] + 1},
                                               {lambda[0] - 2, lambda[1] + 2}}) {
        if (mu[0] < mu[1]) continue;  // past the dominant chamber
        total += mv_count(w, mu, row.nu, false);
      }
      CHECK(row.raw == total);
    }
  }
}

TEST_CASE("table rows are sorted and consistent with pointwise counts") {
  TruncationWindow w(3, 2, 1);
  std::vector<CountRow> rows = satake_transform_oracle(w, {1, 1, 0}, false);
  REQUIRE(!rows.empty());
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const CountRow& x, const CountRow& y) {
    return x.nu < y.nu;
  }));
  unsigned long long total = 0;
  for (const CountRow& row : rows) {
    CHECK(row.raw == mv_count(w, {1, 1, 0}, row.nu, false));
    CHECK(row.mod_p == row.raw % 2);
    CHECK(row.raw > 0);
    total += row.raw;
  }
  // Row sums count the whole orbit: sum over nu of fibres = |Gr_lambda(F_q)|.
  // For (1,1,0) in rank 3 this is the Grassmannian Gr(2,3)(F_2): q^2+q+1 = 7.
  CHECK(total == 7);
}

TEST_CASE("convolution fibres for n = 2") {
  for (long long q : {2LL, 3LL}) {
    TruncationWindow w(2, q, 1);
    std::vector<ConvolutionRow> rows = convolution_oracle(w, {1, 0}, {1, 0});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].lambda == Coweight{1, 1});
    CHECK(rows[0].raw == static_cast<unsigned long long>(q + 1));
    CHECK(rows[0].mod_p == (q + 1) % w.p);
    CHECK(rows[1].lambda == Coweight{2, 0});
    CHECK(rows[1].raw == 1);
    CHECK(rows[1].mod_p == 1);

    // Convolving with the unit orbit recovers a single delta.
    std::vector<ConvolutionRow> unit = convolution_oracle(w, {1, 0}, {0, 0});
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].lambda == Coweight{1, 0});
    CHECK(unit[0].raw == 1);
    CHECK(convolution_count(w, {1, 0}, {0, 0}, {1, 0}) == 1);
    CHECK(convolution_count(w, {1, 0}, {1, 0}, {1, 1}) ==
          static_cast<unsigned long long>(q + 1));
  }
}

TEST_CASE("worker count does not change any table") {
  TruncationWindow w(2, 3, 2);
  std::vector<CountRow> base = satake_transform_oracle(w, {2, -1}, false, 1);
  CHECK(satake_transform_oracle(w, {2, -1}, false, 3) == base);
  CHECK(satake_transform_oracle(w, {2, -1}, false, 4) == base);
  std::vector<ConvolutionRow> conv = convolution_oracle(w, {1, 0}, {1, -1}, 1);
  CHECK(convolution_oracle(w, {1, 0}, {1, -1}, 4) == conv);
}

TEST_CASE("window and argument validation") {
  CHECK_THROWS_AS(TruncationWindow(2, 6, 1), invalid_input);   // not a prime power
  CHECK_THROWS_AS(TruncationWindow(0, 2, 1), invalid_input);
  CHECK_THROWS_AS(TruncationWindow(2, 2, -1), invalid_input);
  TruncationWindow w(2, 2, 1);
  CHECK_THROWS_AS(mv_count(w, {0, 1}, {0, 1}, false), invalid_input);   // not dominant
  CHECK_THROWS_AS(mv_count(w, {2, 0}, {1, 1}, false), invalid_input);   // outside window
  CHECK_THROWS_AS(convolution_oracle(w, {2, 0}, {1, 0}), invalid_input);
  CHECK_THROWS_AS(diagonal_lattice(w, {2, 0}), invalid_input);

  // Canonical-basis validation: diagonal range, triangularity, reduction.
  LaurentMatrix ok = {{mono(1), {}}, {{}, mono(1)}};
  CHECK_NOTHROW(LatticePoint(w, {1, 1}, ok));
  CHECK_THROWS_AS(LatticePoint(w, {3, 0}, ok), invalid_input);
  LaurentMatrix lower = {{mono(1), {}}, {mono(0), mono(1)}};
  CHECK_THROWS_AS(LatticePoint(w, {1, 1}, lower), invalid_input);
  LaurentMatrix unreduced = {{mono(1), mono(1)}, {{}, mono(1)}};
  CHECK_THROWS_AS(LatticePoint(w, {1, 1}, unreduced), invalid_input);
  LaurentMatrix wrong_diag = {{mono(0), {}}, {{}, mono(1)}};
  CHECK_THROWS_AS(LatticePoint(w, {1, 1}, wrong_diag), invalid_input);
}
