#include "parahoric/newton.hpp"

#include "parahoric/stratify.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <set>

using namespace parahoric;
using parahoric::testing::random_element;

namespace {

Coweight gl_mu(int n, int d) {
  Coweight mu(n, 0);
  for (int i = n - d; i < n; ++i) mu[i] = -1;
  return mu;
}

Coweight gsp_mu(int n) {
  Coweight mu(2 * n, 0);
  for (int i = n; i < 2 * n; ++i) mu[i] = -1;
  return mu;
}

RatVec scale(const RatVec& v, const Rat& c) {
  RatVec out = v;
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace

TEST_CASE("newton point of tau") {
  for (int n = 2; n <= 5; ++n) {
    auto dat = build_group_datum(Family::GL, n);
    for (int d = 1; d < n; ++d) {
      NewtonPoint nu = newton_point(tau_element(dat, gl_mu(n, d)));
      CHECK(nu.slopes == RatVec(n, Rat(-d, n)));
      CHECK(is_basic_point(*dat, nu));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    auto dat = build_group_datum(Family::GSp, n);
    NewtonPoint nu = newton_point(tau_element(dat, gsp_mu(n)));
    CHECK(nu.slopes == RatVec(2 * n, Rat(-1, 2)));
    CHECK(is_basic_point(*dat, nu));
  }
}

TEST_CASE("newton point basics") {
  auto gl3 = build_group_datum(Family::GL, 3);
  CHECK(newton_point(translation_elt(gl3, {0, 2, -1})).slopes ==
        RatVec{Rat(2), Rat(0), Rat(-1)});

  std::mt19937 rng(23);
  for (auto dat : {gl3, build_group_datum(Family::GSp, 2)}) {
    for (int trial = 0; trial < 15; ++trial) {
      AffineElt x = random_element(dat, rng);
      AffineElt y = random_element(dat, rng);
      // Conjugation invariance.
      CHECK(newton_point(multiply(multiply(x, y), invert(x))) == newton_point(y));
      // Slope scaling under powers.
      NewtonPoint base = newton_point(y);
      for (int k = 2; k <= 3; ++k)
        CHECK(newton_point(power(y, k)).slopes == scale(base.slopes, Rat(k)));
      // Denominators divide the order of the finite part.
      int s = perm_order(y.wbar);
      for (const auto& c : newton_point(y).slopes)
        CHECK(s % c.denominator() == 0);
    }
  }
}

TEST_CASE("kottwitz point") {
  for (int n = 2; n <= 4; ++n) {
    auto dat = build_group_datum(Family::GL, n);
    for (int d = 1; d < n; ++d)
      CHECK(kottwitz_point(translation_elt(dat, gl_mu(n, d))) == -d);
  }
  auto gl3 = build_group_datum(Family::GL, 3);
  CHECK(kottwitz_point(identity_elt(gl3)) == 0);
  // Constant across Adm(mu).
  for (const auto& x : adm_set(gl3, gl_mu(3, 1)))
    CHECK(kottwitz_point(x) == -1);
  auto gsp4 = build_group_datum(Family::GSp, 2);
  CHECK(kottwitz_point(translation_elt(gsp4, gsp_mu(2))) == -1);
}

TEST_CASE("basic test") {
  auto gl2 = build_group_datum(Family::GL, 2);
  CHECK(is_basic(tau_element(gl2, gl_mu(2, 1))));
  CHECK_FALSE(is_basic(translation_elt(gl2, gl_mu(2, 1))));
  CHECK(is_basic(identity_elt(gl2)));
  CHECK(is_basic(translation_elt(gl2, {3, 3})));
}

TEST_CASE("dominance order") {
  auto gl2 = build_group_datum(Family::GL, 2);
  NewtonPoint half{{Rat(1, 2), Rat(1, 2)}};
  NewtonPoint ord{{Rat(1), Rat(0)}};
  bool inc = false;
  CHECK(dominance_leq(*gl2, half, ord, &inc));
  CHECK_FALSE(inc);
  CHECK(dominance_leq(*gl2, ord, ord));
  CHECK_FALSE(dominance_leq(*gl2, ord, half));
  NewtonPoint other{{Rat(1), Rat(1)}};
  CHECK_FALSE(dominance_leq(*gl2, ord, other, &inc));
  CHECK(inc);
}

TEST_CASE("B(G, mu)") {
  auto gl2 = build_group_datum(Family::GL, 2);
  auto bset = b_of_g_mu(gl2, {1, 0});
  REQUIRE(bset.size() == 2);
  std::set<NewtonPoint> expect{NewtonPoint{{Rat(1, 2), Rat(1, 2)}},
                               NewtonPoint{{Rat(1), Rat(0)}}};
  CHECK(std::set<NewtonPoint>(bset.begin(), bset.end()) == expect);

  CHECK(b_of_g_mu(gl2, {2, 2}).size() == 1);

  auto gsp4 = build_group_datum(Family::GSp, 2);
  auto bsp = b_of_g_mu(gsp4, Coweight{1, 1, 0, 0});
  // Unique basic (minimal) point and unique maximal point mu-bar.
  int basics = 0;
  for (const auto& nu : bsp) basics += is_basic_point(*gsp4, nu) ? 1 : 0;
  CHECK(basics == 1);
  int maxima = 0, minima = 0;
  for (const auto& a : bsp) {
    bool is_max = true, is_min = true;
    for (const auto& b : bsp) {
      if (a == b) continue;
      if (dominance_leq(*gsp4, a, b)) is_max = false;
      if (dominance_leq(*gsp4, b, a)) is_min = false;
    }
    maxima += is_max;
    minima += is_min;
  }
  CHECK(maxima == 1);
  CHECK(minima == 1);
  CHECK(bsp.size() == 3);

  auto gl3 = build_group_datum(Family::GL, 3);
  auto b3 = b_of_g_mu(gl3, {1, 0, 0});
  std::set<NewtonPoint> expect3{NewtonPoint{{Rat(1, 3), Rat(1, 3), Rat(1, 3)}},
                                NewtonPoint{{Rat(1, 2), Rat(1, 2), Rat(0)}},
                                NewtonPoint{{Rat(1), Rat(0), Rat(0)}}};
  CHECK(std::set<NewtonPoint>(b3.begin(), b3.end()) == expect3);

  // Unique top (mu-bar) and unique bottom (basic) in every enumerated
  // poset.
  for (auto [dat2, mu2] : std::vector<std::pair<DatumPtr, Coweight>>{
           {gl2, {1, 0}},
           {gl3, {1, 1, 0}},
           {build_group_datum(Family::GL, 4), {1, 1, 0, 0}},
           {gsp4, gsp_mu(2)}}) {
    auto bs = b_of_g_mu(dat2, mu2);
    NewtonPoint top{to_rat_vec(dominant_representative(*dat2, mu2))};
    int tops = 0, bottoms = 0;
    for (const auto& nu : bs) {
      bool incomparable = false;
      bool below_top = dominance_leq(*dat2, nu, top, &incomparable);
      CHECK(below_top);
      CHECK_FALSE(incomparable);
      bool is_max = true, is_min = true;
      for (const auto& other : bs) {
        if (nu == other) continue;
        if (dominance_leq(*dat2, nu, other)) is_max = false;
        if (dominance_leq(*dat2, other, nu)) is_min = false;
      }
      tops += is_max;
      bottoms += is_min;
      if (is_min) CHECK(is_basic_point(*dat2, nu));
    }
    CHECK(tops == 1);
    CHECK(bottoms == 1);
  }

  // Every B(G, mu) member keeps integral polygon breakpoints: partial
  // sums at slope changes are integers.
  for (const auto& nu : bsp) {
    Rat acc(0);
    for (size_t i = 0; i + 1 < nu.slopes.size(); ++i) {
      acc += nu.slopes[i];
      if (nu.slopes[i] != nu.slopes[i + 1]) CHECK(is_integer(acc));
    }
  }
}

TEST_CASE("mazur check") {
  auto gl2 = build_group_datum(Family::GL, 2);
  auto rep = mazur_check(gl2, gl_mu(2, 1));
  CHECK(rep.kappa_ok);
  CHECK(rep.mazur_ok);
  CHECK(rep.exhausts_b_set);
  CHECK(rep.newton_points.size() == 2);

  auto gl3 = build_group_datum(Family::GL, 3);
  auto rep3 = mazur_check(gl3, gl_mu(3, 1));
  CHECK(rep3.kappa_ok);
  CHECK(rep3.mazur_ok);
  CHECK(rep3.contained_in_b_set);

  auto gsp6 = build_group_datum(Family::GSp, 3);
  auto rep6 = mazur_check(gsp6, gsp_mu(3));
  CHECK(rep6.mazur_ok);
  CHECK(rep6.contained_in_b_set);

  auto zero = mazur_check(gl3, {0, 0, 0});
  CHECK(zero.mazur_ok);
  CHECK(zero.newton_points.size() == 1);
  CHECK(zero.b_set.size() == 1);
}
