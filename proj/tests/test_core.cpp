#include "parahoric/affine.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <numeric>

using namespace parahoric;
using parahoric::testing::coset_ball;
using parahoric::testing::random_element;
using parahoric::testing::subword_leq;

namespace {

long long translation_length_oracle(const GroupDatum& d, const Coweight& lam) {
  long long s = 0;
  for (const auto& e : d.positive_roots) s += std::abs(pairing(e.root, lam));
  return s;
}

}  // namespace

TEST_CASE("group datum construction") {
  auto gl3 = build_group_datum(Family::GL, 3);
  CHECK(gl3->positive_roots.size() == 3);
  CHECK(gl3->rho == RatVec{Rat(1), Rat(0), Rat(-1)});

  auto gsp4 = build_group_datum(Family::GSp, 2);
  CHECK(gsp4->positive_roots.size() == 4);

  for (int n = 2; n <= 5; ++n)
    CHECK(build_group_datum(Family::GL, n)->positive_roots.size() ==
          size_t(n * (n - 1) / 2));
  for (int n = 1; n <= 3; ++n)
    CHECK(build_group_datum(Family::GSp, n)->positive_roots.size() == size_t(n * n));

  CHECK_THROWS_AS(build_group_datum(Family::GL, 1), std::invalid_argument);

  // Reflections realize s_alpha(lam) = lam - <alpha, lam> alpha^vee on the
  // coweight lattice.
  for (auto dat : {build_group_datum(Family::GL, 4), build_group_datum(Family::GSp, 3)}) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      Coweight lam(dat->N);
      if (dat->family == Family::GL) {
        for (auto& v : lam) v = coef(rng);
      } else {
        long long c = coef(rng);
        for (int i = 0; i < dat->n; ++i) {
          lam[i] = coef(rng);
          lam[dat->N - 1 - i] = c - lam[i];
        }
      }
      for (const auto& e : dat->positive_roots) {
        Coweight lhs = perm_apply(e.reflection, lam);
        long long pr = pairing(e.root, lam);
        Coweight rhs = lam;
        for (int i = 0; i < dat->N; ++i) rhs[i] -= pr * e.coroot[i];
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("pairing examples") {
  auto gl3 = build_group_datum(Family::GL, 3);
  CHECK(pairing({1, -1, 0}, {1, 0, 0}) == 1);
  CHECK(pairing({1, 0, -1}, {0, 0, 0}) == 0);
  const auto& theta = gl3->positive_roots[gl3->highest_root_index];
  CHECK(pairing(theta.root, {1, 0, -1}) == 2);
  CHECK_THROWS_AS(pairing({1, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("weyl orbits") {
  auto gl3 = build_group_datum(Family::GL, 3);
  auto orbit = weyl_orbit(*gl3, {1, 0, 0});
  CHECK(orbit.size() == 3);
  CHECK(std::count(orbit.begin(), orbit.end(), Coweight{0, 0, 1}) == 1);

  auto gsp4 = build_group_datum(Family::GSp, 2);
  CHECK(weyl_orbit(*gsp4, {0, 0, -1, -1}).size() == 4);

  CHECK(weyl_orbit(*gl3, {0, 0, 0}) == std::vector<Coweight>{{0, 0, 0}});

  // Orbit sizes divide |W_0|.
  auto w0_order = [](const GroupDatum& d) {
    return finite_weyl_elements(d).size();
  };
  CHECK(w0_order(*gl3) == 6);
  CHECK(w0_order(*gsp4) == 8);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (auto dat : {gl3, gsp4}) {
    size_t w0 = w0_order(*dat);
    for (int trial = 0; trial < 10; ++trial) {
      Coweight lam(dat->N);
      if (dat->family == Family::GL) {
        for (auto& v : lam) v = coef(rng);
      } else {
        long long c = coef(rng);
        for (int i = 0; i < dat->n; ++i) {
          lam[i] = coef(rng);
          lam[dat->N - 1 - i] = c - lam[i];
        }
      }
      CHECK(w0 % weyl_orbit(*dat, lam).size() == 0);
    }
  }

  // Exactly one dominant element per orbit.
  for (const auto& lamseed : std::vector<Coweight>{{2, 0, -1}, {1, 1, 0}}) {
    int dominant = 0;
    for (const auto& v : weyl_orbit(*gl3, lamseed))
      if (is_dominant(*gl3, to_rat_vec(v))) ++dominant;
    CHECK(dominant == 1);
  }
}

TEST_CASE("group law") {
  auto gl3 = build_group_datum(Family::GL, 3);
  AffineElt t1 = translation_elt(gl3, {1, 0, 0});
  AffineElt t2 = translation_elt(gl3, {0, -1, 2});
  CHECK(multiply(t1, t2) == translation_elt(gl3, {1, -1, 2}));
  CHECK(multiply(t2, t1) == translation_elt(gl3, {1, -1, 2}));

  std::mt19937 rng(11);
  for (auto dat : {build_group_datum(Family::GL, 3), build_group_datum(Family::GSp, 2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      AffineElt x = random_element(dat, rng);
      AffineElt y = random_element(dat, rng);
      AffineElt z = random_element(dat, rng);
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
      CHECK(multiply(x, invert(x)) == identity_elt(dat));
      CHECK(invert(multiply(x, y)) == multiply(invert(y), invert(x)));
      CHECK(length(invert(x)) == length(x));
    }
  }

  auto gl2 = build_group_datum(Family::GL, 2);
  AffineElt s = finite_elt(gl2, {1, 0});
  CHECK(multiply(s, s) == identity_elt(gl2));

  auto gsp4 = build_group_datum(Family::GSp, 2);
  CHECK_THROWS_AS(multiply(t1, identity_elt(gsp4)), std::invalid_argument);
}

TEST_CASE("length") {
  auto gl3 = build_group_datum(Family::GL, 3);
  CHECK(length(translation_elt(gl3, {1, 0, 0})) == 2);
  CHECK(length(identity_elt(gl3)) == 0);
  CHECK(length(omega_generator(gl3)) == 0);

  // l(t_lam) equals the sum of |<alpha, lam>| over positive roots.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (auto dat : {build_group_datum(Family::GL, 4), build_group_datum(Family::GSp, 2),
                   build_group_datum(Family::GSp, 3)}) {
    CHECK(length(omega_generator(dat)) == 0);
    for (int trial = 0; trial < 20; ++trial) {
      Coweight lam(dat->N);
      if (dat->family == Family::GL) {
        for (auto& v : lam) v = coef(rng);
      } else {
        long long c = coef(rng);
        for (int i = 0; i < dat->n; ++i) {
          lam[i] = coef(rng);
          lam[dat->N - 1 - i] = c - lam[i];
        }
      }
      CHECK(length(translation_elt(dat, lam)) == translation_length_oracle(*dat, lam));
    }
    // l(omega x) = l(x) for omega in Omega.
    for (int trial = 0; trial < 10; ++trial) {
      AffineElt x = random_element(dat, rng);
      CHECK(length(multiply(omega_generator(dat), x)) == length(x));
      CHECK(length(multiply(x, omega_generator(dat))) == length(x));
    }
    // l(xs) = l(x) +- 1 for s in S_aff.
    auto gens = simple_reflections(dat);
    for (int trial = 0; trial < 10; ++trial) {
      AffineElt x = random_element(dat, rng);
      for (const auto& s : gens) {
        long long diff = length(multiply(x, s)) - length(x);
        CHECK((diff == 1 || diff == -1));
      }
    }
  }

  // GL_n: l(t_mu) = d(n-d) for the Shimura coweight.
  for (int n = 2; n <= 5; ++n) {
    auto dat = build_group_datum(Family::GL, n);
    for (int dd = 1; dd < n; ++dd) {
      Coweight mu(n, 0);
      for (int i = n - dd; i < n; ++i) mu[i] = -1;
      CHECK(length(translation_elt(dat, mu)) == (long long)dd * (n - dd));
    }
  }
}

TEST_CASE("simple reflections and omega decomposition") {
  auto gl3 = build_group_datum(Family::GL, 3);
  auto gens3 = simple_reflections(gl3);
  CHECK(gens3.size() == 3);
  for (const auto& s : gens3) CHECK(length(s) == 1);

  // s_0 = t_{-theta^vee} s_theta.
  const auto& theta = gl3->positive_roots[gl3->highest_root_index];
  Coweight m(theta.coroot);
  for (auto& c : m) c = -c;
  CHECK(gens3.back() == make_elt(gl3, m, theta.reflection));

  auto dec_tau = omega_decompose(omega_generator(gl3));
  CHECK(dec_tau.word.empty());
  CHECK(dec_tau.omega == omega_generator(gl3));

  auto gl2 = build_group_datum(Family::GL, 2);
  auto dec = omega_decompose(translation_elt(gl2, {0, -1}));
  CHECK(dec.word.size() == 1);

  std::mt19937 rng(13);
  for (auto dat : {gl3, build_group_datum(Family::GSp, 2)}) {
    auto gens = simple_reflections(dat);
    CHECK(gens.size() == size_t(dat->family == Family::GL ? dat->n : dat->n + 1));
    for (int trial = 0; trial < 20; ++trial) {
      AffineElt x = random_element(dat, rng);
      auto dcx = omega_decompose(x);
      CHECK((long long)dcx.word.size() == length(x));
      AffineElt rebuilt = identity_elt(dat);
      for (int gi : dcx.word) rebuilt = multiply(rebuilt, gens[gi]);
      rebuilt = multiply(rebuilt, dcx.omega);
      CHECK(rebuilt == x);
      CHECK(length(dcx.omega) == 0);
    }
  }
}

TEST_CASE("tau element") {
  for (int n = 2; n <= 5; ++n) {
    auto dat = build_group_datum(Family::GL, n);
    for (int dd = 1; dd < n; ++dd) {
      Coweight mu(n, 0);
      for (int i = n - dd; i < n; ++i) mu[i] = -1;
      AffineElt tau = tau_element(dat, mu);
      // t_{((-1)^d, 0^{n-d})} (1 2 ... n)^d
      Coweight expect_nu(n, 0);
      for (int i = 0; i < dd; ++i) expect_nu[i] = -1;
      Perm cyc = dat->tau1_w, acc = perm_identity(n);
      for (int i = 0; i < dd; ++i) acc = perm_compose(cyc, acc);
      CHECK(tau == make_elt(dat, expect_nu, acc));
      CHECK(length(tau) == 0);
      CHECK(kottwitz_index(tau) == kottwitz_index(translation_elt(dat, mu)));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    auto dat = build_group_datum(Family::GSp, n);
    Coweight mu(2 * n, 0);
    for (int i = n; i < 2 * n; ++i) mu[i] = -1;
    AffineElt tau = tau_element(dat, mu);
    Coweight expect_nu(2 * n, 0);
    for (int i = 0; i < n; ++i) expect_nu[i] = -1;
    Perm shift(2 * n);
    for (int i = 0; i < 2 * n; ++i) shift[i] = (i + n) % (2 * n);
    CHECK(tau == make_elt(dat, expect_nu, shift));
    CHECK(length(tau) == 0);
  }
  auto gl3 = build_group_datum(Family::GL, 3);
  CHECK(tau_element(gl3, {0, 0, 0}) == identity_elt(gl3));
}

TEST_CASE("base alcove vertices") {
  CHECK(base_alcove_vertices(*build_group_datum(Family::GL, 2)).size() == 2);
  CHECK(base_alcove_vertices(*build_group_datum(Family::GL, 3)).size() == 3);
  CHECK(base_alcove_vertices(*build_group_datum(Family::GSp, 2)).size() == 3);
  CHECK(base_alcove_vertices(*build_group_datum(Family::GSp, 3)).size() == 4);

  // Every vertex is in the closure of the base alcove: for each positive
  // root, the pairing lies within the closed interval spanned at the
  // interior point.
  for (auto dat : {build_group_datum(Family::GL, 4), build_group_datum(Family::GSp, 3)}) {
    for (const auto& v : base_alcove_vertices(*dat)) {
      for (const auto& e : dat->positive_roots) {
        Rat at_interior = pairing_rat(e.root, dat->alcove_interior);
        Rat at_vertex = pairing_rat(e.root, v);
        long long lo = floor_rat(at_interior);
        CHECK(at_vertex >= Rat(lo));
        CHECK(at_vertex <= Rat(lo + 1));
      }
    }
  }
}

TEST_CASE("bruhat order") {
  auto gl2 = build_group_datum(Family::GL, 2);
  Coweight mu2{0, -1};
  AffineElt tmu = translation_elt(gl2, mu2);
  AffineElt tau = tau_element(gl2, mu2);
  CHECK(bruhat_leq(tmu, tmu));
  CHECK(bruhat_leq(tau, tmu));
  CHECK_FALSE(bruhat_leq(tmu, tau));
  // Distinct Omega components are incomparable.
  CHECK_FALSE(bruhat_leq(identity_elt(gl2), tmu));

  // Exhaustive agreement with the brute-force subword test for all
  // pairs with l(y) <= 6 in a fixed Omega coset.
  for (auto [fam, n, mu] : std::vector<std::tuple<Family, int, Coweight>>{
           {Family::GL, 3, {-1, 0, 0}},
           {Family::GSp, 2, {0, 0, -1, -1}}}) {
    auto dat = build_group_datum(fam, n);
    auto ball = coset_ball(tau_element(dat, mu), 6);
    int disagreements = 0;
    for (const auto& x : ball)
      for (const auto& y : ball)
        if (bruhat_leq(x, y) != subword_leq(x, y)) ++disagreements;
    CHECK(disagreements == 0);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937 rng(17);
  for (auto dat : {build_group_datum(Family::GL, 3), build_group_datum(Family::GSp, 2)}) {
    for (int trial = 0; trial < 20; ++trial) {
      AffineElt x = random_element(dat, rng);
      CHECK(parse_element(dat, to_text(x)) == x);
    }
  }
  auto gl2 = build_group_datum(Family::GL, 2);
  CHECK(to_text(translation_elt(gl2, {0, -1})) == "t[0,-1]*w[1,2]");
  CHECK_THROWS_AS(parse_element(gl2, "t[0,-1]*w[1,1]"), std::invalid_argument);
}
