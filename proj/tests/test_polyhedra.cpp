#include "deltoid/errors.hpp"
#include "deltoid/polyhedra.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace deltoid;

namespace {

AdmissibleSet S(int n, std::vector<int> e) { return AdmissibleSet::from_signed(n, e); }

DeltaMatroid DM(int n, std::vector<std::vector<int>> sets) {
  std::vector<AdmissibleSet> s;
  for (auto &e : sets)
    s.push_back(AdmissibleSet::from_signed(n, e));
  return DeltaMatroid::from_sets(n, s);
}

Point P(std::vector<int> v) { return Point(v.begin(), v.end()); }

// Random lattice polytope: dilated delta-matroid polytopes and simplices plus a translation.
BnPolytope random_lattice(int n, std::mt19937 &rng) {
  std::uniform_int_distribution<int> coin(0, 2), shift(-2, 2);
  BnPolytope out = BnPolytope::point(Point(n, Q(0)));
  auto rays = enumerate_rays(n);
  std::uniform_int_distribution<std::size_t> pick(0, rays.size() - 1);
  for (int k = 0; k < 2; ++k)
    if (int a = coin(rng))
      out = out + BnPolytope::of(random_deltamatroid(n, rng())).dilate(a);
  for (int k = 0; k < 2; ++k)
    if (int a = coin(rng))
      out = out + BnPolytope::simplex(rays[pick(rng)]).dilate(a);
  Point t(n);
  for (auto &x : t)
    x = shift(rng);
  return out.translate(t);
}

} // namespace

TEST_CASE("simplices") {
  auto s1 = BnPolytope::simplex(S(1, {1}));
  CHECK(s1.h(S(1, {1})) == 1);
  CHECK(s1.h(S(1, {-1})) == 0);
  CHECK(BnPolytope::simplex(S(2, {1, 2})).h(S(2, {-1, -2})) == 0);
  auto s2 = BnPolytope::simplex(S(1, {-1}));
  CHECK(s2.h(S(1, {-1})) == 1);
  CHECK(s2.h(S(1, {1})) == 0);
  CHECK_THROWS_AS(BnPolytope::simplex(AdmissibleSet(2, 0, 0)), InvalidArgument);
}

TEST_CASE("vertices") {
  CHECK(BnPolytope::cube(2).vertex(SignedPermutation::identity(2)) == P({1, 1}));
  CHECK(BnPolytope::simplex(S(1, {1})).vertex(SignedPermutation::last_flip(1)) == P({0}));
  CHECK(BnPolytope::cross_polytope(2).vertex(SignedPermutation::identity(2)) == P({1, 0}));
  CHECK(BnPolytope::signed_permutohedron(2).vertices().size() == 8);
  CHECK(BnPolytope::cube(3).vertices().size() == 8);
}

TEST_CASE("invalid support numbers are rejected") {
  // h({1}) = 1, h({1̄}) = 0 but h({1,2}) too small for the vertex (1,1).
  auto h = BnPolytope::cube(2).support();
  h[ray_index(S(2, {1, 2}))] = 1;
  h[ray_index(S(2, {1}))] = 2;
  CHECK(support_violation(2, h).has_value());
  CHECK_THROWS_AS(BnPolytope(2, h), InvalidArgument);
}

TEST_CASE("Minkowski combinations") {
  auto a = BnPolytope::simplex(S(2, {1})), b = BnPolytope::simplex(S(2, {2}));
  CHECK(minkowski_combine(2, {{Z(1), a}, {Z(1), b}}) == BnPolytope::cube(2));
  auto seg = minkowski_combine(1, {{Z(2), BnPolytope::simplex(S(1, {1}))}});
  CHECK(seg.h(S(1, {1})) == 2);
  CHECK(seg.h(S(1, {-1})) == 0);
  // Δ_{1} − Δ_{1̄} is the translate e₁ of the origin.
  auto t = minkowski_combine(1, {{Z(1), BnPolytope::simplex(S(1, {1}))},
                                 {Z(-1), BnPolytope::simplex(S(1, {-1}))}});
  CHECK(t == BnPolytope::point(P({1})));
  CHECK_THROWS_AS(minkowski_combine(2, {{Z(1), a}, {Z(-1), b}}), InvalidCombination);
}

TEST_CASE("delta decomposition examples") {
  auto c = delta_decompose(BnPolytope::cube(2));
  for (auto &r : enumerate_rays(2))
    CHECK(c.c(r) == ((r == S(2, {1}) || r == S(2, {2})) ? 1 : 0));
  for (auto &p : {BnPolytope::of(DM(2, {{1, 2}, {-1, -2}})), BnPolytope::signed_permutohedron(2),
                  BnPolytope::cross_polytope(3)}) {
    auto d = delta_decompose(p);
    CHECK(d.support() == p.support());
    CHECK(realize(d) == p);
  }
}

TEST_CASE("property: decomposition round-trip on coefficient vectors, n <= 2") {
  // Every coefficient vector over {−1,0,1} that realizes a polytope decomposes back to itself.
  for (int n = 1; n <= 2; ++n) {
    auto rays = enumerate_rays(n);
    long total = 1;
    for (std::size_t k = 0; k < rays.size(); ++k)
      total *= 3;
    int realized = 0;
    for (long code = 0; code < total; ++code) {
      std::vector<std::pair<AdmissibleSet, Z>> cs;
      long x = code;
      for (auto &r : rays) {
        cs.emplace_back(r, Z(x % 3 - 1));
        x /= 3;
      }
      auto d = make_decomposition(n, cs);
      if (support_violation(n, d.support()))
        continue;
      ++realized;
      CHECK(delta_decompose(realize(d)).coeff == d.coeff);
    }
    CHECK(realized > 0);
  }
}

TEST_CASE("property: decomposition reconstructs random lattice polytopes, n <= 4") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 4;
    auto p = random_lattice(n, rng);
    auto d = delta_decompose(p);
    CHECK(d.support() == p.support());
  }
}

TEST_CASE("signed transversals") {
  CHECK(signed_transversal_count({S(2, {1}), S(2, {2})}) == 1);
  CHECK(signed_transversal_count({S(2, {1}), S(2, {1})}) == 0);
  CHECK(signed_transversal_count({S(2, {1, -2}), S(2, {-2, 1})}) == 1);
}

TEST_CASE("property: signed transversal count is symmetric") {
  auto rays = enumerate_rays(3);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, rays.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<AdmissibleSet> s{rays[pick(rng)], rays[pick(rng)], rays[pick(rng)]};
    long base = signed_transversal_count(s);
    std::sort(s.begin(), s.end());
    do
      CHECK(signed_transversal_count(s) == base);
    while (std::next_permutation(s.begin(), s.end()));
  }
}

TEST_CASE("volumes") {
  CHECK(volume(delta_decompose(BnPolytope::cube(2))) == 2);
  CHECK(volume(delta_decompose(BnPolytope::cube(2).dilate(2))) == 8);
  for (int n = 1; n <= 4; ++n) {
    Mask full = (Mask{1} << n) - 1;
    CHECK(volume(delta_decompose(BnPolytope::simplex(AdmissibleSet(n, full, 0)))) == 1);
  }
  CHECK(volume_oracle(BnPolytope::simplex(S(1, {1})).dilate(2)) == 2);
  CHECK(volume_oracle(BnPolytope::cube(2)) == 2);
  CHECK(volume_oracle(BnPolytope::of(DM(2, {{1, 2}, {-1, -2}}))) == 0);
}

TEST_CASE("property: volume formula matches the Ehrhart oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 3;
    auto p = random_lattice(n, rng);
    auto v = volume(delta_decompose(p));
    CHECK(v == volume_oracle(p));
    CHECK(v == oracle::normalized_volume(n, p.support()));
  }
}

TEST_CASE("property: mixed volumes of two simplices, n = 2") {
  auto rays = enumerate_rays(2);
  for (auto &s : rays)
    for (auto &r : rays) {
      long ss = signed_transversal_count({s, s}), sr = signed_transversal_count({s, r}),
           rr = signed_transversal_count({r, r});
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
          auto p = BnPolytope::simplex(s).dilate(a) + BnPolytope::simplex(r).dilate(b);
          CHECK(volume_oracle(p) == Q(a * a * ss + 2 * a * b * sr + b * b * rr));
        }
    }
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(BnPolytope::cube(2)).size() == 4);
  CHECK(lattice_points(BnPolytope::cross_polytope(2)).size() == 5);
  CHECK(lattice_points(BnPolytope::point(P({0, 0}))).size() == 1);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 3;
    auto p = random_lattice(n, rng);
    CHECK(static_cast<long>(lattice_count(p)) == oracle::lattice_count(n, p.support()));
  }
}

TEST_CASE("psi") {
  MPoly x = MPoly::var("x"), y = MPoly::var("y");
  CHECK(psi(x.pow(2)) == MPoly(Q(1, 2)) * x * (x - 1));
  CHECK(psi(x * y) == x * y);
  CHECK(psi(3 * x.pow(3)) == MPoly(Q(1, 2)) * x * (x - 1) * (x - 2));
}

TEST_CASE("lattice-count formula conventions") {
  auto cube = delta_decompose(BnPolytope::cube(2));
  CHECK(lattice_count_formula(cube, PsiConvention::Multiset) == 1);
  CHECK(lattice_count_formula(cube, PsiConvention::OrderedPsi) == 2);
  auto seg = delta_decompose(BnPolytope::simplex(S(1, {1})).dilate(3));
  CHECK(lattice_count_formula(seg, PsiConvention::Multiset) == 3);
  CHECK(lattice_count_formula(seg, PsiConvention::OrderedPsi) == 3);
  CHECK(lattice_count_formula(delta_decompose(BnPolytope::cube(2).dilate(2)), PsiConvention::Multiset) == 4);
}

TEST_CASE("property: multiset convention counts lattice points of P minus the cube") {
  std::mt19937 rng(29);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 3;
    auto d = delta_decompose(random_lattice(n, rng));
    auto shrunk = minus_cube(d).support();
    if (support_violation(n, shrunk))
      continue;
    auto pts = lattice_points_of_support(n, shrunk);
    CHECK(lattice_count_formula(d, PsiConvention::Multiset) == Q(static_cast<long>(pts.size())));
    ++tested;
  }
  CHECK(tested >= 20);
}

TEST_CASE("cube intersections") {
  CHECK(intersect_with_cube(BnPolytope::cube(2).dilate(2), {0, 0}) == BnPolytope::cube(2));
  CHECK(intersect_with_cube(BnPolytope::cross_polytope(2), {0, 0}) == BnPolytope::simplex(S(2, {1, 2})));
  CHECK_FALSE(intersect_with_cube(BnPolytope::simplex(S(1, {1})), {5}).has_value());
}

TEST_CASE("property: cube slices of delta-matroid polytopes are delta-matroid polytopes") {
  for (int n = 1; n <= 3; ++n)
    for (auto &d : enumerate_deltamatroids(n)) {
      auto p = BnPolytope::of(d);
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        IntPoint shift(n);
        for (int i = 0; i < n; ++i)
          shift[i] = (m >> i & 1) ? -1 : 0;
        auto q = intersect_with_cube(p, shift);
        if (!q)
          continue;
        std::vector<Mask> fam;
        for (auto &v : q->vertices()) {
          Mask b = 0;
          for (int i = 0; i < n; ++i) {
            Q y = v[i] - shift[i];
            REQUIRE((y == 0 || y == 1));
            if (y == 1)
              b |= Mask{1} << i;
          }
          if (std::find(fam.begin(), fam.end(), b) == fam.end())
            fam.push_back(b);
        }
        CHECK(oracle::is_delta_matroid(n, fam));
      }
    }
}
