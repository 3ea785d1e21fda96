#include "deltoid/schubert.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace deltoid;

namespace {

AdmissibleSet S(int n, std::vector<int> e) { return AdmissibleSet::from_signed(n, e); }

DeltaMatroid DM(int n, std::vector<std::vector<int>> sets) {
  std::vector<AdmissibleSet> s;
  for (auto &e : sets)
    s.push_back(AdmissibleSet::from_signed(n, e));
  return DeltaMatroid::from_sets(n, s);
}

IndicatorTerm term(long c, IntPoint t, BnPolytope p) { return {Z(c), std::move(t), std::move(p)}; }

BnPolytope segment(int a, int b) {
  return BnPolytope::hull(1, {Point{Q(a)}, Point{Q(b)}});
}

// m + Σ_i [0, K]·α_i with α₁ = −e₁ and α_i = e_{i−1} − e_i.
BnPolytope truncated_cone(const IntPoint &m, int k) {
  int n = static_cast<int>(m.size());
  Point apex(m.begin(), m.end());
  BnPolytope out = BnPolytope::point(apex);
  for (int i = 0; i < n; ++i) {
    Point alpha(n, Q(0));
    alpha[i] = -k;
    if (i > 0)
      alpha[i - 1] = k;
    out = out + BnPolytope::hull(n, {Point(n, Q(0)), alpha});
  }
  return out;
}

} // namespace

TEST_CASE("standard Schubert delta-matroids") {
  CHECK(standard_schubert(S(2, {-1, -2})) == DM(2, {{-1, -2}}));
  CHECK(standard_schubert(S(1, {1})) == DM(1, {{1}, {-1}}));
  // (2̄,1) ≤ (1̄,2) elementwise, so {1,2̄} lies below {1̄,2}.
  CHECK(standard_schubert(S(2, {-1, 2})) == DM(2, {{-1, -2}, {1, -2}, {-1, 2}}));
}

TEST_CASE("Schubert matroids") {
  CHECK(schubert_matroid(2, 0b10) == Matroid::uniform(1, 2));
  CHECK(schubert_matroid(2, 0b01) == Matroid::from_labels({1, 2}, {{1}}));
  CHECK(schubert_matroid(3, 0b101) == Matroid::from_labels({1, 2, 3}, {{1, 2}, {1, 3}}));
}

TEST_CASE("property: standard Schubert polytopes are Schubert independence polytopes, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (auto &s : enumerate_ads(n, n)) {
      auto d = standard_schubert(s);
      CHECK(oracle::is_delta_matroid(n, d.feasible()));
      CHECK(d == from_independents(schubert_matroid(n, s.pos())));
      for (auto &b : enumerate_ads(n, n))
        CHECK(d.is_feasible(b.pos()) == gale_leq(b, s));
    }
}

TEST_CASE("cone and cube intersections") {
  CHECK(cone_cube_intersect({1, 1, 1}) == standard_schubert(S(3, {1, 2, 3})));
  CHECK(cone_cube_intersect({0, 0}) == DM(2, {{-1, -2}}));
  auto r = reduce_cone_apex({2, 0});
  CHECK(r.steps >= 1);
  auto direct = intersect_with_cube(truncated_cone({2, 0}, 6), {0, 0});
  REQUIRE(direct.has_value());
  REQUIRE(cone_cube_intersect({2, 0}).has_value());
  CHECK(BnPolytope::of(*cone_cube_intersect({2, 0})) == *direct);
}

TEST_CASE("property: the reduction agrees with direct intersection, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    IntPoint m(n, -2);
    while (true) {
      auto got = cone_cube_intersect(m);
      auto direct = intersect_with_cube(truncated_cone(m, 12), IntPoint(n, 0));
      REQUIRE(got.has_value() == direct.has_value());
      if (got)
        CHECK(BnPolytope::of(*got) == *direct);
      int i = 0;
      while (i < n && m[i] == 3)
        m[i++] = -2;
      if (i == n)
        break;
      ++m[i];
    }
  }
}

TEST_CASE("indicator verification") {
  IndicatorCombination zero{1,
                            {term(1, {0}, segment(0, 2)), term(-1, {0}, segment(0, 1)),
                             term(-1, {1}, segment(0, 1)), term(1, {1}, segment(0, 0))}};
  CHECK(verify_indicator(zero, std::nullopt).ok());
  IndicatorCombination cube{2, {term(1, {0, 0}, BnPolytope::cube(2))}};
  CHECK(verify_indicator(cube, BnPolytope::cube(2)).ok());
  IndicatorCombination off{2, {term(1, {0, 0}, BnPolytope::cube(2)),
                               term(-1, {0, 0}, BnPolytope::point({Q(0), Q(0)}))}};
  CHECK_FALSE(verify_indicator(off, BnPolytope::cube(2)).ok());
  CHECK(zero.evaluate({Q(1, 2)}) == 0);
  CHECK(cube.evaluate({Q(1), Q(1)}) == 1);
}

TEST_CASE("Schubert decompositions") {
  auto omega = standard_schubert(S(3, {1, -2, 3}));
  auto one = schubert_decompose(BnPolytope::of(omega));
  REQUIRE(one.terms.size() == 1);
  CHECK(one.terms[0].coeff == 1);
  CHECK(one.terms[0].polytope == BnPolytope::of(omega));
  for (auto &p : {BnPolytope::cross_polytope(2), BnPolytope::signed_permutohedron(2)}) {
    auto comb = schubert_decompose(p);
    CHECK(verify_indicator(comb, p).ok());
    for (auto &t : comb.terms) {
      auto v = t.polytope.vertices();
      CHECK(std::all_of(v.begin(), v.end(), [](const Point &x) {
        return std::all_of(x.begin(), x.end(), [](const Q &c) { return c == 0 || c == 1; });
      }));
    }
  }
}

TEST_CASE("property: every delta-matroid polytope decomposes into Schubert pieces, n <= 2") {
  for (int n = 1; n <= 2; ++n)
    for (auto &d : enumerate_deltamatroids(n)) {
      auto p = BnPolytope::of(d);
      auto comb = schubert_decompose(p);
      CHECK(verify_indicator(comb, p).ok());
    }
}

TEST_CASE("Schubert census against B_n Eulerian numbers") {
  CHECK(coloop_free_schubert_census(1) == std::vector<long>{1, 1});
  CHECK(coloop_free_schubert_census(2) == std::vector<long>{1, 6, 1});
  CHECK(coloop_free_schubert_census(3) == std::vector<long>{1, 23, 23, 1});
  for (int n = 1; n <= 3; ++n)
    CHECK(coloop_free_schubert_census(n) == oracle::eulerian_b(n));
}

TEST_CASE("property: Schubert delta-matroids are closed under cube faces, n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (auto &d : all_schubert(n)) {
      CHECK(is_schubert(d));
      int faces = 1;
      for (int i = 0; i < n; ++i)
        faces *= 3;
      for (int f = 0; f < faces; ++f) {
        Mask on = 0, off = 0;
        int x = f;
        for (int i = 0; i < n; ++i, x /= 3) {
          if (x % 3 == 1)
            on |= Mask{1} << i;
          if (x % 3 == 2)
            off |= Mask{1} << i;
        }
        std::vector<Mask> sub;
        for (Mask b : d.feasible())
          if ((b & on) == on && !(b & off))
            sub.push_back(b);
        if (!sub.empty())
          CHECK(is_schubert(DeltaMatroid::trusted(n, sub)));
      }
    }
}

TEST_CASE("property: Schubert indicator functions are linearly independent, n <= 2") {
  for (int n = 1; n <= 2; ++n) {
    auto all = all_schubert(n);
    std::vector<std::vector<std::int64_t>> rows;
    int steps = 4 * n;
    std::vector<int> g(n, -steps);
    for (auto &d : all) {
      auto p = BnPolytope::of(d);
      std::vector<std::int64_t> row;
      std::fill(g.begin(), g.end(), -steps);
      while (true) {
        Point x(n);
        for (int i = 0; i < n; ++i)
          x[i] = Q(g[i], steps);
        for (auto &c : x)
          c.canonicalize();
        row.push_back(p.contains(x));
        int i = 0;
        while (i < n && g[i] == 2 * steps)
          g[i++] = -steps;
        if (i == n)
          break;
        ++g[i];
      }
      rows.push_back(row);
    }
    CHECK(oracle::rank_mod_p(rows, 1000003) == static_cast<int>(all.size()));
  }
}
