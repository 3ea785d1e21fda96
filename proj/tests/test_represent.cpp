#include "deltoid/errors.hpp"
#include "deltoid/invariants.hpp"
#include "deltoid/represent.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace deltoid;

namespace {

DeltaMatroid DM(int n, std::vector<std::vector<int>> sets) {
  std::vector<AdmissibleSet> s;
  for (auto &e : sets)
    s.push_back(AdmissibleSet::from_signed(n, e));
  return DeltaMatroid::from_sets(n, s);
}

std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      pairs.emplace_back(a, b);
  std::vector<Graph> out;
  for (long m = 0; m < (1L << pairs.size()); ++m) {
    Graph g{n, {}};
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1)
        g.edges.push_back(pairs[k]);
    out.push_back(g);
  }
  return out;
}

// [A_G | I_n]: the barred and unbarred column blocks swapped.
FqMatrix swapped_rep(const Graph &g) {
  auto l = adjacency_matrix_rep(g);
  FqMatrix out(2, g.n, 2 * g.n);
  for (int r = 0; r < g.n; ++r)
    for (int c = 0; c < g.n; ++c) {
      out.set(r, c, l.at(r, c + g.n));
      out.set(r, c + g.n, l.at(r, c));
    }
  return out;
}

} // namespace

TEST_CASE("isotropy") {
  FqMatrix l(2, {{1, 0, 0, 1}, {0, 1, 1, 0}});
  CHECK(is_isotropic(l, FormType::D));
  CHECK_FALSE(is_isotropic(FqMatrix(2, {{1, 1}}), FormType::D));
  CHECK(is_isotropic(l.with_zero_column(), FormType::B));
  // x₀² contributes in type B: (0|0|1) is not isotropic.
  CHECK_FALSE(is_isotropic(FqMatrix(3, {{0, 0, 1}}), FormType::B));
  CHECK_THROWS_AS(is_isotropic(FqMatrix(2, {{1, 0, 0}}), FormType::D), InvalidArgument);
}

TEST_CASE("delta-matroids from isotropic subspaces") {
  CHECK(delta_from_isotropic(FqMatrix(2, {{1, 0, 0, 1}, {0, 1, 1, 0}}), FormType::D) ==
        DM(2, {{1, 2}, {-1, -2}}));
  CHECK(delta_from_isotropic(FqMatrix(2, {{1, 0, 0, 0}, {0, 1, 0, 0}}), FormType::D) == DM(2, {{1, 2}}));
  CHECK(delta_from_isotropic(FqMatrix(2, {{0, 0, 1, 0}, {0, 0, 0, 1}}), FormType::D) ==
        DM(2, {{-1, -2}}));
  CHECK_THROWS_AS(delta_from_isotropic(FqMatrix(2, {{1, 1}}), FormType::D), InvalidArgument);
  CHECK_THROWS_AS(delta_from_isotropic(FqMatrix(2, {{1, 0, 0, 0}, {1, 0, 0, 0}}), FormType::D),
                  InvalidArgument);
}

TEST_CASE("adjacency delta-matroids") {
  CHECK(adjacency_delta(Graph{2, {}}) == DM(2, {{1, 2}}));
  CHECK(adjacency_delta(Graph{2, {{1, 2}}}) == DM(2, {{1, 2}, {-1, -2}}));
  auto path = adjacency_delta(Graph{3, {{1, 2}, {2, 3}}});
  CHECK(oracle::is_delta_matroid(3, path.feasible()));
  auto c = interlace_coefficients(path);
  while (c.size() > 1 && c.back() == 0)
    c.pop_back();
  CHECK(c == oracle::interlace(3, path.feasible()));
  CHECK_THROWS_AS(Graph({2, {{1, 1}}}).validate(), InvalidArgument);
  CHECK_THROWS_AS(Graph({2, {{1, 2}, {2, 1}}}).validate(), InvalidArgument);
  CHECK_THROWS_AS(Graph({2, {{1, 3}}}).validate(), InvalidArgument);
}

TEST_CASE("property: adjacency feasible sets are the nonsingular principal minors, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (auto &g : all_graphs(n)) {
      auto d = adjacency_delta(g);
      CHECK(oracle::is_delta_matroid(n, d.feasible()));
      // B feasible iff the principal submatrix of A_G on [n] ∖ B is nonsingular over F₂.
      std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
      for (auto [x, y] : g.edges)
        a[x - 1][y - 1] = a[y - 1][x - 1] = 1;
      for (Mask b = 0; b < (Mask{1} << n); ++b) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
          if (!(b >> i & 1))
            idx.push_back(i);
        std::vector<std::vector<std::int64_t>> sub;
        for (int i : idx) {
          std::vector<std::int64_t> row;
          for (int j : idx)
            row.push_back(a[i][j]);
          sub.push_back(row);
        }
        bool nonsingular = idx.empty() || oracle::rank_mod_p(sub, 2) == static_cast<int>(idx.size());
        CHECK(d.is_feasible(b) == nonsingular);
      }
    }
}

TEST_CASE("property: swapping the column blocks dualizes, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (auto &g : all_graphs(n)) {
      auto d = adjacency_delta(g);
      CHECK(delta_from_isotropic(swapped_rep(g), FormType::D) == dual(d));
      CHECK(twist(SignedPermutation::sign_flip(n, (Mask{1} << n) - 1), d) == dual(d));
    }
}

TEST_CASE("property: row operations preserve the delta-matroid") {
  std::mt19937 rng(41);
  for (int n = 2; n <= 4; ++n)
    for (auto &g : all_graphs(n)) {
      auto l = adjacency_matrix_rep(g);
      std::uniform_int_distribution<int> row(0, n - 1);
      int a = row(rng), b = row(rng);
      if (a == b)
        continue;
      FqMatrix m = l;
      for (int c = 0; c < m.cols(); ++c)
        m.set(a, c, (m.at(a, c) + m.at(b, c)) % 2);
      CHECK(delta_from_isotropic(m, FormType::D) == adjacency_delta(g));
      CHECK(m.rref() == l.rref());
    }
}

TEST_CASE("isotropic catalogs") {
  for (int n = 1; n <= 3; ++n)
    for (auto &l : enumerate_isotropic(2, n, FormType::D)) {
      CHECK(is_isotropic(l, FormType::D));
      CHECK(oracle::is_delta_matroid(n, delta_from_isotropic(l, FormType::D).feasible()));
    }
  for (auto &l : enumerate_isotropic(3, 2, FormType::B)) {
    CHECK(is_isotropic(l, FormType::B));
    CHECK(oracle::is_delta_matroid(2, delta_from_isotropic(l, FormType::B).feasible()));
  }
}

TEST_CASE("U-circ family") {
  // |S| ≤ 0 leaves only S = ∅.
  CHECK(circ_uniform(0, 2) == DM(2, {{-1, -2}}));
  CHECK(circ_uniform(2, 2) == DM(2, {{-1, -2}, {1, 2}}));
  CHECK(circ_uniform(1, 1) == DM(1, {{1}}));
  auto c = circ_uniform_interlace(7, 20);
  REQUIRE(c.size() >= 4);
  CHECK(c[0] == 94184);
  CHECK(c[1] == 169766);
  CHECK(c[2] == 167960);
  CHECK(c[3] == 184756);
}

TEST_CASE("property: U-circ is even and both interlace paths agree, m <= 6") {
  for (int m = 3; m <= 6; ++m) {
    auto d = circ_uniform(m - 3, 2 * m);
    for (Mask b : d.feasible())
      CHECK(popcount(b) % 2 == (m - 3) % 2);
    auto closed = circ_uniform_interlace(m - 3, 2 * m);
    auto swept = interlace_coefficients(d);
    while (swept.size() > 1 && swept.back() == 0)
      swept.pop_back();
    while (closed.size() > 1 && closed.back() == 0)
      closed.pop_back();
    CHECK(swept == closed);
  }
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) {
      auto d = circ_uniform(r, n);
      CHECK(oracle::is_delta_matroid(n, d.feasible()));
      auto c = circ_uniform_interlace(r, n);
      while (c.size() > 1 && c.back() == 0)
        c.pop_back();
      CHECK(c == oracle::interlace(n, d.feasible()));
    }
}

TEST_CASE("U-circ realizations over a large prime field") {
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) {
      auto l = circ_uniform_realization(r, n);
      CHECK(is_isotropic(l, FormType::D));
      CHECK(delta_from_isotropic(l, FormType::D) == circ_uniform(r, n));
    }
}

TEST_CASE("field arithmetic") {
  CHECK(mod_inverse(3, 7) == 5);
  FqMatrix m(5, {{1, 2}, {2, 4}});
  CHECK(m.rank() == 1);
  CHECK_FALSE(m.nonsingular_columns({0, 1}));
  CHECK(m.without_column(0).cols() == 1);
}
