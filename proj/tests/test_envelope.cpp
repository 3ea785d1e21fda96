#include "deltoid/envelope.hpp"
#include "deltoid/errors.hpp"
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

const Q &at(const std::vector<Q> &h, const AdmissibleSet &s) { return h[ray_index(s)]; }

DeltaMatroid duchamp() {
  return DM(4, {{-1, -2, -3, -4}, {-1, -2, -3, 4}, {-1, 2, 3, -4}, {1, -2, 3, -4}, {1, 2, -3, -4},
                {-1, 2, 3, 4}, {1, -2, 3, 4}, {1, 2, -3, 4}, {1, 2, 3, 4}});
}

} // namespace

TEST_CASE("env support numbers") {
  auto u12 = Matroid::from_labels({1, -1}, {{1}, {-1}});
  auto h = env_support(u12);
  CHECK(at(h, S(1, {1})) == 1);
  CHECK(at(h, S(1, {-1})) == 1);
  auto point = env_support(Matroid::from_labels({1, -1}, {{1}}));
  CHECK(at(point, S(1, {1})) == 1);
  CHECK(at(point, S(1, {-1})) == -1);
  auto a = Matroid::from_labels({1, -1}, {{1}, {-1}}), b = Matroid::from_labels({2, -2}, {{2}});
  auto sum = env_support(direct_sum(a, b));
  auto ha = env_support(a), hb = env_support(b.relabeled({1, -1}));
  auto block = [](const std::vector<Q> &h, Mask p, Mask q) {
    return (p | q) ? at(h, AdmissibleSet(1, p, q)) : Q(0);
  };
  for (auto &r : enumerate_rays(2)) {
    Mask p = r.pos(), q = r.neg();
    CHECK(at(sum, r) == block(ha, p & 1, q & 1) + block(hb, p >> 1, q >> 1));
  }
  CHECK_THROWS_AS(env_support(Matroid::uniform(1, 3)), InvalidArgument);
}

TEST_CASE("enveloping test") {
  auto u12 = Matroid::from_labels({1, -1}, {{1}, {-1}});
  auto dpm = DM(1, {{1}, {-1}});
  CHECK(is_enveloping(u12, dpm));
  CHECK_FALSE(is_enveloping(Matroid::from_labels({1, -1}, {{1}}), dpm));
  CHECK(is_enveloping(envelope_base(Matroid::uniform(1, 2)), from_bases(Matroid::uniform(1, 2))));
}

TEST_CASE("canonical envelopes") {
  auto b11 = envelope_base(Matroid::uniform(1, 1));
  CHECK(b11.bases().size() == 1);
  CHECK(b11.labels_of(b11.bases()[0]) == std::vector<int>{1});
  CHECK(is_enveloping(b11, from_bases(Matroid::uniform(1, 1))));
  auto i12 = envelope_indep(Matroid::uniform(1, 2));
  CHECK(is_enveloping(i12, from_independents(Matroid::uniform(1, 2))));
  auto b01 = envelope_base(Matroid::uniform(0, 1));
  CHECK(b01.labels_of(b01.bases()[0]) == std::vector<int>{-1});
  CHECK(is_enveloping(b01, from_bases(Matroid::uniform(0, 1))));
}

TEST_CASE("property: canonical envelopes of small matroids") {
  std::vector<Matroid> ms;
  for (int k = 0; k <= 4; ++k)
    for (int r = 0; r <= k; ++r)
      ms.push_back(Matroid::uniform(r, k));
  ms.push_back(Matroid::graphic(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  for (auto &m : ms) {
    auto base = envelope_base(m), indep = envelope_indep(m);
    CHECK(is_enveloping(base, from_bases(m)));
    CHECK(is_enveloping(indep, from_independents(m)));
    CHECK(check_envelope_lemmas({from_bases(m), base, Construction::DirectSum}).ok());
    CHECK(check_envelope_lemmas({from_independents(m), indep, Construction::FreeProduct}).ok());
  }
}

TEST_CASE("envelopes from representations") {
  FqMatrix id(2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
  CHECK(is_enveloping(envelope_from_rep(id), DM(2, {{1, 2}})));
  auto edge = adjacency_matrix_rep(Graph{2, {{1, 2}}}).with_zero_column();
  CHECK(is_enveloping(envelope_from_rep(edge), DM(2, {{1, 2}, {-1, -2}})));
  // The zero column does not change the column matroid.
  auto l = adjacency_matrix_rep(Graph{3, {{1, 2}, {2, 3}}});
  auto m = envelope_from_rep(l.with_zero_column());
  for (Mask b : m.bases())
    CHECK(l.nonsingular_columns([&] {
      std::vector<int> cols;
      for (int k = 0; k < 6; ++k)
        if (b >> k & 1)
          cols.push_back(k);
      return cols;
    }()));
  CHECK_THROWS_AS(envelope_from_rep(FqMatrix(2, {{1, 1, 0}})), InvalidArgument);
}

TEST_CASE("envelope lemmas") {
  auto u12 = Matroid::uniform(1, 2);
  CHECK(check_envelope_lemmas({from_bases(u12), envelope_base(u12), Construction::DirectSum}).ok());
  CHECK(check_envelope_lemmas({from_independents(u12), envelope_indep(u12), Construction::FreeProduct}).ok());
  auto loop = DM(1, {{-1}});
  auto w = find_envelope(loop);
  REQUIRE(w.has_value());
  CHECK(check_envelope_lemmas(*w).ok());
}

TEST_CASE("property: witnesses transport along operations, n <= 2") {
  for (int n = 1; n <= 2; ++n)
    for (auto &d : enumerate_deltamatroids(n)) {
      auto w = find_envelope(d);
      REQUIRE(w.has_value());
      CHECK(w->delta == d);
      CHECK(is_enveloping(w->matroid, d));
      for (auto &g : enumerate_group(n)) {
        auto t = twist_witness(g, *w);
        CHECK(is_enveloping(t.matroid, t.delta));
      }
      auto du = dual_witness(*w);
      CHECK(is_enveloping(du.matroid, du.delta));
      for (int i = 1; i <= n; ++i) {
        if (!(loops(d) >> (i - 1) & 1)) {
          auto c = minor_witness(*w, i, true);
          CHECK(is_enveloping(c.matroid, c.delta));
        }
        if (!(coloops(d) >> (i - 1) & 1)) {
          auto c = minor_witness(*w, i, false);
          CHECK(is_enveloping(c.matroid, c.delta));
        }
      }
      for (auto &e : enumerate_deltamatroids(1)) {
        auto p = product_witness(*w, *find_envelope(e));
        CHECK(is_enveloping(p.matroid, p.delta));
      }
    }
}

TEST_CASE("property: witnesses transport on random n = 3 instances") {
  std::mt19937 rng(13);
  auto all = enumerate_deltamatroids(3);
  auto group = enumerate_group(3);
  int found = 0;
  for (int trial = 0; trial < 25; ++trial) {
    auto &d = all[rng() % all.size()];
    auto w = find_envelope(d);
    if (!w)
      continue;
    ++found;
    auto t = twist_witness(group[rng() % group.size()], *w);
    CHECK(is_enveloping(t.matroid, t.delta));
    auto du = dual_witness(*w);
    CHECK(is_enveloping(du.matroid, du.delta));
    CHECK(check_envelope_lemmas(*w).ok());
  }
  CHECK(found > 0);
}

TEST_CASE("property: representable delta-matroids get validated witnesses") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        pairs.emplace_back(a, b);
    for (long m = 0; m < (1L << pairs.size()); ++m) {
      Graph g{n, {}};
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (m >> k & 1)
          g.edges.push_back(pairs[k]);
      auto l = adjacency_matrix_rep(g).with_zero_column();
      CHECK(is_enveloping(envelope_from_rep(l), adjacency_delta(g)));
      auto w = find_envelope(adjacency_delta(g));
      REQUIRE(w.has_value());
      CHECK(is_enveloping(w->matroid, w->delta));
    }
  }
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      auto l = circ_uniform_realization(r, n).with_zero_column();
      CHECK(is_enveloping(envelope_from_rep(l), circ_uniform(r, n)));
    }
}

TEST_CASE("the Duchamp family") {
  auto d = duchamp();
  CHECK(d.feasible().size() == 9);
  CHECK(oracle::is_delta_matroid(4, d.feasible()));
  for (auto &w : enumerate_group(4)) {
    auto t = twist(w, d);
    CHECK_FALSE(as_base_polytope(t).has_value());
    CHECK_FALSE(as_indep_polytope(t).has_value());
  }
  CHECK_FALSE(find_envelope(d).has_value());
}
