#include "deltoid/core.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/rational.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace deltoid;

namespace {

AdmissibleSet S(int n, std::vector<int> e) { return AdmissibleSet::from_signed(n, e); }

} // namespace

TEST_CASE("admissible sets") {
  auto s = S(3, {1, -3});
  CHECK(s.pos() == 0b001);
  CHECK(s.neg() == 0b100);
  CHECK(s.size() == 2);
  CHECK(s.contains(1));
  CHECK(s.contains(-3));
  CHECK_FALSE(s.contains(3));
  CHECK(s.to_signed() == std::vector<int>{-3, 1});
  CHECK(s.bar() == S(3, {-1, 3}));
  CHECK_FALSE(s.is_maximal());
  CHECK(AdmissibleSet::maximal(3, 0b101) == S(3, {1, -2, 3}));
  CHECK_THROWS_AS(S(2, {1, -1}), InvalidArgument);
  CHECK_THROWS_AS(S(2, {3}), InvalidArgument);
}

TEST_CASE("ray indices round-trip") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(ray_count(n) == static_cast<int>(std::pow(3, n)) - 1);
    auto rays = oracle::rays(n);
    REQUIRE(static_cast<int>(rays.size()) == ray_count(n));
    for (int k = 0; k < ray_count(n); ++k) {
      auto r = ray_from_index(n, k);
      CHECK(ray_index(r) == k);
      CHECK(r.pos() == rays[k].pos);
      CHECK(r.neg() == rays[k].neg);
    }
  }
}

TEST_CASE("Gale order") {
  CHECK(gale_leq(S(1, {-1}), S(1, {1})));
  CHECK(gale_leq(S(2, {-1, 2}), S(2, {1, 2})));
  // Sorted (2̄,1) against (1̄,2): both coordinates increase.
  CHECK(gale_leq(S(2, {1, -2}), S(2, {-1, 2})));
  CHECK(gale_leq_segments(S(2, {1, -2}), S(2, {-1, 2})));
  CHECK_FALSE(gale_leq(S(2, {-1, 2}), S(2, {1, -2})));
  CHECK_THROWS_AS(gale_leq(S(2, {1}), S(2, {1, 2})), InvalidArgument);
}

TEST_CASE("Gale order: elementwise and segment criteria agree") {
  for (int n = 1; n <= 4; ++n) {
    auto sets = enumerate_ads(n, n);
    for (auto &a : sets)
      for (auto &b : sets)
        CHECK(gale_leq(a, b) == gale_leq_segments(a, b));
  }
}

TEST_CASE("Weyl action") {
  CHECK(weyl_act(SignedPermutation::identity(2), S(2, {1, -2})) == S(2, {1, -2}));
  CHECK(weyl_act(SignedPermutation::last_flip(2), S(2, {1, 2})) == S(2, {1, -2}));
  CHECK(weyl_act(SignedPermutation::adjacent(2, 1), S(2, {1, -2})) == S(2, {2, -1}));
}

TEST_CASE("signed permutations") {
  auto w = SignedPermutation({-2, 1, 3});
  CHECK(w(1) == -2);
  CHECK(w(-1) == 2);
  CHECK(w.epsilon(2) == -1);
  CHECK(w.epsilon(1) == 1);
  CHECK((w * w.inverse()) == SignedPermutation::identity(3));
  CHECK(w.prefix(2) == S(3, {-2, 1}));
  CHECK_THROWS_AS(SignedPermutation({1, 1}), InvalidArgument);
  // (a*b)(x) = a(b(x))
  auto a = SignedPermutation::adjacent(3, 1), b = SignedPermutation::last_flip(3);
  for (int x : {1, 2, 3, -1, -2, -3})
    CHECK((a * b)(x) == a(b(x)));
}

TEST_CASE("descents") {
  CHECK(descent_count(SignedPermutation::identity(2)) == 0);
  CHECK(descent_count(SignedPermutation({-1, 2})) == 1);
  std::vector<long> hist(3, 0);
  for (auto &w : enumerate_group(2))
    ++hist[descent_count(w)];
  CHECK(hist == std::vector<long>{1, 6, 1});
}

TEST_CASE("Eulerian numbers of type B match descent enumeration") {
  for (int n = 0; n <= 5; ++n) {
    auto e = eulerian_b(n);
    auto o = oracle::eulerian_b(n);
    CHECK(std::vector<long>(e.begin(), e.end()) == o);
  }
}

TEST_CASE("enumerations") {
  CHECK(enumerate_group(2).size() == 8);
  CHECK(enumerate_group(3).size() == 48);
  CHECK(enumerate_ads(3, 3).size() == 8);
  auto one = enumerate_ads(1, 1);
  CHECK(std::set<AdmissibleSet>(one.begin(), one.end()) == std::set<AdmissibleSet>{S(1, {1}), S(1, {-1})});
  CHECK(enumerate_rays(3).size() == 26);
  std::set<SignedPermutation> seen;
  for (auto &w : enumerate_group(3))
    seen.insert(w);
  CHECK(seen.size() == 48);
}

TEST_CASE("property: Weyl action is a group action preserving admissibility") {
  auto group = enumerate_group(3);
  auto sets = enumerate_ads(3, 2);
  for (std::size_t i = 0; i < group.size(); i += 5)
    for (std::size_t j = 0; j < group.size(); j += 7)
      for (auto &s : sets)
        CHECK(weyl_act(group[i] * group[j], s) == weyl_act(group[i], weyl_act(group[j], s)));
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational("-4") == Q(-4));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial_q(Q(-1), 3) == -1);
  CHECK(binomial_q(Q(1, 2), 2) == Q(-1, 8));
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(check_cap(99, 4, "test"), ResourceLimit);
  CHECK_NOTHROW(check_cap(3, 4, "test"));
}
