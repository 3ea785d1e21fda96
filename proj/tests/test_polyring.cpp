#include "deltoid/errors.hpp"
#include "deltoid/polyring.hpp"

#include <doctest.h>

#include <random>

using namespace deltoid;

namespace {

MPoly var(const char *s) { return MPoly::var(s); }

MPoly random_poly(std::mt19937 &rng, const std::vector<std::string> &vars) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2);
  MPoly out;
  for (int k = 0; k < 4; ++k) {
    MPoly term(coeff(rng));
    for (auto &v : vars)
      term *= MPoly::var(v).pow(exp(rng));
    out += term;
  }
  return out;
}

} // namespace

TEST_CASE("arithmetic") {
  MPoly u = var("u");
  CHECK((u + 1) * (u - 1) == u.pow(2) - 1);
  MPoly t = MPoly::var("T1", true);
  CHECK(t * t.pow(-1) == MPoly(1));
  MPoly x = var("x"), y = var("y");
  CHECK((x + y).pow(3).coeff({{"x", 1}, {"y", 2}}) == 3);
  CHECK(MPoly().is_zero());
  CHECK((x - x).is_zero());
  CHECK_THROWS(var("x").pow(-1));
}

TEST_CASE("substitution and evaluation") {
  MPoly u = var("u"), v = var("v"), x = var("x");
  CHECK((u + 2).substitute({{"u", MPoly(0)}}) == MPoly(2));
  CHECK((u * v).substitute({{"u", x + 1}, {"v", x - 1}}) == x.pow(2) - 1);
  CHECK(u.pow(2).value({{"u", Q(3, 2)}}) == Q(9, 4));
  CHECK((u * v).evaluate({{"u", Q(2)}}) == 2 * v);
  CHECK_THROWS(u.value({}));
}

TEST_CASE("truncation") {
  MPoly t = var("t");
  CHECK((1 + t).pow(3).truncate_degree(1) == 1 + 3 * t);
  CHECK(t.pow(2).truncate_degree(1).is_zero());
  MPoly f = (1 + t).pow(4) * var("u");
  CHECK(f.truncate_degree(f.total_degree()) == f);
  MPoly g = (1 + t) * (1 + var("s")) * var("u").pow(5);
  CHECK(g.truncate_degree(1, {"t", "s"}) == (1 + t + var("s")) * var("u").pow(5));
  CHECK(g.homogeneous_part(2, {"t", "s"}) == t * var("s") * var("u").pow(5));
}

TEST_CASE("degrees and coefficients") {
  MPoly f = 3 * var("x").pow(2) * var("y") + var("y") - 7;
  CHECK(f.total_degree() == 3);
  CHECK(f.degree("x") == 2);
  CHECK(f.constant_term() == -7);
  CHECK_FALSE(f.is_homogeneous());
  CHECK_THROWS(f.coefficients("x"));
  MPoly p = univariate("z", {Q(1), Q(0), Q(5)});
  CHECK(p.coefficients("z") == std::vector<Q>{1, 0, 5});
  CHECK(p.derivative("z") == 10 * var("z"));
  CHECK(p.derivative("z", 2) == MPoly(10));
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937 rng(7);
  std::vector<std::string> vars{"a", "b", "c"};
  for (int trial = 0; trial < 50; ++trial) {
    MPoly p = random_poly(rng, vars), q = random_poly(rng, vars), r = random_poly(rng, vars);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p + (-p) == MPoly());
    std::map<std::string, Q> pt{{"a", Q(trial % 5) / 3}, {"b", Q(-2)}, {"c", Q(1, 7)}};
    CHECK((p * q).value(pt) == p.value(pt) * q.value(pt));
  }
}

TEST_CASE("property: substitution is a ring homomorphism") {
  std::mt19937 rng(11);
  std::vector<std::string> vars{"a", "b"};
  for (int trial = 0; trial < 30; ++trial) {
    MPoly p = random_poly(rng, vars), q = random_poly(rng, vars);
    std::map<std::string, MPoly> sub{{"a", var("b") + 1}, {"b", var("c") - var("a")}};
    CHECK((p * q).substitute(sub) == p.substitute(sub) * q.substitute(sub));
    CHECK((p + q).substitute(sub) == p.substitute(sub) + q.substitute(sub));
  }
}

TEST_CASE("printing") {
  CHECK(MPoly(0).to_string() == "0");
  CHECK((var("u") + 2).to_string() == "u + 2");
}
