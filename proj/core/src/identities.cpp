#include "deltoid/invariants.hpp"
#include "deltoid/localization.hpp"
#include "deltoid/logconc.hpp"
#include "series.hpp"

#include <random>

namespace deltoid {

using detail::trunc;

namespace {

void compare(Report &r, const std::string &name, const MPoly &lhs, const MPoly &rhs) {
  bool ok = lhs == rhs;
  r.add(name, ok, ok ? std::string() : lhs.to_string() + " vs " + rhs.to_string());
}

MPoly var(const char *s) { return MPoly::var(s); }

// Π_{ε_i = −1} (1 − x_i t_i), the total class Π(1 + x_i h_i).
EqClass coordinate_product(int n) {
  std::vector<MPoly> v;
  for (auto &w : fixed_points(n)) {
    MPoly p(1);
    for (int i = 1; i <= n; ++i)
      if (w.epsilon(i) < 0)
        p *= 1 - MPoly::var("x" + std::to_string(i)) * chow_var(i);
    v.push_back(trunc(p, n));
  }
  return EqClass(n, Side::Chow, std::move(v));
}

} // namespace

Report check_hrr(const EqClass &k_class, const std::optional<Z> &chi) {
  Report r;
  int n = k_class.n();
  Z e = euler_char(k_class);
  if (chi)
    r.add("fixed-point Euler characteristic", e == *chi, e.get_str() + " vs " + chi->get_str());
  Q want = chi ? Q(*chi) : Q(e);
  Q hrr = integrate_value(phi_B(k_class) * chern(boxplus_o1(n)));
  r.add("HRR", hrr == want, hrr.get_str() + " vs " + want.get_str());
  Q other = integrate_value(zeta_B(k_class) * chern(boxplus_o_minus1(n)) * geometric(gamma_class(n)));
  r.add("dual HRR", other == want, other.get_str() + " vs " + want.get_str());
  return r;
}

Report check_hrr(const DeltaMatroid &d) {
  Report r;
  auto p = BnPolytope::of(d);
  r.merge(check_hrr(class_of_polytope(p), Z(static_cast<unsigned long>(lattice_count(p)))),
          "line bundle: ");
  r.merge(check_hrr(iso_class(d)), "isotropic: ");
  r.merge(check_hrr(env_quot(d)), "quotient: ");
  r.merge(check_hrr(env_sub(d)), "sub: ");
  return r;
}

Report check_interlace_integral(const DeltaMatroid &d) {
  Report r;
  int n = d.n();
  MPoly u = var("u"), v = var("v");
  MPoly lhs = integrate(chern(env_sub(d), u) * chern(env_quot(d), v));
  auto c = interlace_coefficients(d);
  MPoly rhs;
  for (std::size_t k = 0; k < c.size(); ++k)
    rhs += MPoly(Q(c[k])) * u.pow(static_cast<int>(k)) * v.pow(n - static_cast<int>(k));
  compare(r, "interlace integral", lhs, rhs);
  return r;
}

Report check_u_integral(const DeltaMatroid &d) {
  Report r;
  int n = d.n();
  MPoly lhs = integrate(chern(boxplus_o1(n), var("u")) * chern(env_sub(d), var("v")) *
                        chern(env_quot(d)));
  compare(r, "U-polynomial integral", lhs, u_poly_explicit(d));
  return r;
}

Report check_enveloping_integral(const DeltaMatroid &d) {
  Report r;
  int n = d.n();
  auto q = env_quot(d);
  MPoly lhs = integrate(segre(dual(q), var("z")) * chern(q, var("w")) *
                        geometric(gamma_class(n), var("y")) * chern(boxplus_o1(n), var("x")));
  compare(r, "enveloping integral", lhs, homogenize_u(d, HomogenizeTarget::Enveloping));
  return r;
}

Report check_isotropic_integral(const DeltaMatroid &d) {
  Report r;
  int n = d.n();
  MPoly lhs = integrate(chern(dual(iso_class(d)), var("q")) * geometric(gamma_class(n), var("y")) *
                        coordinate_product(n));
  compare(r, "isotropic integral", lhs, homogenize_u(d, HomogenizeTarget::Multivariable));
  return r;
}

namespace {

// Per-fixed-point value of Π(1 + ι(T^m)u)^a (exterior) or Π(1 − ι(T^m)u)^{−a} (symmetric),
// with ι = φ^B or ζ^B and u a rational number.
MPoly power_series_side(const MPoly &e, const SignedPermutation &w, const Q &u, bool zeta,
                        bool symmetric) {
  int n = w.n();
  MPoly out(1);
  for (auto &[exp, a] : e.terms()) {
    MPoly::Terms one;
    one.emplace(exp, Q(1));
    MPoly mono = MPoly::from_terms(e.variables(), std::move(one), e.laurent());
    MPoly img = detail::exceptional_image(mono, w, zeta);
    long k = a.get_num().get_si();
    MPoly f = symmetric ? detail::series_pow(1 - img * MPoly(u), -k, n)
                        : detail::series_pow(1 + img * MPoly(u), k, n);
    out = trunc(out * f, n);
  }
  return out;
}

Q rank_of(const MPoly &e) {
  Q s = 0;
  for (auto &[exp, a] : e.terms())
    s += a;
  return s;
}

MPoly qpow(const Q &x, long k) {
  Q r = 1, b = k < 0 ? 1 / x : x;
  for (long j = 0; j < (k < 0 ? -k : k); ++j)
    r *= b;
  return MPoly(r);
}

Report nice_chern_for(const EqClass &e, unsigned seed, const std::string &label) {
  Report r;
  int n = e.n();
  std::mt19937_64 rng(seed + 17);
  std::uniform_int_distribution<int> pick(2, 40);
  Q u(pick(rng), pick(rng) + 41);
  u.canonicalize();
  auto &pts = fixed_points(n);
  auto ev = dual(e);
  auto c_e_u1 = chern(e, MPoly(u / (u + 1)));
  auto s_ev = segre(ev);
  auto c_ev_u2 = chern(ev, MPoly(1 / (u + 1)));
  auto s_e_u3 = segre(e, MPoly(u / (u - 1)));
  auto c_ev = chern(ev);
  auto s_ev_u4 = segre(ev, MPoly(1 / (1 - u)));
  bool ok[4] = {true, true, true, true};
  std::string detail[4];
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto &w = pts[k];
    const MPoly &ew = e.values()[k];
    long rk = rank_of(ew).get_num().get_si();
    MPoly lhs[4] = {power_series_side(ew, w, u, true, false), power_series_side(ew, w, u, false, false),
                    power_series_side(ew, w, u, true, true), power_series_side(ew, w, u, false, true)};
    MPoly rhs[4] = {
        trunc(qpow(u + 1, rk) * c_e_u1.values()[k], n),
        trunc(qpow(u + 1, rk) * s_ev.values()[k] * c_ev_u2.values()[k], n),
        trunc(qpow(1 - u, -rk) * s_e_u3.values()[k], n),
        trunc(qpow(1 - u, -rk) * c_ev.values()[k] * s_ev_u4.values()[k], n)};
    for (int j = 0; j < 4; ++j)
      if (ok[j] && !(lhs[j] == rhs[j])) {
        ok[j] = false;
        detail[j] = "at " + w.to_string() + ": " + lhs[j].to_string() + " vs " + rhs[j].to_string();
      }
  }
  const char *names[4] = {"zeta exterior", "phi exterior", "zeta symmetric", "phi symmetric"};
  for (int j = 0; j < 4; ++j)
    r.add(label + names[j], ok[j], detail[j]);
  return r;
}

// The fixed point of X_{B_n} with w(n) = ±i whose first n−1 values relabel w′.
SignedPermutation lift(const SignedPermutation &w2, int i, int sign) {
  std::vector<int> img;
  for (int x : w2.images()) {
    int a = std::abs(x);
    int b = a >= i ? a + 1 : a;
    img.push_back(x > 0 ? b : -b);
  }
  img.push_back(sign * i);
  return SignedPermutation(std::move(img));
}

} // namespace

Report check_nice_chern(const DeltaMatroid &d, unsigned seed) {
  Report r;
  r.merge(nice_chern_for(dual(env_quot(d)), seed, "dual quotient, "));
  r.merge(nice_chern_for(dual(env_sub(d)), seed, "dual sub, "));
  return r;
}

Report check_restriction(const DeltaMatroid &d) {
  Report r;
  int n = d.n();
  const std::pair<const char *, EqClass (*)(const DeltaMatroid &)> kinds[] = {
      {"sub", env_sub}, {"quotient", env_quot}, {"isotropic", iso_class}};
  for (auto [name, make] : kinds) {
    EqClass big = make(d);
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= n && ok; ++i) {
      EqClass small = make(projection(d, i));
      std::map<std::string, MPoly> sub;
      sub.emplace("T" + std::to_string(i), MPoly(1).with_laurent(true));
      for (int j = i + 1; j <= n; ++j)
        sub.emplace("T" + std::to_string(j), k_var(j - 1));
      for (auto &w2 : fixed_points(n - 1)) {
        MPoly want = 1 + small.at(w2);
        for (int sign : {1, -1}) {
          MPoly got = big.at(lift(w2, i, sign)).substitute(sub);
          if (!(got == want)) {
            ok = false;
            detail = "element " + std::to_string(i) + " at " + w2.to_string() + ": " + got.to_string() +
                     " vs " + want.to_string();
          }
        }
      }
    }
    r.add(std::string("restriction of ") + name, ok, detail);
  }
  return r;
}

Report check_classes(const DeltaMatroid &d) {
  Report r;
  int n = d.n();
  const std::pair<const char *, EqClass> classes[] = {
      {"isotropic", iso_class(d)}, {"quotient", env_quot(d)}, {"sub", env_sub(d)}};
  for (auto &[name, f] : classes) {
    auto bad = class_violation(f);
    r.add(std::string(name) + " class compatible", !bad, bad.value_or(""));
  }
  r.add("S + Q = M", env_sub(d) + env_quot(d) == box_class(n));
  bool ok = true;
  std::string detail;
  std::vector<SignedPermutation> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back(SignedPermutation::adjacent(n, i));
  if (n > 0)
    gens.push_back(SignedPermutation::last_flip(n));
  for (auto &g : gens)
    if (ok && !(iso_class(twist(g, d)) == act(g, iso_class(d)))) {
      ok = false;
      detail = "generator " + g.to_string();
    }
  r.add("isotropic class equivariance", ok, detail);
  return r;
}

Report verify_identities(const DeltaMatroid &d, unsigned seed) {
  check_cap(d.n(), 4, "verify_identities");
  Report r;
  r.merge(check_classes(d));
  r.merge(check_hrr(d));
  r.merge(check_interlace_integral(d));
  r.merge(check_u_integral(d));
  r.merge(check_enveloping_integral(d));
  r.merge(check_isotropic_integral(d));
  r.merge(check_nice_chern(d, seed));
  r.merge(check_restriction(d));
  return r;
}

} // namespace deltoid
