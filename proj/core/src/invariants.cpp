#include "deltoid/invariants.hpp"

#include <map>

namespace deltoid {

std::vector<int> distance_table(const DeltaMatroid &d) {
  int n = d.n();
  check_cap(n, 24, "distance_table");
  std::size_t size = std::size_t{1} << n;
  std::vector<int> dist(size, -1);
  std::vector<Mask> frontier;
  for (Mask m : d.feasible()) {
    dist[m] = 0;
    frontier.push_back(m);
  }
  for (int level = 1; !frontier.empty(); ++level) {
    std::vector<Mask> next;
    for (Mask m : frontier)
      for (int i = 0; i < n; ++i) {
        Mask x = m ^ (Mask{1} << i);
        if (dist[x] < 0) {
          dist[x] = level;
          next.push_back(x);
        }
      }
    frontier.swap(next);
  }
  return dist;
}

std::vector<Z> interlace_coefficients(const DeltaMatroid &d) {
  auto dist = distance_table(d);
  std::vector<Z> c(d.n() + 1, 0);
  for (int x : dist)
    c[x] += 1;
  while (c.size() > 1 && c.back() == 0)
    c.pop_back();
  return c;
}

MPoly interlace(const DeltaMatroid &d) {
  std::vector<Q> c;
  for (auto &z : interlace_coefficients(d))
    c.emplace_back(z);
  return univariate("v", c);
}

MPoly u_poly_explicit(const DeltaMatroid &d) {
  check_cap(d.n(), 14, "u_poly_explicit");
  int n = d.n();
  // coeff[a][b]: coefficient of u^a v^b.
  std::vector<std::vector<Z>> coeff(n + 1, std::vector<Z>(n + 1, 0));
  for (Mask i = 0; i <= full_mask(n); ++i) {
    auto c = interlace_coefficients(projection_set(d, i));
    for (std::size_t b = 0; b < c.size(); ++b)
      coeff[popcount(i)][b] += c[b];
    if (n == 0)
      break;
  }
  MPoly::Terms t;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      if (coeff[a][b] != 0)
        t.emplace(MPoly::Exponents{a, b}, Q(coeff[a][b]));
  return MPoly::from_terms({"u", "v"}, std::move(t));
}

MPoly u_poly_multi(const DeltaMatroid &d) {
  check_cap(d.n(), 12, "u_poly_multi");
  int n = d.n();
  auto vars = MPoly::indexed("u", n);
  vars.push_back("v");
  MPoly::Terms t;
  for (Mask i = 0; i <= full_mask(n); ++i) {
    auto c = interlace_coefficients(projection_set(d, i));
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (c[b] == 0)
        continue;
      MPoly::Exponents e(n + 1, 0);
      for (int k = 0; k < n; ++k)
        e[k] = i >> k & 1;
      e[n] = static_cast<int>(b);
      t.emplace(std::move(e), Q(c[b]));
    }
    if (n == 0)
      break;
  }
  return MPoly::from_terms(std::move(vars), std::move(t));
}

namespace {

MPoly recurse(const DeltaMatroid &d, Pivot pivot, std::map<DeltaMatroid, MPoly> &memo) {
  if (d.n() == 0)
    return MPoly(1);
  if (auto it = memo.find(d); it != memo.end())
    return it->second;
  int i = pivot == Pivot::First ? 1 : d.n();
  Mask bit = Mask{1} << (i - 1);
  static const MPoly u = MPoly::var("u"), v = MPoly::var("v");
  MPoly r;
  if ((loops(d) | coloops(d)) & bit)
    r = (u + v + 1) * recurse(deletion(d, i), pivot, memo);
  else
    r = recurse(deletion(d, i), pivot, memo) + recurse(contraction(d, i), pivot, memo) +
        u * recurse(projection(d, i), pivot, memo);
  memo.emplace(d, r);
  return r;
}

} // namespace

MPoly u_poly_recursive(const DeltaMatroid &d, Pivot pivot) {
  check_cap(d.n(), 12, "u_poly_recursive");
  std::map<DeltaMatroid, MPoly> memo;
  return recurse(d, pivot, memo).over({"u", "v"});
}

namespace {

// counts[a][b] = #{S : corank = a, nullity = b}.
std::vector<std::vector<long>> corank_nullity_counts(const Matroid &m) {
  int k = m.size();
  std::vector<std::vector<long>> c(k + 1, std::vector<long>(k + 1, 0));
  for (Mask s = 0; s <= full_mask(k); ++s) {
    ++c[m.corank(s)][m.nullity(s)];
    if (k == 0)
      break;
  }
  return c;
}

} // namespace

MPoly tutte(const Matroid &m) {
  auto c = corank_nullity_counts(m);
  MPoly x1 = MPoly::var("x") - 1, y1 = MPoly::var("y") - 1;
  MPoly t;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      if (c[a][b])
        t += MPoly(c[a][b]) * x1.pow(static_cast<int>(a)) * y1.pow(static_cast<int>(b));
  return t.over({"x", "y"});
}

MPoly tutte_u_substitution(const Matroid &m) {
  MPoly t = tutte(m);
  int slack = m.size() - m.rank();
  MPoly u = MPoly::var("u"), v = MPoly::var("v");
  MPoly out;
  int ix = t.var_index("x"), iy = t.var_index("y");
  for (auto &[e, c] : t.terms()) {
    int a = ix < 0 ? 0 : e[ix], b = iy < 0 ? 0 : e[iy];
    if (b > slack)
      throw InternalError("Tutte y-degree exceeds the nullity of the ground set");
    out += MPoly(c) * (u + 2).pow(a) * (u + v + 1).pow(b) * (u + 1).pow(slack - b);
  }
  return out.over({"u", "v"});
}

MPoly base_polytope_u_formula(const Matroid &m) {
  int k = m.size();
  std::vector<std::vector<long>> c(k + 1, std::vector<long>(2 * k + 1, 0));
  for (Mask s = 0; s <= full_mask(k); ++s) {
    for (Mask t = s;; t = (t - 1) & s) {
      ++c[popcount(s & ~t)][m.corank(s) + m.nullity(t)];
      if (t == 0)
        break;
    }
    if (k == 0)
      break;
  }
  MPoly::Terms terms;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= 2 * k; ++b)
      if (c[a][b])
        terms.emplace(MPoly::Exponents{a, b}, Q(c[a][b]));
  return MPoly::from_terms({"u", "v"}, std::move(terms));
}

Report check_projection_sum(const DeltaMatroid &d) {
  Report r;
  int n = d.n();
  MPoly a = MPoly::var("a"), u = MPoly::var("u");
  MPoly lhs;
  for (Mask i = 0; i <= full_mask(n); ++i) {
    lhs += a.pow(popcount(i)) * u_poly_explicit(projection_set(d, i));
    if (n == 0)
      break;
  }
  MPoly rhs = u_poly_explicit(d).substitute({{"u", u + a}});
  r.add("projection-sum", lhs == rhs,
        lhs == rhs ? "" : "lhs " + lhs.to_string() + " vs rhs " + rhs.to_string());
  return r;
}

Report check_matroid_identities(const Matroid &m) {
  check_cap(m.size(), 8, "check_matroid_identities");
  Report r;
  MPoly uip = u_poly_explicit(from_independents(m));
  MPoly sub = tutte_u_substitution(m);
  r.add("U_IP(M) = (u+1)^(n-r) T_M(u+2,(u+v+1)/(u+1))", uip == sub,
        uip == sub ? "" : uip.to_string() + " vs " + sub.to_string());
  MPoly up = u_poly_explicit(from_bases(m));
  MPoly ds = base_polytope_u_formula(m);
  r.add("U_P(M) = corank-nullity double sum", up == ds,
        up == ds ? "" : up.to_string() + " vs " + ds.to_string());
  r.merge(check_projection_sum(from_independents(m)), "IP(M) ");
  r.merge(check_projection_sum(from_bases(m)), "P(M) ");
  return r;
}

} // namespace deltoid
