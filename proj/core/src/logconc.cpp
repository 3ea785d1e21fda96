#include "deltoid/logconc.hpp"
#include "deltoid/envelope.hpp"
#include "deltoid/invariants.hpp"

#include <numeric>
#include <set>

namespace deltoid {

MPoly homogenize_u(const DeltaMatroid &d, HomogenizeTarget target) {
  int n = d.n();
  auto var = [](const char *s) { return MPoly::var(s); };
  if (target == HomogenizeTarget::Multivariable) {
    MPoly u = u_poly_multi(d);
    auto &vars = u.variables();
    std::vector<int> xi(vars.size(), 0);
    int vpos = u.var_index("v");
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (static_cast<int>(k) != vpos)
        xi[k] = std::stoi(vars[k].substr(1));
    MPoly lo = var("y") - var("q"), hi = var("y") + var("q");
    MPoly out;
    for (auto &[e, c] : u.terms()) {
      MPoly term(c);
      int deg = 0, b = 0;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (static_cast<int>(k) == vpos) {
          b = e[k];
        } else if (e[k]) {
          term *= MPoly::var("x" + std::to_string(xi[k])).pow(e[k]);
          deg += e[k];
        }
      }
      out += term * lo.pow(b) * hi.pow(n - deg - b);
    }
    return out;
  }
  MPoly u = u_poly_explicit(d);
  MPoly first, second, rest;
  if (target == HomogenizeTarget::Isotropic) {
    first = var("x");
    second = var("y") - var("q");
    rest = var("y") + var("q");
  } else {
    first = MPoly(2) * var("z") + var("x");
    second = var("y") - var("z");
    rest = var("y") + var("w");
  }
  MPoly out;
  for (auto &[e, c] : u.terms()) {
    int a = e.empty() ? 0 : e[u.var_index("u")];
    int b = e.empty() ? 0 : e[u.var_index("v")];
    out += MPoly(c) * first.pow(a) * second.pow(b) * rest.pow(n - a - b);
  }
  return out;
}

bool is_log_concave_sequence(const std::vector<Q> &a, std::string *why) {
  auto fail = [&](std::string s) {
    if (why)
      *why = std::move(s);
    return false;
  };
  std::size_t lo = 0, hi = a.size();
  while (lo < hi && a[lo] == 0)
    ++lo;
  while (hi > lo && a[hi - 1] == 0)
    --hi;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < 0)
      return fail("negative entry at index " + std::to_string(k));
  for (std::size_t k = lo; k < hi; ++k)
    if (a[k] == 0)
      return fail("internal zero at index " + std::to_string(k));
  for (std::size_t k = lo + 1; k + 1 < hi; ++k)
    if (a[k] * a[k] < a[k - 1] * a[k + 1])
      return fail("a_k^2 < a_{k-1} a_{k+1} at index " + std::to_string(k));
  return true;
}

UnbrokenVerdict is_log_concave_unbroken(const MPoly &f0) {
  if (!f0.is_homogeneous())
    throw InvalidArgument("is_log_concave_unbroken needs a homogeneous polynomial");
  MPoly f = f0.compact();
  UnbrokenVerdict out;
  auto &vars = f.variables();
  int m = static_cast<int>(vars.size());
  int d = f.total_degree();
  for (auto &[e, c] : f.terms())
    if (c < 0) {
      Slice s;
      s.first = s.second = m ? vars[0] : "";
      s.coeffs = {c};
      s.reason = "negative coefficient";
      out.ok = false;
      out.witness = s;
      return out;
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::map<MPoly::Exponents, std::vector<Q>> slices;
      for (auto &[e, c] : f.terms()) {
        MPoly::Exponents rest = e;
        rest[i] = rest[j] = 0;
        int dd = d - std::accumulate(rest.begin(), rest.end(), 0);
        auto &seq = slices[rest];
        if (seq.empty())
          seq.assign(dd + 1, Q(0));
        seq[e[i]] = c;
      }
      for (auto &[rest, seq] : slices) {
        std::string why;
        if (is_log_concave_sequence(seq, &why))
          continue;
        Slice s;
        s.first = vars[i];
        s.second = vars[j];
        for (int k = 0; k < m; ++k)
          if (rest[k])
            s.rest.emplace(vars[k], rest[k]);
        s.coeffs = seq;
        s.reason = why;
        out.ok = false;
        out.witness = std::move(s);
        return out;
      }
    }
  return out;
}

MPoly normalization(const MPoly &f) {
  MPoly::Terms t;
  for (auto &[e, c] : f.terms()) {
    Z fact = 1;
    for (int x : e) {
      if (x < 0)
        throw InvalidArgument("normalization needs nonnegative exponents");
      for (int k = 2; k <= x; ++k)
        fact *= k;
    }
    t.emplace(e, c / Q(fact));
  }
  return MPoly::from_terms(f.variables(), std::move(t));
}

bool is_m_convex(const std::vector<std::vector<int>> &support) {
  std::set<std::vector<int>> s(support.begin(), support.end());
  for (auto &a : s)
    for (auto &b : s)
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= b[i])
          continue;
        bool found = false;
        for (std::size_t j = 0; j < a.size() && !found; ++j) {
          if (a[j] >= b[j])
            continue;
          auto c = a;
          --c[i];
          ++c[j];
          found = s.count(c) > 0;
        }
        if (!found)
          return false;
      }
  return true;
}

int sign_variations(const std::vector<Q> &coeffs) {
  int count = 0, last = 0;
  for (auto &c : coeffs) {
    int s = sgn(c);
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++count;
    last = s;
  }
  return count;
}

std::vector<Q> characteristic_polynomial(const std::vector<std::vector<Q>> &a) {
  std::size_t n = a.size();
  std::vector<Q> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n, 0)), am(n, std::vector<Q>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M ← A·M + c_{n−k+1}·I, then c_{n−k} = −tr(A·M)/k.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Q s = 0;
        for (std::size_t l = 0; l < n; ++l)
          s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i)
      am[i][i] += c[n - k + 1];
    m.swap(am);
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        tr += a[i][l] * m[l][i];
    c[n - k] = -tr / Q(static_cast<long>(k));
  }
  return c;
}

int positive_eigenvalues(const std::vector<std::vector<Q>> &a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i])
        throw InvalidArgument("positive_eigenvalues needs a symmetric matrix");
  return sign_variations(characteristic_polynomial(a));
}

LorentzianVerdict is_denormalized_lorentzian(const MPoly &f0) {
  if (!f0.is_homogeneous())
    throw InvalidArgument("Lorentzian test needs a homogeneous polynomial");
  MPoly f = f0.compact();
  int m = static_cast<int>(f.variables().size());
  int d = f.total_degree();
  if (m > 8 || d > 8)
    throw ResourceLimit("Lorentzian test is capped at 8 variables and degree 8");
  LorentzianVerdict out;
  std::vector<std::vector<int>> support;
  for (auto &[e, c] : f.terms()) {
    if (c < 0) {
      out.ok = false;
      out.reason = "negative coefficient";
      return out;
    }
    support.push_back(e);
  }
  if (!is_m_convex(support)) {
    out.ok = false;
    out.reason = "support is not M-convex";
    return out;
  }
  if (d < 2)
    return out;
  // The Hessian of ∂^α N(f) has entries a_{α+e_i+e_j}.
  std::map<MPoly::Exponents, std::vector<std::vector<Q>>> hessians;
  for (auto &[e, c] : f.terms())
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        MPoly::Exponents alpha = e;
        --alpha[i];
        --alpha[j];
        if (alpha[i] < 0 || alpha[j] < 0)
          continue;
        auto &h = hessians[alpha];
        if (h.empty())
          h.assign(m, std::vector<Q>(m, Q(0)));
        h[i][j] = c;
        h[j][i] = c;
      }
  for (auto &[alpha, h] : hessians) {
    int pos = positive_eigenvalues(h);
    if (pos > 1) {
      out.ok = false;
      std::string mono;
      for (int k = 0; k < m; ++k)
        if (alpha[k])
          mono += f.variables()[k] + "^" + std::to_string(alpha[k]) + " ";
      out.reason = "Hessian after differentiating by " + (mono.empty() ? std::string("1 ") : mono) +
                   "has " + std::to_string(pos) + " positive eigenvalues";
      return out;
    }
  }
  return out;
}

std::vector<Q> interlace_transform(const std::vector<Z> &interlace, int n) {
  MPoly y = MPoly::var("y");
  MPoly out;
  for (std::size_t k = 0; k < interlace.size(); ++k)
    if (interlace[k] != 0)
      out += MPoly(Q(interlace[k])) * (y - 1).pow(static_cast<int>(k)) *
             (y + 1).pow(n - static_cast<int>(k));
  return out.coefficients("y");
}

std::vector<Z> spanning_independent_counts(const Matroid &m) {
  int k = m.size();
  check_cap(k, 16, "spanning_independent_counts");
  std::vector<Z> a(k + 1, 0);
  for (Mask s = 0; s <= full_mask(k); ++s) {
    if (m.is_spanning(s))
      for (Mask t = s;; t = (t - 1) & s) {
        if (m.is_independent(t))
          ++a[popcount(s) - popcount(t)];
        if (t == 0)
          break;
      }
    if (k == 0)
      break;
  }
  while (a.size() > 1 && a.back() == 0)
    a.pop_back();
  return a;
}

namespace {

std::string seq_string(const std::vector<Q> &a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k)
    s += (k ? ", " : "") + a[k].get_str();
  return s + ")";
}

std::vector<Q> u_coefficients(const MPoly &u, const MPoly &sub_u, const MPoly &sub_v) {
  MPoly p = u.substitute({{"u", sub_u}, {"v", sub_v}});
  if (p.is_zero())
    return {Q(0)};
  return p.over({"u"}).coefficients("u");
}

void add_sequence(Report &r, const std::string &name, const std::vector<Q> &a) {
  std::string why;
  bool ok = is_log_concave_sequence(a, &why);
  r.add(name, ok, ok ? seq_string(a) : seq_string(a) + ": " + why);
}

std::vector<Q> factorial_weighted(std::vector<Q> a) {
  Z f = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0)
      f *= static_cast<unsigned long>(k);
    a[k] *= Q(f);
  }
  return a;
}

} // namespace

Report lorentzian_checks(const DeltaMatroid &d) {
  Report r;
  const std::pair<HomogenizeTarget, const char *> targets[] = {
      {HomogenizeTarget::Isotropic, "isotropic"},
      {HomogenizeTarget::Enveloping, "enveloping"},
      {HomogenizeTarget::Multivariable, "multivariable"}};
  for (auto [t, name] : targets) {
    MPoly f = homogenize_u(d, t);
    auto lor = is_denormalized_lorentzian(f);
    auto ub = is_log_concave_unbroken(f);
    std::string ub_detail;
    if (ub.witness)
      ub_detail = "slice " + ub.witness->first + "/" + ub.witness->second + " " +
                  seq_string(ub.witness->coeffs) + ": " + ub.witness->reason;
    r.add(std::string(name) + ": denormalized Lorentzian", lor.ok, lor.reason);
    r.add(std::string(name) + ": log-concave unbroken array", ub.ok, ub_detail);
    r.add(std::string(name) + ": Lorentzian implies unbroken", !lor.ok || ub.ok, ub_detail);
  }
  return r;
}

Report matroid_inequality(const Matroid &m) {
  Report r;
  auto a = spanning_independent_counts(m);
  bool ok = true;
  std::string detail;
  for (std::size_t k = 1; k + 1 < a.size() && ok; ++k) {
    // a_k² ≥ (k+1)/k · a_{k−1} a_{k+1}.
    if (Z(a[k] * a[k] * static_cast<unsigned long>(k)) <
        Z(a[k - 1] * a[k + 1] * static_cast<unsigned long>(k + 1))) {
      ok = false;
      detail = "fails at k = " + std::to_string(k);
    }
  }
  std::vector<Q> aq(a.begin(), a.end());
  r.add("a_k^2 >= (k+1)/k a_{k-1} a_{k+1}", ok, ok ? seq_string(aq) : detail);
  return r;
}

Report corollary_checks(const DeltaMatroid &d, const std::optional<Matroid> &m) {
  Report r;
  int n = d.n();
  MPoly u = u_poly_explicit(d);
  MPoly x = MPoly::var("u");
  add_sequence(r, "U(2u,-u) log-concave", u_coefficients(u, MPoly(2) * x, -x));
  add_sequence(r, "(y+1)^n Int((y-1)/(y+1)) log-concave",
               interlace_transform(interlace_coefficients(d), n));
  auto u0 = u_coefficients(u, x, MPoly(0));
  add_sequence(r, "k! [u^k] U(u,0) log-concave", factorial_weighted(u0));
  add_sequence(r, "k! [u^k] U(u,-1) log-concave", factorial_weighted(u_coefficients(u, x, MPoly(-1))));
  std::optional<Matroid> mat = m ? m : as_base_polytope(d);
  if (mat) {
    if (!(from_bases(*mat) == d))
      throw InvalidArgument("corollary_checks: D is not the base delta-matroid of the given matroid");
    auto a = spanning_independent_counts(*mat);
    std::vector<Q> aq(a.begin(), a.end());
    while (u0.size() > 1 && u0.back() == 0)
      u0.pop_back();
    r.add("a_k = [u^k] U_{P(M)}(u,0)", aq == u0, seq_string(aq) + " vs " + seq_string(u0));
    r.merge(matroid_inequality(*mat));
  }
  return r;
}

FlawlessResult flawless_scan(const std::vector<DeltaMatroid> &family) {
  FlawlessResult out;
  MPoly x = MPoly::var("u");
  for (auto &d : family) {
    ++out.scanned;
    int n = d.n();
    auto a = u_coefficients(u_poly_explicit(d), MPoly(2) * x, -x);
    a.resize(std::max<std::size_t>(a.size(), n + 1), Q(0));
    for (int i = 0; 2 * i <= n; ++i)
      if (a[i] > a[n - i]) {
        out.counterexamples.emplace_back(d, a);
        break;
      }
  }
  return out;
}

} // namespace deltoid
