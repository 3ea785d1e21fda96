#include "deltoid/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

namespace deltoid {

namespace {

struct Ray {
  Mask pos, neg;
};

std::vector<Ray> ray_table(int n) {
  std::vector<Ray> out;
  for (auto &s : enumerate_rays(n))
    out.push_back({s.pos(), s.neg()});
  return out;
}

void check_support_size(int n, std::size_t size) {
  if (n < 0)
    throw InvalidArgument("negative ground size");
  check_cap(n, 6, "BnPolytope");
  if (size != static_cast<std::size_t>(ray_count(n)))
    throw InvalidArgument("support vector must have 3^n - 1 entries");
}

bool fits_int64(const std::vector<Q> &h) {
  for (auto &x : h)
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
      return false;
  return true;
}

std::int64_t floor_int(const Q &x) {
  Z f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (!f.fits_slong_p())
    throw ResourceLimit("support number too large for lattice enumeration");
  return f.get_si();
}

} // namespace

Q pairing(const Point &x, const AdmissibleSet &s) {
  Q r = 0;
  for (int i = 0; i < s.n(); ++i) {
    if (s.pos() >> i & 1)
      r += x[i];
    else if (s.neg() >> i & 1)
      r -= x[i];
  }
  return r;
}

std::int64_t pairing(const IntPoint &x, Mask pos, Mask neg) {
  std::int64_t r = 0;
  for (Mask m = pos; m; m &= m - 1)
    r += x[std::countr_zero(m)];
  for (Mask m = neg; m; m &= m - 1)
    r -= x[std::countr_zero(m)];
  return r;
}

std::optional<SupportViolation> support_violation(int n, const std::vector<Q> &h) {
  check_support_size(n, h.size());
  auto rays = ray_table(n);
  auto chain_ray = [&](const SignedPermutation &w, int k) { return ray_index(w.prefix(k)); };
  if (fits_int64(h)) {
    std::vector<std::int64_t> hi(h.size());
    for (std::size_t r = 0; r < h.size(); ++r)
      hi[r] = h[r].get_num().get_si();
    IntPoint x(n);
    for (auto &w : enumerate_group(n)) {
      std::int64_t prev = 0;
      for (int k = 1; k <= n; ++k) {
        std::int64_t cur = hi[chain_ray(w, k)];
        int y = w(k);
        x[std::abs(y) - 1] = y > 0 ? cur - prev : prev - cur;
        prev = cur;
      }
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (pairing(x, rays[r].pos, rays[r].neg) > hi[r])
          return SupportViolation{w, AdmissibleSet(n, rays[r].pos, rays[r].neg)};
    }
    return std::nullopt;
  }
  for (auto &w : enumerate_group(n)) {
    Point x(n);
    Q prev = 0;
    for (int k = 1; k <= n; ++k) {
      const Q &cur = h[chain_ray(w, k)];
      int y = w(k);
      x[std::abs(y) - 1] = y > 0 ? Q(cur - prev) : Q(prev - cur);
      prev = cur;
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      AdmissibleSet s(n, rays[r].pos, rays[r].neg);
      if (pairing(x, s) > h[r])
        return SupportViolation{w, s};
    }
  }
  return std::nullopt;
}

BnPolytope::BnPolytope(int n, std::vector<Q> support) : n_(n), h_(std::move(support)) {
  if (auto bad = support_violation(n_, h_))
    throw InvalidArgument("support numbers are not those of a B_n generalized permutohedron: "
                          "the chain vertex for w=" + bad->w.to_string() +
                          " violates the inequality for ray " + bad->ray.to_string());
}

BnPolytope BnPolytope::point(const Point &x) {
  int n = static_cast<int>(x.size());
  check_cap(n, 6, "BnPolytope");
  std::vector<Q> h;
  for (auto &s : enumerate_rays(n))
    h.push_back(pairing(x, s));
  return BnPolytope(n, std::move(h), Unchecked{});
}

BnPolytope BnPolytope::hull(int n, const std::vector<Point> &pts) {
  if (pts.empty())
    throw InvalidArgument("hull of an empty point set");
  check_cap(n, 6, "BnPolytope");
  std::vector<Q> h;
  for (auto &s : enumerate_rays(n)) {
    Q best = pairing(pts.front(), s);
    for (auto &p : pts) {
      if (static_cast<int>(p.size()) != n)
        throw InvalidArgument("point dimension mismatch");
      best = std::max(best, pairing(p, s));
    }
    h.push_back(best);
  }
  return BnPolytope(n, std::move(h));
}

BnPolytope BnPolytope::cube(int n) {
  check_cap(n, 6, "BnPolytope");
  std::vector<Q> h;
  for (auto &s : enumerate_rays(n))
    h.emplace_back(popcount(s.pos()));
  return BnPolytope(n, std::move(h), Unchecked{});
}

BnPolytope BnPolytope::cross_polytope(int n) {
  check_cap(n, 6, "BnPolytope");
  std::vector<Q> h(ray_count(n), Q(1));
  return BnPolytope(n, std::move(h), Unchecked{});
}

BnPolytope BnPolytope::signed_permutohedron(int n) {
  check_cap(n, 6, "BnPolytope");
  std::vector<Q> h;
  for (auto &s : enumerate_rays(n)) {
    long v = 0;
    for (int j = 0; j < s.size(); ++j)
      v += n - j;
    h.emplace_back(v);
  }
  return BnPolytope(n, std::move(h), Unchecked{});
}

BnPolytope BnPolytope::simplex(const AdmissibleSet &s) {
  if (s.empty())
    throw InvalidArgument("the simplex of the empty set is undefined");
  check_cap(s.n(), 6, "BnPolytope");
  std::vector<Q> h;
  for (auto &r : enumerate_rays(s.n()))
    h.emplace_back(s.intersects(r) ? 1 : 0);
  return BnPolytope(s.n(), std::move(h), Unchecked{});
}

BnPolytope BnPolytope::of(const DeltaMatroid &d) {
  int n = d.n();
  check_cap(n, 6, "BnPolytope");
  std::vector<Q> h;
  for (auto &s : enumerate_rays(n)) {
    int best = std::numeric_limits<int>::min();
    for (Mask m : d.feasible())
      best = std::max(best, popcount(m & s.pos()) - popcount(m & s.neg()));
    h.emplace_back(best);
  }
  return BnPolytope(n, std::move(h), Unchecked{});
}

bool BnPolytope::is_lattice() const {
  for (auto &w : enumerate_group(n_))
    for (auto &x : vertex(w))
      if (!is_integer(x))
        return false;
  return true;
}

Point BnPolytope::vertex(const SignedPermutation &w) const {
  if (w.n() != n_)
    throw InvalidArgument("vertex: size mismatch");
  Point x(n_);
  Q prev = 0;
  for (int k = 1; k <= n_; ++k) {
    const Q &cur = h_[ray_index(w.prefix(k))];
    int y = w(k);
    x[std::abs(y) - 1] = y > 0 ? Q(cur - prev) : Q(prev - cur);
    prev = cur;
  }
  return x;
}

Point BnPolytope::vertex_min(const SignedPermutation &w) const {
  return vertex(w * SignedPermutation::sign_flip(n_, full_mask(n_)));
}

std::vector<Point> BnPolytope::vertices() const {
  std::vector<Point> out;
  for (auto &w : enumerate_group(n_))
    out.push_back(vertex(w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool BnPolytope::contains(const Point &x) const {
  if (static_cast<int>(x.size()) != n_)
    throw InvalidArgument("contains: dimension mismatch");
  auto rays = enumerate_rays(n_);
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (pairing(x, rays[r]) > h_[r])
      return false;
  return true;
}

BnPolytope BnPolytope::translate(const Point &t) const {
  if (static_cast<int>(t.size()) != n_)
    throw InvalidArgument("translate: dimension mismatch");
  auto rays = enumerate_rays(n_);
  std::vector<Q> h = h_;
  for (std::size_t r = 0; r < rays.size(); ++r)
    h[r] += pairing(t, rays[r]);
  return BnPolytope(n_, std::move(h), Unchecked{});
}

BnPolytope BnPolytope::dilate(const Q &k) const {
  if (k < 0)
    throw InvalidArgument("dilation factor must be nonnegative");
  std::vector<Q> h = h_;
  for (auto &x : h)
    x *= k;
  return BnPolytope(n_, std::move(h), Unchecked{});
}

BnPolytope operator+(const BnPolytope &a, const BnPolytope &b) {
  if (a.n_ != b.n_)
    throw InvalidArgument("Minkowski sum: size mismatch");
  std::vector<Q> h = a.h_;
  for (std::size_t r = 0; r < h.size(); ++r)
    h[r] += b.h_[r];
  return BnPolytope(a.n_, std::move(h), BnPolytope::Unchecked{});
}

BnPolytope minkowski_combine(int n, const std::vector<std::pair<Z, BnPolytope>> &terms) {
  std::vector<Q> h(ray_count(n), Q(0));
  for (auto &[c, p] : terms) {
    if (p.n() != n)
      throw InvalidArgument("Minkowski combination: size mismatch");
    for (std::size_t r = 0; r < h.size(); ++r)
      h[r] += Q(c) * p.h(static_cast<int>(r));
  }
  if (auto bad = support_violation(n, h))
    throw InvalidCombination("signed Minkowski combination is not a B_n generalized permutohedron "
                             "(ray " + bad->ray.to_string() + " fails at w=" +
                             bad->w.to_string() + ")");
  return BnPolytope(n, std::move(h));
}

std::vector<Q> DeltaDecomposition::support() const {
  auto rays = enumerate_rays(n);
  std::vector<Q> h(rays.size(), Q(0));
  for (std::size_t r = 0; r < rays.size(); ++r) {
    Z s = 0;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (coeff[k] != 0 && rays[k].intersects(rays[r]))
        s += coeff[k];
    h[r] = Q(s);
    for (int i = 0; i < n; ++i) {
      if (rays[r].pos() >> i & 1)
        h[r] += translation[i];
      else if (rays[r].neg() >> i & 1)
        h[r] -= translation[i];
    }
  }
  return h;
}

std::vector<AdmissibleSet> DeltaDecomposition::support_sets() const {
  std::vector<AdmissibleSet> out;
  for (std::size_t k = 0; k < coeff.size(); ++k)
    if (coeff[k] != 0)
      out.push_back(ray_from_index(n, static_cast<int>(k)));
  return out;
}

DeltaDecomposition delta_decompose(const BnPolytope &p) {
  int n = p.n();
  for (auto &x : p.support())
    if (!is_integer(x))
      throw InvalidArgument("delta_decompose needs a lattice polytope");
  // Full 3ⁿ vector with h(∅) = 0, then c = −(Z₁^{-1})^{⊗n} h per coordinate.
  std::size_t full = static_cast<std::size_t>(ray_count(n)) + 1;
  std::vector<Z> v(full, 0);
  for (std::size_t r = 1; r < full; ++r)
    v[r] = p.h(static_cast<int>(r - 1)).get_num();
  std::size_t stride = 1;
  for (int i = 0; i < n; ++i, stride *= 3)
    for (std::size_t base = 0; base < full; ++base) {
      if ((base / stride) % 3 != 0)
        continue;
      Z a = v[base], b = v[base + stride], c = v[base + 2 * stride];
      v[base] = -a + b + c;
      v[base + stride] = a - b;
      v[base + 2 * stride] = a - c;
    }
  DeltaDecomposition d;
  d.n = n;
  d.translation.assign(n, 0);
  for (std::size_t r = 1; r < full; ++r)
    d.coeff.push_back(-v[r]);
  if (d.support() != p.support())
    throw InternalError("Delta-decomposition does not reconstruct the support numbers");
  return d;
}

DeltaDecomposition make_decomposition(int n, const std::vector<std::pair<AdmissibleSet, Z>> &c) {
  check_cap(n, 6, "DeltaDecomposition");
  DeltaDecomposition d;
  d.n = n;
  d.coeff.assign(ray_count(n), 0);
  d.translation.assign(n, 0);
  for (auto &[s, k] : c) {
    if (s.n() != n)
      throw InvalidArgument("decomposition set of the wrong size");
    d.coeff[ray_index(s)] += k;
  }
  return d;
}

BnPolytope realize(const DeltaDecomposition &d) {
  auto h = d.support();
  if (auto bad = support_violation(d.n, h))
    throw InvalidCombination("the combination is not a B_n generalized permutohedron "
                             "(ray " + bad->ray.to_string() + " fails at w=" +
                             bad->w.to_string() + ")");
  return BnPolytope(d.n, std::move(h));
}

DeltaDecomposition minus_cube(const DeltaDecomposition &d) {
  DeltaDecomposition out = d;
  for (int i = 1; i <= d.n; ++i)
    out.coeff[ray_index(AdmissibleSet(d.n, Mask{1} << (i - 1), 0))] -= 1;
  return out;
}

namespace {

using Family = std::uint64_t;

// Coordinates of τ (a maximal set given by its positive mask) met by S.
Mask meet(const AdmissibleSet &s, Mask tau, int n) {
  return (s.pos() & tau) | (s.neg() & ~tau & full_mask(n));
}

// Families of matched coordinate sets after adding one more set meeting τ in a.
Family extend(Family f, Mask a) {
  Family out = 0;
  for (Family g = f; g; g &= g - 1) {
    Mask t = static_cast<Mask>(std::countr_zero(g));
    for (Mask c = a & ~t; c; c &= c - 1)
      out |= Family{1} << (t | (c & -c));
  }
  return out;
}

template <class Weight>
Q transversal_sum(int n, const std::vector<std::pair<AdmissibleSet, Z>> &sets, Weight weight) {
  if (n > 6)
    throw ResourceLimit("transversal sums support n <= 6");
  Q total = 0;
  for (Mask tau = 0; tau <= full_mask(n); ++tau) {
    std::map<Family, Q> states{{Family{1}, Q(1)}};
    for (auto &[s, c] : sets) {
      Mask a = meet(s, tau, n);
      std::map<Family, Q> next;
      for (auto &[f, w] : states) {
        next[f] += w;
        int used = popcount(static_cast<Mask>(std::countr_zero(f)));
        Family g = f;
        for (int k = 1; used + k <= n; ++k) {
          g = extend(g, a);
          if (!g)
            break;
          Q wk = weight(c, k);
          if (wk != 0)
            next[g] += w * wk;
        }
      }
      states.swap(next);
    }
    Family done = Family{1} << full_mask(n);
    for (auto &[f, w] : states)
      if (f & done)
        total += w;
    if (n == 0)
      break;
  }
  return total;
}

std::vector<std::pair<AdmissibleSet, Z>> nonzero(const DeltaDecomposition &d) {
  std::vector<std::pair<AdmissibleSet, Z>> out;
  for (std::size_t k = 0; k < d.coeff.size(); ++k)
    if (d.coeff[k] != 0)
      out.emplace_back(ray_from_index(d.n, static_cast<int>(k)), d.coeff[k]);
  return out;
}

Q factorial(int k) {
  Z f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Q(f);
}

} // namespace

long signed_transversal_count(const std::vector<AdmissibleSet> &sets) {
  int n = static_cast<int>(sets.size());
  for (auto &s : sets)
    if (s.n() != n || s.empty())
      throw InvalidArgument("signed transversals need n nonempty sets on [n]");
  if (n > 6)
    throw ResourceLimit("signed transversals support n <= 6");
  long count = 0;
  for (Mask tau = 0; tau <= full_mask(n); ++tau) {
    Family f = 1;
    for (auto &s : sets)
      f = extend(f, meet(s, tau, n));
    if (f >> full_mask(n) & 1)
      ++count;
    if (n == 0)
      break;
  }
  return count;
}

Q volume(const DeltaDecomposition &d) {
  Q v = transversal_sum(d.n, nonzero(d), [](const Z &c, int k) -> Q {
    Q p = 1;
    for (int j = 0; j < k; ++j)
      p *= c;
    return p / factorial(k);
  });
  return v * factorial(d.n);
}

Q lattice_count_formula(const DeltaDecomposition &d, PsiConvention convention) {
  if (convention == PsiConvention::Multiset)
    return transversal_sum(d.n, nonzero(d),
                           [](const Z &c, int k) -> Q { return binomial_q(Q(c), k); });
  Q v = transversal_sum(d.n, nonzero(d), [](const Z &c, int k) -> Q {
    return binomial_q(Q(c), k) / factorial(k);
  });
  return v * factorial(d.n);
}

namespace {

void enumerate_box(int n, const std::vector<Ray> &rays, const std::vector<std::int64_t> &h,
                   const IntPoint &lo, const IntPoint &hi, std::vector<IntPoint> &out) {
  // Rays grouped by their highest coordinate, checked as soon as it is fixed.
  std::vector<std::vector<int>> by_last(n);
  for (std::size_t r = 0; r < rays.size(); ++r) {
    Mask m = rays[r].pos | rays[r].neg;
    by_last[31 - std::countl_zero(m)].push_back(static_cast<int>(r));
  }
  IntPoint x(n, 0);
  auto rec = [&](auto &&self, int k) -> void {
    if (k == n) {
      out.push_back(x);
      return;
    }
    for (std::int64_t v = lo[k]; v <= hi[k]; ++v) {
      x[k] = v;
      bool ok = true;
      for (int r : by_last[k])
        if (pairing(x, rays[r].pos, rays[r].neg) > h[r]) {
          ok = false;
          break;
        }
      if (ok)
        self(self, k + 1);
    }
    x[k] = 0;
  };
  rec(rec, 0);
}

} // namespace

std::vector<IntPoint> lattice_points_of_support(int n, const std::vector<Q> &support) {
  check_support_size(n, support.size());
  auto rays = ray_table(n);
  std::vector<std::int64_t> h;
  for (auto &x : support)
    h.push_back(floor_int(x));
  IntPoint lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    hi[i] = h[ray_index(AdmissibleSet(n, Mask{1} << i, 0))];
    lo[i] = -h[ray_index(AdmissibleSet(n, 0, Mask{1} << i))];
  }
  std::vector<IntPoint> out;
  enumerate_box(n, rays, h, lo, hi, out);
  return out;
}

std::vector<IntPoint> lattice_points(const BnPolytope &p) {
  return lattice_points_of_support(p.n(), p.support());
}

std::size_t lattice_count(const BnPolytope &p) { return lattice_points(p).size(); }

Q volume_oracle(const BnPolytope &p) {
  int n = p.n();
  std::vector<Q> counts;
  for (int t = 0; t <= n + 1; ++t)
    counts.emplace_back(static_cast<unsigned long>(lattice_count(p.dilate(t))));
  auto difference = [&](int order) {
    Q s = 0;
    for (int t = 0; t <= order; ++t) {
      Q term = Q(binomial(order, t)) * counts[t];
      s += (order - t) % 2 ? Q(-term) : term;
    }
    return s;
  };
  if (difference(n + 1) != 0)
    throw InternalError("lattice counts of tP are not a polynomial of degree <= n");
  return difference(n);
}

MPoly psi(const MPoly &f) {
  MPoly out;
  const auto &vars = f.variables();
  for (auto &[e, c] : f.terms()) {
    MPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0)
        throw InvalidArgument("psi is defined on polynomials only");
      MPoly x = MPoly::var(vars[i]);
      MPoly b(1);
      for (int j = 0; j < e[i]; ++j)
        b *= (x - j) * MPoly(Q(1, j + 1));
      term *= b;
    }
    out += term;
  }
  return out;
}

MPoly volume_polynomial(const std::vector<AdmissibleSet> &sets) {
  if (sets.empty())
    throw InvalidArgument("volume polynomial of no sets");
  int n = sets.front().n();
  int m = static_cast<int>(sets.size());
  auto vars = MPoly::indexed("c", m);
  MPoly::Terms terms;
  std::vector<int> k(m, 0);
  auto rec = [&](auto &&self, int i, int left) -> void {
    if (i == m - 1) {
      k[i] = left;
      std::vector<AdmissibleSet> seq;
      Q mult = factorial(n);
      for (int j = 0; j < m; ++j) {
        for (int r = 0; r < k[j]; ++r)
          seq.push_back(sets[j]);
        mult /= factorial(k[j]);
      }
      long count = signed_transversal_count(seq);
      if (count)
        terms.emplace(k, mult * count);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      k[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, n);
  return MPoly::from_terms(vars, std::move(terms));
}

std::optional<BnPolytope> intersect_with_cube(const BnPolytope &p, const IntPoint &m) {
  int n = p.n();
  if (static_cast<int>(m.size()) != n)
    throw InvalidArgument("cube offset dimension mismatch");
  auto rays = ray_table(n);
  std::vector<std::int64_t> h;
  for (auto &x : p.support())
    h.push_back(floor_int(x));
  IntPoint lo = m, hi = m;
  for (auto &x : hi)
    x += 1;
  std::vector<IntPoint> pts;
  enumerate_box(n, rays, h, lo, hi, pts);
  if (pts.empty())
    return std::nullopt;
  std::vector<Point> qp;
  for (auto &x : pts)
    qp.emplace_back(x.begin(), x.end());
  BnPolytope out = BnPolytope::hull(n, qp);
  if (!out.is_lattice())
    throw InternalError("cube intersection is not a lattice polytope");
  return out;
}

} // namespace deltoid
