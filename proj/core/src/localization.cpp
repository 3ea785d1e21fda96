#include "deltoid/localization.hpp"
#include "series.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>

namespace deltoid {

namespace detail {

int var_number(const std::string &name, char prefix, int n) {
  if (name.size() < 2 || name[0] != prefix)
    return 0;
  int k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      return 0;
    k = k * 10 + (name[i] - '0');
    if (k > n)
      return 0;
  }
  return k;
}

MPoly trunc(const MPoly &p, int n) { return p.truncate_degree(n, chow_variables(n)); }

MPoly series_inverse(const MPoly &p, int n) {
  MPoly c = p.homogeneous_part(0, chow_variables(n));
  if (!c.is_constant() || c.is_zero())
    throw InvalidArgument("series inverse needs a nonzero constant term");
  Q c0 = c.constant_term();
  MPoly r = p - c;
  r = r * MPoly(Q(-1) / c0);
  MPoly out(1), pw(1);
  for (int k = 1; k <= n; ++k) {
    pw = trunc(pw * r, n);
    out += pw;
  }
  return out * MPoly(1 / c0);
}

MPoly series_pow(const MPoly &p, long a, int n) {
  MPoly base = a < 0 ? series_inverse(p, n) : trunc(p, n);
  MPoly out(1);
  for (long k = a < 0 ? -a : a; k > 0; k >>= 1) {
    if (k & 1)
      out = trunc(out * base, n);
    if (k > 1)
      base = trunc(base * base, n);
  }
  return out;
}

MPoly exceptional_image(const MPoly &f, const SignedPermutation &w, bool zeta) {
  int n = w.n();
  auto &vars = f.variables();
  std::vector<int> num(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i)
    num[i] = var_number(vars[i], 'T', n);
  // img[i][0] is the image of T_i, img[i][1] that of T_i^{-1}.
  std::vector<std::array<MPoly, 2>> img(n + 1);
  for (int i = 1; i <= n; ++i) {
    MPoly t = chow_var(i);
    MPoly plus = 1 + t, minus = 1 - t;
    bool positive = (w.epsilon(i) > 0) != zeta;
    img[i][0] = positive ? plus : series_inverse(minus, n);
    img[i][1] = positive ? series_inverse(plus, n) : minus;
  }
  std::map<std::pair<int, int>, MPoly> powers;
  auto power = [&](int i, int e) -> const MPoly & {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it == powers.end())
      it = powers.emplace(key, series_pow(img[i][e < 0], e < 0 ? -e : e, n)).first;
    return it->second;
  };
  MPoly out;
  for (auto &[e, c] : f.terms()) {
    MPoly term(c);
    MPoly::Terms rest_terms;
    MPoly::Exponents rest(vars.size(), 0);
    bool has_rest = false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (num[i]) {
        term = trunc(term * power(num[i], e[i]), n);
      } else {
        rest[i] = e[i];
        has_rest = true;
      }
    }
    if (has_rest) {
      rest_terms.emplace(rest, Q(1));
      term *= MPoly::from_terms(vars, std::move(rest_terms), f.laurent());
    }
    out += term;
  }
  return out.compact();
}

} // namespace detail

using detail::trunc;

namespace {

struct FixedPointTable {
  std::vector<SignedPermutation> points;
  std::map<std::vector<int>, std::size_t> index;
};

const FixedPointTable &table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FixedPointTable>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[n];
  if (!slot) {
    check_cap(n, 5, "fixed_points");
    auto t = std::make_unique<FixedPointTable>();
    t->points = enumerate_group(n);
    for (std::size_t i = 0; i < t->points.size(); ++i)
      t->index.emplace(t->points[i].images(), i);
    slot = std::move(t);
  }
  return *slot;
}

MPoly k_monomial(const std::vector<int> &exps) {
  int n = static_cast<int>(exps.size());
  MPoly::Terms t;
  t.emplace(exps, Q(1));
  return MPoly::from_terms(k_variables(n), std::move(t), true).compact();
}

// Linear form ⟨m, t⟩.
MPoly pairing_t(const std::vector<int> &m) {
  MPoly out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i])
      out += MPoly(m[i]) * chow_var(static_cast<int>(i) + 1);
  return out;
}

// Exponent vector of a K-side term in T1..Tn; InvalidArgument on any other variable.
std::vector<int> t_exponents(const MPoly &p, const MPoly::Exponents &e, int n) {
  std::vector<int> m(n, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i])
      continue;
    int k = detail::var_number(p.variables()[i], 'T', n);
    if (!k)
      throw InvalidArgument("K-class value involves a variable other than T1..Tn");
    m[k - 1] = e[i];
  }
  return m;
}

SignedPermutation swapped(const SignedPermutation &w, int i) {
  auto img = w.images();
  std::swap(img[i - 1], img[i]);
  return SignedPermutation(std::move(img));
}

SignedPermutation flipped_last(const SignedPermutation &w) {
  auto img = w.images();
  img.back() = -img.back();
  return SignedPermutation(std::move(img));
}

// Sets the signed variable a equal to b (or to the unit when b = 0).
MPoly identify(const MPoly &f, Side side, int a, int b) {
  std::string name = (side == Side::K ? "T" : "t") + std::to_string(std::abs(a));
  MPoly to;
  int s = a > 0 ? 1 : -1;
  if (side == Side::K)
    to = b == 0 ? MPoly(1).with_laurent(true) : k_var(s * b);
  else
    to = b == 0 ? MPoly() : chow_var(s * b);
  return f.substitute({{name, to}});
}

std::vector<Q> generic_point(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 997);
  std::set<int> used;
  std::vector<Q> t;
  while (static_cast<int>(t.size()) < n) {
    int v = pick(rng);
    if (!used.insert(v).second)
      continue;
    t.emplace_back(rng() & 1 ? v : -v);
  }
  return t;
}

} // namespace

const std::vector<SignedPermutation> &fixed_points(int n) { return table(n).points; }

std::size_t fixed_point_index(const SignedPermutation &w) {
  auto &t = table(w.n());
  auto it = t.index.find(w.images());
  if (it == t.index.end())
    throw InvalidArgument("not a signed permutation");
  return it->second;
}

std::vector<std::string> k_variables(int n) { return MPoly::indexed("T", n); }
std::vector<std::string> chow_variables(int n) { return MPoly::indexed("t", n); }

MPoly k_var(int a) {
  if (a == 0)
    throw InvalidArgument("k_var needs a nonzero signed index");
  MPoly v = MPoly::var("T" + std::to_string(std::abs(a)), true);
  return a > 0 ? v : v.pow(-1);
}

MPoly chow_var(int a) {
  if (a == 0)
    throw InvalidArgument("chow_var needs a nonzero signed index");
  MPoly v = MPoly::var("t" + std::to_string(std::abs(a)));
  return a > 0 ? v : -v;
}

std::vector<std::vector<int>> tangent_weights(const SignedPermutation &w) {
  int n = w.n();
  std::vector<std::vector<int>> out;
  auto e = [&](std::vector<int> &v, int a, int s) { v[std::abs(a) - 1] += a > 0 ? s : -s; };
  for (int k = 1; k <= n; ++k) {
    std::vector<int> v(n, 0);
    e(v, w(k), 1);
    if (k < n)
      e(v, w(k + 1), -1);
    out.push_back(std::move(v));
  }
  return out;
}

EqClass::EqClass(int n, Side side, std::vector<MPoly> values)
    : n_(n), side_(side), values_(std::move(values)) {
  if (values_.size() != fixed_points(n).size())
    throw InvalidArgument("class needs one value per fixed point");
}

EqClass EqClass::constant(int n, Side side, const MPoly &c) {
  return EqClass(n, side, std::vector<MPoly>(fixed_points(n).size(), c));
}

void EqClass::check_compatible(const EqClass &o) const {
  if (n_ != o.n_ || side_ != o.side_)
    throw InvalidArgument("classes live on different sides or dimensions");
}

EqClass &EqClass::operator+=(const EqClass &o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += o.values_[i];
  return *this;
}

EqClass &EqClass::operator-=(const EqClass &o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= o.values_[i];
  return *this;
}

EqClass &EqClass::operator*=(const EqClass &o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] *= o.values_[i];
    if (side_ == Side::Chow)
      values_[i] = trunc(values_[i], n_);
  }
  return *this;
}

bool operator==(const EqClass &a, const EqClass &b) {
  return a.n_ == b.n_ && a.side_ == b.side_ && a.values_ == b.values_;
}

EqClass class_of_polytope(const BnPolytope &p) {
  if (!p.is_lattice())
    throw InvalidArgument("class_of_polytope needs a lattice polytope");
  int n = p.n();
  std::vector<MPoly> v;
  for (auto &w : fixed_points(n)) {
    auto x = p.vertex_min(w);
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i)
      e[i] = -static_cast<int>(x[i].get_num().get_si());
    v.push_back(k_monomial(e));
  }
  EqClass f(n, Side::K, std::move(v));
  if (auto bad = class_violation(f))
    throw InternalError("polytope class fails compatibility: " + *bad);
  return f;
}

std::optional<std::string> class_violation(const EqClass &f) {
  int n = f.n();
  auto &pts = fixed_points(n);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto &w = pts[k];
    for (int i = 1; i <= n; ++i) {
      SignedPermutation w2 = i < n ? swapped(w, i) : flipped_last(w);
      MPoly diff = f.values()[k] - f.at(w2);
      MPoly r = i < n ? identify(diff, f.side(), w(i), w(i + 1)) : identify(diff, f.side(), w(n), 0);
      if (!r.is_zero())
        return "values at " + w.to_string() + " and " + w2.to_string() + " differ by " +
               diff.to_string();
    }
  }
  return std::nullopt;
}

bool validate_class(const EqClass &f) { return !class_violation(f); }

EqClass act(const SignedPermutation &w, const EqClass &f) {
  int n = f.n();
  if (w.n() != n)
    throw InvalidArgument("act: size mismatch");
  std::map<std::string, MPoly> sub;
  for (int i = 1; i <= n; ++i) {
    if (f.side() == Side::K)
      sub.emplace("T" + std::to_string(i), k_var(w(i)));
    else
      sub.emplace("t" + std::to_string(i), chow_var(w(i)));
  }
  auto winv = w.inverse();
  std::vector<MPoly> v;
  for (auto &w2 : fixed_points(n))
    v.push_back(f.at(winv * w2).substitute(sub));
  return EqClass(n, f.side(), std::move(v));
}

EqClass dual(const EqClass &f) {
  int n = f.n();
  std::map<std::string, MPoly> sub;
  for (int i = 1; i <= n; ++i) {
    if (f.side() == Side::K)
      sub.emplace("T" + std::to_string(i), k_var(-i));
    else
      sub.emplace("t" + std::to_string(i), chow_var(-i));
  }
  std::vector<MPoly> v;
  for (auto &x : f.values())
    v.push_back(x.substitute(sub));
  return EqClass(n, f.side(), std::move(v));
}

namespace {

MPoly sum_k(const std::vector<int> &elems) {
  MPoly out;
  for (int x : elems)
    out += k_var(x);
  return out;
}

template <class F> EqClass per_point(int n, Side side, F &&fn) {
  std::vector<MPoly> v;
  for (auto &w : fixed_points(n))
    v.push_back(fn(w));
  return EqClass(n, side, std::move(v));
}

} // namespace

EqClass iso_class(const DeltaMatroid &d) {
  return per_point(d.n(), Side::K, [&](const SignedPermutation &w) {
    return sum_k(w_min_feasible(d, w).to_signed());
  });
}

namespace {

// (|B̄^max ∩ w([n])|, B^max ∩ w([n]), w([n]) ∖ B^max).
struct EnvParts {
  int barred = 0;
  std::vector<int> inside, outside;
};

EnvParts env_parts(const DeltaMatroid &d, const SignedPermutation &w) {
  auto bmax = w_max_feasible(d, w);
  EnvParts p;
  for (int x : w.positive_image().to_signed()) {
    if (bmax.contains(x))
      p.inside.push_back(x);
    else
      p.outside.push_back(x);
    if (bmax.contains(-x))
      ++p.barred;
  }
  return p;
}

} // namespace

EqClass env_quot(const DeltaMatroid &d) {
  return per_point(d.n(), Side::K, [&](const SignedPermutation &w) {
    auto p = env_parts(d, w);
    return MPoly(p.barred) + sum_k(p.inside);
  });
}

EqClass env_sub(const DeltaMatroid &d) {
  return per_point(d.n(), Side::K, [&](const SignedPermutation &w) {
    auto p = env_parts(d, w);
    return MPoly(d.n() - p.barred) + sum_k(p.outside);
  });
}

EqClass box_class(int n) {
  return per_point(n, Side::K, [&](const SignedPermutation &w) {
    return MPoly(n) + sum_k(w.positive_image().to_signed());
  });
}

EqClass boxplus_o1(int n) {
  return per_point(n, Side::K, [&](const SignedPermutation &w) {
    MPoly out;
    for (int i = 1; i <= n; ++i)
      out += w.epsilon(i) > 0 ? MPoly(1) : k_var(-i);
    return out;
  });
}

EqClass boxplus_o_minus1(int n) { return dual(boxplus_o1(n)); }

EqClass chern(const EqClass &f, const MPoly &u) {
  if (f.side() != Side::K)
    throw InvalidArgument("chern needs a K-class");
  int n = f.n();
  std::vector<MPoly> v;
  for (auto &x : f.values()) {
    MPoly c(1);
    for (auto &[e, a] : x.terms()) {
      if (!is_integer(a))
        throw InvalidArgument("chern needs integer multiplicities");
      auto m = t_exponents(x, e, n);
      MPoly l = pairing_t(m);
      if (l.is_zero())
        continue;
      c = trunc(c * detail::series_pow(1 + l * u, a.get_num().get_si(), n), n);
    }
    v.push_back(std::move(c));
  }
  return EqClass(n, Side::Chow, std::move(v));
}

EqClass segre(const EqClass &f, const MPoly &u) {
  return chern(EqClass::constant(f.n(), Side::K, 0) - f, u);
}

namespace {

EqClass exceptional(const EqClass &f, bool zeta) {
  if (f.side() != Side::K)
    throw InvalidArgument("exceptional isomorphisms act on K-classes");
  int n = f.n();
  auto &pts = fixed_points(n);
  std::vector<MPoly> v;
  for (std::size_t k = 0; k < pts.size(); ++k)
    v.push_back(detail::exceptional_image(f.values()[k], pts[k], zeta));
  return EqClass(n, Side::Chow, std::move(v));
}

} // namespace

EqClass phi_B(const EqClass &f) { return exceptional(f, false); }
EqClass zeta_B(const EqClass &f) { return exceptional(f, true); }

EqClass gamma_class(int n) {
  return per_point(n, Side::Chow,
                   [](const SignedPermutation &w) { return w.n() ? chow_var(w(1)) : MPoly(); });
}

EqClass h_class(int n, int i) {
  if (i < 1 || i > n)
    throw InvalidArgument("h_class index out of range");
  return per_point(n, Side::Chow, [&](const SignedPermutation &w) {
    return w.epsilon(i) > 0 ? MPoly() : -chow_var(i);
  });
}

EqClass geometric(const EqClass &g, const MPoly &y) {
  if (g.side() != Side::Chow)
    throw InvalidArgument("geometric needs a Chow class");
  int n = g.n();
  std::vector<MPoly> v;
  for (auto &x : g.values()) {
    MPoly r = x * y, pw(1), out(1);
    for (int k = 1; k <= n; ++k) {
      pw = trunc(pw * r, n);
      out += pw;
    }
    v.push_back(std::move(out));
  }
  return EqClass(n, Side::Chow, std::move(v));
}

namespace {

MPoly integrate_at(const EqClass &f, const std::vector<Q> &t) {
  int n = f.n();
  auto vars = chow_variables(n);
  std::map<std::string, Q> point;
  for (int i = 0; i < n; ++i)
    point.emplace(vars[i], t[i]);
  auto &pts = fixed_points(n);
  MPoly total;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    MPoly top = f.values()[k].homogeneous_part(n, vars);
    if (top.is_zero())
      continue;
    Q denom = 1;
    for (auto &u : tangent_weights(pts[k])) {
      Q s = 0;
      for (int i = 0; i < n; ++i)
        s += u[i] * t[i];
      denom *= s;
    }
    total += top.evaluate(point) * MPoly(1 / denom);
  }
  return total.compact();
}

} // namespace

MPoly integrate(const EqClass &f, unsigned seed) {
  if (f.side() != Side::Chow)
    throw InvalidArgument("integrate needs a Chow class");
  int n = f.n();
  MPoly first;
  for (unsigned r = 0; r < 3; ++r) {
    MPoly v = integrate_at(f, generic_point(n, seed * 3 + r + 1));
    if (r == 0)
      first = v;
    else if (!(v == first))
      throw InternalError("fixed-point sum depends on the evaluation point: " + first.to_string() +
                          " vs " + v.to_string());
  }
  return first;
}

Q integrate_value(const EqClass &f, unsigned seed) {
  MPoly v = integrate(f, seed);
  if (!v.is_constant())
    throw InvalidArgument("integral still depends on parameters: " + v.to_string());
  return v.constant_term();
}

namespace {

using Series = std::vector<Q>;

Series mul(const Series &a, const Series &b, int n) {
  Series c(n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

Series inverse(const Series &a, int n) {
  if (a[0] == 0)
    throw InternalError("series inverse of a non-unit");
  Series b(n + 1, 0);
  b[0] = 1 / a[0];
  for (int k = 1; k <= n; ++k) {
    Q s = 0;
    for (int j = 1; j <= k; ++j)
      s += a[j] * b[k - j];
    b[k] = -s / a[0];
  }
  return b;
}

// (1 + ε)^c to order n.
Series binomial_series(long c, int n) {
  Series s(n + 1);
  for (int j = 0; j <= n; ++j)
    s[j] = binomial_q(Q(c), j);
  return s;
}

Q euler_at(const EqClass &f, const std::vector<long> &a) {
  int n = f.n();
  auto &pts = fixed_points(n);
  Series total(n + 1, 0);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const MPoly &x = f.values()[k];
    Series fw(n + 1, 0);
    for (auto &[e, c] : x.terms()) {
      auto m = t_exponents(x, e, n);
      long deg = 0;
      for (int i = 0; i < n; ++i)
        deg += m[i] * a[i];
      auto s = binomial_series(deg, n);
      for (int j = 0; j <= n; ++j)
        fw[j] += c * s[j];
    }
    for (auto &u : tangent_weights(pts[k])) {
      long c = 0;
      for (int i = 0; i < n; ++i)
        c += u[i] * a[i];
      // (1 − (1+ε)^{−c}) / ε.
      Series g(n + 1);
      for (int j = 0; j <= n; ++j)
        g[j] = -binomial_q(Q(-c), j + 1);
      fw = mul(fw, inverse(g, n), n);
    }
    for (int j = 0; j <= n; ++j)
      total[j] += fw[j];
  }
  for (int j = 0; j < n; ++j)
    if (total[j] != 0)
      throw InternalError("Euler characteristic sum has a pole; class is not valid");
  return total[n];
}

} // namespace

Z euler_char(const EqClass &f) {
  if (f.side() != Side::K)
    throw InvalidArgument("euler_char needs a K-class");
  int n = f.n();
  std::vector<std::vector<long>> choices(3, std::vector<long>(n));
  for (int i = 0; i < n; ++i) {
    choices[0][i] = i + 1;
    choices[1][i] = 2 * i + 3;
    choices[2][i] = static_cast<long>(i) * i + 2 * i + 5;
  }
  Q first = euler_at(f, choices[0]);
  for (int r = 1; r < 3; ++r)
    if (euler_at(f, choices[r]) != first)
      throw InternalError("Euler characteristic depends on the specialization");
  if (!is_integer(first))
    throw InternalError("Euler characteristic is not an integer: " + first.get_str());
  return first.get_num();
}

} // namespace deltoid
