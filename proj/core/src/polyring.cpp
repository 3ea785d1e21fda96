#include "deltoid/polyring.hpp"
#include "deltoid/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace deltoid {

MPoly::MPoly(const Q &c) {
  if (c != 0)
    terms_.emplace(Exponents{}, c);
}

MPoly MPoly::var(const std::string &name, bool laurent) {
  MPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Q(1));
  p.laurent_ = laurent;
  return p;
}

MPoly MPoly::from_terms(std::vector<std::string> vars, Terms terms, bool laurent) {
  MPoly p;
  p.vars_ = std::move(vars);
  p.laurent_ = laurent;
  for (auto &[e, c] : terms) {
    if (e.size() != p.vars_.size())
      throw InvalidArgument("exponent vector does not match variable count");
    if (c != 0)
      p.terms_[e] += c;
  }
  p.normalize();
  p.check_laurent();
  return p;
}

std::vector<std::string> MPoly::indexed(const std::string &prefix, int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i)
    out.push_back(prefix + std::to_string(i));
  return out;
}

MPoly MPoly::with_laurent(bool on) const {
  MPoly p = *this;
  p.laurent_ = on;
  p.check_laurent();
  return p;
}

int MPoly::var_index(const std::string &name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void MPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

void MPoly::check_laurent() const {
  if (laurent_)
    return;
  for (auto &[e, c] : terms_)
    for (int x : e)
      if (x < 0)
        throw InvalidState("negative exponent outside Laurent mode");
}

std::vector<std::string> MPoly::merged(const std::vector<std::string> &a,
                                       const std::vector<std::string> &b) {
  std::vector<std::string> out = a;
  for (auto &v : b)
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  return out;
}

MPoly MPoly::aligned_to(const std::vector<std::string> &vars) const {
  if (vars == vars_)
    return *this;
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    where[i] = static_cast<int>(it - vars.begin());
  }
  MPoly p;
  p.vars_ = vars;
  p.laurent_ = laurent_;
  for (auto &[e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      f[where[i]] = e[i];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() > 1)
    return false;
  for (int x : terms_.begin()->first)
    if (x != 0)
      return false;
  return true;
}

Q MPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Q(0) : it->second;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto &[e, c] : p.terms_)
    c = -c;
  return p;
}

MPoly &MPoly::operator+=(const MPoly &o) {
  auto vars = merged(vars_, o.vars_);
  if (vars != vars_)
    *this = aligned_to(vars);
  MPoly b = o.aligned_to(vars);
  for (auto &[e, c] : b.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  laurent_ = laurent_ || o.laurent_;
  return *this;
}

MPoly &MPoly::operator-=(const MPoly &o) { return *this += -o; }

MPoly operator*(const MPoly &a, const MPoly &b) {
  auto vars = MPoly::merged(a.vars_, b.vars_);
  MPoly x = a.aligned_to(vars), y = b.aligned_to(vars);
  MPoly p;
  p.vars_ = vars;
  p.laurent_ = a.laurent_ || b.laurent_;
  MPoly::Exponents e(vars.size());
  for (auto &[ea, ca] : x.terms_)
    for (auto &[eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      p.terms_[e] += ca * cb;
    }
  p.normalize();
  return p;
}

MPoly &MPoly::operator*=(const MPoly &o) { return *this = *this * o; }

bool operator==(const MPoly &a, const MPoly &b) {
  auto vars = MPoly::merged(a.vars_, b.vars_);
  return a.aligned_to(vars).terms_ == b.aligned_to(vars).terms_;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) {
    if (!laurent_ || terms_.size() != 1)
      throw InvalidState("negative power of a non-monomial or outside Laurent mode");
    MPoly p = *this;
    Exponents e = terms_.begin()->first;
    Q c = terms_.begin()->second;
    for (int &x : e)
      x = -x;
    p.terms_.clear();
    p.terms_.emplace(e, 1 / c);
    return p.pow(-k);
  }
  MPoly result(1), base = *this;
  result.laurent_ = laurent_;
  while (k > 0) {
    if (k & 1)
      result *= base;
    k >>= 1;
    if (k)
      base *= base;
  }
  return result;
}

Q MPoly::coeff(const std::map<std::string, int> &monomial) const {
  Exponents e(vars_.size(), 0);
  for (auto &[name, k] : monomial) {
    int i = var_index(name);
    if (i < 0) {
      if (k != 0)
        return 0;
      continue;
    }
    e[i] = k;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Q(0) : it->second;
}

int MPoly::total_degree() const {
  int d = 0;
  bool first = true;
  for (auto &[e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    d = first ? s : std::max(d, s);
    first = false;
  }
  return d;
}

int MPoly::degree(const std::string &name) const {
  int i = var_index(name);
  if (i < 0)
    return 0;
  int d = 0;
  for (auto &[e, c] : terms_)
    d = std::max(d, e[i]);
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (auto &[e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && s != d)
      return false;
    d = s;
  }
  return true;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly> &bindings) const {
  MPoly result;
  result.laurent_ = laurent_;
  // Memoized powers per bound variable.
  std::map<std::pair<int, int>, MPoly> powers;
  for (auto &[e, c] : terms_) {
    MPoly term(c);
    MPoly::Terms free_part;
    Exponents rest(vars_.size(), 0);
    bool has_free = false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0)
        continue;
      auto it = bindings.find(vars_[i]);
      if (it == bindings.end()) {
        rest[i] = e[i];
        has_free = true;
        continue;
      }
      auto key = std::make_pair(static_cast<int>(i), e[i]);
      auto pit = powers.find(key);
      if (pit == powers.end()) {
        MPoly pw;
        if (e[i] < 0) {
          if (it->second.size() != 1)
            throw InvalidArgument("substitution leaves an uncleared denominator for '" +
                                  vars_[i] + "'");
          pw = it->second.with_laurent(true).pow(e[i]);
        } else {
          pw = it->second.pow(e[i]);
        }
        pit = powers.emplace(key, std::move(pw)).first;
      }
      term *= pit->second;
    }
    if (has_free) {
      MPoly m;
      m.vars_ = vars_;
      m.laurent_ = laurent_;
      m.terms_.emplace(rest, Q(1));
      term *= m;
    }
    result += term;
  }
  return result.compact();
}

MPoly MPoly::evaluate(const std::map<std::string, Q> &values) const {
  for (auto &[e, c] : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i] < 0) {
        auto it = values.find(vars_[i]);
        if (it != values.end() && it->second == 0)
          throw InvalidArgument("evaluation at a pole of '" + vars_[i] + "'");
      }
  std::map<std::string, MPoly> bound;
  for (auto &[k, v] : values)
    bound.emplace(k, MPoly(v).with_laurent(true));
  return substitute(bound).with_laurent(laurent_);
}

Q MPoly::value(const std::map<std::string, Q> &values) const {
  Q total = 0;
  for (auto &[e, c] : terms_) {
    Q t = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0)
        continue;
      auto it = values.find(vars_[i]);
      if (it == values.end())
        throw InvalidArgument("no value bound for variable '" + vars_[i] + "'");
      if (e[i] < 0 && it->second == 0)
        throw InvalidArgument("evaluation at a pole of '" + vars_[i] + "'");
      Q p = 1;
      int k = e[i] < 0 ? -e[i] : e[i];
      for (int j = 0; j < k; ++j)
        p *= it->second;
      t *= e[i] < 0 ? 1 / p : p;
    }
    total += t;
  }
  return total;
}

MPoly MPoly::truncate_degree(int d) const { return truncate_degree(d, vars_); }

static int degree_in(const MPoly::Exponents &e, const std::vector<int> &idx) {
  int s = 0;
  for (int i : idx)
    s += e[i];
  return s;
}

MPoly MPoly::truncate_degree(int d, const std::vector<std::string> &in) const {
  std::vector<int> idx;
  for (auto &v : in)
    if (int i = var_index(v); i >= 0)
      idx.push_back(i);
  MPoly p = *this;
  for (auto it = p.terms_.begin(); it != p.terms_.end();)
    it = degree_in(it->first, idx) > d ? p.terms_.erase(it) : std::next(it);
  return p;
}

MPoly MPoly::homogeneous_part(int d, const std::vector<std::string> &in) const {
  std::vector<int> idx;
  for (auto &v : in)
    if (int i = var_index(v); i >= 0)
      idx.push_back(i);
  MPoly p = *this;
  for (auto it = p.terms_.begin(); it != p.terms_.end();)
    it = degree_in(it->first, idx) != d ? p.terms_.erase(it) : std::next(it);
  return p;
}

std::vector<Q> MPoly::coefficients(const std::string &name) const {
  int i = var_index(name);
  std::vector<Q> out;
  for (auto &[e, c] : terms_) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (static_cast<int>(j) != i && e[j] != 0)
        throw InvalidArgument("coefficients(): polynomial is not univariate in '" + name + "'");
    int k = i < 0 ? 0 : e[i];
    if (k < 0)
      throw InvalidArgument("coefficients(): negative exponent");
    if (static_cast<int>(out.size()) <= k)
      out.resize(k + 1, Q(0));
    out[k] = c;
  }
  return out;
}

MPoly MPoly::derivative(const std::string &name, int k) const {
  int i = var_index(name);
  if (i < 0 || k == 0)
    return k == 0 ? *this : MPoly();
  MPoly p;
  p.vars_ = vars_;
  p.laurent_ = laurent_;
  for (auto &[e, c] : terms_) {
    Q f = c;
    for (int j = 0; j < k; ++j)
      f *= e[i] - j;
    if (f == 0)
      continue;
    Exponents g = e;
    g[i] -= k;
    p.terms_[g] += f;
  }
  p.normalize();
  return p;
}

MPoly MPoly::compact() const {
  std::vector<bool> used(vars_.size(), false);
  for (auto &[e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        used[i] = true;
  MPoly p;
  p.laurent_ = laurent_;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i])
      p.vars_.push_back(vars_[i]);
  for (auto &[e, c] : terms_) {
    Exponents f;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i])
        f.push_back(e[i]);
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

MPoly MPoly::over(const std::vector<std::string> &vars) const {
  MPoly c = compact();
  for (auto &v : c.vars_)
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw InvalidArgument("over(): variable '" + v + "' not in the target list");
  return c.aligned_to(vars);
}

std::string MPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, Q>> ts(terms_.rbegin(), terms_.rend());
  for (auto &[e, c] : ts) {
    Q a = c;
    if (!first)
      os << (a < 0 ? " - " : " + ");
    else if (a < 0)
      os << "-";
    if (a < 0)
      a = -a;
    bool unit = true;
    for (int x : e)
      if (x != 0)
        unit = false;
    std::ostringstream mono;
    bool mfirst = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      mono << (mfirst ? "" : "*") << vars_[i];
      if (e[i] != 1)
        mono << "^" << e[i];
      mfirst = false;
    }
    if (unit)
      os << a.get_str();
    else if (a == 1)
      os << mono.str();
    else
      os << a.get_str() << "*" << mono.str();
    first = false;
  }
  return os.str();
}

MPoly univariate(const std::string &name, const std::vector<Q> &coeffs) {
  MPoly::Terms t;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0)
      t.emplace(MPoly::Exponents{static_cast<int>(k)}, coeffs[k]);
  return MPoly::from_terms({name}, std::move(t));
}

} // namespace deltoid
