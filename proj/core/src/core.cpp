#include "deltoid/core.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace deltoid {

Q parse_rational(const std::string &s) {
  if (s.empty())
    throw InvalidArgument("empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
      throw InvalidArgument("malformed rational literal '" + s + "'");
  Q q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0 || q.get_den() == 0)
    throw InvalidArgument("malformed rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

Z binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Q binomial_q(const Q &x, long k) {
  if (k < 0)
    return 0;
  Q r = 1;
  for (long j = 0; j < k; ++j)
    r *= (x - j) / Q(j + 1);
  return r;
}

int size_cap(int fallback) {
  if (const char *env = std::getenv("DELTOID_MAX_N")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v <= kMaxGround)
      return static_cast<int>(v);
  }
  return fallback;
}

void check_cap(int n, int fallback, const char *what) {
  int cap = size_cap(fallback);
  if (n > cap)
    throw ResourceLimit(std::string(what) + ": n=" + std::to_string(n) +
                        " exceeds the configured limit " + std::to_string(cap));
}

SignedIndex SignedIndex::from_int(int x) {
  if (x == 0)
    throw InvalidArgument("signed index 0 is not an element of [n, n-bar]");
  return {x > 0 ? x : -x, x < 0};
}

AdmissibleSet::AdmissibleSet(int n, Mask pos, Mask neg) : n_(n), pos_(pos), neg_(neg) {
  if (n < 0 || n > kMaxGround)
    throw InvalidArgument("ground size out of range");
  if (pos & neg)
    throw InvalidArgument("set contains a pair {i, i-bar}");
  if ((pos | neg) & ~full_mask(n))
    throw InvalidArgument("element outside the ground set");
}

AdmissibleSet AdmissibleSet::from_signed(int n, const std::vector<int> &elems) {
  Mask pos = 0, neg = 0;
  for (int x : elems) {
    if (x == 0 || std::abs(x) > n)
      throw InvalidArgument("element " + std::to_string(x) + " outside [n, n-bar]");
    Mask bit = Mask{1} << (std::abs(x) - 1);
    if ((x > 0 ? pos : neg) & bit)
      throw InvalidArgument("repeated element " + std::to_string(x));
    (x > 0 ? pos : neg) |= bit;
  }
  return {n, pos, neg};
}

AdmissibleSet AdmissibleSet::maximal(int n, Mask pos) {
  return {n, pos & full_mask(n), ~pos & full_mask(n)};
}

bool AdmissibleSet::contains(int x) const {
  if (x == 0 || std::abs(x) > n_)
    return false;
  Mask bit = Mask{1} << (std::abs(x) - 1);
  return (x > 0 ? pos_ : neg_) & bit;
}

std::vector<int> AdmissibleSet::to_signed() const {
  std::vector<int> out;
  for (int i = n_; i >= 1; --i)
    if (neg_ >> (i - 1) & 1)
      out.push_back(-i);
  for (int i = 1; i <= n_; ++i)
    if (pos_ >> (i - 1) & 1)
      out.push_back(i);
  return out;
}

std::string AdmissibleSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : to_signed()) {
    os << (first ? "" : ",") << (x < 0 ? std::to_string(-x) + "'" : std::to_string(x));
    first = false;
  }
  os << '}';
  return os.str();
}

int ray_index(const AdmissibleSet &s) {
  int idx = 0, p = 1;
  for (int i = 0; i < s.n(); ++i, p *= 3) {
    if (s.pos() >> i & 1)
      idx += p;
    else if (s.neg() >> i & 1)
      idx += 2 * p;
  }
  if (idx == 0)
    throw InvalidArgument("the empty set is not a ray");
  return idx - 1;
}

int ray_count(int n) {
  int p = 1;
  for (int i = 0; i < n; ++i)
    p *= 3;
  return p - 1;
}

AdmissibleSet ray_from_index(int n, int idx) {
  int v = idx + 1;
  Mask pos = 0, neg = 0;
  for (int i = 0; i < n; ++i, v /= 3) {
    if (v % 3 == 1)
      pos |= Mask{1} << i;
    else if (v % 3 == 2)
      neg |= Mask{1} << i;
  }
  return {n, pos, neg};
}

SignedPermutation::SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
  int n = static_cast<int>(img_.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : img_) {
    if (x == 0 || std::abs(x) > n || seen[std::abs(x)])
      throw InvalidArgument("images do not define a signed permutation");
    seen[std::abs(x)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::adjacent(int n, int i) {
  if (i < 1 || i >= n)
    throw InvalidArgument("adjacent transposition index out of range");
  auto w = identity(n);
  std::swap(w.img_[i - 1], w.img_[i]);
  return w;
}

SignedPermutation SignedPermutation::last_flip(int n) {
  if (n < 1)
    throw InvalidArgument("tau_n needs n >= 1");
  auto w = identity(n);
  w.img_[n - 1] = -n;
  return w;
}

SignedPermutation SignedPermutation::sign_flip(int n, Mask signs) {
  auto w = identity(n);
  for (int i = 0; i < n; ++i)
    if (signs >> i & 1)
      w.img_[i] = -w.img_[i];
  return w;
}

int SignedPermutation::epsilon(int i) const {
  for (int x : img_)
    if (x == i)
      return 1;
  return -1;
}

AdmissibleSet SignedPermutation::positive_image() const { return prefix(n()); }

AdmissibleSet SignedPermutation::prefix(int k) const {
  Mask pos = 0, neg = 0;
  for (int j = 0; j < k; ++j) {
    int x = img_[j];
    (x > 0 ? pos : neg) |= Mask{1} << (std::abs(x) - 1);
  }
  return {n(), pos, neg};
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < n(); ++i) {
    int x = img_[i];
    inv[std::abs(x) - 1] = x > 0 ? i + 1 : -(i + 1);
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation operator*(const SignedPermutation &a, const SignedPermutation &b) {
  if (a.n() != b.n())
    throw InvalidArgument("composing signed permutations of different sizes");
  std::vector<int> img(a.n());
  for (int i = 0; i < a.n(); ++i)
    img[i] = a(b.img_[i]);
  return SignedPermutation(std::move(img));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n(); ++i)
    os << (i ? "," : "") << img_[i];
  os << ']';
  return os.str();
}

static void require_maximal_pair(const AdmissibleSet &s, const AdmissibleSet &t) {
  if (s.n() != t.n())
    throw InvalidArgument("Gale order: size mismatch");
  if (!s.is_maximal() || !t.is_maximal())
    throw InvalidArgument("Gale order: arguments must be maximal admissible sets");
}

bool gale_leq(const AdmissibleSet &s, const AdmissibleSet &t) {
  require_maximal_pair(s, t);
  auto a = s.to_signed(), b = t.to_signed();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k])
      return false;
  return true;
}

bool gale_leq_segments(const AdmissibleSet &s, const AdmissibleSet &t) {
  require_maximal_pair(s, t);
  auto a = s.to_signed(), b = t.to_signed();
  for (int x = -s.n(); x <= s.n(); ++x) {
    if (x == 0)
      continue;
    auto ca = std::count_if(a.begin(), a.end(), [x](int y) { return y >= x; });
    auto cb = std::count_if(b.begin(), b.end(), [x](int y) { return y >= x; });
    if (ca > cb)
      return false;
  }
  return true;
}

AdmissibleSet weyl_act(const SignedPermutation &w, const AdmissibleSet &s) {
  if (w.n() != s.n())
    throw InvalidArgument("weyl_act: size mismatch");
  std::vector<int> out;
  for (int x : s.to_signed())
    out.push_back(w(x));
  return AdmissibleSet::from_signed(s.n(), out);
}

int descent_count(const SignedPermutation &w) {
  int d = 0, prev = 0;
  for (int x : w.images()) {
    if (prev > x)
      ++d;
    prev = x;
  }
  return d;
}

std::vector<SignedPermutation> enumerate_group(int n) {
  check_cap(n, 8, "enumerate_group");
  std::vector<SignedPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (Mask s = 0; s <= full_mask(n); ++s) {
      std::vector<int> img(perm);
      for (int i = 0; i < n; ++i)
        if (s >> i & 1)
          img[i] = -img[i];
      out.emplace_back(std::move(img));
      if (n == 0)
        break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<AdmissibleSet> enumerate_ads(int n, int k) {
  check_cap(n, 16, "enumerate_ads");
  std::vector<AdmissibleSet> out;
  for (Mask pos = 0; pos <= full_mask(n); ++pos) {
    Mask rest = full_mask(n) & ~pos;
    // Submasks of rest in increasing order.
    for (Mask neg = 0;; neg = (neg - rest) & rest) {
      if (popcount(pos) + popcount(neg) == k)
        out.emplace_back(n, pos, neg);
      if (neg == rest)
        break;
    }
    if (n == 0)
      break;
  }
  return out;
}

std::vector<AdmissibleSet> enumerate_rays(int n) {
  std::vector<AdmissibleSet> out;
  int m = ray_count(n);
  out.reserve(m);
  for (int i = 0; i < m; ++i)
    out.push_back(ray_from_index(n, i));
  return out;
}

std::vector<long long> eulerian_b(int n) {
  std::vector<long long> h(n + 1, 0);
  for (const auto &w : enumerate_group(n))
    ++h[descent_count(w)];
  return h;
}

} // namespace deltoid
