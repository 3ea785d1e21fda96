#include "deltoid/deltamatroid.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace deltoid {

namespace {

std::vector<Mask> canonical(int n, std::vector<Mask> f) {
  if (n < 0 || n > kMaxGround)
    throw InvalidArgument("ground size out of range");
  if (f.empty())
    throw InvalidArgument("a delta-matroid needs at least one feasible set");
  for (Mask m : f)
    if (m & ~full_mask(n))
      throw InvalidArgument("feasible set outside the ground set");
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::string mask_text(int n, Mask m) { return AdmissibleSet::maximal(n, m).to_string(); }

// Removes bit i (0-based) and shifts higher bits down.
Mask squeeze(Mask m, int i) {
  Mask low = m & ((Mask{1} << i) - 1);
  return low | ((m >> (i + 1)) << i);
}

// Image mask of a maximal set under a signed permutation.
Mask act_mask(const SignedPermutation &w, Mask m) {
  Mask out = 0;
  for (int i = 1; i <= w.n(); ++i) {
    int x = (m >> (i - 1) & 1) ? w(i) : w(-i);
    if (x > 0)
      out |= Mask{1} << (x - 1);
  }
  return out;
}

} // namespace

DeltaMatroid::DeltaMatroid(int n, std::vector<Mask> feasible, Unchecked)
    : n_(n), feasible_(canonical(n, std::move(feasible))) {}

DeltaMatroid::DeltaMatroid(int n, std::vector<Mask> feasible)
    : DeltaMatroid(n, std::move(feasible), Unchecked{}) {
  if (auto bad = exchange_violation(n_, feasible_))
    throw *bad;
}

DeltaMatroid DeltaMatroid::trusted(int n, std::vector<Mask> feasible) {
  return DeltaMatroid(n, std::move(feasible), Unchecked{});
}

DeltaMatroid DeltaMatroid::from_sets(int n, const std::vector<AdmissibleSet> &sets) {
  std::vector<Mask> f;
  for (auto &s : sets) {
    if (s.n() != n || !s.is_maximal())
      throw InvalidArgument("feasible set " + s.to_string() + " is not maximal admissible");
    f.push_back(s.pos());
  }
  return DeltaMatroid(n, std::move(f));
}

std::vector<AdmissibleSet> DeltaMatroid::feasible_sets() const {
  std::vector<AdmissibleSet> out;
  for (Mask m : feasible_)
    out.push_back(AdmissibleSet::maximal(n_, m));
  return out;
}

bool DeltaMatroid::is_feasible(Mask m) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), m);
}

std::optional<NotADeltaMatroid> exchange_violation(int n, const std::vector<Mask> &family) {
  auto sorted = family;
  std::sort(sorted.begin(), sorted.end());
  auto has = [&](Mask m) { return std::binary_search(sorted.begin(), sorted.end(), m); };
  for (Mask f1 : sorted)
    for (Mask f2 : sorted) {
      Mask diff = f1 ^ f2;
      for (Mask x = diff; x; x &= x - 1) {
        Mask xi = x & -x;
        bool ok = false;
        for (Mask y = diff; y && !ok; y &= y - 1) {
          Mask yj = y & -y;
          ok = has(f1 ^ xi ^ (yj == xi ? 0 : yj));
        }
        if (!ok) {
          int i = std::countr_zero(xi) + 1;
          return NotADeltaMatroid("symmetric exchange fails for " + mask_text(n, f1) + ", " +
                                      mask_text(n, f2) + " at element " + std::to_string(i),
                                  f1, f2, i);
        }
      }
    }
  return std::nullopt;
}

static void check_element(const DeltaMatroid &d, int i) {
  if (i < 1 || i > d.n())
    throw InvalidArgument("element " + std::to_string(i) + " outside [n]");
}

DeltaMatroid projection(const DeltaMatroid &d, int i) {
  check_element(d, i);
  std::vector<Mask> f;
  for (Mask m : d.feasible())
    f.push_back(squeeze(m, i - 1));
  return DeltaMatroid::trusted(d.n() - 1, std::move(f));
}

DeltaMatroid contraction(const DeltaMatroid &d, int i) {
  check_element(d, i);
  Mask bit = Mask{1} << (i - 1);
  if (!(coloops(d) & bit) && !(loops(d) & bit)) {
    std::vector<Mask> f;
    for (Mask m : d.feasible())
      if (m & bit)
        f.push_back(squeeze(m, i - 1));
    return DeltaMatroid::trusted(d.n() - 1, std::move(f));
  }
  return projection(d, i);
}

DeltaMatroid deletion(const DeltaMatroid &d, int i) {
  check_element(d, i);
  Mask bit = Mask{1} << (i - 1);
  if (!(coloops(d) & bit) && !(loops(d) & bit)) {
    std::vector<Mask> f;
    for (Mask m : d.feasible())
      if (!(m & bit))
        f.push_back(squeeze(m, i - 1));
    return DeltaMatroid::trusted(d.n() - 1, std::move(f));
  }
  return projection(d, i);
}

DeltaMatroid projection_set(const DeltaMatroid &d, Mask elems) {
  if (elems & ~full_mask(d.n()))
    throw InvalidArgument("projection set outside [n]");
  int k = d.n() - popcount(elems);
  std::vector<Mask> f;
  for (Mask m : d.feasible()) {
    Mask out = 0;
    int j = 0;
    for (int i = 0; i < d.n(); ++i)
      if (!(elems >> i & 1))
        out |= (m >> i & 1) << j++;
    f.push_back(out);
  }
  return DeltaMatroid::trusted(k, std::move(f));
}

DeltaMatroid dual(const DeltaMatroid &d) {
  std::vector<Mask> f;
  for (Mask m : d.feasible())
    f.push_back(~m & full_mask(d.n()));
  return DeltaMatroid::trusted(d.n(), std::move(f));
}

DeltaMatroid product(const DeltaMatroid &a, const DeltaMatroid &b) {
  if (a.n() + b.n() > kMaxGround)
    throw ResourceLimit("product ground set too large");
  std::vector<Mask> f;
  for (Mask x : a.feasible())
    for (Mask y : b.feasible())
      f.push_back(x | y << a.n());
  return DeltaMatroid::trusted(a.n() + b.n(), std::move(f));
}

DeltaMatroid twist(const SignedPermutation &w, const DeltaMatroid &d) {
  if (w.n() != d.n())
    throw InvalidArgument("twist: size mismatch");
  std::vector<Mask> f;
  for (Mask m : d.feasible())
    f.push_back(act_mask(w, m));
  return DeltaMatroid::trusted(d.n(), std::move(f));
}

int distance_mask(const DeltaMatroid &d, Mask s) {
  int best = d.n();
  for (Mask m : d.feasible())
    best = std::min(best, popcount(m ^ s));
  return best;
}

int distance(const DeltaMatroid &d, const AdmissibleSet &s) {
  if (s.n() != d.n() || !s.is_maximal())
    throw InvalidArgument("distance: argument must be maximal admissible of the same size");
  return distance_mask(d, s.pos());
}

DeltaMatroid from_bases(const Matroid &m) {
  return DeltaMatroid::trusted(m.size(), m.bases());
}

DeltaMatroid from_independents(const Matroid &m) {
  return DeltaMatroid::trusted(m.size(), m.independent_sets());
}

namespace {

// Functional Σ_k (n−k+1) e_{w(k)}, an interior point of C_w.
std::vector<int> cone_functional(const SignedPermutation &w) {
  int n = w.n();
  std::vector<int> v(n, 0);
  for (int k = 1; k <= n; ++k) {
    int x = w(k);
    v[std::abs(x) - 1] += x > 0 ? n - k + 1 : -(n - k + 1);
  }
  return v;
}

long pairing(const std::vector<int> &v, Mask m) {
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (m >> i & 1)
      s += v[i];
  return s;
}

Mask extremal(const DeltaMatroid &d, const SignedPermutation &w, bool maximize) {
  if (w.n() != d.n())
    throw InvalidArgument("w-extremal feasible set: size mismatch");
  auto v = cone_functional(w);
  Mask best = d.feasible().front();
  long bv = pairing(v, best);
  for (Mask m : d.feasible()) {
    long x = pairing(v, m);
    if (maximize ? x > bv : x < bv) {
      bv = x;
      best = m;
    }
  }
  return best;
}

} // namespace

Mask w_min_mask(const DeltaMatroid &d, const SignedPermutation &w) { return extremal(d, w, false); }
Mask w_max_mask(const DeltaMatroid &d, const SignedPermutation &w) { return extremal(d, w, true); }

AdmissibleSet w_min_feasible(const DeltaMatroid &d, const SignedPermutation &w) {
  return AdmissibleSet::maximal(d.n(), w_min_mask(d, w));
}

AdmissibleSet w_max_feasible(const DeltaMatroid &d, const SignedPermutation &w) {
  return AdmissibleSet::maximal(d.n(), w_max_mask(d, w));
}

Mask loops(const DeltaMatroid &d) {
  Mask any = 0;
  for (Mask m : d.feasible())
    any |= m;
  return ~any & full_mask(d.n());
}

Mask coloops(const DeltaMatroid &d) {
  Mask all = full_mask(d.n());
  for (Mask m : d.feasible())
    all &= m;
  return all;
}

std::optional<Cornering> is_cornered(const DeltaMatroid &d) {
  int n = d.n();
  for (Mask s = 0; s <= full_mask(n); ++s) {
    auto w = SignedPermutation::sign_flip(n, s);
    auto t = twist(w, d);
    bool closed = true;
    for (Mask m : t.feasible()) {
      for (Mask x = m; x && closed; x &= x - 1)
        closed = t.is_feasible(m & ~(x & -x));
      if (!closed)
        break;
    }
    if (closed) {
      int r = 0;
      for (Mask m : t.feasible())
        r = std::max(r, popcount(m));
      std::vector<Mask> bases;
      for (Mask m : t.feasible())
        if (popcount(m) == r)
          bases.push_back(m);
      std::vector<int> g(n);
      for (int i = 0; i < n; ++i)
        g[i] = i + 1;
      Matroid mat(std::move(g), std::move(bases));
      if (from_independents(mat) == t)
        return Cornering{w, std::move(mat)};
    }
    if (n == 0)
      break;
  }
  return std::nullopt;
}

std::vector<DeltaMatroid> enumerate_deltamatroids(int n) {
  check_cap(n, 3, "enumerate_deltamatroids");
  std::vector<DeltaMatroid> out;
  std::uint64_t sets = std::uint64_t{1} << n;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << sets); ++fam) {
    std::vector<Mask> f;
    for (std::uint64_t m = 0; m < sets; ++m)
      if (fam >> m & 1)
        f.push_back(static_cast<Mask>(m));
    if (!exchange_violation(n, f))
      out.push_back(DeltaMatroid::trusted(n, std::move(f)));
  }
  return out;
}

DeltaMatroid random_deltamatroid(int n, std::uint64_t seed) {
  check_cap(n, 4, "random_deltamatroid");
  std::mt19937_64 rng(seed);
  std::uint64_t sets = std::uint64_t{1} << n;
  for (;;) {
    std::vector<Mask> f;
    for (std::uint64_t m = 0; m < sets; ++m)
      if (rng() & 1)
        f.push_back(static_cast<Mask>(m));
    if (!f.empty() && !exchange_violation(n, f))
      return DeltaMatroid::trusted(n, std::move(f));
  }
}

std::string to_string(const DeltaMatroid &d) {
  std::ostringstream os;
  os << "D(n=" << d.n() << "; ";
  bool first = true;
  for (Mask m : d.feasible()) {
    os << (first ? "" : " ") << mask_text(d.n(), m);
    first = false;
  }
  os << ')';
  return os.str();
}

} // namespace deltoid
