#include "deltoid/envelope.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace deltoid {

std::string to_string(Construction c) {
  switch (c) {
  case Construction::DirectSum:
    return "direct-sum";
  case Construction::FreeProduct:
    return "free-product";
  case Construction::FromRepresentation:
    return "from-representation";
  case Construction::UserSupplied:
    return "user-supplied";
  }
  return "unknown";
}

int doubled_size(const Matroid &m) {
  if (m.size() % 2)
    throw InvalidArgument("enveloping matroid needs a ground set [n, n-bar]");
  int n = m.size() / 2;
  for (int i = 1; i <= n; ++i)
    if (m.position(i) < 0 || m.position(-i) < 0)
      throw InvalidArgument("enveloping matroid needs a ground set [n, n-bar]");
  return n;
}

namespace {

// env*(e_S) evaluated on each ground label.
std::vector<Q> env_weight(const Matroid &m, const AdmissibleSet &s) {
  std::vector<Q> w;
  for (int x : m.ground()) {
    int i = std::abs(x) - 1;
    int sign = (s.pos() >> i & 1) ? 1 : (s.neg() >> i & 1) ? -1 : 0;
    w.emplace_back(x > 0 ? sign : -sign);
  }
  return w;
}

std::vector<Q> greedy_support(const Matroid &m, bool clip) {
  int n = doubled_size(m);
  std::vector<Q> h;
  for (auto &s : enumerate_rays(n)) {
    auto w = env_weight(m, s);
    if (clip)
      for (auto &x : w)
        x = std::max(x, Q(0));
    Mask b = m.greedy_max(w);
    Q v = 0;
    for (int k = 0; k < m.size(); ++k)
      if (b >> k & 1)
        v += w[k];
    h.push_back(v);
  }
  return h;
}

Q delta_support(const DeltaMatroid &d, const AdmissibleSet &s) {
  int best = -d.n() - 1;
  for (Mask m : d.feasible())
    best = std::max(best, popcount(m & s.pos()) - popcount(m & s.neg()));
  return best;
}

std::vector<int> signed_ground(const std::vector<int> &g) {
  std::vector<int> out = g;
  for (int x : g)
    out.push_back(-x);
  return out;
}

void require_standard_ground(const Matroid &m) {
  for (int i = 1; i <= m.size(); ++i)
    if (m.position(i) < 0)
      throw InvalidArgument("matroid ground set must be 1..n");
}

bool is_loop(const Matroid &m, int label) {
  Mask bit = Mask{1} << m.position(label);
  return std::none_of(m.bases().begin(), m.bases().end(), [&](Mask b) { return b & bit; });
}

bool is_coloop(const Matroid &m, int label) {
  Mask bit = Mask{1} << m.position(label);
  return std::all_of(m.bases().begin(), m.bases().end(), [&](Mask b) { return b & bit; });
}

// Contracts or deletes one label; loops are always deleted and coloops contracted.
Matroid remove_label(const Matroid &m, int label, bool contract) {
  int p = m.position(label);
  Mask bit = Mask{1} << p;
  if (contract && is_loop(m, label))
    contract = false;
  else if (!contract && is_coloop(m, label))
    contract = true;
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    if (contract != bool(b & bit))
      continue;
    Mask low = b & (bit - 1), high = (b >> (p + 1)) << p;
    bases.push_back(low | high);
  }
  std::vector<int> g = m.ground();
  g.erase(g.begin() + p);
  return Matroid(std::move(g), std::move(bases));
}

EnvelopeWitness checked(EnvelopeWitness e) {
  if (!is_enveloping(e.matroid, e.delta))
    throw InternalError("constructed matroid does not envelope " + to_string(e.delta));
  return e;
}

} // namespace

std::vector<Q> env_support(const Matroid &m) { return greedy_support(m, false); }

std::vector<Q> env_indep_support(const Matroid &m) { return greedy_support(m, true); }

bool is_enveloping(const Matroid &m, const DeltaMatroid &d) {
  if (doubled_size(m) != d.n())
    return false;
  auto h = env_support(m);
  auto rays = enumerate_rays(d.n());
  for (std::size_t r = 0; r < rays.size(); ++r) {
    Q hat = 2 * delta_support(d, rays[r]) - (popcount(rays[r].pos()) - popcount(rays[r].neg()));
    if (h[r] != hat)
      return false;
  }
  return true;
}

Matroid envelope_base(const Matroid &m) {
  require_standard_ground(m);
  std::vector<int> bar;
  for (int x : m.ground())
    bar.push_back(-x);
  return direct_sum(m, m.dual().relabeled(std::move(bar)));
}

Matroid envelope_indep(const Matroid &m) {
  require_standard_ground(m);
  int n = m.size();
  std::vector<Mask> bases;
  for (Mask s : m.independent_sets())
    for (Mask c : m.independent_sets())
      if (popcount(s) + n - popcount(c) == n)
        bases.push_back(s | ((~c & full_mask(n)) << n));
  return Matroid(signed_ground(m.ground()), std::move(bases));
}

Matroid envelope_from_rep(const FqMatrix &l) {
  if (!is_isotropic(l, FormType::B))
    throw InvalidArgument("envelope_from_rep needs a type-B isotropic matrix");
  int n = l.rows();
  if (l.rank() != n)
    throw InvalidArgument("isotropic matrix must have full row rank");
  check_cap(n, 8, "envelope_from_rep");
  FqMatrix proj = l.without_column(2 * n);
  std::vector<Mask> bases;
  std::vector<int> cols;
  for (Mask s = 0; s <= full_mask(2 * n); ++s) {
    if (popcount(s) == n) {
      cols.clear();
      for (int k = 0; k < 2 * n; ++k)
        if (s >> k & 1)
          cols.push_back(k);
      if (proj.nonsingular_columns(cols))
        bases.push_back(s);
    }
    if (n == 0)
      break;
  }
  std::vector<int> g;
  for (int i = 1; i <= n; ++i)
    g.push_back(i);
  return Matroid(signed_ground(g), std::move(bases));
}

Matroid act_on_labels(const SignedPermutation &w, const Matroid &m) {
  std::vector<int> g;
  for (int x : m.ground())
    g.push_back(w(x));
  return m.relabeled(std::move(g));
}

EnvelopeWitness twist_witness(const SignedPermutation &w, const EnvelopeWitness &e) {
  return {twist(w, e.delta), act_on_labels(w, e.matroid), e.construction};
}

EnvelopeWitness dual_witness(const EnvelopeWitness &e) {
  return {dual(e.delta), e.matroid.dual(), e.construction};
}

EnvelopeWitness minor_witness(const EnvelopeWitness &e, int i, bool contract) {
  Matroid m = remove_label(e.matroid, i, contract);
  m = remove_label(m, -i, !contract);
  std::vector<int> g;
  for (int x : m.ground())
    g.push_back(std::abs(x) > i ? (x > 0 ? x - 1 : x + 1) : x);
  auto d = contract ? contraction(e.delta, i) : deletion(e.delta, i);
  return {std::move(d), m.relabeled(std::move(g)), e.construction};
}

EnvelopeWitness product_witness(const EnvelopeWitness &a, const EnvelopeWitness &b) {
  int shift = a.delta.n();
  std::vector<int> g;
  for (int x : b.matroid.ground())
    g.push_back(x > 0 ? x + shift : x - shift);
  return {product(a.delta, b.delta), direct_sum(a.matroid, b.matroid.relabeled(std::move(g))),
          a.construction == b.construction ? a.construction : Construction::UserSupplied};
}

std::optional<Matroid> as_base_polytope(const DeltaMatroid &d) {
  int r = popcount(d.feasible().front());
  for (Mask m : d.feasible())
    if (popcount(m) != r)
      return std::nullopt;
  std::vector<int> g(d.n());
  for (int i = 0; i < d.n(); ++i)
    g[i] = i + 1;
  return Matroid(std::move(g), d.feasible());
}

std::optional<Matroid> as_indep_polytope(const DeltaMatroid &d) {
  if (!d.is_feasible(0))
    return std::nullopt;
  int r = 0;
  for (Mask m : d.feasible())
    r = std::max(r, popcount(m));
  std::vector<Mask> bases;
  for (Mask m : d.feasible())
    if (popcount(m) == r)
      bases.push_back(m);
  std::vector<int> g(d.n());
  for (int i = 0; i < d.n(); ++i)
    g[i] = i + 1;
  try {
    Matroid mat(std::move(g), std::move(bases));
    if (from_independents(mat) == d)
      return mat;
  } catch (const InvalidArgument &) {
  }
  return std::nullopt;
}

namespace {

std::optional<EnvelopeWitness> canonical_envelope(const DeltaMatroid &d) {
  if (auto m = as_base_polytope(d))
    return checked({d, envelope_base(*m), Construction::DirectSum});
  if (auto m = as_indep_polytope(d))
    return checked({d, envelope_indep(*m), Construction::FreeProduct});
  return std::nullopt;
}

const std::map<DeltaMatroid, FqMatrix> &isotropic_catalog(std::int64_t p, int n) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::map<DeltaMatroid, FqMatrix>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::map<DeltaMatroid, FqMatrix> found;
    for (auto &l : enumerate_isotropic(p, n, FormType::B))
      found.emplace(delta_from_isotropic(l, FormType::B), l);
    it = cache.emplace(key, std::move(found)).first;
  }
  return it->second;
}

} // namespace

std::optional<EnvelopeWitness> find_envelope(const DeltaMatroid &d) {
  if (auto e = canonical_envelope(d))
    return e;
  int n = d.n();
  if (n <= size_cap(6))
    for (auto &w : enumerate_group(n))
      if (auto e = canonical_envelope(twist(w.inverse(), d)))
        return checked(twist_witness(w, *e));
  for (std::int64_t p : {2, 3}) {
    if ((p == 2 && n > 3) || (p == 3 && n > 2))
      continue;
    auto &cat = isotropic_catalog(p, n);
    if (auto it = cat.find(d); it != cat.end())
      return checked({d, envelope_from_rep(it->second), Construction::FromRepresentation});
  }
  return std::nullopt;
}

Report check_envelope_lemmas(const EnvelopeWitness &e) {
  Report r;
  int n = e.delta.n();
  if (!is_enveloping(e.matroid, e.delta)) {
    r.add("witness", false, "matroid does not envelope the delta-matroid");
    return r;
  }
  auto h = env_indep_support(e.matroid);
  auto rays = enumerate_rays(n);
  bool ok = true;
  std::string detail;
  for (std::size_t k = 0; k < rays.size() && ok; ++k) {
    // h_{P(D)+□−e_[n]}(S) = h_D(S) + |S ∩ [n̄]|.
    Q want = delta_support(e.delta, rays[k]) + popcount(rays[k].neg());
    if (h[k] != want) {
      ok = false;
      detail = "ray " + rays[k].to_string() + ": " + h[k].get_str() + " vs " + want.get_str();
    }
  }
  r.add("env(IP(M)) = P(D) + cube - e_[n]", ok, detail);

  ok = true;
  detail.clear();
  Mask lo = loops(e.delta), co = coloops(e.delta);
  for (int i = 1; i <= n && ok; ++i) {
    bool d_loop = lo >> (i - 1) & 1, d_coloop = co >> (i - 1) & 1;
    bool m_loop = is_loop(e.matroid, i) && is_coloop(e.matroid, -i);
    bool m_coloop = is_coloop(e.matroid, i) && is_loop(e.matroid, -i);
    if (d_loop != m_loop || d_coloop != m_coloop) {
      ok = false;
      detail = "element " + std::to_string(i);
    }
  }
  r.add("loop/coloop correspondence", ok, detail);
  return r;
}

} // namespace deltoid
