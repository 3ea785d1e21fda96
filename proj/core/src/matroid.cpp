#include "deltoid/deltamatroid.hpp"

#include <algorithm>
#include <numeric>

namespace deltoid {

Matroid::Matroid(std::vector<int> ground, std::vector<Mask> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  if (ground_.size() > 31)
    throw InvalidArgument("matroid ground set too large");
  {
    auto g = ground_;
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw InvalidArgument("repeated ground label");
  }
  if (bases_.empty())
    throw InvalidArgument("a matroid needs at least one basis");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  Mask all = full_mask(size());
  rank_ = popcount(bases_.front());
  for (Mask b : bases_) {
    if (b & ~all)
      throw InvalidArgument("basis outside the ground set");
    if (popcount(b) != rank_)
      throw InvalidArgument("bases of different sizes");
  }
  for (Mask b1 : bases_)
    for (Mask b2 : bases_)
      for (Mask x = b1 & ~b2; x; x &= x - 1) {
        Mask xb = x & -x;
        bool ok = false;
        for (Mask y = b2 & ~b1; y && !ok; y &= y - 1)
          ok = is_basis((b1 & ~xb) | (y & -y));
        if (!ok)
          throw InvalidArgument("basis exchange axiom fails");
      }
}

Matroid Matroid::from_labels(std::vector<int> ground,
                             const std::vector<std::vector<int>> &bases) {
  Matroid probe;
  probe.ground_ = ground;
  std::vector<Mask> masks;
  for (auto &b : bases)
    masks.push_back(probe.mask_of(b));
  return Matroid(std::move(ground), std::move(masks));
}

Matroid Matroid::uniform(int r, int k) {
  if (r < 0 || r > k || k > 31)
    throw InvalidArgument("uniform matroid parameters out of range");
  std::vector<int> g(k);
  std::iota(g.begin(), g.end(), 1);
  std::vector<Mask> bases;
  for (Mask s = 0; s <= full_mask(k); ++s) {
    if (popcount(s) == r)
      bases.push_back(s);
    if (s == full_mask(k))
      break;
  }
  return Matroid(std::move(g), std::move(bases));
}

static int find_root(std::vector<int> &p, int x) {
  while (p[x] != x)
    x = p[x] = p[p[x]];
  return x;
}

Matroid Matroid::graphic(int nv, const std::vector<std::pair<int, int>> &edges) {
  int m = static_cast<int>(edges.size());
  if (m > 20)
    throw ResourceLimit("graphic matroid: too many edges");
  for (auto [a, b] : edges)
    if (a < 0 || b < 0 || a >= nv || b >= nv)
      throw InvalidArgument("edge endpoint out of range");
  std::vector<Mask> forests;
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    std::vector<int> p(nv);
    std::iota(p.begin(), p.end(), 0);
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e)
      if (s >> e & 1) {
        int a = find_root(p, edges[e].first), b = find_root(p, edges[e].second);
        if (a == b)
          acyclic = false;
        else
          p[a] = b;
      }
    if (!acyclic)
      continue;
    if (popcount(s) > best) {
      best = popcount(s);
      forests.clear();
    }
    if (popcount(s) == best)
      forests.push_back(s);
  }
  std::vector<int> g(m);
  std::iota(g.begin(), g.end(), 1);
  return Matroid(std::move(g), std::move(forests));
}

bool Matroid::is_basis(Mask s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

bool Matroid::is_independent(Mask s) const {
  for (Mask b : bases_)
    if ((s & ~b) == 0)
      return true;
  return false;
}

int Matroid::rank_of(Mask s) const {
  int r = 0;
  for (Mask b : bases_)
    r = std::max(r, popcount(s & b));
  return r;
}

std::vector<Mask> Matroid::independent_sets() const {
  std::vector<Mask> out;
  for (Mask b : bases_)
    for (Mask s = b;; s = (s - 1) & b) {
      out.push_back(s);
      if (s == 0)
        break;
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Matroid Matroid::dual() const {
  std::vector<Mask> b;
  for (Mask x : bases_)
    b.push_back(~x & full_mask(size()));
  return Matroid(ground_, std::move(b));
}

Matroid Matroid::relabeled(std::vector<int> ground) const {
  if (ground.size() != ground_.size())
    throw InvalidArgument("relabeling changes the ground size");
  return Matroid(std::move(ground), bases_);
}

int Matroid::position(int label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  return it == ground_.end() ? -1 : static_cast<int>(it - ground_.begin());
}

Mask Matroid::mask_of(const std::vector<int> &labels) const {
  Mask m = 0;
  for (int x : labels) {
    int p = position(x);
    if (p < 0)
      throw InvalidArgument("label " + std::to_string(x) + " not in the ground set");
    m |= Mask{1} << p;
  }
  return m;
}

std::vector<int> Matroid::labels_of(Mask s) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (s >> i & 1)
      out.push_back(ground_[i]);
  return out;
}

Mask Matroid::greedy_max(const std::vector<Q> &weight) const {
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weight[a] > weight[b]; });
  Mask s = 0;
  for (int i : order)
    if (is_independent(s | Mask{1} << i))
      s |= Mask{1} << i;
  return s;
}

Matroid direct_sum(const Matroid &a, const Matroid &b) {
  std::vector<int> g = a.ground();
  g.insert(g.end(), b.ground().begin(), b.ground().end());
  std::vector<Mask> bases;
  for (Mask x : a.bases())
    for (Mask y : b.bases())
      bases.push_back(x | y << a.size());
  return Matroid(std::move(g), std::move(bases));
}

} // namespace deltoid
