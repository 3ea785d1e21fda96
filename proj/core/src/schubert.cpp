#include "deltoid/schubert.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace deltoid {

DeltaMatroid standard_schubert(const AdmissibleSet &s) {
  if (!s.is_maximal())
    throw InvalidArgument("standard_schubert needs a maximal admissible set");
  int n = s.n();
  std::vector<Mask> f;
  for (Mask b = 0; b <= full_mask(n); ++b) {
    if (gale_leq(AdmissibleSet::maximal(n, b), s))
      f.push_back(b);
    if (n == 0)
      break;
  }
  return DeltaMatroid(n, std::move(f));
}

Matroid schubert_matroid(int n, Mask t) {
  if (t & ~full_mask(n))
    throw InvalidArgument("schubert_matroid: T outside [n]");
  auto elems = [](Mask m) {
    std::vector<int> v;
    for (; m; m &= m - 1)
      v.push_back(std::countr_zero(m));
    return v;
  };
  auto te = elems(t);
  std::vector<Mask> bases;
  for (Mask b = 0; b <= full_mask(n); ++b) {
    if (popcount(b) == popcount(t)) {
      auto be = elems(b);
      bool below = true;
      for (std::size_t k = 0; k < be.size(); ++k)
        below = below && be[k] <= te[k];
      if (below)
        bases.push_back(b);
    }
    if (n == 0)
      break;
  }
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = i + 1;
  return Matroid(std::move(g), std::move(bases));
}

std::vector<DeltaMatroid> all_schubert(int n) {
  check_cap(n, 4, "all_schubert");
  std::set<DeltaMatroid> seen;
  auto group = enumerate_group(n);
  for (Mask s = 0; s <= full_mask(n); ++s) {
    auto omega = standard_schubert(AdmissibleSet::maximal(n, s));
    for (auto &w : group)
      seen.insert(twist(w, omega));
    if (n == 0)
      break;
  }
  return {seen.begin(), seen.end()};
}

bool is_schubert(const DeltaMatroid &d) {
  static std::mutex mu;
  static std::map<int, std::set<DeltaMatroid>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d.n());
  if (it == cache.end()) {
    auto all = all_schubert(d.n());
    it = cache.emplace(d.n(), std::set<DeltaMatroid>(all.begin(), all.end())).first;
  }
  return it->second.count(d) > 0;
}

ConeReduction reduce_cone_apex(const IntPoint &m) {
  int n = static_cast<int>(m.size());
  ConeReduction out;
  IntPoint x = m;
  for (;;) {
    std::int64_t stat = 0;
    for (int i = 0; i < n; ++i)
      stat += (i + 1) * x[i];
    if (stat < 0)
      return out;
    int i = 0;
    while (i < n && (x[i] == 0 || x[i] == 1))
      ++i;
    if (i == n) {
      out.apex = x;
      return out;
    }
    if (x[i] > 1) {
      // m + (m_i − 1)α_i with α_1 = −e_1 and α_i = e_{i−1} − e_i.
      std::int64_t a = x[i] - 1;
      x[i] -= a;
      if (i > 0)
        x[i - 1] += a;
    } else {
      // m + (−m_i)α_{i+1}.
      if (i == n - 1)
        return out;
      std::int64_t a = -x[i];
      x[i] += a;
      x[i + 1] -= a;
    }
    ++out.steps;
  }
}

std::optional<DeltaMatroid> cone_cube_intersect(const IntPoint &m) {
  auto r = reduce_cone_apex(m);
  if (!r.apex)
    return std::nullopt;
  int n = static_cast<int>(m.size());
  Mask s = 0;
  for (int i = 0; i < n; ++i)
    if ((*r.apex)[i])
      s |= Mask{1} << i;
  return standard_schubert(AdmissibleSet::maximal(n, s));
}

Z IndicatorCombination::evaluate(const Point &x) const {
  Z v = 0;
  for (auto &t : terms) {
    Point y = x;
    for (int i = 0; i < n; ++i)
      y[i] -= t.translation[i];
    if (t.polytope.contains(y))
      v += t.coeff;
  }
  return v;
}

namespace {

// A cone of Σ_{B_n}: a chain S_1 ⊂ ⋯ ⊂ S_k of nonempty admissible sets.
using Chain = std::vector<AdmissibleSet>;

void enumerate_chains(int n, Chain &chain, std::vector<Chain> &out) {
  out.push_back(chain);
  Mask used = chain.empty() ? 0 : (chain.back().pos() | chain.back().neg());
  Mask free = full_mask(n) & ~used;
  for (Mask r = free; r; r = (r - 1) & free)
    for (Mask neg = r;; neg = (neg - 1) & r) {
      Mask pos = r & ~neg;
      AdmissibleSet prev = chain.empty() ? AdmissibleSet(n, 0, 0) : chain.back();
      chain.emplace_back(n, prev.pos() | pos, prev.neg() | neg);
      enumerate_chains(n, chain, out);
      chain.pop_back();
      if (neg == 0)
        break;
    }
}

SignedPermutation extending(int n, const Chain &chain) {
  std::vector<int> img;
  Mask used = 0;
  for (auto &s : chain)
    for (int x : s.to_signed())
      if (!(used >> (std::abs(x) - 1) & 1)) {
        img.push_back(x);
        used |= Mask{1} << (std::abs(x) - 1);
      }
  for (int i = 1; i <= n; ++i)
    if (!(used >> (i - 1) & 1))
      img.push_back(i);
  return SignedPermutation(std::move(img));
}

IntPoint to_int(const Point &p) {
  IntPoint out;
  for (auto &x : p)
    out.push_back(x.get_num().get_si());
  return out;
}

} // namespace

IndicatorCombination schubert_decompose(const BnPolytope &p) {
  int n = p.n();
  check_cap(n, 4, "schubert_decompose");
  if (!p.is_lattice())
    throw InvalidArgument("schubert_decompose needs a lattice polytope");

  std::vector<Chain> cones;
  Chain scratch;
  enumerate_chains(n, scratch, cones);
  struct Cone {
    int sign;
    IntPoint apex;
    Chain chain;
  };
  std::vector<Cone> tangent;
  for (auto &c : cones) {
    int codim = n - static_cast<int>(c.size());
    tangent.push_back({codim % 2 ? -1 : 1, to_int(p.vertex_min(extending(n, c))), c});
  }

  auto pts = lattice_points(p);
  std::set<IntPoint> inside(pts.begin(), pts.end());
  IntPoint lo = pts.front(), hi = pts.front();
  for (auto &x : pts)
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }

  std::map<std::pair<IntPoint, std::vector<Mask>>, Z> collected;
  IntPoint m = lo;
  for (;;) {
    for (Mask j = 0; j <= full_mask(n); ++j) {
      // Lattice points of the face of m + [0,1]ⁿ with x_i = m_i + 1 for i ∈ J.
      Mask free = full_mask(n) & ~j;
      std::vector<IntPoint> face;
      for (Mask s = free;; s = (s - 1) & free) {
        IntPoint x = m;
        for (int i = 0; i < n; ++i)
          if ((j | s) >> i & 1)
            x[i] += 1;
        face.push_back(x);
        if (s == 0)
          break;
      }
      bool meets = std::any_of(face.begin(), face.end(),
                               [&](const IntPoint &x) { return inside.count(x) > 0; });
      if (meets) {
        int face_sign = popcount(j) % 2 ? -1 : 1;
        for (auto &cone : tangent) {
          std::vector<IntPoint> piece;
          for (auto &x : face) {
            bool ok = true;
            for (auto &s : cone.chain) {
              std::int64_t v = 0;
              for (int i = 0; i < n; ++i) {
                if (s.pos() >> i & 1)
                  v += x[i] - cone.apex[i];
                else if (s.neg() >> i & 1)
                  v -= x[i] - cone.apex[i];
              }
              if (v < 0) {
                ok = false;
                break;
              }
            }
            if (ok)
              piece.push_back(x);
          }
          if (piece.empty())
            continue;
          IntPoint t = piece.front();
          for (auto &x : piece)
            for (int i = 0; i < n; ++i)
              t[i] = std::min(t[i], x[i]);
          std::vector<Mask> masks;
          for (auto &x : piece) {
            Mask b = 0;
            for (int i = 0; i < n; ++i)
              if (x[i] != t[i])
                b |= Mask{1} << i;
            masks.push_back(b);
          }
          std::sort(masks.begin(), masks.end());
          collected[{t, masks}] += face_sign * cone.sign;
        }
      }
      if (n == 0)
        break;
    }
    int i = 0;
    while (i < n && m[i] == hi[i]) {
      m[i] = lo[i];
      ++i;
    }
    if (i == n)
      break;
    ++m[i];
  }

  IndicatorCombination out;
  out.n = n;
  for (auto &[key, c] : collected) {
    if (c == 0)
      continue;
    auto d = DeltaMatroid::trusted(n, key.second);
    if (!is_schubert(d))
      throw InternalError("decomposition piece is not a Schubert delta-matroid: " + to_string(d));
    out.terms.push_back({c, key.first, BnPolytope::of(d)});
  }
  return out;
}

namespace {

struct Box {
  IntPoint lo, hi;
};

Box bounding_box(const BnPolytope &p, const IntPoint &t) {
  int n = p.n();
  Box b{IntPoint(n), IntPoint(n)};
  for (int i = 0; i < n; ++i) {
    Q up = p.h(AdmissibleSet(n, Mask{1} << i, 0));
    Q down = p.h(AdmissibleSet(n, 0, Mask{1} << i));
    Z f, c;
    mpz_cdiv_q(c.get_mpz_t(), up.get_num_mpz_t(), up.get_den_mpz_t());
    mpz_cdiv_q(f.get_mpz_t(), down.get_num_mpz_t(), down.get_den_mpz_t());
    b.hi[i] = c.get_si() + t[i];
    b.lo[i] = -f.get_si() + t[i];
  }
  return b;
}

// Adds coeff at every point Y of the scaled grid with Y/d ∈ t + P.
void accumulate(const BnPolytope &p, const IntPoint &t, std::int64_t d, long coeff,
                const IntPoint &glo, const std::vector<std::size_t> &stride,
                std::vector<long> &grid) {
  int n = p.n();
  auto rays = enumerate_rays(n);
  std::vector<std::int64_t> bound;
  std::vector<std::vector<int>> by_last(n);
  for (std::size_t r = 0; r < rays.size(); ++r) {
    Q shifted = p.h(static_cast<int>(r));
    for (int i = 0; i < n; ++i) {
      if (rays[r].pos() >> i & 1)
        shifted += t[i];
      else if (rays[r].neg() >> i & 1)
        shifted -= t[i];
    }
    Q scaled = shifted * d;
    Z f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    bound.push_back(f.get_si());
    Mask m = rays[r].pos() | rays[r].neg();
    by_last[31 - std::countl_zero(m)].push_back(static_cast<int>(r));
  }
  Box b = bounding_box(p, t);
  IntPoint y(n, 0);
  auto rec = [&](auto &&self, int k, std::size_t offset) -> void {
    if (k == n) {
      grid[offset] += coeff;
      return;
    }
    for (std::int64_t v = b.lo[k] * d; v <= b.hi[k] * d; ++v) {
      y[k] = v;
      bool ok = true;
      for (int r : by_last[k]) {
        if (pairing(y, rays[r].pos(), rays[r].neg()) > bound[r]) {
          ok = false;
          break;
        }
      }
      if (ok)
        self(self, k + 1, offset + static_cast<std::size_t>(v - glo[k]) * stride[k]);
    }
    y[k] = 0;
  };
  rec(rec, 0, 0);
}

} // namespace

IndicatorVerdict verify_indicator(const IndicatorCombination &comb,
                                  const std::optional<BnPolytope> &target, unsigned seed) {
  int n = comb.n;
  IndicatorVerdict v;
  if (target && target->n() != n)
    throw InvalidArgument("verify_indicator: size mismatch");
  if (n == 0) {
    Z total = 0;
    for (auto &t : comb.terms)
      total += t.coeff;
    v.grid = v.random = v.valuative = total == (target ? 1 : 0);
    v.grid_points = 1;
    return v;
  }
  std::int64_t d = 4 * n;
  IntPoint lo, hi;
  auto widen = [&](const Box &b) {
    if (lo.empty()) {
      lo = b.lo;
      hi = b.hi;
      return;
    }
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], b.lo[i]);
      hi[i] = std::max(hi[i], b.hi[i]);
    }
  };
  for (auto &t : comb.terms)
    widen(bounding_box(t.polytope, t.translation));
  if (target)
    widen(bounding_box(*target, IntPoint(n, 0)));
  if (lo.empty()) {
    lo.assign(n, 0);
    hi.assign(n, 0);
  }
  for (int i = 0; i < n; ++i) {
    lo[i] -= 1;
    hi[i] += 1;
  }

  IntPoint glo(n);
  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    glo[i] = lo[i] * d;
    stride[i] = total;
    total *= static_cast<std::size_t>((hi[i] - lo[i]) * d + 1);
    if (total > (std::size_t{1} << 27))
      throw ResourceLimit("verification grid too large");
  }
  std::vector<long> grid(total, 0);
  for (auto &t : comb.terms)
    accumulate(t.polytope, t.translation, d, t.coeff.get_si(), glo, stride, grid);
  if (target)
    accumulate(*target, IntPoint(n, 0), d, -1, glo, stride, grid);
  v.grid_points = total;
  for (std::size_t k = 0; k < total; ++k)
    if (grid[k] != 0) {
      v.grid = false;
      std::size_t r = k;
      std::string where;
      for (int i = 0; i < n; ++i) {
        std::size_t extent = static_cast<std::size_t>((hi[i] - lo[i]) * d + 1);
        where += (i ? "," : "") + Q(glo[i] + static_cast<long>(r % extent), d).get_str();
        r /= extent;
      }
      v.detail = "grid mismatch at (" + where + ")";
      break;
    }

  std::mt19937 rng(seed);
  std::int64_t e = 4 * n + 1;
  for (int k = 0; k < 64; ++k) {
    Point x(n);
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<std::int64_t> pick(lo[i] * e, hi[i] * e);
      x[i] = Q(pick(rng), e);
      x[i].canonicalize();
    }
    Z lhs = comb.evaluate(x);
    Z rhs = target && target->contains(x) ? 1 : 0;
    if (lhs != rhs) {
      v.random = false;
      if (v.detail.empty())
        v.detail = "random point mismatch";
      break;
    }
  }

  for (int t = 1; t <= 3; ++t) {
    Z lhs = 0;
    for (auto &term : comb.terms) {
      Point shift(n);
      for (int i = 0; i < n; ++i)
        shift[i] = term.translation[i] * t;
      lhs += term.coeff * static_cast<unsigned long>(
                              lattice_count(term.polytope.dilate(t).translate(shift)));
    }
    Z rhs = target ? Z(static_cast<unsigned long>(lattice_count(target->dilate(t)))) : Z(0);
    if (lhs != rhs) {
      v.valuative = false;
      if (v.detail.empty())
        v.detail = "lattice count mismatch at t=" + std::to_string(t);
      break;
    }
  }
  return v;
}

std::vector<long> coloop_free_schubert_census(int n) {
  check_cap(n, 4, "coloop_free_schubert_census");
  std::vector<long> counts(n + 1, 0);
  for (auto &d : all_schubert(n)) {
    if (coloops(d))
      continue;
    auto c = is_cornered(d);
    if (!c)
      throw InternalError("Schubert delta-matroid is not cornered: " + to_string(d));
    ++counts[c->matroid.rank()];
  }
  return counts;
}

} // namespace deltoid
