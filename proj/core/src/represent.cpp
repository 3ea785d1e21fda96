#include "deltoid/represent.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace deltoid {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

bool is_prime(std::int64_t p) {
  if (p < 2)
    return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

// Rank of a row-major matrix over F_p; destroys the input.
int eliminate(std::vector<std::int64_t> &a, int rows, int cols, std::int64_t p) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r * cols + c]) {
        piv = r;
        break;
      }
    if (piv < 0)
      continue;
    for (int k = 0; k < cols; ++k)
      std::swap(a[piv * cols + k], a[rank * cols + k]);
    std::int64_t inv = mod_inverse(a[rank * cols + c], p);
    for (int k = c; k < cols; ++k)
      a[rank * cols + k] = a[rank * cols + k] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || !a[r * cols + c])
        continue;
      std::int64_t f = a[r * cols + c];
      for (int k = c; k < cols; ++k)
        a[r * cols + k] = reduce(a[r * cols + k] - f * a[rank * cols + k], p);
    }
    ++rank;
  }
  return rank;
}

} // namespace

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  if (a == 0)
    throw InvalidArgument("zero has no inverse");
  std::int64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

FqMatrix::FqMatrix(std::int64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (!is_prime(p) || p > (std::int64_t{1} << 31))
    throw InvalidArgument("field characteristic must be a prime below 2^31");
  if (rows < 0 || cols < 0)
    throw InvalidArgument("negative matrix dimension");
}

FqMatrix::FqMatrix(std::int64_t p, const std::vector<std::vector<std::int64_t>> &rows)
    : FqMatrix(p, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (int r = 0; r < rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols_)
      throw InvalidArgument("ragged matrix rows");
    for (int c = 0; c < cols_; ++c)
      set(r, c, rows[r][c]);
  }
}

void FqMatrix::set(int r, int c, std::int64_t v) {
  a_[static_cast<std::size_t>(r) * cols_ + c] = reduce(v, p_);
}

int FqMatrix::rank() const {
  auto a = a_;
  return eliminate(a, rows_, cols_, p_);
}

bool FqMatrix::nonsingular_columns(const std::vector<int> &cols) const {
  int k = static_cast<int>(cols.size());
  if (k != rows_)
    return false;
  std::vector<std::int64_t> a(static_cast<std::size_t>(k) * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      a[r * k + c] = at(r, cols[c]);
  return eliminate(a, k, k, p_) == k;
}

FqMatrix FqMatrix::without_column(int c) const {
  FqMatrix out(p_, rows_, cols_ - 1);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0, j = 0; k < cols_; ++k)
      if (k != c)
        out.set(r, j++, at(r, k));
  return out;
}

FqMatrix FqMatrix::with_zero_column() const {
  FqMatrix out(p_, rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k)
      out.set(r, k, at(r, k));
  return out;
}

FqMatrix FqMatrix::rref() const {
  auto a = a_;
  int r = eliminate(a, rows_, cols_, p_);
  FqMatrix out(p_, r, cols_);
  std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r) * cols_, out.a_.begin());
  return out;
}

namespace {

int form_size(const FqMatrix &l, FormType type) {
  int n = l.rows();
  int want = type == FormType::B ? 2 * n + 1 : 2 * n;
  if (l.cols() != want)
    throw InvalidArgument("isotropic test needs n rows and " + std::to_string(want) + " columns");
  return n;
}

std::int64_t quadratic(const FqMatrix &l, int a, int b, int n, FormType type) {
  std::int64_t p = l.p(), s = 0;
  for (int i = 0; i < n; ++i)
    s = (s + l.at(a, i) * l.at(b, n + i)) % p;
  if (type == FormType::B)
    s = (s + l.at(a, 2 * n) * l.at(b, 2 * n)) % p;
  return s;
}

} // namespace

bool is_isotropic(const FqMatrix &l, FormType type) {
  int n = form_size(l, type);
  std::int64_t p = l.p();
  for (int a = 0; a < n; ++a) {
    if (quadratic(l, a, a, n, type))
      return false;
    for (int b = a + 1; b < n; ++b) {
      // Polarization B(u,v) = q(u+v) − q(u) − q(v).
      std::int64_t s = quadratic(l, a, b, n, type) + quadratic(l, b, a, n, type);
      if (type == FormType::B)
        s += l.at(a, 2 * n) * l.at(b, 2 * n);
      if (s % p)
        return false;
    }
  }
  return true;
}

DeltaMatroid delta_from_isotropic(const FqMatrix &l, FormType type) {
  int n = form_size(l, type);
  check_cap(n, 20, "delta_from_isotropic");
  if (!is_isotropic(l, type))
    throw InvalidArgument("row span is not isotropic");
  if (l.rank() != n)
    throw InvalidArgument("isotropic matrix must have full row rank");
  std::vector<Mask> f;
  std::vector<int> cols(n);
  for (Mask s = 0; s <= full_mask(n); ++s) {
    for (int i = 0; i < n; ++i)
      cols[i] = (s >> i & 1) ? i : n + i;
    if (l.nonsingular_columns(cols))
      f.push_back(s);
    if (n == 0)
      break;
  }
  return DeltaMatroid(n, std::move(f));
}

std::vector<FqMatrix> enumerate_isotropic(std::int64_t p, int n, FormType type) {
  int cols = type == FormType::B ? 2 * n + 1 : 2 * n;
  std::vector<FqMatrix> out;
  // Echelon forms: choose pivot columns, then fill the free entries right of each pivot.
  std::vector<int> piv(n);
  auto fill = [&](FqMatrix &m, std::vector<std::pair<int, int>> &slots) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      total *= static_cast<std::size_t>(p);
      if (total > (std::size_t{1} << 24))
        throw ResourceLimit("enumerate_isotropic: search space too large");
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto [r, k] : slots) {
        m.set(r, k, static_cast<std::int64_t>(c % static_cast<std::size_t>(p)));
        c /= static_cast<std::size_t>(p);
      }
      if (is_isotropic(m, type))
        out.push_back(m);
    }
  };
  auto choose = [&](auto &&self, int r, int start) -> void {
    if (r == n) {
      FqMatrix m(p, n, cols);
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < n; ++i) {
        m.set(i, piv[i], 1);
        for (int k = piv[i] + 1; k < cols; ++k)
          if (std::find(piv.begin(), piv.end(), k) == piv.end())
            slots.emplace_back(i, k);
      }
      fill(m, slots);
      return;
    }
    for (int c = start; c < cols; ++c) {
      piv[r] = c;
      self(self, r + 1, c + 1);
    }
  };
  choose(choose, 0, 0);
  return out;
}

void Graph::validate() const {
  if (n < 0)
    throw InvalidArgument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n)
      throw InvalidArgument("edge endpoint out of range");
    if (a == b)
      throw InvalidArgument("graph has a loop");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw InvalidArgument("graph has a repeated edge");
  }
}

FqMatrix adjacency_matrix_rep(const Graph &g) {
  g.validate();
  FqMatrix l(2, g.n, 2 * g.n);
  for (int i = 0; i < g.n; ++i)
    l.set(i, i, 1);
  for (auto [a, b] : g.edges) {
    l.set(a - 1, g.n + b - 1, 1);
    l.set(b - 1, g.n + a - 1, 1);
  }
  return l;
}

DeltaMatroid adjacency_delta(const Graph &g) {
  return delta_from_isotropic(adjacency_matrix_rep(g), FormType::D);
}

DeltaMatroid circ_uniform(int r, int n) {
  if (r < 0 || r > n)
    throw InvalidArgument("circ_uniform needs 0 <= r <= n");
  check_cap(n, 24, "circ_uniform");
  std::vector<Mask> f;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    int k = popcount(s);
    if (k <= r && (r - k) % 2 == 0)
      f.push_back(s);
    if (n == 0)
      break;
  }
  return DeltaMatroid::trusted(n, std::move(f));
}

std::vector<Z> circ_uniform_interlace(int r, int n) {
  if (r < 0 || r > n)
    throw InvalidArgument("circ_uniform needs 0 <= r <= n");
  std::vector<Z> c(std::max(n - r, 1) + 1, 0);
  for (int s = 0; s <= n; ++s) {
    int d = s > r ? s - r : (r - s) % 2;
    c[d] += binomial(n, s);
  }
  while (c.size() > 1 && c.back() == 0)
    c.pop_back();
  return c;
}

FqMatrix circ_uniform_realization(int r, int n, std::int64_t p, unsigned seed) {
  auto target = circ_uniform(r, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, p - 1);
  for (int attempt = 0; attempt < 16; ++attempt) {
    FqMatrix l(p, n, 2 * n);
    for (int i = 0; i < r; ++i) {
      l.set(i, i, 1);
      for (int j = r; j < n; ++j) {
        std::int64_t a = pick(rng);
        l.set(i, j, a);
        l.set(j, n + i, -a);
      }
      for (int j = i + 1; j < r; ++j) {
        std::int64_t b = pick(rng);
        l.set(i, n + j, b);
        l.set(j, n + i, -b);
      }
    }
    for (int j = r; j < n; ++j)
      l.set(j, n + j, 1);
    if (delta_from_isotropic(l, FormType::D) == target)
      return l;
  }
  throw InternalError("no generic realization of U°_{r,n} found in 16 draws");
}

} // namespace deltoid
