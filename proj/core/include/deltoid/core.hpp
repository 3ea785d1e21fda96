#ifndef DELTOID_CORE_HPP
#define DELTOID_CORE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace deltoid {

using Mask = std::uint32_t;

constexpr int kMaxGround = 30;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Size cap for exhaustive routines; DELTOID_MAX_N overrides the default.
int size_cap(int fallback);
void check_cap(int n, int fallback, const char *what);

struct SignedIndex {
  int index = 1;
  bool barred = false;

  int to_int() const { return barred ? -index : index; }
  static SignedIndex from_int(int x);
  SignedIndex bar() const { return {index, !barred}; }
  friend bool operator==(SignedIndex, SignedIndex) = default;
};

/// A subset of [n, n-bar] containing no pair {i, i-bar}. Bit k stands for k+1.
class AdmissibleSet {
public:
  AdmissibleSet() = default;
  AdmissibleSet(int n, Mask pos, Mask neg);

  static AdmissibleSet from_signed(int n, const std::vector<int> &elems);
  /// The maximal set pos ∪ (bar of the complement).
  static AdmissibleSet maximal(int n, Mask pos);

  int n() const { return n_; }
  Mask pos() const { return pos_; }
  Mask neg() const { return neg_; }
  int size() const { return popcount(pos_) + popcount(neg_); }
  bool empty() const { return (pos_ | neg_) == 0; }
  bool is_maximal() const { return (pos_ | neg_) == full_mask(n_); }
  bool contains(int signed_elem) const;
  bool intersects(const AdmissibleSet &o) const {
    return (pos_ & o.pos_) || (neg_ & o.neg_);
  }
  AdmissibleSet bar() const { return {n_, neg_, pos_}; }

  /// Sorted ascending under n̄ < ... < 1̄ < 1 < ... < n.
  std::vector<int> to_signed() const;
  std::string to_string() const;

  friend bool operator==(const AdmissibleSet &, const AdmissibleSet &) = default;
  friend auto operator<=>(const AdmissibleSet &a, const AdmissibleSet &b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    if (auto c = a.pos_ <=> b.pos_; c != 0)
      return c;
    return a.neg_ <=> b.neg_;
  }

private:
  int n_ = 0;
  Mask pos_ = 0;
  Mask neg_ = 0;
};

/// Ray index of a nonempty admissible set: base-3 digits (0 absent, 1 i, 2 ī), minus one.
int ray_index(const AdmissibleSet &s);
AdmissibleSet ray_from_index(int n, int idx);
int ray_count(int n);

class SignedPermutation {
public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images);

  static SignedPermutation identity(int n);
  /// τ_{i,i+1} = (i, i+1)(ī, i+1‾), 1 ≤ i < n.
  static SignedPermutation adjacent(int n, int i);
  /// τ_n = (n, n̄).
  static SignedPermutation last_flip(int n);
  /// Flips the sign of every i in the mask.
  static SignedPermutation sign_flip(int n, Mask signs);

  int n() const { return static_cast<int>(img_.size()); }
  const std::vector<int> &images() const { return img_; }
  /// Image of a signed element.
  int operator()(int x) const { return x > 0 ? img_[x - 1] : -img_[-x - 1]; }
  /// +1 iff i ∈ w([n]).
  int epsilon(int i) const;
  /// w([n]) as an admissible set.
  AdmissibleSet positive_image() const;
  /// The chain set {w(1), ..., w(k)}.
  AdmissibleSet prefix(int k) const;

  SignedPermutation inverse() const;
  friend SignedPermutation operator*(const SignedPermutation &a, const SignedPermutation &b);
  friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;
  friend auto operator<=>(const SignedPermutation &, const SignedPermutation &) = default;

  std::string to_string() const;

private:
  std::vector<int> img_;
};

bool gale_leq(const AdmissibleSet &s, const AdmissibleSet &t);
/// The upper-segment criterion |S ∩ {i..n}| ≤ |T ∩ {i..n}| over the signed order.
bool gale_leq_segments(const AdmissibleSet &s, const AdmissibleSet &t);

AdmissibleSet weyl_act(const SignedPermutation &w, const AdmissibleSet &s);
int descent_count(const SignedPermutation &w);

std::vector<SignedPermutation> enumerate_group(int n);
std::vector<AdmissibleSet> enumerate_ads(int n, int k);
std::vector<AdmissibleSet> enumerate_rays(int n);

/// h_r(B_n): signed permutations by descent count.
std::vector<long long> eulerian_b(int n);

} // namespace deltoid

#endif
