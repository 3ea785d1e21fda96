#ifndef DELTOID_POLYRING_HPP
#define DELTOID_POLYRING_HPP

#include "deltoid/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace deltoid {

/// Sparse multivariate polynomial over Q with named variables. In Laurent
/// mode exponents may be negative. Variables are merged by name.
class MPoly {
public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Q>;

  MPoly() = default;
  MPoly(const Q &c);
  MPoly(long c) : MPoly(Q(c)) {}
  MPoly(int c) : MPoly(Q(c)) {}

  static MPoly var(const std::string &name, bool laurent = false);
  static MPoly from_terms(std::vector<std::string> vars, Terms terms, bool laurent = false);
  /// Variables given as names x1 .. xk with a common prefix.
  static std::vector<std::string> indexed(const std::string &prefix, int k);

  const std::vector<std::string> &variables() const { return vars_; }
  const Terms &terms() const { return terms_; }
  bool laurent() const { return laurent_; }
  MPoly with_laurent(bool on) const;
  int var_index(const std::string &name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Q constant_term() const;
  std::size_t size() const { return terms_.size(); }

  MPoly operator-() const;
  MPoly &operator+=(const MPoly &o);
  MPoly &operator-=(const MPoly &o);
  MPoly &operator*=(const MPoly &o);
  friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
  friend MPoly operator*(const MPoly &a, const MPoly &b);
  friend bool operator==(const MPoly &a, const MPoly &b);

  /// Negative powers require a single-term polynomial in Laurent mode.
  MPoly pow(int k) const;

  /// Coefficient of the monomial given by name → exponent (absent names are 0).
  Q coeff(const std::map<std::string, int> &monomial) const;
  int total_degree() const;
  int degree(const std::string &name) const;
  bool is_homogeneous() const;

  /// Replaces variables by polynomials. Negative exponents of a bound
  /// variable need an invertible (single-term, Laurent) binding.
  MPoly substitute(const std::map<std::string, MPoly> &bindings) const;
  /// Binds some variables to rational values.
  MPoly evaluate(const std::map<std::string, Q> &values) const;
  /// Full evaluation; every occurring variable must be bound.
  Q value(const std::map<std::string, Q> &values) const;

  MPoly truncate_degree(int d) const;
  /// Truncation by degree in the listed variables only.
  MPoly truncate_degree(int d, const std::vector<std::string> &in) const;
  /// Part of exact degree d in the listed variables.
  MPoly homogeneous_part(int d, const std::vector<std::string> &in) const;

  /// Dense coefficient array of a polynomial in at most the given variable.
  std::vector<Q> coefficients(const std::string &name) const;
  MPoly derivative(const std::string &name, int k = 1) const;
  /// Drops variables that do not occur.
  MPoly compact() const;
  /// Re-expresses over the given variable list, which must cover every occurring variable.
  MPoly over(const std::vector<std::string> &vars) const;

  std::string to_string() const;

private:
  void normalize();
  void check_laurent() const;
  MPoly aligned_to(const std::vector<std::string> &vars) const;
  static std::vector<std::string> merged(const std::vector<std::string> &a,
                                         const std::vector<std::string> &b);

  std::vector<std::string> vars_;
  Terms terms_;
  bool laurent_ = false;
};

MPoly univariate(const std::string &name, const std::vector<Q> &coeffs);

} // namespace deltoid

#endif
