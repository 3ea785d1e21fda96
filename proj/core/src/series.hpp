#ifndef DELTOID_SRC_SERIES_HPP
#define DELTOID_SRC_SERIES_HPP

#include "deltoid/core.hpp"
#include "deltoid/polyring.hpp"

#include <string>
#include <vector>

namespace deltoid::detail {

/// Truncation at degree n in t1..tn.
MPoly trunc(const MPoly &p, int n);
/// Series inverse in t1..tn; the t-constant part must be a nonzero rational.
MPoly series_inverse(const MPoly &p, int n);
/// p^a for any integer a, truncated.
MPoly series_pow(const MPoly &p, long a, int n);
/// Images of T_i under φ^B (zeta = false) or ζ^B at the fixed point w.
MPoly exceptional_image(const MPoly &f, const SignedPermutation &w, bool zeta);
/// Index 1..n of a variable named T<i> (or t<i>), else 0.
int var_number(const std::string &name, char prefix, int n);

} // namespace deltoid::detail

#endif
