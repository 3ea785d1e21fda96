#ifndef DELTOID_RATIONAL_HPP
#define DELTOID_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace deltoid {

using Q = mpq_class;
using Z = mpz_class;

inline std::string to_string(const Q &q) { return q.get_str(); }

/// Parses "p", "p/q" or "-p/q"; throws InvalidArgument on malformed input.
Q parse_rational(const std::string &s);

Z binomial(long n, long k);
Q binomial_q(const Q &x, long k);

inline bool is_integer(const Q &q) { return q.get_den() == 1; }

} // namespace deltoid

#endif
