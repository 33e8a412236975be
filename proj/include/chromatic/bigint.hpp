#ifndef CHROMATIC_BIGINT_HPP
#define CHROMATIC_BIGINT_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace chromatic::big {

using Int = boost::multiprecision::cpp_int;
using Float50 = boost::multiprecision::cpp_bin_float_50;

// Largest m for which log_factorial takes the exact-integer route; above it
// lgamma is used (relative error there is far below 1e-10).
inline constexpr long long kExactFactorialCutoff = 100000;

Int factorial(long long m);
Int binomial(long long n, long long k);

inline long long choose2(long long m) { return m <= 1 ? 0 : m * (m - 1) / 2; }

// Natural log of a nonnegative integer; -inf for zero.
double log_of(const Int& x);

// Natural log of m!, memoized. Exact big-integer product up to the cutoff,
// lgamma(m+1) beyond it.
double log_factorial(long long m);

// log C(n,k) via log_factorial, so large-n callers stay in the log domain.
double log_binomial(long long n, long long k);

}  // namespace chromatic::big

#endif
