#include "chromatic/bigint.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace chromatic::big {

namespace {

// Balanced range product: much faster than a sequential fold for large m.
Int range_product(long long lo, long long hi) {
    if (lo > hi) return 1;
    if (hi - lo < 8) {
        Int r = lo;
        for (long long i = lo + 1; i <= hi; ++i) r *= i;
        return r;
    }
    const long long mid = lo + (hi - lo) / 2;
    return range_product(lo, mid) * range_product(mid + 1, hi);
}

}  // namespace

Int factorial(long long m) {
    if (m < 0) throw std::invalid_argument("factorial: negative argument");
    if (m <= 1) return 1;
    return range_product(2, m);
}

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

double log_of(const Int& x) {
    if (x < 0) throw std::domain_error("log_of: negative integer");
    if (x == 0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(log(Float50(x)));
}

double log_factorial(long long m) {
    if (m < 0) throw std::invalid_argument("log_factorial: negative argument");
    if (m <= 1) return 0.0;
    if (m > kExactFactorialCutoff) return std::lgamma(static_cast<double>(m) + 1.0);

    static std::mutex mu;
    static std::map<long long, double> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    const double v = log_of(factorial(m));
    cache.emplace(m, v);
    return v;
}

double log_binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace chromatic::big
