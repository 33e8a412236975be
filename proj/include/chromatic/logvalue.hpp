#ifndef CHROMATIC_LOGVALUE_HPP
#define CHROMATIC_LOGVALUE_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>
#include <vector>

namespace chromatic {

// Nonnegative quantity carried as its natural log; -inf encodes zero.
// Expectations like P*q^f overflow any fixed-width float long before the
// parameter ranges of interest, so everything downstream works in this form.
class LogValue {
  public:
    LogValue() : lg_(-std::numeric_limits<double>::infinity()) {}

    static LogValue zero() { return LogValue(); }
    static LogValue one() { return from_log(0.0); }
    static LogValue from_log(double lg) {
        LogValue v;
        v.lg_ = lg;
        return v;
    }
    static LogValue from_value(double x) {
        return from_log(x > 0 ? std::log(x) : -std::numeric_limits<double>::infinity());
    }

    double log() const { return lg_; }
    double value() const { return std::exp(lg_); }
    bool is_zero() const { return std::isinf(lg_) && lg_ < 0; }

    friend LogValue operator*(LogValue a, LogValue b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return from_log(a.lg_ + b.lg_);
    }
    friend LogValue operator/(LogValue a, LogValue b) { return from_log(a.lg_ - b.lg_); }

    // log-sum-exp; stable for any magnitude spread
    friend LogValue operator+(LogValue a, LogValue b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const double m = std::max(a.lg_, b.lg_);
        return from_log(m + std::log1p(std::exp(std::min(a.lg_, b.lg_) - m)));
    }

    auto operator<=>(const LogValue&) const = default;

  private:
    double lg_;
};

inline LogValue pow(LogValue a, double e) {
    if (a.is_zero()) return e == 0 ? LogValue::one() : LogValue::zero();
    return LogValue::from_log(a.log() * e);
}

// Sum of a list of log-domain terms: single max extraction, then one pass.
inline LogValue log_sum(const std::vector<double>& logs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : logs) m = std::max(m, x);
    if (std::isinf(m) && m < 0) return LogValue::zero();
    double acc = 0.0;
    for (double x : logs) acc += std::exp(x - m);
    return LogValue::from_log(m + std::log(acc));
}

}  // namespace chromatic

#endif
