#ifndef VINT_INTERVAL_HPP
#define VINT_INTERVAL_HPP

#include <cstdint>

#include "vint/violation.hpp"

namespace vint {

// A pair of signed indices denoting the index range [low..high] of a
// fixed-size vector. Empty when low > high; emptiness is purely structural
// and independent of any vector. Values are immutable once built and freely
// shareable between threads.
struct interval {
    std::int64_t low = 0;
    std::int64_t high = -1;

    friend bool operator==(const interval&, const interval&) = default;
};

inline interval make_interval(std::int64_t low, std::int64_t high) {
    return interval{low, high};
}

inline bool is_empty(interval i) { return i.low > i.high; }

// Validity relative to a vector of length n. The bound admits both canonical
// empty forms, {0,-1} and {n,n-1}, reached by shrinking from either end.
inline bool is_valid(interval i, std::int64_t n) {
    return 0 <= i.low && i.low <= n && -1 <= i.high && i.high <= n - 1;
}

inline bool contains(interval i, std::int64_t k) {
    return i.low <= k && k <= i.high;
}

// Number of indices in the interval: max(0, high - low + 1).
inline std::int64_t length(interval i) {
    return is_empty(i) ? 0 : i.high - i.low + 1;
}

// Shrinking an empty interval can only arise from misusing the structural
// template, so it is a hard error rather than a no-op.
inline interval shrink_high(interval i) {
    if (is_empty(i)) {
        throw violation_error(violation_kind::empty_interval,
                              "shrink_high on empty interval", std::nullopt,
                              i.low, i.high);
    }
    return interval{i.low, i.high - 1};
}

inline interval shrink_low(interval i) {
    if (is_empty(i)) {
        throw violation_error(violation_kind::empty_interval,
                              "shrink_low on empty interval", std::nullopt,
                              i.low, i.high);
    }
    return interval{i.low + 1, i.high};
}

// The whole index range of a length-n vector; empty iff n == 0.
inline interval full_interval(std::int64_t n) { return interval{0, n - 1}; }

// An empty interval is a subinterval of anything.
inline bool subinterval_of(interval inner, interval outer) {
    if (is_empty(inner)) return true;
    return !is_empty(outer) && outer.low <= inner.low && inner.high <= outer.high;
}

}  // namespace vint

#endif  // VINT_INTERVAL_HPP
