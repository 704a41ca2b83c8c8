#ifndef VINT_RADIXSORT_HPP
#define VINT_RADIXSORT_HPP

#include <algorithm>
#include <array>
#include <cstdint>

#include "vint/bucket.hpp"
#include "vint/checked_vector.hpp"
#include "vint/fold.hpp"
#include "vint/interval.hpp"
#include "vint/violation.hpp"

namespace vint {

// LSD radixsort over nonnegative integers, base 10: one bucket per decimal
// digit, each sized to hold the whole vector, with one bucketize/dump pass
// per digit of the largest element.

inline constexpr std::int64_t radix_bucket_count = 10;

using bucket_array = std::array<bucket, static_cast<std::size_t>(radix_bucket_count)>;

inline bucket_array make_buckets(std::int64_t capacity) {
    return bucket_array{bucket(capacity), bucket(capacity), bucket(capacity),
                        bucket(capacity), bucket(capacity), bucket(capacity),
                        bucket(capacity), bucket(capacity), bucket(capacity),
                        bucket(capacity)};
}

// Digit of num at decimal position i: (num / 10^i) mod 10. Positions beyond
// the length of the number read as 0.
inline std::int64_t compute_bucket_number(std::int64_t num, std::int64_t i) {
    for (std::int64_t d = 0; d < i; ++d) {
        num /= 10;
        if (num == 0) break;
    }
    return num % 10;
}

// Number of passes needed: the decimal digit count of the maximum element.
// Zero has one digit; the empty vector needs no passes at all.
inline std::int64_t digit_passes(checked_vector& v) {
    if (v.size() == 0) return 0;
    std::int64_t mx = fold_right_to_left(
        v, full_interval(v.size()), std::int64_t{0},
        [](std::int64_t e, std::int64_t acc) { return std::max(e, acc); });
    std::int64_t digits = 1;
    while (mx >= 10) {
        mx /= 10;
        ++digits;
    }
    return digits;
}

// Appends every element of i to the bucket matching its digit at position d,
// scanning left-to-right so elements with equal digits keep their relative
// order.
inline void bucketize(checked_vector& v, interval i, std::int64_t d,
                      bucket_array& buckets) {
    interval_scope scope(v, i, "bucketize");
    for (interval cur = i; !is_empty(cur); cur = shrink_low(cur)) {
        std::int64_t num = v.read(cur.low);
        std::int64_t bnum = compute_bucket_number(num, d);
        buckets[static_cast<std::size_t>(bnum)].add(num);
    }
}

// Dumps buckets bnum..9 back into the vector, each at the first index after
// the previous bucket's elements; the bucket number strictly increases
// toward 10, which is the stop case.
inline void dump_buckets(checked_vector& v, std::int64_t bnum, std::int64_t index,
                         bucket_array& buckets) {
    if (bnum == radix_bucket_count) return;
    bucket& b = buckets[static_cast<std::size_t>(bnum)];
    std::int64_t next = index + b.size();
    b.dump_to(v, index);
    dump_buckets(v, bnum + 1, next, buckets);
}

// Sorts the whole vector in non-decreasing order, in place. Rejects vectors
// containing negative elements before moving anything.
inline void radix_sort_in_place(checked_vector& v) {
    std::int64_t n = v.size();
    if (n == 0) return;
    {
        interval_scope scope(v, full_interval(n), "radix-guard");
        for (interval cur = full_interval(n); !is_empty(cur); cur = shrink_low(cur)) {
            std::int64_t e = v.read(cur.low);
            if (e < 0) {
                throw violation_error(violation_kind::negative_element,
                                      "radixsort requires nonnegative elements",
                                      cur.low, 0, n - 1, v.depth());
            }
        }
    }
    std::int64_t sz = digit_passes(v);
    bucket_array buckets = make_buckets(n);
    interval_scope scope(v, full_interval(n), "radix-sort");
    for (std::int64_t d = 0; d < sz; ++d) {
        bucketize(v, full_interval(n), d, buckets);
        dump_buckets(v, 0, 0, buckets);
    }
}

}  // namespace vint

#endif  // VINT_RADIXSORT_HPP
