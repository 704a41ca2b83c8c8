#ifndef VINT_FOLD_HPP
#define VINT_FOLD_HPP

#include <cstdint>
#include <vector>

#include "vint/checked_vector.hpp"
#include "vint/interval.hpp"
#include "vint/violation.hpp"

namespace vint {

// Structural folds over an interval. The recursive template reads elements
// from one end while the accumulator is built up from the other, so each
// fold runs in two phases: read in template order, then apply the step in
// unwind order. This keeps both observable orders intact without consuming
// call-stack depth proportional to the interval length.

// Consumes the interval high-to-low; the step is applied low-to-high:
// step(v[high], step(v[high-1], ... step(v[low], init))).
template <typename Acc, typename Step>
Acc fold_right_to_left(checked_vector& v, interval i, Acc init, Step step) {
    interval_scope scope(v, i, "fold-right-to-left");
    std::vector<std::int64_t> seen;
    seen.reserve(static_cast<std::size_t>(length(i)));
    for (interval cur = i; !is_empty(cur); cur = shrink_high(cur)) {
        seen.push_back(v.read(cur.high));
    }
    Acc acc = std::move(init);
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
        acc = step(*it, std::move(acc));
    }
    return acc;
}

// Mirror image: consumes low-to-high, applies high-to-low.
template <typename Acc, typename Step>
Acc fold_left_to_right(checked_vector& v, interval i, Acc init, Step step) {
    interval_scope scope(v, i, "fold-left-to-right");
    std::vector<std::int64_t> seen;
    seen.reserve(static_cast<std::size_t>(length(i)));
    for (interval cur = i; !is_empty(cur); cur = shrink_low(cur)) {
        seen.push_back(v.read(cur.low));
    }
    Acc acc = std::move(init);
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
        acc = step(*it, std::move(acc));
    }
    return acc;
}

// Sum of the elements in the interval; 0 on the empty interval.
inline std::int64_t sum_elems(checked_vector& v, interval i) {
    return fold_right_to_left(v, i, std::int64_t{0},
                              [](std::int64_t e, std::int64_t acc) { return e + acc; });
}

// Average over the whole vector. Exact when the sum divides evenly.
inline double avg_vector(checked_vector& v) {
    if (v.size() == 0) {
        throw violation_error(violation_kind::empty_vector,
                              "average of an empty vector");
    }
    std::int64_t sum = sum_elems(v, full_interval(v.size()));
    return static_cast<double>(sum) / static_cast<double>(v.size());
}

}  // namespace vint

#endif  // VINT_FOLD_HPP
