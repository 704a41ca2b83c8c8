#ifndef VINT_QUICKSORT_HPP
#define VINT_QUICKSORT_HPP

#include <cstdint>

#include "vint/checked_vector.hpp"
#include "vint/interval.hpp"
#include "vint/violation.hpp"

namespace vint {

// In-place quicksort built around vector intervals. The pivot is always the
// low element of the interval being partitioned; elements equal to the pivot
// land on the low side. Worst case on sorted input is quadratic by design.

// Largest index in i whose element is <= pivot, scanning high-to-low;
// returns i.low when no element qualifies.
inline std::int64_t small_index(checked_vector& v, interval i, std::int64_t pivot) {
    if (is_empty(i)) {
        throw violation_error(violation_kind::empty_interval,
                              "small_index on empty interval", std::nullopt,
                              i.low, i.high, v.depth());
    }
    interval_scope scope(v, i, "small-index");
    for (interval cur = i; !is_empty(cur); cur = shrink_high(cur)) {
        if (v.compare(v.read(cur.high), pivot, relation::le)) return cur.high;
    }
    return i.low;
}

// Smallest index in i whose element is > pivot, scanning low-to-high;
// returns i.high when no element qualifies.
inline std::int64_t large_index(checked_vector& v, interval i, std::int64_t pivot) {
    if (is_empty(i)) {
        throw violation_error(violation_kind::empty_interval,
                              "large_index on empty interval", std::nullopt,
                              i.low, i.high, v.depth());
    }
    interval_scope scope(v, i, "large-index");
    for (interval cur = i; !is_empty(cur); cur = shrink_low(cur)) {
        if (v.compare(v.read(cur.low), pivot, relation::gt)) return cur.low;
    }
    return i.high;
}

namespace detail {

// The separation step on an interval chain. Each round shrinks the working
// interval strictly from both ends: after a swap, v[s] > pivot and
// v[l] <= pivot, so the next s is smaller and the next l larger.
inline std::int64_t separate_on(checked_vector& v, interval i, std::int64_t pivot) {
    interval_chain chain(v);
    interval cur = i;
    for (;;) {
        std::int64_t s = small_index(v, cur, pivot);
        std::int64_t l = large_index(v, cur, pivot);
        if (s <= l) return s;
        v.swap(s, l);
        cur = interval{l, s};
        chain.push(cur, "separate");
    }
}

}  // namespace detail

// Rearranges i so that elements <= the pivot value precede elements greater
// than it, and returns the largest index holding an element <= pivot. The
// pivot value is captured once up front; its position is never written while
// the separation runs, so this matches re-reading it each round.
inline std::int64_t separate(checked_vector& v, interval i, std::int64_t pivot_pos) {
    if (is_empty(i)) {
        throw violation_error(violation_kind::empty_interval,
                              "separate on empty interval", std::nullopt,
                              i.low, i.high, v.depth());
    }
    interval_scope scope(v, i, "separate");
    std::int64_t pivot = v.read(pivot_pos);
    return detail::separate_on(v, i, pivot);
}

// Partitions i around the element at pivot_pos and places the pivot in its
// final sorted position, returned as pp: everything in [low..pp-1] is
// <= v[pp] and everything in [pp+1..high] is > v[pp].
inline std::int64_t partition(checked_vector& v, interval i, std::int64_t pivot_pos) {
    if (is_empty(i)) {
        throw violation_error(violation_kind::empty_interval,
                              "partition on empty interval", std::nullopt,
                              i.low, i.high, v.depth());
    }
    interval_scope scope(v, i, "partition");
    std::int64_t pp = separate(v, i, pivot_pos);
    v.swap(pivot_pos, pp);
    return pp;
}

// Sorts the elements within i in non-decreasing order, leaving everything
// outside i untouched. Both generated intervals {low..pp-1} and {pp+1..high}
// are valid whenever pp is a member of i; the high side is processed as a
// continuation of the current frame.
inline void qs_aux(checked_vector& v, interval i) {
    interval cur = i;
    for (;;) {
        interval_scope scope(v, cur, "qs-aux");
        if (is_empty(cur)) return;
        std::int64_t pp = partition(v, cur, cur.low);
        qs_aux(v, interval{cur.low, pp - 1});
        cur = interval{pp + 1, cur.high};
    }
}

// Sorts the whole vector in non-decreasing order, in place.
inline void qs_in_place(checked_vector& v) { qs_aux(v, full_interval(v.size())); }

}  // namespace vint

#endif  // VINT_QUICKSORT_HPP
