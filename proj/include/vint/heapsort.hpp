#ifndef VINT_HEAPSORT_HPP
#define VINT_HEAPSORT_HPP

#include <cstdint>
#include <stdexcept>

#include "vint/checked_vector.hpp"
#include "vint/interval.hpp"
#include "vint/violation.hpp"

namespace vint {

// In-place heapsort over an array-embedded max-heap: node k's children live
// at 2k+1 and 2k+2, duplicates allowed (parent >= child).

// Index of the parent of node k; the root has no parent.
inline std::int64_t parent(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("parent: node 0 has no parent");
    return (k - 1) / 2;
}

// The index holding the larger of the two child elements; ties go left.
inline std::int64_t max_child_index(checked_vector& v, std::int64_t lc, std::int64_t rc) {
    return v.compare(v.read(lc), v.read(rc), relation::ge) ? lc : rc;
}

// Re-establishes the heap rooted at i.low, assuming both subtrees within i
// are already heaps. Each recursive call moves the root to a child index,
// so the generated interval {child..high} is strictly smaller than i while
// high stays fixed; the chain is at most the heap height.
inline void trickle_down(checked_vector& v, interval i) {
    interval_scope scope(v, i, "trickle-down");
    std::int64_t lc = 2 * i.low + 1;
    std::int64_t rc = 2 * i.low + 2;
    if (lc > i.high) return;  // no children (covers the empty interval)
    if (rc > i.high) {
        // left child only
        if (v.compare(v.read(lc), v.read(i.low), relation::le)) return;
        v.swap(i.low, lc);
        trickle_down(v, interval{lc, i.high});
        return;
    }
    std::int64_t mc = max_child_index(v, lc, rc);
    if (v.compare(v.read(i.low), v.read(mc), relation::ge)) return;
    v.swap(i.low, mc);
    trickle_down(v, interval{mc, i.high});
}

// Turns the vector into a heap by scanning i right-to-left and comparing
// each element with its parent. Requires i.low >= 1: index 0 has no parent.
// The registered interval is widened to {parent(i.low)..i.high} because each
// step touches both a scanned element and its parent, which lies below i.
inline void heapify(checked_vector& v, interval i) {
    if (v.checking_enabled() && !is_valid(i, v.size())) {
        throw violation_error(violation_kind::invalid_interval,
                              "heapify interval is not valid for this vector",
                              std::nullopt, i.low, i.high, v.depth());
    }
    if (is_empty(i)) return;
    if (i.low < 1) {
        throw violation_error(violation_kind::invalid_interval,
                              "heapify requires low >= 1", std::nullopt,
                              i.low, i.high, v.depth());
    }
    interval_scope scope(v, interval{parent(i.low), i.high}, "heapify");
    for (interval cur = i; !is_empty(cur); cur = shrink_high(cur)) {
        std::int64_t p = parent(cur.high);
        if (v.compare(v.read(p), v.read(cur.high), relation::gt)) continue;
        v.swap(p, cur.high);
        trickle_down(v, interval{cur.high, v.size() - 1});
    }
}

// Sorts a heap-ordered interval in non-decreasing order: swap the root to
// the high end, re-heapify the remainder, shrink, repeat.
inline void sort_heap_interval(checked_vector& v, interval i) {
    interval_scope scope(v, i, "sort-heap");
    for (interval cur = i; !is_empty(cur); cur = shrink_high(cur)) {
        v.swap(cur.low, cur.high);
        trickle_down(v, interval{cur.low, cur.high - 1});
    }
}

// Sorts the whole vector in non-decreasing order, in place. Heap
// construction runs over {1..n-1}: every index but the root has its parent
// inside the full interval.
inline void heap_sort(checked_vector& v) {
    std::int64_t n = v.size();
    if (n == 0) return;
    heapify(v, interval{1, n - 1});
    sort_heap_interval(v, full_interval(n));
}

}  // namespace vint

#endif  // VINT_HEAPSORT_HPP
