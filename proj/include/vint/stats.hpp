#ifndef VINT_STATS_HPP
#define VINT_STATS_HPP

#include <cstdint>

namespace vint {

// Abstract-running-time counters. All counters are monotonically
// non-decreasing within one run; max_depth is the deepest interval stack
// observed, which bounds the generative recursion depth.
struct sort_stats {
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    std::uint64_t reads = 0;
    std::uint64_t writes = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t intervals_generated = 0;

    void reset() { *this = sort_stats{}; }
};

}  // namespace vint

#endif  // VINT_STATS_HPP
