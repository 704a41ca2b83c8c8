#ifndef VINT_BUCKET_HPP
#define VINT_BUCKET_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "vint/checked_vector.hpp"
#include "vint/violation.hpp"

namespace vint {

// Fixed-capacity FIFO container: slots [0..count-1] hold elements in
// insertion order, the rest are vacant. Insertion order is what makes the
// per-digit passes of radixsort stable.
class bucket {
public:
    explicit bucket(std::int64_t capacity)
        : slots_(static_cast<std::size_t>(capacity)) {}

    std::int64_t capacity() const { return static_cast<std::int64_t>(slots_.size()); }

    std::int64_t size() const { return count_; }

    const std::vector<std::optional<std::int64_t>>& slots() const { return slots_; }

    // Puts n in the next available slot.
    void add(std::int64_t n) {
        if (count_ >= capacity()) {
            throw violation_error(violation_kind::bucket_full,
                                  "bucket of capacity " + std::to_string(capacity()) +
                                      " is full");
        }
        slots_[static_cast<std::size_t>(count_)] = n;
        ++count_;
    }

    // Writes the occupied slots into dest starting at index `start`, then
    // empties the bucket. The whole destination range is validated before
    // anything is written.
    void dump_to(checked_vector& dest, std::int64_t start) {
        if (count_ > 0) {
            dest.require_index(start);
            dest.require_index(start + count_ - 1);
        }
        for (std::int64_t k = 0; k < count_; ++k) {
            dest.write(start + k, *slots_[static_cast<std::size_t>(k)]);
            slots_[static_cast<std::size_t>(k)].reset();
        }
        count_ = 0;
    }

private:
    std::vector<std::optional<std::int64_t>> slots_;
    std::int64_t count_ = 0;
};

inline bucket make_bucket(std::int64_t capacity) { return bucket(capacity); }

}  // namespace vint

#endif  // VINT_BUCKET_HPP
