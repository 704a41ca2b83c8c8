#ifndef VINT_VIOLATION_HPP
#define VINT_VIOLATION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace vint {

struct interval;

enum class violation_kind {
    invalid_interval,
    not_subinterval,
    index_outside_interval,
    raw_out_of_bounds,
    stack_underflow,
    empty_interval,
    bucket_full,
    negative_element,
    empty_vector,
};

inline const char* violation_name(violation_kind k) {
    switch (k) {
        case violation_kind::invalid_interval: return "InvalidInterval";
        case violation_kind::not_subinterval: return "NotSubinterval";
        case violation_kind::index_outside_interval: return "IndexOutsideInterval";
        case violation_kind::raw_out_of_bounds: return "RawOutOfBounds";
        case violation_kind::stack_underflow: return "StackUnderflow";
        case violation_kind::empty_interval: return "EmptyInterval";
        case violation_kind::bucket_full: return "BucketFull";
        case violation_kind::negative_element: return "NegativeElement";
        case violation_kind::empty_vector: return "EmptyVector";
    }
    return "Unknown";
}

// Thrown whenever the interval discipline is broken. Carries enough context
// (offending index, active interval bounds, stack depth) to locate the
// generation site of the bad interval or index.
class violation_error : public std::runtime_error {
public:
    violation_error(violation_kind kind, std::string message,
                    std::optional<std::int64_t> index = std::nullopt,
                    std::optional<std::int64_t> active_low = std::nullopt,
                    std::optional<std::int64_t> active_high = std::nullopt,
                    std::size_t depth = 0)
        : std::runtime_error(std::string(violation_name(kind)) + ": " + message),
          kind_(kind),
          index_(index),
          active_low_(active_low),
          active_high_(active_high),
          depth_(depth) {}

    violation_kind kind() const noexcept { return kind_; }
    std::optional<std::int64_t> index() const noexcept { return index_; }
    std::optional<std::int64_t> active_low() const noexcept { return active_low_; }
    std::optional<std::int64_t> active_high() const noexcept { return active_high_; }
    std::size_t depth() const noexcept { return depth_; }

private:
    violation_kind kind_;
    std::optional<std::int64_t> index_;
    std::optional<std::int64_t> active_low_;
    std::optional<std::int64_t> active_high_;
    std::size_t depth_;
};

}  // namespace vint

#endif  // VINT_VIOLATION_HPP
