#ifndef VINT_CHECKED_VECTOR_HPP
#define VINT_CHECKED_VECTOR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "vint/interval.hpp"
#include "vint/stats.hpp"
#include "vint/trace.hpp"
#include "vint/violation.hpp"

namespace vint {

enum class check_mode {
    require_valid,                  // pushed intervals must be valid for the vector
    require_subinterval_of_parent,  // ...and contained in the interval beneath them
};

enum class relation { lt, le, gt, ge, eq, ne };

inline bool evaluate(relation r, std::int64_t a, std::int64_t b) {
    switch (r) {
        case relation::lt: return a < b;
        case relation::le: return a <= b;
        case relation::gt: return a > b;
        case relation::ge: return a >= b;
        case relation::eq: return a == b;
        case relation::ne: return a != b;
    }
    return false;
}

// A fixed-size mutable vector of integers guarded by a stack of registered
// intervals. Every read, write, and swap is validated against the top
// interval; violations throw with the offending index, the active interval,
// and the stack depth. Single-owner: one logical thread of control per
// instance; independent instances may run in parallel.
class checked_vector {
public:
    using sink_fn = std::function<void(const trace_event&)>;

    explicit checked_vector(std::vector<std::int64_t> elems,
                            check_mode mode = check_mode::require_valid)
        : elems_(std::move(elems)), mode_(mode) {}

    std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }

    const std::vector<std::int64_t>& elements() const { return elems_; }

    check_mode mode() const { return mode_; }
    void set_mode(check_mode m) { mode_ = m; }

    bool checking_enabled() const { return checking_enabled_; }
    void set_checking_enabled(bool on) { checking_enabled_ = on; }

    // Counters stay on regardless of checking; trace emission is off until a
    // sink is installed.
    const sort_stats& stats() const { return stats_; }
    void reset_stats() { stats_.reset(); }

    void set_trace_sink(sink_fn sink) { sink_ = std::move(sink); }

    std::size_t depth() const { return stack_.size(); }

    std::optional<interval> active_interval() const {
        if (stack_.empty()) return std::nullopt;
        return stack_.back().iv;
    }

    // Registers i as the active interval. The label names the generation
    // site and shows up in trace output.
    void push_interval(interval i, check_mode mode, std::string_view label = {}) {
        if (checking_enabled_) {
            if (!is_valid(i, size())) {
                fail(violation_kind::invalid_interval,
                     "pushed interval is not valid for this vector",
                     std::nullopt, i, label);
            }
            if (mode == check_mode::require_subinterval_of_parent && !stack_.empty() &&
                !subinterval_of(i, stack_.back().iv)) {
                fail(violation_kind::not_subinterval,
                     "pushed interval escapes its parent", std::nullopt, i, label);
            }
        }
        stack_.push_back(frame{i, mode});
        ++stats_.intervals_generated;
        if (stack_.size() > stats_.max_depth) stats_.max_depth = stack_.size();
        emit(trace_event{trace_kind::interval_push, std::nullopt, std::nullopt,
                         i.low, i.high, stack_.size(), std::string(label)});
    }

    void push_interval(interval i, std::string_view label = {}) {
        push_interval(i, mode_, label);
    }

    void pop_interval() {
        if (stack_.empty()) {
            fail(violation_kind::stack_underflow, "pop on empty interval stack");
        }
        interval top = stack_.back().iv;
        std::size_t at = stack_.size();
        stack_.pop_back();
        emit(trace_event{trace_kind::interval_pop, std::nullopt, std::nullopt,
                         top.low, top.high, at, ""});
    }

    // Raises exactly the checks a read or write of k would perform, without
    // counting or tracing a touch. Used to pre-validate multi-element
    // operations so they mutate nothing on failure.
    void require_index(std::int64_t k) const {
        if (checking_enabled_) {
            if (stack_.empty()) {
                fail(violation_kind::index_outside_interval,
                     "no active interval registered", k);
            }
            const interval& top = stack_.back().iv;
            if (!contains(top, k)) {
                fail(violation_kind::index_outside_interval,
                     "index outside the active interval", k, top);
            }
        }
        if (k < 0 || k >= size()) {
            fail(violation_kind::raw_out_of_bounds, "index outside the vector", k);
        }
    }

    std::int64_t read(std::int64_t k) {
        require_index(k);
        ++stats_.reads;
        emit_touch(trace_kind::read, k);
        return elems_[static_cast<std::size_t>(k)];
    }

    void write(std::int64_t k, std::int64_t x) {
        require_index(k);
        ++stats_.writes;
        emit_touch(trace_kind::write, k);
        elems_[static_cast<std::size_t>(k)] = x;
    }

    // Both indices are checked before either element is touched.
    void swap(std::int64_t a, std::int64_t b) {
        require_index(a);
        require_index(b);
        ++stats_.swaps;
        emit_touch(trace_kind::swap, a, b);
        std::swap(elems_[static_cast<std::size_t>(a)],
                  elems_[static_cast<std::size_t>(b)]);
    }

    bool compare(std::int64_t a, std::int64_t b, relation r) {
        ++stats_.comparisons;
        bool result = evaluate(r, a, b);
        if (fault_countdown_ > 0 && --fault_countdown_ == 0) result = !result;
        return result;
    }

    // Test hook: flips the outcome of the nth compare from now (1-based).
    // Used by the verifier's fault-detection smoke test.
    void arm_compare_fault(std::uint64_t nth) { fault_countdown_ = nth; }

private:
    struct frame {
        interval iv;
        check_mode mode;
    };

    [[noreturn]] void fail(violation_kind kind, std::string message,
                           std::optional<std::int64_t> index = std::nullopt,
                           std::optional<interval> iv = std::nullopt,
                           std::string_view label = {}) const {
        std::optional<interval> shown = iv;
        if (!shown && !stack_.empty()) shown = stack_.back().iv;
        trace_event ev{trace_kind::violation, index, std::nullopt,
                       std::nullopt, std::nullopt, stack_.size(),
                       std::string(violation_name(kind))};
        if (!label.empty()) {
            ev.detail += " at ";
            ev.detail += label;
        }
        if (shown) {
            ev.low = shown->low;
            ev.high = shown->high;
        }
        emit(ev);
        std::string text = std::move(message);
        if (index) text += " (index " + std::to_string(*index) + ")";
        if (shown) {
            text += " (interval [" + std::to_string(shown->low) + "," +
                    std::to_string(shown->high) + "])";
        }
        text += " (depth " + std::to_string(stack_.size()) + ")";
        if (!label.empty()) {
            text += " at ";
            text += label;
        }
        throw violation_error(kind, text, index,
                              shown ? std::optional<std::int64_t>(shown->low) : std::nullopt,
                              shown ? std::optional<std::int64_t>(shown->high) : std::nullopt,
                              stack_.size());
    }

    void emit(const trace_event& ev) const {
        if (sink_) sink_(ev);
    }

    void emit_touch(trace_kind kind, std::int64_t a,
                    std::optional<std::int64_t> b = std::nullopt) const {
        if (!sink_) return;
        trace_event ev{kind, a, b, std::nullopt, std::nullopt, stack_.size(), ""};
        if (!stack_.empty()) {
            ev.low = stack_.back().iv.low;
            ev.high = stack_.back().iv.high;
        }
        sink_(ev);
    }

    std::vector<std::int64_t> elems_;
    std::vector<frame> stack_;
    sort_stats stats_;
    sink_fn sink_;
    check_mode mode_;
    bool checking_enabled_ = true;
    std::uint64_t fault_countdown_ = 0;
};

// Pushes on construction, pops on destruction; keeps the push/pop trace
// balanced even when a violation unwinds the stack mid-operation.
class interval_scope {
public:
    interval_scope(checked_vector& v, interval i, std::string_view label = {})
        : v_(v) {
        v_.push_interval(i, label);
    }

    interval_scope(const interval_scope&) = delete;
    interval_scope& operator=(const interval_scope&) = delete;

    ~interval_scope() { v_.pop_interval(); }

private:
    checked_vector& v_;
};

// Same, for operations that generate a chain of nested intervals.
class interval_chain {
public:
    explicit interval_chain(checked_vector& v) : v_(v) {}

    interval_chain(const interval_chain&) = delete;
    interval_chain& operator=(const interval_chain&) = delete;

    void push(interval i, std::string_view label = {}) {
        v_.push_interval(i, label);
        ++count_;
    }

    ~interval_chain() {
        while (count_-- > 0) v_.pop_interval();
    }

private:
    checked_vector& v_;
    std::size_t count_ = 0;
};

}  // namespace vint

#endif  // VINT_CHECKED_VECTOR_HPP
