#ifndef VINT_TRACE_HPP
#define VINT_TRACE_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace vint {

enum class trace_kind {
    interval_push,
    interval_pop,
    read,
    write,
    swap,
    violation,
};

inline const char* trace_kind_name(trace_kind k) {
    switch (k) {
        case trace_kind::interval_push: return "interval-push";
        case trace_kind::interval_pop: return "interval-pop";
        case trace_kind::read: return "read";
        case trace_kind::write: return "write";
        case trace_kind::swap: return "swap";
        case trace_kind::violation: return "violation";
    }
    return "unknown";
}

// One record per interval creation, element touch, or violation.
// low/high are the interval the event happened under (the pushed interval
// for push/pop events), depth the stack depth at that moment.
struct trace_event {
    trace_kind kind;
    std::optional<std::int64_t> i;
    std::optional<std::int64_t> j;
    std::optional<std::int64_t> low;
    std::optional<std::int64_t> high;
    std::size_t depth = 0;
    std::string detail;
};

// One JSON object per line. Detail strings are plain ASCII labels, so the
// only escaping needed is for quotes and backslashes.
inline std::string to_json_line(const trace_event& ev) {
    std::string out = "{\"kind\":\"";
    out += trace_kind_name(ev.kind);
    out += '"';
    if (ev.i) {
        out += ",\"i\":";
        out += std::to_string(*ev.i);
    }
    if (ev.j) {
        out += ",\"j\":";
        out += std::to_string(*ev.j);
    }
    if (ev.low) {
        out += ",\"low\":";
        out += std::to_string(*ev.low);
    }
    if (ev.high) {
        out += ",\"high\":";
        out += std::to_string(*ev.high);
    }
    out += ",\"depth\":";
    out += std::to_string(ev.depth);
    out += ",\"detail\":\"";
    for (char c : ev.detail) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"}";
    return out;
}

}  // namespace vint

#endif  // VINT_TRACE_HPP
