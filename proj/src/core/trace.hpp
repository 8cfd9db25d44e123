#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace monomtest {

// One rewrite event. Formatted as line-delimited structured text:
//   TRACE op=<name> in=<id> out=<id,...> [key=value ...]
// `in`/`out` are `-` when absent; payload values with spaces are quoted.
struct TraceRecord {
    std::string op;
    std::int64_t input_id = -1;
    std::vector<std::uint64_t> output_ids;
    std::vector<std::pair<std::string, std::string>> payload;
};

using TraceSink = std::function<void(const TraceRecord&)>;

inline std::string format_trace(const TraceRecord& r) {
    std::string s = "TRACE op=" + r.op;
    s += " in=";
    s += r.input_id < 0 ? "-" : std::to_string(r.input_id);
    s += " out=";
    if (r.output_ids.empty()) {
        s += "-";
    } else {
        for (std::size_t i = 0; i < r.output_ids.size(); ++i)
            s += (i ? "," : "") + std::to_string(r.output_ids[i]);
    }
    for (const auto& [k, v] : r.payload) {
        s += " " + k + "=";
        if (v.find(' ') != std::string::npos)
            s += "\"" + v + "\"";
        else
            s += v;
    }
    return s;
}

}  // namespace monomtest
