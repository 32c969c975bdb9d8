#pragma once

#include <cstdio>
#include <string>

#include "core.hpp"

namespace nbue::csv {

// printf-style formatting; locale-independent for the "C" locale the
// library assumes, and stable across IEEE-754 platforms.
inline std::string number(double v, const char* format = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

// "T0,0.25," / "T7,,0.5" / "T3,," -- the test,j,alpha_param column triple.
inline std::string spec_columns(const TestSpec& spec) {
    std::string out = to_string(spec.id()) + ",";
    if (spec.id() == TestId::T0) out += TestSpec::format_param(spec.j());
    out += ",";
    if (spec.id() == TestId::T7) out += TestSpec::format_param(spec.alpha_param());
    return out;
}

} // namespace nbue::csv
