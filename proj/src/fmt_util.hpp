#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace qcir::detail {

// Fixed-decimal float printing; negative zero is normalized so output is
// byte-stable across platforms.
inline std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    std::string out(buf);
    bool zero = true;
    for (char c : out) {
        if (c >= '1' && c <= '9') {
            zero = false;
            break;
        }
    }
    if (zero && !out.empty() && out[0] == '-') {
        out.erase(0, 1);
    }
    return out;
}

inline std::string fmt3(double value) {
    return fixed(value, 3);
}

inline std::string fmt4(double value) {
    return fixed(value, 4);
}

}  // namespace qcir::detail
