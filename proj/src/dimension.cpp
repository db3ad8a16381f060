#include "qcir/dimension.hpp"

#include <cstdio>

namespace qcir {

const char *unit_name(Unit unit) {
    switch (unit) {
        case Unit::Em:
            return "em";
        case Unit::Ex:
            return "ex";
        case Unit::Pt:
            return "pt";
    }
    return "em";
}

std::string dim_to_string(const Dim &dim) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", dim.value);
    std::string out(buf);
    out += unit_name(dim.unit);
    return out;
}

}  // namespace qcir
