#pragma once

#include <string>

namespace qcir {

enum class Unit {
    Em,
    Ex,
    Pt,
};

// Conversion factors used when comparing or mixing units.
// Nominal scale: 1em = 10pt, 1ex = 0.5em.
struct UnitScale {
    double pt_per_em = 10.0;
    double em_per_ex = 0.5;
};

// A length literal such as "1em", ".7em", "-0.5ex".
struct Dim {
    double value = 0.0;
    Unit unit = Unit::Em;

    bool operator==(const Dim &other) const = default;

    double to_em(const UnitScale &scale = UnitScale{}) const {
        switch (unit) {
            case Unit::Em:
                return value;
            case Unit::Ex:
                return value * scale.em_per_ex;
            case Unit::Pt:
                return value / scale.pt_per_em;
        }
        return value;
    }

    static Dim em(double v) {
        return Dim{v, Unit::Em};
    }
};

const char *unit_name(Unit unit);

// Canonical text form, e.g. "1em", "0.7em", "-0.5ex".
std::string dim_to_string(const Dim &dim);

}  // namespace qcir
