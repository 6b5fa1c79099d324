#include "pargoid/partiality.hpp"

namespace pargoid {

Truth3 operator!(Truth3 a) {
    switch (a) {
    case Truth3::True:
        return Truth3::False;
    case Truth3::False:
        return Truth3::True;
    case Truth3::Unknown:
        break;
    }
    return Truth3::Unknown;
}

Truth3 operator&&(Truth3 a, Truth3 b) {
    if (a == Truth3::False || b == Truth3::False)
        return Truth3::False;
    if (a == Truth3::True && b == Truth3::True)
        return Truth3::True;
    return Truth3::Unknown;
}

Truth3 operator||(Truth3 a, Truth3 b) {
    if (a == Truth3::True || b == Truth3::True)
        return Truth3::True;
    if (a == Truth3::False && b == Truth3::False)
        return Truth3::False;
    return Truth3::Unknown;
}

std::string_view toString(Truth3 t) {
    switch (t) {
    case Truth3::True:
        return "true";
    case Truth3::False:
        return "false";
    case Truth3::Unknown:
        break;
    }
    return "unknown";
}

} // namespace pargoid
