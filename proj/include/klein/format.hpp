#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "duality.hpp"
#include "multivector.hpp"

namespace klein {

/// A real at the given number of significant digits, trailing zeros trimmed,
/// negative zero normalized to "0".
inline std::string format_real(double v, int precision = 12) {
    if (v == 0.0) return "0";
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    if (precision < 1) precision = 1;
    if (precision > 17) precision = 17;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    std::string s = buf;
    if (s == "-0") return "0";
    return s;
}

namespace detail {

inline constexpr std::array<const char*, 8> basis_names = {"",    "e0",  "e1",  "e2",
                                                           "e12", "e20", "e01", "e012"};
inline constexpr std::array<const char*, 8> dual_basis_names = {"",     "e^0",  "e^1",  "e^2",
                                                                "e^12", "e^20", "e^01", "e^012"};

inline std::string coefficients_to_text(const std::array<double, 8>& c,
                                        const std::array<const char*, 8>& names, int precision) {
    std::string out;
    for (std::size_t i = 0; i < 8; ++i) {
        if (c[i] == 0.0) continue;
        double v = c[i];
        bool negative = v < 0.0;
        std::string magnitude = format_real(negative ? -v : v, precision);
        if (magnitude == "0") continue; // rounded away at this precision
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (i == slot::scalar) {
            out += magnitude;
        } else if (magnitude == "1") {
            out += names[i];
        } else {
            out += magnitude;
            out += ' ';
            out += names[i];
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string coefficients_to_json(const std::array<double, 8>& c, const char* representation,
                                        int precision) {
    std::string out = "{\"representation\": \"";
    out += representation;
    out += "\", \"coefficients\": [";
    for (std::size_t i = 0; i < 8; ++i) {
        if (i) out += ", ";
        out += format_real(c[i], precision);
    }
    out += "]}";
    return out;
}

} // namespace detail

/// Canonical text form, zero terms omitted: e.g. "e1 + 3 e2".
inline std::string to_text(const Multivector& a, int precision = 12) {
    return detail::coefficients_to_text(a.c, detail::basis_names, precision);
}

inline std::string to_text(const DualMultivector& a, int precision = 12) {
    return detail::coefficients_to_text(a.c, detail::dual_basis_names, precision);
}

/// Canonical JSON form: the 8 coefficients in basis order plus the
/// representation tag ("dual-weighted" for the line/point algebra, "model"
/// for its dual).
inline std::string to_json(const Multivector& a, int precision = 12) {
    return detail::coefficients_to_json(a.c, "dual-weighted", precision);
}

inline std::string to_json(const DualMultivector& a, int precision = 12) {
    return detail::coefficients_to_json(a.c, "model", precision);
}

} // namespace klein
