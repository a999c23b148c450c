#pragma once

// JSON input parsing for the CLI surfaces: multivectors (8-array, with or
// without the representation tag) and isometry parameters.

#include <string>

#include <json.hpp>

#include "error.hpp"
#include "geometry.hpp"
#include "multivector.hpp"
#include "transforms.hpp"

namespace klein {

/// Accepts [c0..c7] or {"representation": "dual-weighted", "coefficients": [...]}.
inline Multivector multivector_from_json(const nlohmann::json& j) {
    const nlohmann::json* coeffs = &j;
    if (j.is_object()) {
        if (j.contains("representation") &&
            j.at("representation").get<std::string>() != "dual-weighted")
            throw Error(ErrorKind::RepresentationMismatch,
                        "expected a dual-weighted (line/point algebra) value");
        coeffs = &j.at("coefficients");
    }
    if (!coeffs->is_array() || coeffs->size() != 8)
        throw Error(ErrorKind::NotAVector, "multivector JSON must hold 8 coefficients");
    Multivector m;
    for (std::size_t i = 0; i < 8; ++i) m.c[i] = (*coeffs)[i].get<double>();
    return m;
}

/// {"kind": "rotation"|"translation"|"boost", "center": [w,x,y] or
///  "direction": [a,b], "amount": number}. Boosts default to the origin.
inline IsometryParams isometry_from_json(const nlohmann::json& j) {
    IsometryParams params{};
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rotation")
        params.kind = IsometryKind::Rotation;
    else if (kind == "translation")
        params.kind = IsometryKind::Translation;
    else if (kind == "boost")
        params.kind = IsometryKind::Boost;
    else
        throw Error(ErrorKind::WrongGeneratorClass,
                    "kind must be rotation, translation, or boost");
    params.amount = j.at("amount").get<double>();

    if (j.contains("center")) {
        auto c = j.at("center");
        if (!c.is_array() || c.size() != 3)
            throw Error(ErrorKind::WrongGeneratorClass, "center must be [w, x, y]");
        params.center_or_direction =
            multivector(0, 0, 0, 0, c[0].get<double>(), c[1].get<double>(), c[2].get<double>(), 0);
    } else if (j.contains("direction")) {
        auto d = j.at("direction");
        if (!d.is_array() || d.size() != 2)
            throw Error(ErrorKind::WrongGeneratorClass, "direction must be [a, b]");
        params.center_or_direction = translation_generator(d[0].get<double>(), d[1].get<double>());
    } else if (params.kind == IsometryKind::Boost) {
        params.center_or_direction = point(0, 0);
    } else {
        throw Error(ErrorKind::WrongGeneratorClass, "isometry needs a center or a direction");
    }
    return params;
}

} // namespace klein
