#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"
#include "signature.hpp"

namespace klein {

enum class SpaceName { Euclidean, Elliptic, Hyperbolic, Minkowski, AntiDeSitter, DeSitter };

enum class DistanceMeasure { Degenerate, Elliptic, Hyperbolic };
enum class AngleMeasure { Elliptic, Hyperbolic };

/// One of the six supported homogeneous metric spaces: a metric signature
/// together with its distance measure, angle measure and kinematic flag.
struct Space {
    SpaceName name;
    Signature signature;
    DistanceMeasure distance_measure;
    AngleMeasure angle_measure;
    bool kinematic; // true exactly when the angle measure is hyperbolic

    constexpr bool operator==(const Space&) const = default;
};

inline constexpr Space euclidean{SpaceName::Euclidean, sig_euclidean, DistanceMeasure::Degenerate,
                                 AngleMeasure::Elliptic, false};
inline constexpr Space elliptic{SpaceName::Elliptic, sig_elliptic, DistanceMeasure::Elliptic,
                                AngleMeasure::Elliptic, false};
inline constexpr Space hyperbolic{SpaceName::Hyperbolic, sig_hyperbolic, DistanceMeasure::Hyperbolic,
                                  AngleMeasure::Elliptic, false};
inline constexpr Space minkowski{SpaceName::Minkowski, sig_minkowski, DistanceMeasure::Degenerate,
                                 AngleMeasure::Hyperbolic, true};
inline constexpr Space anti_de_sitter{SpaceName::AntiDeSitter, sig_anti_de_sitter,
                                      DistanceMeasure::Elliptic, AngleMeasure::Hyperbolic, true};
inline constexpr Space de_sitter{SpaceName::DeSitter, sig_de_sitter, DistanceMeasure::Hyperbolic,
                                 AngleMeasure::Hyperbolic, true};

inline constexpr std::array<Space, 6> all_spaces = {euclidean,  elliptic,       hyperbolic,
                                                    minkowski, anti_de_sitter, de_sitter};

inline const char* space_name(const Space& s) {
    switch (s.name) {
    case SpaceName::Euclidean: return "euclidean";
    case SpaceName::Elliptic: return "elliptic";
    case SpaceName::Hyperbolic: return "hyperbolic";
    case SpaceName::Minkowski: return "minkowski";
    case SpaceName::AntiDeSitter: return "antidesitter";
    case SpaceName::DeSitter: return "desitter";
    }
    return "unknown";
}

/// Case-insensitive lookup by the CLI/config names
/// euclidean|elliptic|hyperbolic|minkowski|desitter|antidesitter.
inline const Space* space_by_name(std::string_view name) {
    std::string lower;
    lower.reserve(name.size());
    for (char ch : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    for (const Space& s : all_spaces)
        if (lower == space_name(s)) return &s;
    return nullptr;
}

} // namespace klein
